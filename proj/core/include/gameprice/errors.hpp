#ifndef GAMEPRICE_ERRORS_HPP
#define GAMEPRICE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gameprice {

/// Argument outside the mathematical domain of an operation (price, rate,
/// shift or proportion out of range). Messages name the bound and the value.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A cross-check between two solver routes disagreed. Signals a bug, not bad
/// input.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Malformed game specification text.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what), position_(position) {}

    /// 1-based byte offset of the character where parsing stopped; 0 when the
    /// error is structural rather than tied to a location.
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Outcome of checking a game against the standing assumptions.
struct Verdict {
    std::vector<std::string> violations;

    bool ok() const noexcept { return violations.empty(); }
    explicit operator bool() const noexcept { return ok(); }
    std::string summary() const;
};

class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(Verdict verdict)
        : std::invalid_argument(verdict.summary()), verdict_(std::move(verdict)) {}

    const Verdict& verdict() const noexcept { return verdict_; }

private:
    Verdict verdict_;
};

}  // namespace gameprice

#endif  // GAMEPRICE_ERRORS_HPP
