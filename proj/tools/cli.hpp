#ifndef GAMEPRICE_TOOLS_CLI_HPP
#define GAMEPRICE_TOOLS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gameprice::cli {

enum class Command { Analyze, Price, Translate, Threshold, Sweep, Verify };
enum class OutputFormat { Json, Csv };

std::string_view to_string(Command command);

/// Process exit codes.
enum ExitCode : int {
    kSuccess = 0,
    kValidationError = 1,
    kDomainError = 2,
    kConsistencyError = 3,
};

struct RunConfig {
    Command command = Command::Analyze;
    std::string game_path;
    std::optional<double> rate;
    std::optional<double> shift;
    std::optional<std::vector<double>> shifts;
    double tol = 1e-12;
    int max_iter = 200;
    std::optional<std::uint64_t> seed;
    OutputFormat output_format = OutputFormat::Json;
    bool normalize = false;
};

/// A RunConfig missing what its command needs.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

void check_config(const RunConfig& config);

/// Runs one command, writing the report to `out` and diagnostics to `err`.
/// Returns the process exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and runs; the entry point of the gameprice binary.
int main_with_args(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace gameprice::cli

#endif  // GAMEPRICE_TOOLS_CLI_HPP
