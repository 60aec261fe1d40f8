#ifndef GAMEPRICE_GAME_HPP
#define GAMEPRICE_GAME_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gameprice/errors.hpp"

namespace gameprice {

/// Absolute tolerance on the total probability mass of a game.
inline constexpr double kWeightSumTolerance = 1e-12;

struct Outcome {
    double payout;  ///< gross dollars returned per dollar invested
    double prob;    ///< probability mass

    bool operator==(const Outcome&) const = default;
};

/// A game (a(x), F(x)) discretized to finitely many outcomes.
///
/// Construction canonicalizes the outcome list: outcomes with exactly zero
/// weight are dropped, duplicate payouts are merged by summing weights, and
/// the result is sorted by ascending payout. Construction never rejects
/// input; use validate() to check the standing assumptions.
///
/// A game built from a quadrature rule may carry a support floor: the
/// essential infimum of the underlying continuous profit function, which can
/// lie strictly below every quadrature node. Without one, the essential
/// infimum is the smallest payout and always carries positive mass.
class Game {
public:
    Game() = default;
    explicit Game(std::vector<Outcome> outcomes, std::string label = {},
                  std::optional<double> support_floor = std::nullopt);

    std::span<const Outcome> outcomes() const noexcept { return outcomes_; }
    std::size_t size() const noexcept { return outcomes_.size(); }
    const std::string& label() const noexcept { return label_; }
    std::optional<double> support_floor() const noexcept { return support_floor_; }

    /// Smallest payout carrying positive weight. Requires a non-empty game.
    double min_payout() const;

    bool operator==(const Game&) const = default;

private:
    std::vector<Outcome> outcomes_;
    std::string label_;
    std::optional<double> support_floor_;
};

/// Statistics of the notation block: E, H, xi, H_xi and derived prices.
struct GameStats {
    double expectation;        ///< E = sum p a
    double harmonic_integral;  ///< H = sum p / a
    double ess_inf;            ///< xi
    double h_xi;               ///< H_xi, +inf when mass sits at xi
    double lower_price_bound;  ///< xi + 1/H_xi
    double fair_price;         ///< 1/H
    double log_moment;         ///< sum p log a
};

Verdict validate(const Game& game);

/// Throws ValidationError when validate() fails.
void require_valid(const Game& game);

/// Essential infimum xi of a valid game.
double ess_inf(const Game& game);

GameStats compute_stats(const Game& game);

/// Parallel translation a(x) -> a(x) + shift. Requires shift > -xi.
Game translate(const Game& game, double shift);

/// Rescales weights to sum to exactly one (up to rounding).
Game normalized(const Game& game);

}  // namespace gameprice

#endif  // GAMEPRICE_GAME_HPP
