#ifndef GAMEPRICE_ORACLE_HPP
#define GAMEPRICE_ORACLE_HPP

#include <cstddef>
#include <cstdint>

#include "gameprice/game.hpp"

// Verification routes that do not go through the bisection solver.

namespace gameprice {

/// Payout `high` with probability p_high, otherwise `low`.
struct TwoPointGame {
    double high;
    double low;
    double p_high;

    double expectation() const noexcept { return p_high * high + (1.0 - p_high) * low; }
    Game to_game() const;
};

struct ClosedForm {
    double proportion;  ///< pre-optimal proportion of the translated game at u + n
    double growth;      ///< optimal pre-growth rate; does not depend on n
};

/// Closed-form solution of the two-point game translated by `shift` at
/// price `price + shift`. Requires low < price < E and shift > -low.
ClosedForm two_point_closed_form(const TwoPointGame& game, double price, double shift = 0.0);

struct GridArgmax {
    double proportion;
    double step;
};

/// Brute-force maximizer of t -> growth over grid_points equally spaced
/// interior points of (0, min(1, (1 - 1e-9) u / (u - xi))). Ties go to the
/// smaller proportion. Requires u in (1/H, E).
GridArgmax grid_argmax_growth(const Game& game, double price, std::size_t grid_points);

struct SimulationResult {
    double mean_log_growth;  ///< per period
    double std_error;        ///< zero only when every draw has the same wealth factor
    std::size_t paths;
    std::size_t periods_per_path;
    std::uint64_t seed;

    bool operator==(const SimulationResult&) const = default;
};

/// Seeded Monte Carlo of repeated investment at proportion t and price u.
/// Each period multiplies wealth by a t / u - t + 1 with a drawn from the
/// game by inverse CDF over ascending payouts. Path p uses the generator
/// SplitMix64::for_path(seed, p), so results do not depend on scheduling.
SimulationResult simulate_wealth(const Game& game, double price, double proportion,
                                 std::size_t periods, std::size_t paths, std::uint64_t seed);

}  // namespace gameprice

#endif  // GAMEPRICE_ORACLE_HPP
