#ifndef GAMEPRICE_KELLY_SOLVER_HPP
#define GAMEPRICE_KELLY_SOLVER_HPP

#include <string_view>

#include "gameprice/game.hpp"

namespace gameprice {

struct SolverOptions {
    double tol_residual = 1e-12;    ///< |residual| at an accepted proportion
    double tol_proportion = 1e-12;  ///< bracket width relative to the proportion
    double tol_price = 1e-12;       ///< bracket width relative to the price
    int max_iter = 200;
};

struct ProportionSolution {
    double price;
    double proportion;
    double growth;    ///< pre-growth rate at (price, proportion)
    double residual;  ///< proportion_residual at (price, proportion)
    int iterations;
    bool converged;
};

enum class Regime { Interior, FullInvestment };

std::string_view to_string(Regime regime);

struct PricingSolution {
    double rate;
    double optimal_price;
    Regime regime;
    double proportion;
    double growth_check;  ///< optimal growth recomputed at optimal_price; equals e^rate
    int iterations;
};

/// sum p (a - u) / ((a - u) t + u). Requires xi < u and 0 <= t < u / (u - xi).
double proportion_residual(const Game& game, double price, double proportion);

/// Unique root of proportion_residual on (0, u/(u - xi)) for u in
/// (xi + 1/H_xi, E). The root is not capped at 1: below the fair price 1/H it
/// exceeds one.
ProportionSolution pre_optimal_proportion(const Game& game, double price,
                                          const SolverOptions& options = {});

/// exp(sum p log(a t / u - t + 1)).
double growth_rate(const Game& game, double price, double proportion);

/// Growth-optimal proportion without borrowing. Above the fair price this is
/// the pre-optimal proportion; at or below it the whole stake is invested and
/// the growth is exp(log_moment) / u.
ProportionSolution optimal_proportion(const Game& game, double price,
                                      const SolverOptions& options = {});

/// Price at which the maximized growth rate equals e^rate.
PricingSolution optimal_price(const Game& game, double rate, const SolverOptions& options = {});

/// Growth of the full-investment strategy at the fair price, H exp(log_moment).
/// Rates with e^r at or above this value price in the FullInvestment regime.
double boundary_growth(const GameStats& stats);

}  // namespace gameprice

#endif  // GAMEPRICE_KELLY_SOLVER_HPP
