#ifndef GAMEPRICE_TRANSLATION_HPP
#define GAMEPRICE_TRANSLATION_HPP

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gameprice/game.hpp"
#include "gameprice/kelly_solver.hpp"

namespace gameprice {

/// Pre-optimal quantities of a game at price u next to those of the game
/// translated by n at price u + n.
struct TranslationReport {
    double shift;
    double price;
    double proportion_original;    ///< t~_u
    double proportion_translated;  ///< t~_{u+n} of the translated game
    double ratio_original;         ///< t~_u / u
    double ratio_translated;       ///< t~_{u+n} / (u + n)
    double growth_original;
    double growth_translated;
    double ratio_residual;
    double growth_residual;
};

TranslationReport check_ratio_invariance(const Game& game, double price, double shift,
                                         const SolverOptions& options = {});
TranslationReport check_growth_invariance(const Game& game, double price, double shift,
                                          const SolverOptions& options = {});

enum class ThresholdNote { Found, AlreadyFullInvestmentAtZeroShift };

std::string_view to_string(ThresholdNote note);

struct ThresholdResult {
    double rate;
    std::optional<double> n0;  ///< unset when already past the threshold at zero shift
    double residual;           ///< |boundary growth at n0 - e^rate|
    ThresholdNote note;
    int iterations;
};

/// Boundary growth of the translated game, H(n) exp(sum p log(a + n)): the
/// optimal growth at its fair price with full investment.
double translated_boundary_growth(const Game& game, double shift);

/// Smallest shift beyond which pricing at `rate` falls into the
/// full-investment regime.
ThresholdResult threshold_shift(const Game& game, double rate, const SolverOptions& options = {});

/// Optimal price of the translated game. When e^rate is below the boundary
/// growth of both the original and the translated game, the result is
/// checked against optimal_price(game, rate) + shift and ConsistencyError is
/// thrown on disagreement.
PricingSolution price_translated(const Game& game, double rate, double shift,
                                 const SolverOptions& options = {});

struct AsymptoticRow {
    double shift;
    double gap;               ///< E(n) - 1/H(n)
    double boundary_growth;   ///< translated_boundary_growth(game, n)
    double price_ratio;       ///< optimal price of the translated game / E(n)
    double monotone_witness;  ///< 1/H(n) - n
};

/// One row per shift, in input order. Shifts must be admissible and strictly
/// increasing.
std::vector<AsymptoticRow> asymptotic_sweep(const Game& game, double rate,
                                            std::span<const double> shifts,
                                            const SolverOptions& options = {});

}  // namespace gameprice

#endif  // GAMEPRICE_TRANSLATION_HPP
