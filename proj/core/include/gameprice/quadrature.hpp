#ifndef GAMEPRICE_QUADRATURE_HPP
#define GAMEPRICE_QUADRATURE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gameprice/game.hpp"

namespace gameprice {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [lo, hi].
QuadratureRule gauss_legendre(std::size_t n, double lo, double hi);

/// Turns a continuous payout density into a discrete game. Outcome i gets
/// payout payouts[i] and weight proportional to weights[i] * density[i];
/// the weights are normalized to sum to one. support_floor records the
/// essential infimum of the continuous profit, typically the lower end of
/// the integration interval.
Game discretize(std::span<const double> payouts, std::span<const double> weights,
                std::span<const double> density, std::optional<double> support_floor = {},
                std::string label = {});

}  // namespace gameprice

#endif  // GAMEPRICE_QUADRATURE_HPP
