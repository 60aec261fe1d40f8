#include "gameprice/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "format.hpp"

namespace gameprice {

QuadratureRule gauss_legendre(std::size_t n, double lo, double hi) {
    if (n == 0) throw DomainError("quadrature needs at least one node");
    if (!(lo < hi)) {
        throw DomainError("quadrature interval [" + detail::num(lo) + ", " + detail::num(hi) +
                          "] is empty");
    }
    QuadratureRule rule{std::vector<double>(n), std::vector<double>(n)};
    const double mid = 0.5 * (hi + lo);
    const double half = 0.5 * (hi - lo);
    const std::size_t m = (n + 1) / 2;
    for (std::size_t i = 0; i < m; ++i) {
        // Newton iteration on P_n from the Chebyshev-like initial guess.
        double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (std::size_t k = 1; k <= n; ++k) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / static_cast<double>(k);
            }
            dp = static_cast<double>(n) * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - z * z) * dp * dp);
        rule.nodes[i] = mid - half * z;
        rule.nodes[n - 1 - i] = mid + half * z;
        rule.weights[i] = half * w;
        rule.weights[n - 1 - i] = half * w;
    }
    return rule;
}

Game discretize(std::span<const double> payouts, std::span<const double> weights,
                std::span<const double> density, std::optional<double> support_floor,
                std::string label) {
    if (payouts.size() != weights.size() || payouts.size() != density.size()) {
        throw DomainError("discretize: payouts, weights and density must have equal length");
    }
    std::vector<Outcome> outcomes;
    outcomes.reserve(payouts.size());
    for (std::size_t i = 0; i < payouts.size(); ++i) {
        outcomes.push_back({payouts[i], weights[i] * density[i]});
    }
    return normalized(Game(std::move(outcomes), std::move(label), support_floor));
}

}  // namespace gameprice
