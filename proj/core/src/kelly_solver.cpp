#include "gameprice/kelly_solver.hpp"

#include <cmath>
#include <limits>
#include <span>

#include "format.hpp"
#include "gameprice/summation.hpp"

namespace gameprice {

using detail::num;

namespace {

double residual_at(std::span<const Outcome> o, double u, double t) {
    return pairwise_sum(
        [&](std::size_t i) {
            const double d = o[i].payout - u;
            return o[i].prob * d / (d * t + u);
        },
        o.size());
}

double log_growth_at(std::span<const Outcome> o, double u, double t) {
    return pairwise_sum(
        [&](std::size_t i) { return o[i].prob * std::log1p(t * (o[i].payout - u) / u); },
        o.size());
}

void check_growth_domain(std::span<const Outcome> o, double u, double t) {
    if (!(u > 0.0)) throw DomainError("price " + num(u) + " must be positive");
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw DomainError("proportion " + num(t) + " must be finite and nonnegative");
    }
    for (std::size_t i = 0; i < o.size(); ++i) {
        if (!(t * (o[i].payout - u) / u > -1.0)) {
            throw DomainError("wealth factor a t/u - t + 1 is nonpositive for outcome " +
                              std::to_string(i) + " (payout " + num(o[i].payout) +
                              ") at price " + num(u) + ", proportion " + num(t));
        }
    }
}

ProportionSolution solve_root(std::span<const Outcome> o, const GameStats& s, double u,
                              const SolverOptions& opt) {
    const double cap = u / (u - s.ess_inf);
    // Residual is (E - u)/u > 0 at t = 0 and strictly decreasing.
    double lo = 0.0;
    double hi = cap * (1.0 - 1e-13);
    double r_hi = residual_at(o, u, hi);
    while (r_hi > 0.0 && hi < cap) {
        const double next = hi + 0.5 * (cap - hi);
        if (!(next > hi) || !(next < cap)) break;
        lo = hi;
        hi = next;
        r_hi = residual_at(o, u, hi);
    }

    ProportionSolution sol{u, hi, 0.0, r_hi, 0, false};
    if (r_hi > 0.0) {
        sol.growth = std::exp(log_growth_at(o, u, hi));
        return sol;
    }

    for (int iter = 1; iter <= opt.max_iter; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double r = residual_at(o, u, mid);
        sol.proportion = mid;
        sol.residual = r;
        sol.iterations = iter;
        if (r == 0.0) {
            sol.converged = true;
            break;
        }
        if (r > 0.0) lo = mid; else hi = mid;
        const bool small_residual = std::abs(r) <= opt.tol_residual;
        if (small_residual && hi - lo <= opt.tol_proportion * mid) {
            sol.converged = true;
            break;
        }
        const double next = 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) {
            // Bracket exhausted at double resolution.
            sol.converged = true;
            break;
        }
    }
    sol.growth = std::exp(log_growth_at(o, u, sol.proportion));
    return sol;
}

ProportionSolution full_investment(std::span<const Outcome> o, const GameStats& s, double u) {
    return {u, 1.0, std::exp(s.log_moment) / u, residual_at(o, u, 1.0), 0, true};
}

ProportionSolution optimal_unchecked(std::span<const Outcome> o, const GameStats& s, double u,
                                     const SolverOptions& opt) {
    if (u > s.fair_price) return solve_root(o, s, u, opt);
    return full_investment(o, s, u);
}

void check_admissible(const GameStats& s, double u) {
    if (!(u > s.lower_price_bound && u < s.expectation)) {
        throw DomainError("price " + num(u) + " outside admissible interval (xi + 1/H_xi, E) = (" +
                          num(s.lower_price_bound) + ", " + num(s.expectation) + ")");
    }
}

}  // namespace

std::string_view to_string(Regime regime) {
    switch (regime) {
        case Regime::Interior: return "Interior";
        case Regime::FullInvestment: return "FullInvestment";
    }
    return "unknown";
}

double boundary_growth(const GameStats& stats) {
    return stats.harmonic_integral * std::exp(stats.log_moment);
}

double proportion_residual(const Game& game, double price, double proportion) {
    const GameStats s = compute_stats(game);
    if (!(price > s.ess_inf) || !std::isfinite(price)) {
        throw DomainError("price " + num(price) + " must exceed xi = " + num(s.ess_inf));
    }
    const double cap = price / (price - s.ess_inf);
    if (!(proportion >= 0.0 && proportion < cap)) {
        throw DomainError("proportion " + num(proportion) + " outside [0, u/(u - xi)) = [0, " +
                          num(cap) + ")");
    }
    return residual_at(game.outcomes(), price, proportion);
}

ProportionSolution pre_optimal_proportion(const Game& game, double price,
                                          const SolverOptions& options) {
    const GameStats s = compute_stats(game);
    check_admissible(s, price);
    return solve_root(game.outcomes(), s, price, options);
}

double growth_rate(const Game& game, double price, double proportion) {
    require_valid(game);
    check_growth_domain(game.outcomes(), price, proportion);
    return std::exp(log_growth_at(game.outcomes(), price, proportion));
}

ProportionSolution optimal_proportion(const Game& game, double price,
                                      const SolverOptions& options) {
    const GameStats s = compute_stats(game);
    if (!(price > 0.0 && price < s.expectation)) {
        throw DomainError("price " + num(price) + " outside (0, E) = (0, " + num(s.expectation) +
                          ")");
    }
    return optimal_unchecked(game.outcomes(), s, price, options);
}

PricingSolution optimal_price(const Game& game, double rate, const SolverOptions& options) {
    if (!(rate > 0.0) || !std::isfinite(rate)) {
        throw DomainError("rate " + num(rate) + " must be positive: growth 1 is only reached as u -> E");
    }
    const GameStats s = compute_stats(game);
    const auto o = game.outcomes();
    const double target = std::exp(rate);

    PricingSolution out{rate, 0.0, Regime::FullInvestment, 1.0, 0.0, 0};
    if (target >= boundary_growth(s)) {
        out.optimal_price = std::exp(s.log_moment) / target;
        out.growth_check = std::exp(s.log_moment) / out.optimal_price;
        return out;
    }

    // Optimal growth falls strictly from H exp(log_moment) at 1/H to 1 at E.
    const double span = s.expectation - s.fair_price;
    double lo = s.fair_price + 1e-12 * span;
    double hi = s.expectation - 1e-12 * span;
    double mid = 0.5 * (lo + hi);
    for (int iter = 1; iter <= options.max_iter; ++iter) {
        mid = 0.5 * (lo + hi);
        out.iterations = iter;
        const double g = solve_root(o, s, mid, options).growth;
        if (g == target) break;
        if (g > target) lo = mid; else hi = mid;
        if (hi - lo <= options.tol_price * mid) break;
        const double next = 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) break;
    }

    const ProportionSolution at = solve_root(o, s, mid, options);
    out.optimal_price = mid;
    out.regime = Regime::Interior;
    out.proportion = at.proportion;
    out.growth_check = at.growth;
    return out;
}

}  // namespace gameprice
