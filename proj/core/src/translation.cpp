#include "gameprice/translation.hpp"

#include <algorithm>
#include <cmath>

#include "format.hpp"

namespace gameprice {

using detail::num;

namespace {

TranslationReport compare_translated(const Game& game, double u, double n,
                                     const SolverOptions& opt) {
    const Game moved = translate(game, n);
    const ProportionSolution base = pre_optimal_proportion(game, u, opt);
    const ProportionSolution shifted = pre_optimal_proportion(moved, u + n, opt);

    TranslationReport rep{};
    rep.shift = n;
    rep.price = u;
    rep.proportion_original = base.proportion;
    rep.proportion_translated = shifted.proportion;
    rep.ratio_original = base.proportion / u;
    rep.ratio_translated = shifted.proportion / (u + n);
    rep.growth_original = base.growth;
    rep.growth_translated = shifted.growth;
    rep.ratio_residual = std::abs(rep.ratio_translated - rep.ratio_original);
    rep.growth_residual = std::abs(rep.growth_translated - rep.growth_original);
    return rep;
}

void check_rate(double rate) {
    if (!(rate > 0.0) || !std::isfinite(rate)) {
        throw DomainError("rate " + num(rate) + " must be positive");
    }
}

}  // namespace

std::string_view to_string(ThresholdNote note) {
    switch (note) {
        case ThresholdNote::Found: return "Found";
        case ThresholdNote::AlreadyFullInvestmentAtZeroShift:
            return "AlreadyFullInvestmentAtZeroShift";
    }
    return "unknown";
}

TranslationReport check_ratio_invariance(const Game& game, double price, double shift,
                                         const SolverOptions& options) {
    return compare_translated(game, price, shift, options);
}

TranslationReport check_growth_invariance(const Game& game, double price, double shift,
                                          const SolverOptions& options) {
    return compare_translated(game, price, shift, options);
}

double translated_boundary_growth(const Game& game, double shift) {
    return boundary_growth(compute_stats(translate(game, shift)));
}

ThresholdResult threshold_shift(const Game& game, double rate, const SolverOptions& options) {
    check_rate(rate);
    const double target = std::exp(rate);
    const auto excess = [&](double n) { return translated_boundary_growth(game, n) - target; };

    ThresholdResult res{rate, std::nullopt, 0.0, ThresholdNote::Found, 0};
    const double at_zero = excess(0.0);
    if (std::abs(at_zero) <= 1e-12 * target) {
        res.n0 = 0.0;
        res.residual = std::abs(at_zero);
        return res;
    }
    if (at_zero < 0.0) {
        res.note = ThresholdNote::AlreadyFullInvestmentAtZeroShift;
        res.residual = std::abs(at_zero);
        return res;
    }

    // Boundary growth decreases to 1 as the shift grows.
    double lo = 0.0;
    double hi = std::max(1.0, 10.0 * compute_stats(game).expectation);
    int doublings = 0;
    while (excess(hi) >= 0.0) {
        if (++doublings > 60) {
            throw DomainError("boundary growth stays above e^rate = " + num(target) +
                              " up to shift " + num(hi) + "; rate " + num(rate) +
                              " is too small to resolve");
        }
        lo = hi;
        hi *= 2.0;
    }

    double mid = 0.5 * (lo + hi);
    double value = excess(mid);
    for (int iter = 1; iter <= options.max_iter; ++iter) {
        mid = 0.5 * (lo + hi);
        value = excess(mid);
        res.iterations = iter;
        if (value == 0.0) break;
        if (value > 0.0) lo = mid; else hi = mid;
        if (hi - lo <= options.tol_price * std::max(1.0, mid)) break;
        const double next = 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) break;
    }
    res.n0 = mid;
    res.residual = std::abs(value);
    return res;
}

PricingSolution price_translated(const Game& game, double rate, double shift,
                                 const SolverOptions& options) {
    check_rate(rate);
    const Game moved = translate(game, shift);
    const PricingSolution priced = optimal_price(moved, rate, options);

    const double target = std::exp(rate);
    const double base_boundary = boundary_growth(compute_stats(game));
    const double moved_boundary = boundary_growth(compute_stats(moved));
    if (target < base_boundary && target < moved_boundary) {
        const PricingSolution base = optimal_price(game, rate, options);
        const double expected = base.optimal_price + shift;
        const double tol = 1e-8 * std::max(1.0, std::abs(expected));
        if (!(std::abs(priced.optimal_price - expected) <= tol)) {
            throw ConsistencyError("translated price " + num(priced.optimal_price) +
                                   " differs from u_r + n = " + num(expected) + " at shift " +
                                   num(shift) + ", rate " + num(rate));
        }
    }
    return priced;
}

std::vector<AsymptoticRow> asymptotic_sweep(const Game& game, double rate,
                                            std::span<const double> shifts,
                                            const SolverOptions& options) {
    check_rate(rate);
    for (std::size_t i = 1; i < shifts.size(); ++i) {
        if (!(shifts[i] > shifts[i - 1])) {
            throw DomainError("sweep shifts must be strictly increasing; got " +
                              num(shifts[i - 1]) + " then " + num(shifts[i]));
        }
    }
    std::vector<AsymptoticRow> rows;
    rows.reserve(shifts.size());
    for (double n : shifts) {
        const Game moved = translate(game, n);
        const GameStats st = compute_stats(moved);
        const PricingSolution priced = optimal_price(moved, rate, options);
        rows.push_back({n, st.expectation - st.fair_price, boundary_growth(st),
                        priced.optimal_price / st.expectation, st.fair_price - n});
    }
    return rows;
}

}  // namespace gameprice
