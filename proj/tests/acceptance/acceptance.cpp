// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "gameprice/kelly_solver.hpp"
#include "gameprice/oracle.hpp"
#include "gameprice/translation.hpp"
#include "test_support.hpp"

using namespace gameprice;
using gameprice::testing::example2;
using gameprice::testing::rel_err;

namespace {

constexpr double kRate = 0.05;

struct CriterionResult {
    bool pass;
    std::string detail;
};

std::string fmt(const char* pattern, double a = 0, double b = 0, double c = 0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

double round_to(double x, int digits) {
    const double scale = std::pow(10.0, digits);
    return std::round(x * scale) / scale;
}

CriterionResult example_pricing() {
    const PricingSolution p = optimal_price(example2(), kRate);
    const double expected = 10.0 - 9.0 * std::sqrt(1.0 - std::exp(-2.0 * kRate));
    const double err = rel_err(p.optimal_price, expected);
    const double t_err = rel_err(p.proportion, two_point_closed_form({19.0, 1.0, 0.5}, p.optimal_price).proportion);
    const bool pass = err <= 1e-9 && round_to(p.optimal_price, 3) == 7.224 &&
                      p.regime == Regime::Interior && t_err <= 1e-9;
    return {pass, fmt("u_r=%.10f rel_err=%.2e proportion rel_err=%.2e", p.optimal_price, err, t_err)};
}

CriterionResult example_threshold() {
    const ThresholdResult t = threshold_shift(example2(), kRate);
    if (!t.n0) return {false, "no threshold found"};
    const double er = std::exp(kRate);
    const double expected = 9.0 * er / std::sqrt(er * er - 1.0) - 10.0;
    const double err = rel_err(*t.n0, expected);
    return {err <= 1e-6 && round_to(*t.n0, 3) == 19.175, fmt("n0=%.10f rel_err=%.2e", *t.n0, err)};
}

CriterionResult example_large_shift() {
    const PricingSolution p = price_translated(example2(), kRate, 99.0);
    const double expected = std::sqrt(11800.0) / std::exp(kRate);
    const double err = rel_err(p.optimal_price, expected);
    const double e_over = compute_stats(translate(example2(), 99.0)).expectation / std::exp(kRate);
    const bool pass = err <= 1e-9 && round_to(p.optimal_price, 3) == 103.330 &&
                      round_to(e_over, 3) == 103.684;
    return {pass, fmt("u_r(99)=%.6f rel_err=%.2e  E(99)/e^r=%.6f", p.optimal_price, err, e_over)};
}

CriterionResult translated_prices() {
    const Game g = example2();
    const double base = optimal_price(g, kRate).optimal_price;
    double worst = 0.0;
    for (double n : {-0.5, 1.0, 5.0, 10.0, 19.0}) {
        worst = std::max(worst, std::abs(price_translated(g, kRate, n).optimal_price - (base + n)));
    }
    return {worst <= 1e-6, fmt("max |u_r(n) - (u_r + n)| = %.2e", worst)};
}

CriterionResult invariance_suite() {
    std::mt19937_64 rng(20070307);
    double worst_ratio = 0.0, worst_growth = 0.0;
    for (int i = 0; i < 500; ++i) {
        const Game g = gameprice::testing::random_game(rng, 3, 8);
        const GameStats s = compute_stats(g);
        const double u = gameprice::testing::random_between(rng, s.lower_price_bound, s.expectation, 1e-6);
        std::uniform_real_distribution<double> shift(-s.ess_inf + 1e-3, 100.0);
        const double n = shift(rng);
        const TranslationReport rep = check_ratio_invariance(g, u, n);
        worst_ratio = std::max(worst_ratio, rep.ratio_residual / std::max(1.0, rep.ratio_original));
        worst_growth = std::max(worst_growth, rep.growth_residual / rep.growth_original);
    }
    return {worst_ratio <= 1e-8 && worst_growth <= 1e-8,
            fmt("worst ratio residual %.2e, worst growth residual %.2e", worst_ratio, worst_growth)};
}

CriterionResult oracle_equivalence() {
    std::mt19937_64 rng(1956);
    std::uniform_real_distribution<double> logp(std::log(0.1), std::log(100.0));
    std::uniform_real_distribution<double> prob(0.02, 0.98);
    double worst_t = 0.0, worst_g = 0.0, worst_steps = 0.0;
    int games = 0;
    while (games < 1000) {
        double a = std::exp(logp(rng)), b = std::exp(logp(rng));
        if (a < b) std::swap(a, b);
        if (a / b < 1.0 + 1e-6) continue;
        const TwoPointGame tp{a, b, prob(rng)};
        const Game g = tp.to_game();
        const GameStats s = compute_stats(g);

        const double u = gameprice::testing::random_between(rng, b, tp.expectation());
        const ProportionSolution sol = pre_optimal_proportion(g, u);
        const ClosedForm cf = two_point_closed_form(tp, u);
        worst_t = std::max(worst_t, rel_err(sol.proportion, cf.proportion));
        worst_g = std::max(worst_g, rel_err(sol.growth, cf.growth));

        const double v = gameprice::testing::random_between(rng, s.fair_price, tp.expectation());
        const GridArgmax grid = grid_argmax_growth(g, v, 100000);
        const double t = pre_optimal_proportion(g, v).proportion;
        worst_steps = std::max(worst_steps, std::abs(grid.proportion - t) / grid.step);
        ++games;
    }
    return {worst_t <= 1e-9 && worst_g <= 1e-9 && worst_steps <= 1.0 + 1e-9,
            fmt("proportion %.2e, growth %.2e, grid distance %.3f steps", worst_t, worst_g, worst_steps)};
}

CriterionResult boundary_and_monotonicity() {
    std::mt19937_64 rng(1738);
    double worst_one = 0.0;
    bool monotone = true;
    for (int i = 0; i < 100; ++i) {
        const Game g = gameprice::testing::random_game(rng, 2, 8);
        const GameStats s = compute_stats(g);
        worst_one = std::max(worst_one, std::abs(pre_optimal_proportion(g, s.fair_price).proportion - 1.0));
        double prev_t = HUGE_VAL, prev_g = HUGE_VAL;
        for (int k = 1; k <= 50; ++k) {
            const double u = s.lower_price_bound + (s.expectation - s.lower_price_bound) * k / 51.0;
            const ProportionSolution sol = pre_optimal_proportion(g, u);
            monotone = monotone && sol.proportion < prev_t && sol.growth < prev_g;
            prev_t = sol.proportion;
            prev_g = sol.growth;
        }
    }
    return {worst_one <= 1e-9 && monotone,
            fmt("max |t(1/H) - 1| = %.2e", worst_one) + ", strictly decreasing: " + (monotone ? "yes" : "no")};
}

CriterionResult asymptotics() {
    std::vector<double> shifts;
    for (int k = 0; k <= 14; ++k) shifts.push_back(std::ldexp(1.0, k));
    const auto rows = asymptotic_sweep(example2(), kRate, shifts);
    bool gap_down = true, growth_down = true;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        gap_down = gap_down && rows[i].gap < rows[i - 1].gap;
        growth_down = growth_down && rows[i].boundary_growth < rows[i - 1].boundary_growth;
    }
    const auto& last = rows.back();
    const double ratio_err = std::abs(last.price_ratio - std::exp(-kRate));
    const bool pass = gap_down && growth_down && last.gap < 0.01 && last.boundary_growth < 1.001 &&
                      ratio_err < 5e-4;
    return {pass, fmt("n=2^14: gap=%.3e boundary_growth-1=%.3e |ratio-e^-r|=%.3e", last.gap,
                      last.boundary_growth - 1.0, ratio_err)};
}

CriterionResult monte_carlo() {
    const Game g = example2();
    const PricingSolution p = optimal_price(g, kRate);
    const SimulationResult sim = simulate_wealth(g, p.optimal_price, p.proportion, 1000, 100, 20070307);
    const SimulationResult idle = simulate_wealth(g, p.optimal_price, 0.0, 1000, 100, 20070307);
    const double z = std::abs(sim.mean_log_growth - kRate) / sim.std_error;
    return {z <= 3.0 && idle.mean_log_growth == 0.0,
            fmt("mean log growth %.5f (se %.5f, %.2f se from 0.05)", sim.mean_log_growth, sim.std_error, z) +
                fmt("; idle mean %g", idle.mean_log_growth)};
}

CriterionResult finite_difference() {
    std::mt19937_64 rng(24);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const Game g = gameprice::testing::random_game(rng, 3, 8);
        const GameStats s = compute_stats(g);
        const double u = gameprice::testing::random_between(rng, s.lower_price_bound, s.expectation, 1e-2);
        std::uniform_real_distribution<double> shift(-0.5 * s.ess_inf, 50.0);
        const double n = shift(rng);
        const double h = 1e-4 * (u + n);
        const auto root = [&](double m) { return pre_optimal_proportion(translate(g, m), u + m).proportion; };
        const double derivative = (root(n + h) - root(n - h)) / (2.0 * h);
        worst = std::max(worst, rel_err(derivative, root(n) / (u + n)));
    }
    return {worst <= 1e-3, fmt("worst relative error %.2e", worst)};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<CriterionResult()>>> criteria = {
        {"AC1  two-outcome pricing at r=0.05", example_pricing},
        {"AC2  two-outcome threshold shift", example_threshold},
        {"AC3  two-outcome price at shift 99", example_large_shift},
        {"AC4  additive price translation below n0", translated_prices},
        {"AC5  ratio/growth invariance, 500 random games", invariance_suite},
        {"AC6  closed-form and grid oracles, 1000 two-point games", oracle_equivalence},
        {"AC7  fair-price boundary and monotonicity", boundary_and_monotonicity},
        {"AC8  asymptotics over n = 2^0..2^14", asymptotics},
        {"AC9  Monte Carlo growth at the optimal price", monte_carlo},
        {"AC10 finite-difference derivative of the translated root", finite_difference},
    };

    int failures = 0;
    for (const auto& [name, check] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        CriterionResult result{false, ""};
        try {
            result = check();
        } catch (const std::exception& e) {
            result = {false, std::string("exception: ") + e.what()};
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s  %-58s %s (%.2fs)\n", result.pass ? "PASS" : "FAIL", name.c_str(),
                    result.detail.c_str(), secs);
        if (!result.pass) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
