#include "gameprice/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "format.hpp"
#include "gameprice/kelly_solver.hpp"
#include "gameprice/rng.hpp"

namespace gameprice {

using detail::num;

Game TwoPointGame::to_game() const {
    return Game({{high, p_high}, {low, 1.0 - p_high}});
}

ClosedForm two_point_closed_form(const TwoPointGame& g, double price, double shift) {
    const double a = g.high, b = g.low, p = g.p_high;
    if (!(0.0 < b && b < a && 0.0 < p && p < 1.0)) {
        throw DomainError("two-point game needs 0 < low < high and 0 < p < 1");
    }
    const double e = g.expectation();
    if (!(b < price && price < e)) {
        throw DomainError("price " + num(price) + " outside (low, E) = (" + num(b) + ", " +
                          num(e) + ")");
    }
    if (!(shift > -b)) {
        throw DomainError("shift " + num(shift) + " must exceed -low = " + num(-b));
    }
    const double u = price;
    ClosedForm cf{};
    cf.proportion = (e - u) * (shift + u) / ((a - u) * (u - b));
    cf.growth = (a - b) * std::pow(p / (u - b), p) * std::pow((1.0 - p) / (a - u), 1.0 - p);
    return cf;
}

GridArgmax grid_argmax_growth(const Game& game, double price, std::size_t grid_points) {
    const GameStats s = compute_stats(game);
    if (!(price > s.fair_price && price < s.expectation)) {
        throw DomainError("price " + num(price) + " outside (1/H, E) = (" + num(s.fair_price) +
                          ", " + num(s.expectation) + ")");
    }
    if (grid_points == 0) throw DomainError("grid needs at least one point");

    const double u = price;
    const double top = std::min(1.0, (1.0 - 1e-9) * u / (u - s.ess_inf));
    const double step = top / static_cast<double>(grid_points + 1);
    const auto outcomes = game.outcomes();

    double best_t = step;
    double best = -HUGE_VAL;
    for (std::size_t k = 1; k <= grid_points; ++k) {
        const double t = step * static_cast<double>(k);
        double log_g = 0.0;
        for (const Outcome& o : outcomes) log_g += o.prob * std::log(o.payout * t / u - t + 1.0);
        if (log_g > best) {
            best = log_g;
            best_t = t;
        }
    }
    return {best_t, step};
}

SimulationResult simulate_wealth(const Game& game, double price, double proportion,
                                 std::size_t periods, std::size_t paths, std::uint64_t seed) {
    // Throws DomainError for inadmissible (u, t) before anything is sampled.
    growth_rate(game, price, proportion);
    if (periods == 0 || paths == 0) {
        throw DomainError("simulation needs at least one path and one period");
    }

    const auto outcomes = game.outcomes();
    const std::size_t k = outcomes.size();
    std::vector<double> cumulative(k);
    std::vector<double> log_factor(k);
    double acc = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        acc += outcomes[i].prob;
        cumulative[i] = acc;
        log_factor[i] = std::log(outcomes[i].payout * proportion / price - proportion + 1.0);
    }

    // Draws only matter through how often each outcome occurs.
    std::vector<std::uint64_t> counts(k, 0);
    for (std::size_t path = 0; path < paths; ++path) {
        SplitMix64 rng = SplitMix64::for_path(seed, path);
        for (std::size_t step = 0; step < periods; ++step) {
            const double x = rng.uniform() * acc;
            auto it = std::upper_bound(cumulative.begin(), cumulative.end(), x);
            const std::size_t idx =
                std::min<std::size_t>(static_cast<std::size_t>(it - cumulative.begin()), k - 1);
            ++counts[idx];
        }
    }

    const double total = static_cast<double>(periods) * static_cast<double>(paths);
    double mean = 0.0;
    for (std::size_t i = 0; i < k; ++i) mean += static_cast<double>(counts[i]) * log_factor[i];
    mean /= total;
    double ss = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        const double d = log_factor[i] - mean;
        ss += static_cast<double>(counts[i]) * d * d;
    }
    const double variance = total > 1.0 ? ss / (total - 1.0) : 0.0;

    return {mean, std::sqrt(variance / total), paths, periods, seed};
}

}  // namespace gameprice
