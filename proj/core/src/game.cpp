#include "gameprice/game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "format.hpp"
#include "gameprice/summation.hpp"

namespace gameprice {

using detail::num;

std::string Verdict::summary() const {
    if (violations.empty()) return "valid game";
    std::string s = "invalid game: ";
    for (std::size_t i = 0; i < violations.size(); ++i) {
        if (i) s += "; ";
        s += violations[i];
    }
    return s;
}

Game::Game(std::vector<Outcome> outcomes, std::string label,
           std::optional<double> support_floor)
    : label_(std::move(label)), support_floor_(support_floor) {
    std::erase_if(outcomes, [](const Outcome& o) { return o.prob == 0.0; });
    // NaN payouts sort last so the comparator stays a strict weak order.
    std::stable_sort(outcomes.begin(), outcomes.end(), [](const Outcome& a, const Outcome& b) {
        const bool na = std::isnan(a.payout), nb = std::isnan(b.payout);
        if (na || nb) return !na && nb;
        return a.payout < b.payout;
    });
    for (const Outcome& o : outcomes) {
        if (!outcomes_.empty() && outcomes_.back().payout == o.payout) {
            outcomes_.back().prob += o.prob;
        } else {
            outcomes_.push_back(o);
        }
    }
}

double Game::min_payout() const {
    double m = std::numeric_limits<double>::infinity();
    for (const Outcome& o : outcomes_)
        if (o.prob > 0.0) m = std::min(m, o.payout);
    return m;
}

Verdict validate(const Game& game) {
    Verdict v;
    const auto outcomes = game.outcomes();
    if (outcomes.empty()) {
        v.violations.push_back("game has no outcomes with nonzero weight");
        return v;
    }

    bool finite = true;
    for (const Outcome& o : outcomes) {
        if (!std::isfinite(o.payout) || !std::isfinite(o.prob)) {
            v.violations.push_back("non-finite outcome (payout " + num(o.payout) + ", prob " +
                                   num(o.prob) + ")");
            finite = false;
        } else if (o.prob < 0.0) {
            v.violations.push_back("negative weight " + num(o.prob) + " at payout " +
                                   num(o.payout));
        }
    }
    if (!finite) return v;

    const double total =
        pairwise_sum([&](std::size_t i) { return outcomes[i].prob; }, outcomes.size());
    if (std::abs(total - 1.0) > kWeightSumTolerance) {
        v.violations.push_back("weights sum to " + num(total) + ", expected 1 within " +
                               num(kWeightSumTolerance));
    }

    const double xi = game.min_payout();
    if (!(xi > 0.0)) {
        v.violations.push_back("essential infimum of payouts is " + num(xi) +
                               ", but xi > 0 is required");
    }

    std::size_t distinct = 0;
    for (const Outcome& o : outcomes)
        if (o.prob > 0.0) ++distinct;
    if (distinct < 2) {
        v.violations.push_back(
            "constant profit: at least two distinct payouts must carry positive weight");
    }

    if (auto floor = game.support_floor()) {
        if (!std::isfinite(*floor) || !(*floor > 0.0) || *floor > xi) {
            v.violations.push_back("support floor " + num(*floor) +
                                   " must lie in (0, smallest payout " + num(xi) + "]");
        }
    }
    return v;
}

void require_valid(const Game& game) {
    Verdict v = validate(game);
    if (!v.ok()) throw ValidationError(std::move(v));
}

double ess_inf(const Game& game) {
    return game.support_floor().value_or(game.min_payout());
}

GameStats compute_stats(const Game& game) {
    require_valid(game);
    const auto o = game.outcomes();
    const std::size_t n = o.size();

    GameStats s{};
    s.expectation = pairwise_sum([&](std::size_t i) { return o[i].prob * o[i].payout; }, n);
    s.harmonic_integral = pairwise_sum([&](std::size_t i) { return o[i].prob / o[i].payout; }, n);
    s.ess_inf = ess_inf(game);
    s.log_moment =
        pairwise_sum([&](std::size_t i) { return o[i].prob * std::log(o[i].payout); }, n);

    // Mass at xi makes H_xi infinite.
    if (game.min_payout() == s.ess_inf) {
        s.h_xi = std::numeric_limits<double>::infinity();
        s.lower_price_bound = s.ess_inf;
    } else {
        s.h_xi = pairwise_sum(
            [&](std::size_t i) { return o[i].prob / (o[i].payout - s.ess_inf); }, n);
        s.lower_price_bound = s.ess_inf + 1.0 / s.h_xi;
    }
    s.fair_price = 1.0 / s.harmonic_integral;
    return s;
}

Game translate(const Game& game, double shift) {
    require_valid(game);
    const double xi = ess_inf(game);
    if (!(shift > -xi) || !std::isfinite(shift)) {
        throw DomainError("shift " + num(shift) + " must exceed -xi = " + num(-xi));
    }
    std::vector<Outcome> moved(game.outcomes().begin(), game.outcomes().end());
    for (Outcome& o : moved) o.payout += shift;
    std::optional<double> floor;
    if (game.support_floor()) floor = *game.support_floor() + shift;
    return Game(std::move(moved), game.label(), floor);
}

Game normalized(const Game& game) {
    const auto o = game.outcomes();
    const double total = pairwise_sum([&](std::size_t i) { return o[i].prob; }, o.size());
    if (!(total > 0.0) || !std::isfinite(total)) {
        throw ValidationError(Verdict{{"cannot normalize weights summing to " + num(total)}});
    }
    std::vector<Outcome> scaled(o.begin(), o.end());
    for (Outcome& x : scaled) x.prob /= total;
    return Game(std::move(scaled), game.label(), game.support_floor());
}

}  // namespace gameprice
