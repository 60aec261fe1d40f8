#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "gameprice/kelly_solver.hpp"
#include "gameprice/oracle.hpp"
#include "gameprice/translation.hpp"

using namespace gameprice;

static Game make_game(int outcomes) {
    std::mt19937_64 rng(outcomes);
    std::uniform_real_distribution<double> logp(std::log(0.1), std::log(100.0));
    std::vector<Outcome> o;
    for (int i = 0; i < outcomes; ++i) o.push_back({std::exp(logp(rng)), 1.0 / outcomes});
    return Game(std::move(o));
}

static void BM_PreOptimalProportion(benchmark::State& state) {
    const Game g = make_game(static_cast<int>(state.range(0)));
    const GameStats s = compute_stats(g);
    const double u = 0.5 * (s.fair_price + s.expectation);
    for (auto _ : state) benchmark::DoNotOptimize(pre_optimal_proportion(g, u));
}
BENCHMARK(BM_PreOptimalProportion)->RangeMultiplier(4)->Range(2, 512);

static void BM_OptimalPrice(benchmark::State& state) {
    const Game g = make_game(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(optimal_price(g, 0.01));
}
BENCHMARK(BM_OptimalPrice)->RangeMultiplier(4)->Range(2, 512);

static void BM_ThresholdShift(benchmark::State& state) {
    const Game g({{1.0, 0.5}, {19.0, 0.5}});
    for (auto _ : state) benchmark::DoNotOptimize(threshold_shift(g, 0.05));
}
BENCHMARK(BM_ThresholdShift);

static void BM_GridArgmax(benchmark::State& state) {
    const Game g({{1.0, 0.5}, {19.0, 0.5}});
    for (auto _ : state) benchmark::DoNotOptimize(grid_argmax_growth(g, 7.2236, state.range(0)));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GridArgmax)->Arg(1000)->Arg(100000);

static void BM_SimulateWealth(benchmark::State& state) {
    const Game g = make_game(8);
    const GameStats s = compute_stats(g);
    const double u = 0.5 * (s.fair_price + s.expectation);
    const double t = optimal_proportion(g, u).proportion;
    for (auto _ : state) benchmark::DoNotOptimize(simulate_wealth(g, u, t, 1000, 100, 1));
    state.SetItemsProcessed(state.iterations() * 100000);
}
BENCHMARK(BM_SimulateWealth);

BENCHMARK_MAIN();
