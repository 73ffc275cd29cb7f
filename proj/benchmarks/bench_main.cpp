#include <benchmark/benchmark.h>

#include <random>

#include "orw/bounds.hpp"
#include "orw/copies.hpp"
#include "orw/lower_bound.hpp"
#include "orw/ramsey.hpp"
#include "orw/replay.hpp"

using namespace orw;

static void BM_OrdinalAddCompare(benchmark::State& state) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Natural> coef(0, 9);
    std::vector<Ordinal> pool;
    for (int i = 0; i < 256; ++i)
        pool.push_back(Ordinal::omega_power(3, coef(rng)) + Ordinal::omega_power(2, coef(rng)) +
                       Ordinal::omega_power(1, coef(rng)) + Ordinal::natural(coef(rng)));
    std::size_t i = 0;
    for (auto _ : state) {
        const Ordinal& a = pool[i & 255];
        const Ordinal& b = pool[(i * 7 + 3) & 255];
        benchmark::DoNotOptimize(a + b);
        benchmark::DoNotOptimize(a < b);
        ++i;
    }
}
BENCHMARK(BM_OrdinalAddCompare);

static void BM_BruteForceRamsey(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_ramsey(static_cast<Natural>(state.range(0))));
}
BENCHMARK(BM_BruteForceRamsey)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_LowerBoundPipeline(benchmark::State& state) {
    const Natural n = static_cast<Natural>(state.range(0));
    const RamseyRecord rec = builtin_record(n);
    for (auto _ : state) benchmark::DoNotOptimize(verify_lower_bound(n, rec));
}
BENCHMARK(BM_LowerBoundPipeline)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_InstantiateClauses(benchmark::State& state) {
    const Natural n = static_cast<Natural>(state.range(0));
    const Natural k = static_cast<Natural>(state.range(1));
    std::size_t clauses = 0;
    for (auto _ : state) {
        const ClauseSystem sys = instantiate_clauses(n, k);
        clauses = sys.clauses.size();
        benchmark::DoNotOptimize(clauses);
    }
    state.counters["clauses"] = static_cast<double>(clauses);
}
BENCHMARK(BM_InstantiateClauses)->Args({3, 7})->Args({4, 12})->Args({4, 15})->Unit(benchmark::kMillisecond);

static void BM_ReplayDecide(benchmark::State& state) {
    const ClauseSystem sys =
        instantiate_clauses(static_cast<Natural>(state.range(0)), static_cast<Natural>(state.range(1)));
    std::size_t conflicts = 0;
    for (auto _ : state) {
        const DecideReport r = decide(sys);
        conflicts = r.conflicts;
        benchmark::DoNotOptimize(r);
    }
    state.counters["conflicts"] = static_cast<double>(conflicts);
}
BENCHMARK(BM_ReplayDecide)->Args({3, 5})->Args({3, 7})->Args({4, 12})->Unit(benchmark::kMillisecond);

static void BM_BoundsTable(benchmark::State& state) {
    RamseyTable t = RamseyTable::defaults();
    for (auto _ : state) benchmark::DoNotOptimize(bounds_table(8, t));
}
BENCHMARK(BM_BoundsTable);
BENCHMARK_MAIN();
