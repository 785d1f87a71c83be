#include <benchmark/benchmark.h>

#include "zslab/constants.hpp"

using namespace zslab;

static void BM_ComputeC(benchmark::State& state) {
    const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
    auto ring = factorize(n);
    for (auto _ : state) {
        SearchBudget budget;
        auto res = compute_exhaustive(ConstantKind::C, ring, WeightSetSpec::units(), budget);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_ComputeC)->Arg(8)->Arg(9)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_ComputeD(benchmark::State& state) {
    const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
    auto ring = factorize(n);
    for (auto _ : state) {
        SearchBudget budget;
        auto res = compute_exhaustive(ConstantKind::D, ring, WeightSetSpec::units(), budget);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_ComputeD)->Arg(16)->Arg(30)->Unit(benchmark::kMicrosecond);

static void BM_ComputeE(benchmark::State& state) {
    const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
    auto ring = factorize(n);
    for (auto _ : state) {
        SearchBudget budget;
        auto res = compute_exhaustive(ConstantKind::E, ring, WeightSetSpec::units(), budget);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_ComputeE)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_EnumerateCExtremal(benchmark::State& state) {
    auto ring = factorize(static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) {
        SearchBudget budget;
        auto list = enumerate_extremal(ConstantKind::C, ring, WeightSetSpec::units(), false, budget);
        benchmark::DoNotOptimize(list);
    }
}
BENCHMARK(BM_EnumerateCExtremal)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
