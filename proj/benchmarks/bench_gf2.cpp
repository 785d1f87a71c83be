#include <benchmark/benchmark.h>

#include <random>

#include "zslab/gf2.hpp"

using namespace zslab::gf2;

namespace {

GF2Matrix random_matrix(std::uint32_t m, std::uint32_t a, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    GF2Matrix p(m, a);
    for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = 0; j < a; ++j) p.row_data[i].set(j, rng() & 1);
    return p;
}

}  // namespace

static void BM_KernelWindow(benchmark::State& state) {
    const std::uint32_t a = static_cast<std::uint32_t>(state.range(0));
    auto p = random_matrix(1u << a, a, 42);
    for (auto _ : state) {
        auto w = kernel_window(p);
        benchmark::DoNotOptimize(w);
    }
    state.SetItemsProcessed(state.iterations() * p.rows);
}
BENCHMARK(BM_KernelWindow)->Arg(4)->Arg(6)->Arg(8);

static void BM_KernelSubset(benchmark::State& state) {
    const std::uint32_t a = static_cast<std::uint32_t>(state.range(0));
    auto p = random_matrix(a + 1, a, 43);
    for (auto _ : state) {
        auto s = kernel_subset(p);
        benchmark::DoNotOptimize(s);
    }
    state.SetItemsProcessed(state.iterations() * p.rows);
}
BENCHMARK(BM_KernelSubset)->Arg(8)->Arg(32)->Arg(64);

static void BM_KernelFixedWeight(benchmark::State& state) {
    const std::uint32_t a = static_cast<std::uint32_t>(state.range(0));
    const std::uint32_t m = 1u << a;
    auto p = random_matrix(m + a, a, 44);
    for (auto _ : state) {
        auto s = kernel_fixed_weight(p, m);
        benchmark::DoNotOptimize(s);
    }
    state.SetItemsProcessed(state.iterations() * p.rows);
}
BENCHMARK(BM_KernelFixedWeight)->Arg(3)->Arg(5)->Arg(7);
