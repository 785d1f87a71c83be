#include <benchmark/benchmark.h>

#include <random>

#include "zslab/residue_mask.hpp"
#include "zslab/solver.hpp"

using namespace zslab;

namespace {

ResidueSequence random_sequence(std::uint64_t n, std::size_t len, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Residue> terms(len);
    for (auto& t : terms) t = rng() % n;
    return ResidueSequence(n, terms);
}

}  // namespace

static void BM_OredRotate(benchmark::State& state) {
    const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
    std::mt19937_64 rng(7);
    ResidueMask src(n), dst(n);
    for (std::uint64_t r = 0; r < n; r += 1 + rng() % 3) src.set(r);
    std::uint64_t shift = n / 3;
    for (auto _ : state) {
        ored_rotate(dst, src, shift);
        benchmark::DoNotOptimize(dst.words.data());
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_OredRotate)->Arg(24)->Arg(64)->Arg(360)->Arg(4096);

static void BM_SolveAny(benchmark::State& state) {
    const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
    auto w = materialize(WeightSetSpec::units(), factorize(n));
    auto s = random_sequence(n, 24, 99);
    for (auto _ : state) {
        auto v = solve_any(s, w);
        benchmark::DoNotOptimize(v);
    }
    state.SetItemsProcessed(state.iterations() * s.length());
}
BENCHMARK(BM_SolveAny)->Arg(16)->Arg(64)->Arg(240);

static void BM_SolveConsecutive(benchmark::State& state) {
    const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
    auto w = materialize(WeightSetSpec::odd(), factorize(n));
    auto s = random_sequence(n, 24, 100);
    for (auto _ : state) {
        auto v = solve_consecutive(s, w);
        benchmark::DoNotOptimize(v);
    }
    state.SetItemsProcessed(state.iterations() * s.length());
}
BENCHMARK(BM_SolveConsecutive)->Arg(16)->Arg(64)->Arg(240);

static void BM_CunPipeline(benchmark::State& state) {
    const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
    auto ring = factorize(n);
    auto s = random_sequence(n, std::size_t{1} << ring.big_omega, 101);
    for (auto _ : state) {
        auto cert = cun_pipeline(s);
        benchmark::DoNotOptimize(cert);
    }
    state.SetItemsProcessed(state.iterations() * s.length());
}
BENCHMARK(BM_CunPipeline)->Arg(12)->Arg(60)->Arg(360);

static void BM_EunPipeline(benchmark::State& state) {
    const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
    auto ring = factorize(n);
    const std::uint64_t m = std::uint64_t{1} << ring.big_omega;
    auto s = random_sequence(n, m + ring.big_omega, 102);
    for (auto _ : state) {
        auto cert = eun_pipeline(s, m);
        benchmark::DoNotOptimize(cert);
    }
    state.SetItemsProcessed(state.iterations() * s.length());
}
BENCHMARK(BM_EunPipeline)->Arg(12)->Arg(60);
