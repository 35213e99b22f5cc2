// Serial reference vs OpenMP kernels: the check grid and the polynomial product.

#include <benchmark/benchmark.h>

#include <random>

#include "appell/grid.hpp"

using namespace appell;

namespace {

GridSpec bench_grid() {
    GridSpec g;
    g.kind = CheckKind::theorem_power;
    for (auto kind : all_kinds()) g.families.push_back(FamilyDescriptor::make(kind, 0));
    g.primes = {3, 5, 7};
    g.s = {1, 2};
    g.m = {0, 3};
    g.n = {0, 20};
    return g;
}

IntPoly dense(std::size_t degree, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Integer> c(degree + 1);
    for (auto& a : c) {
        a = static_cast<long>(rng() >> 1);
        a *= static_cast<long>(rng() >> 1);
    }
    c.back() = 1;
    return IntPoly(std::move(c));
}

void BM_grid_serial(benchmark::State& state) {
    const auto spec = bench_grid();
    for (auto _ : state) benchmark::DoNotOptimize(run_grid_serial(spec));
}

void BM_grid_parallel(benchmark::State& state) {
    auto spec = bench_grid();
    spec.jobs = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(run_grid(spec));
}

void BM_mul_serial(benchmark::State& state) {
    const auto f = dense(static_cast<std::size_t>(state.range(0)), 1);
    const auto g = dense(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(poly_mul_serial(f, g));
}

void BM_mul_parallel(benchmark::State& state) {
    const auto f = dense(static_cast<std::size_t>(state.range(0)), 1);
    const auto g = dense(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(poly_mul_parallel(f, g));
}

}  // namespace

BENCHMARK(BM_grid_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_grid_parallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mul_serial)->Arg(128)->Arg(1024)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_mul_parallel)->Arg(128)->Arg(1024)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
