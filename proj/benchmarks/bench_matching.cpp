#include <gpm/generators.hpp>
#include <gpm/matching.hpp>
#include <gpm/transforms.hpp>

#include <benchmark/benchmark.h>

namespace {

void BM_MaximumMatchingCycleSubdivision(benchmark::State & state)
{
    auto g = gpm::subdivision(gpm::cycle(static_cast<std::uint32_t>(state.range(0))), 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(gpm::matching_number(g));
    state.SetComplexityN(g.order());
}
BENCHMARK(BM_MaximumMatchingCycleSubdivision)->RangeMultiplier(2)->Range(8, 256)->Complexity();

void BM_MaximumMatchingBipartitePower(benchmark::State & state)
{
    auto n = static_cast<std::uint32_t>(state.range(0));
    auto g = gpm::power(gpm::subdivision(gpm::complete_bipartite(3, n), 2), 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(gpm::matching_number(g));
    state.SetComplexityN(g.order());
}
BENCHMARK(BM_MaximumMatchingBipartitePower)->DenseRange(4, 16, 4);

void BM_SaturationPathPower(benchmark::State & state)
{
    auto g = gpm::power(gpm::path(static_cast<std::uint32_t>(state.range(0))), 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(gpm::saturation_number(g));
}
BENCHMARK(BM_SaturationPathPower)->DenseRange(10, 40, 10);

void BM_SaturationCactusFractional(benchmark::State & state)
{
    auto g = gpm::fractional_power(gpm::chain_triangular_cactus(static_cast<std::uint32_t>(state.range(0))), 2, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(gpm::saturation_number(g));
}
BENCHMARK(BM_SaturationCactusFractional)->DenseRange(1, 4, 1);

} // namespace

BENCHMARK_MAIN();
