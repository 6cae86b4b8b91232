#include <benchmark/benchmark.h>

#include "strata/cache.hpp"
#include "strata/multiseries.hpp"
#include "strata/partitions.hpp"
#include "strata/series.hpp"
#include "strata/siegel_veech.hpp"
#include "strata/volumes.hpp"

using namespace strata;

static void BM_AlphaTable(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(alpha_table(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_AlphaTable)->Arg(9)->Arg(17)->Arg(25);

static void BM_DeltaSeries(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(delta_series(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_DeltaSeries)->Arg(8)->Arg(16);

// Cold-cache volume of the stratum (1^{2g-2}), which exercises every level of the recursion.
static void BM_VolumePrincipal(benchmark::State& state)
{
    const int g = static_cast<int>(state.range(0));
    Signature mu(std::vector<int>(2 * g - 2, 1));
    for (auto _ : state) {
        clear_caches();
        benchmark::DoNotOptimize(v_stratum(mu));
    }
}
BENCHMARK(BM_VolumePrincipal)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

// H_n coefficients are memoized, so iterations after the first are warm.
static void BM_VolumeD2(benchmark::State& state)
{
    const int g = static_cast<int>(state.range(0));
    Signature mu({g - 1, g - 1});
    for (auto _ : state)
        benchmark::DoNotOptimize(v_stratum_d2(mu));
}
BENCHMARK(BM_VolumeD2)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_HnSeries(benchmark::State& state)
{
    const int b = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(H_n({b, b, b}, Basis::h));
}
BENCHMARK(BM_HnSeries)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_AreaConstant(benchmark::State& state)
{
    Signature mu = Signature::parse("3,2,1");
    for (auto _ : state) {
        clear_caches();
        benchmark::DoNotOptimize(c_area(mu));
    }
}
BENCHMARK(BM_AreaConstant)->Unit(benchmark::kMillisecond);

static void BM_CoversBrute(benchmark::State& state)
{
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(count_covers_brute({{2}, {2}}, d, true));
}
BENCHMARK(BM_CoversBrute)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_ConnectedBracket(benchmark::State& state)
{
    PartitionFunction f = [](const Partition& l) { return f_eval(2, l); };
    for (auto _ : state)
        benchmark::DoNotOptimize(connected_bracket({f, f}, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ConnectedBracket)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
