#include <benchmark/benchmark.h>

#include "ecmf/apcount.hpp"
#include "ecmf/halfplane.hpp"
#include "ecmf/lattice.hpp"
#include "ecmf/qseries.hpp"

namespace {

using namespace ecmf;

void BM_CountPoints(benchmark::State& state) {
    const WeierstrassModel m = WeierstrassModel::short_form(1, 1);
    const BigInt p(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_points(m, p));
}
BENCHMARK(BM_CountPoints)->Arg(1009)->Arg(10007);

void BM_DeltaSeries(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(delta_series(state.range(0)));
}
BENCHMARK(BM_DeltaSeries)->Arg(64)->Arg(128);

void BM_HeckeT2(benchmark::State& state) {
    const QSeries d = delta_series(128);
    for (auto _ : state) benchmark::DoNotOptimize(hecke_Tn(d, 2));
}
BENCHMARK(BM_HeckeT2);

void BM_WpEvalRows(benchmark::State& state) {
    const LatticeSpec L = LatticeSpec::square(static_cast<int>(state.range(0)));
    const Cplx z(0.3, 0.2);
    for (auto _ : state) benchmark::DoNotOptimize(wp_eval(L, z));
}
BENCHMARK(BM_WpEvalRows)->Arg(10)->Arg(40);

void BM_WpEvalShells(benchmark::State& state) {
    const LatticeSpec L =
        LatticeSpec::square(static_cast<int>(state.range(0)), LatticeSummation::Shells);
    const Cplx z(0.3, 0.2);
    for (auto _ : state) benchmark::DoNotOptimize(wp_eval(L, z));
}
BENCHMARK(BM_WpEvalShells)->Arg(10)->Arg(40);

void BM_FundamentalReduce(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(fundamental_reduce(UpperHalfPoint(17.37, 0.002)));
}
BENCHMARK(BM_FundamentalReduce);

} // namespace

BENCHMARK_MAIN();
