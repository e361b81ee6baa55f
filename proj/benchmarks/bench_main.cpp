#include <benchmark/benchmark.h>

#include "hodgekp/curve.hpp"
#include "hodgekp/kp.hpp"
#include "hodgekp/operators.hpp"
#include "hodgekp/tau.hpp"

using namespace hodgekp;

static void BM_BuildCurve(benchmark::State& state) {
  const auto pt = CurveParams::make(1, 3, 2);
  const int K = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_curve(pt, K));
}
BENCHMARK(BM_BuildCurve)->Arg(20)->Arg(40);

static void BM_Correlators(benchmark::State& state) {
  const int W = static_cast<int>(state.range(0));
  for (auto _ : state) {
    PolySpace sp{VarKind::T, W};
    benchmark::DoNotOptimize(base_free_energy(Correlators::Theory::KW, sp, W));
  }
}
BENCHMARK(BM_Correlators)->Arg(12)->Arg(18);

static void BM_GiventalFactorized(benchmark::State& state) {
  const int W = static_cast<int>(state.range(0));
  const ZSeries R = r_series(CurveParams::make(1, 3, 2), curve_order_for_weight(W));
  const TPoly base = base_tau_T(Correlators::Theory::KW, PolySpace{VarKind::T, W});
  for (auto _ : state) benchmark::DoNotOptimize(givental_factorized(R, base));
}
BENCHMARK(BM_GiventalFactorized)->Arg(9)->Arg(13);

static void BM_FactorizationCheck(benchmark::State& state) {
  const ZSeries R = r_series(CurveParams::make(-1, 2, 1), curve_order_for_weight(9));
  for (auto _ : state) benchmark::DoNotOptimize(factorization_check(R, 9));
}
BENCHMARK(BM_FactorizationCheck);

static void BM_HodgeTauBothPipelines(benchmark::State& state) {
  const auto pt = CurveParams::make(1, 3, 2);
  const int W = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(theorem_hodge_check(pt, W));
}
BENCHMARK(BM_HodgeTauBothPipelines)->Arg(9)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_HirotaKW(benchmark::State& state) {
  const int W = static_cast<int>(state.range(0));
  const TPoly kw = specialize_hbar(kw_tau(W).body, 1);
  for (auto _ : state) benchmark::DoNotOptimize(hirota_full_check(kw, 4));
}
BENCHMARK(BM_HirotaKW)->Arg(12)->Arg(15)->Unit(benchmark::kMillisecond);

static void BM_Conjugation(benchmark::State& state) {
  const CurveSeries c = build_curve(CurveParams::make(1, 3, 2), curve_order_for_weight(8));
  for (auto _ : state) benchmark::DoNotOptimize(virasoro_conjugation_check(c, 8));
}
BENCHMARK(BM_Conjugation)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
