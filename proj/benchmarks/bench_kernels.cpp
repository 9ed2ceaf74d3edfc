#include <benchmark/benchmark.h>

#include <cmath>

#include "record_order/record_law.hpp"
#include "record_order/theorem_verify.hpp"
#include "record_order/xi_psi.hpp"

using namespace record_order;

static void BM_XiEval(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  double s = 1e-8;
  for (auto _ : state) {
    benchmark::DoNotOptimize(xi(n, s));
    s = s < 1e8 ? s * 1.001 : 1e-8;
  }
}
BENCHMARK(BM_XiEval)->Arg(2)->Arg(8)->Arg(64);

static void BM_PsiEval(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  double s = 1e-8;
  for (auto _ : state) {
    benchmark::DoNotOptimize(psi(n, s));
    s = s < 1e8 ? s * 1.001 : 1e-8;
  }
}
BENCHMARK(BM_PsiEval)->Arg(2)->Arg(8)->Arg(64);

static void BM_SupPsiRatio(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(sup_psi_ratio(2, 3, 1.5, RecordSide::UpperRecords));
}
BENCHMARK(BM_SupPsiRatio)->Unit(benchmark::kMillisecond);

static void BM_RecordHazard(benchmark::State& state) {
  const RecordLaw law(DistributionModel::lomax(3.0, 1.0), 3, RecordKind::Upper);
  double t = 1e-6;
  for (auto _ : state) {
    benchmark::DoNotOptimize(law.hazard(t));
    t = t < 1e4 ? t * 1.01 : 1e-6;
  }
}
BENCHMARK(BM_RecordHazard);

BENCHMARK_MAIN();
