#include <benchmark/benchmark.h>

#include <cmath>

#include "record_order/numerics.hpp"
#include "record_order/record_law.hpp"
#include "record_order/sim_oracle.hpp"

using namespace record_order;

static void BM_RecordNormalization(benchmark::State& state) {
  const RecordLaw law(DistributionModel::lomax(3.0, 1.0), static_cast<int>(state.range(0)),
                      RecordKind::Upper);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        integrate_adaptive([&](double t) { return law.pdf(t); }, 0.0, INFINITY, 1e-9));
  }
}
BENCHMARK(BM_RecordNormalization)->Arg(2)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_GammaTransformSampling(benchmark::State& state) {
  const auto d = DistributionModel::lomax(3.0, 1.0);
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        sample_records(d, 3, RecordKind::Upper, static_cast<int>(state.range(0)), seed++));
  }
}
BENCHMARK(BM_GammaTransformSampling)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_SequentialScanSampling(benchmark::State& state) {
  const auto d = DistributionModel::exponential(1.0);
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_records(d, 3, RecordKind::Upper, 1000, seed++,
                                            SampleMethod::SequentialScan));
  }
}
BENCHMARK(BM_SequentialScanSampling)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
