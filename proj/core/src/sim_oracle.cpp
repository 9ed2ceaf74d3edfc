#include "record_order/sim_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

#include "record_order/errors.hpp"

namespace record_order {

namespace {

constexpr int kScanMaxIndex = 6;
constexpr std::uint64_t kScanDrawCap = 1'000'000;

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t s = seed ^ (0x6a09e667f3bcc909ULL + index * 0x9e3779b97f4a7c15ULL);
  return splitmix64(s);
}

// Uniform strictly inside (0, 1); the engine is fully specified by the
// standard, so batches are identical across platforms.
double uniform01(std::mt19937_64& eng) {
  return (static_cast<double>(eng() >> 11) + 0.5) * 0x1.0p-53;
}

double unit_exponential(std::mt19937_64& eng) { return -std::log1p(-uniform01(eng)); }

double draw_gamma_transform(const DistributionModel& d, int n, RecordKind kind,
                            std::mt19937_64& eng) {
  double g = 0.0;
  for (int i = 0; i < n; ++i) g += unit_exponential(eng);
  return kind == RecordKind::Upper ? d.quantile_from_log_sf(-g) : d.quantile_from_log_cdf(-g);
}

double draw_sequential_scan(const DistributionModel& d, int n, RecordKind kind,
                            std::mt19937_64& eng) {
  double record = d.quantile(uniform01(eng));
  int found = 1;
  std::uint64_t draws = 1;
  while (found < n) {
    if (++draws > kScanDrawCap)
      throw DrawCapExceeded("sample_records: sequential scan exceeded 1e6 draws for one sample");
    const double x = d.quantile(uniform01(eng));
    const bool is_record = kind == RecordKind::Upper ? x > record : x < record;
    if (is_record) {
      record = x;
      ++found;
    }
  }
  return record;
}

}  // namespace

SampleBatch sample_records(const DistributionModel& d, int n, RecordKind kind, int count,
                           std::uint64_t seed, SampleMethod method) {
  if (n < 1) throw std::invalid_argument("sample_records: n must be >= 1");
  if (count < 1) throw std::invalid_argument("sample_records: count must be >= 1");
  if (method == SampleMethod::SequentialScan && n > kScanMaxIndex)
    throw std::invalid_argument("sample_records: sequential scan limited to n <= 6");

  SampleBatch batch;
  batch.values.resize(count);
  batch.n = n;
  batch.kind = kind;
  batch.seed = seed;
  batch.method = method;
  batch.dist = d.describe();
  for (int i = 0; i < count; ++i) {
    std::mt19937_64 eng(stream_seed(seed, static_cast<std::uint64_t>(i)));
    batch.values[i] = method == SampleMethod::GammaTransform
                          ? draw_gamma_transform(d, n, kind, eng)
                          : draw_sequential_scan(d, n, kind, eng);
  }
  return batch;
}

double ks_distance(const SampleBatch& batch, const RecordLaw& law) {
  if (batch.values.empty()) throw std::invalid_argument("ks_distance: empty batch");
  std::vector<double> sorted = batch.values;
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = law.cdf(sorted[i]);
    d = std::max(d, std::max((i + 1.0) / n - f, f - i / n));
  }
  return d;
}

double ks_two_sample(const SampleBatch& a, const SampleBatch& b) {
  if (a.values.empty() || b.values.empty())
    throw std::invalid_argument("ks_two_sample: empty batch");
  std::vector<double> xa = a.values, xb = b.values;
  std::sort(xa.begin(), xa.end());
  std::sort(xb.begin(), xb.end());
  const double na = static_cast<double>(xa.size());
  const double nb = static_cast<double>(xb.size());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < xa.size() && j < xb.size()) {
    if (xa[i] <= xb[j])
      ++i;
    else
      ++j;
    d = std::max(d, std::abs(i / na - j / nb));
  }
  return d;
}

double ks_critical_one_sample(std::size_t count, double alpha) {
  const double c = std::sqrt(-0.5 * std::log(alpha / 2.0));
  return c / std::sqrt(static_cast<double>(count));
}

double ks_critical_two_sample(std::size_t count_a, std::size_t count_b, double alpha) {
  const double c = std::sqrt(-0.5 * std::log(alpha / 2.0));
  const double na = static_cast<double>(count_a);
  const double nb = static_cast<double>(count_b);
  return c * std::sqrt((na + nb) / (na * nb));
}

std::string batch_to_csv(const SampleBatch& batch) {
  std::string out = "# dist=" + batch.dist + " n=" + std::to_string(batch.n) +
                    " kind=" + (batch.kind == RecordKind::Upper ? std::string("upper")
                                                                : std::string("lower")) +
                    " method=" +
                    (batch.method == SampleMethod::GammaTransform ? std::string("gamma")
                                                                  : std::string("scan")) +
                    " seed=" + std::to_string(batch.seed) +
                    " count=" + std::to_string(batch.values.size()) + "\n";
  out += "value\n";
  char buf[40];
  for (const double v : batch.values) {
    std::snprintf(buf, sizeof(buf), "%.17g\n", v);
    out += buf;
  }
  return out;
}

}  // namespace record_order
