#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "record_order/distribution.hpp"
#include "record_order/record_law.hpp"

namespace record_order {

enum class SampleMethod { GammaTransform, SequentialScan };

// A reproducible batch of i.i.d. copies of the n-th record value. Identical
// (seed, method, parameters) always regenerate the identical batch: streams
// are split per sample index (splitmix64-derived seeds feeding mt19937_64),
// so the values are independent of generation order.
struct SampleBatch {
  std::vector<double> values;
  int n = 1;
  RecordKind kind = RecordKind::Upper;
  std::uint64_t seed = 0;
  SampleMethod method = SampleMethod::GammaTransform;
  std::string dist;
};

// GammaTransform draws the record directly through the incomplete-gamma form
// of the record law: a sum G of n unit exponentials is pushed through the
// inverse of -ln(sf) (upper) or -ln(cdf) (lower). SequentialScan implements
// the definition literally, scanning i.i.d. draws for the n-th running
// maximum/minimum; it is kept as the semantic oracle and is limited to
// n <= 6 with a per-sample cap of 1e6 draws (DrawCapExceeded beyond that).
SampleBatch sample_records(const DistributionModel& d, int n, RecordKind kind, int count,
                           std::uint64_t seed, SampleMethod method = SampleMethod::GammaTransform);

// One-sample Kolmogorov-Smirnov distance between the batch and a record law.
double ks_distance(const SampleBatch& batch, const RecordLaw& law);

// Two-sample Kolmogorov-Smirnov distance (method-equivalence oracle).
double ks_two_sample(const SampleBatch& a, const SampleBatch& b);

// Asymptotic Kolmogorov critical values.
double ks_critical_one_sample(std::size_t count, double alpha);
double ks_critical_two_sample(std::size_t count_a, std::size_t count_b, double alpha);

// Single value column preceded by a '#' comment carrying seed/method/params.
std::string batch_to_csv(const SampleBatch& batch);

}  // namespace record_order
