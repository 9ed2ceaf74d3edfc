#pragma once

#include <vector>

namespace record_order {

enum class GridSpacing { Log, Linear };

struct GridSpec {
  double lo = 1e-6;
  double hi = 1e6;
  int count = 2048;
  GridSpacing spacing = GridSpacing::Log;

  // 2048 log-spaced points over [1e-6, 1e6].
  static GridSpec defaults() { return {}; }
  static GridSpec log_spaced(double lo, double hi, int count) {
    return {lo, hi, count, GridSpacing::Log};
  }
  static GridSpec linear(double lo, double hi, int count) {
    return {lo, hi, count, GridSpacing::Linear};
  }

  // Evaluation points, endpoints included. Throws on lo >= hi, count < 2,
  // or log spacing with lo <= 0.
  std::vector<double> points() const;
};

}  // namespace record_order
