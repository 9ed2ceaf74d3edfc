#pragma once

#include <functional>
#include <string>
#include <vector>

namespace record_order {

// Sampled (t, value) pairs of a ratio or rate curve, the unit of figure
// reproduction and of grid monotonicity assertions.
struct CurveSeries {
  std::string name;
  std::string abscissa = "t";
  std::vector<double> t;
  std::vector<double> value;
};

CurveSeries sample_curve(std::string name, std::string abscissa,
                         const std::vector<double>& grid,
                         const std::function<double(double)>& f);

// Two columns, 17 significant digits (lossless double round-trip).
std::string curve_to_csv(const CurveSeries& c);

}  // namespace record_order
