#pragma once

#include <cstddef>
#include <vector>

namespace dart2 {

struct MetricSummary {
  double mean;
  double q05;
  double q95;
  std::size_t count;
};

struct PrecisionF1 {
  double precision;
  double sensitivity;
  double f1;
};

/// |R intersect Omega0| / max(|R|, 1); 0 for an empty rejection set.
double fdp(const std::vector<std::size_t>& rejected, const std::vector<std::size_t>& nulls);

/// |R intersect Omega1| / |Omega1|. Omega1 must be nonempty.
double sensitivity(const std::vector<std::size_t>& rejected,
                   const std::vector<std::size_t>& alternatives);

/// Precision/sensitivity against a benchmark set, plus their harmonic
/// mean. Precision is 0 for an empty rejection set; f1 is 0 when both
/// components are 0.
PrecisionF1 precision_f1(const std::vector<std::size_t>& rejected,
                         const std::vector<std::size_t>& benchmark);

/// Mean plus the 5% and 95% empirical quantiles (type-7 linear
/// interpolation, matching the common statistical-software default).
MetricSummary summarize(const std::vector<double>& values);

}  // namespace dart2
