#include "metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "error.hpp"

namespace dart2 {

namespace {

std::size_t overlap(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::unordered_set<std::size_t> set(b.begin(), b.end());
  std::size_t n = 0;
  for (std::size_t x : a) {
    n += set.count(x);
  }
  return n;
}

}  // namespace

double fdp(const std::vector<std::size_t>& rejected, const std::vector<std::size_t>& nulls) {
  double false_discoveries = static_cast<double>(overlap(rejected, nulls));
  return false_discoveries / std::max<double>(static_cast<double>(rejected.size()), 1.0);
}

double sensitivity(const std::vector<std::size_t>& rejected,
                   const std::vector<std::size_t>& alternatives) {
  if (alternatives.empty()) {
    throw DomainError("sensitivity: empty alternative set");
  }
  return static_cast<double>(overlap(rejected, alternatives)) /
         static_cast<double>(alternatives.size());
}

PrecisionF1 precision_f1(const std::vector<std::size_t>& rejected,
                         const std::vector<std::size_t>& benchmark) {
  if (benchmark.empty()) {
    throw DomainError("precision_f1: empty benchmark set");
  }
  double hits = static_cast<double>(overlap(rejected, benchmark));
  PrecisionF1 out;
  out.precision = rejected.empty() ? 0.0 : hits / static_cast<double>(rejected.size());
  out.sensitivity = hits / static_cast<double>(benchmark.size());
  out.f1 = (out.precision + out.sensitivity == 0.0)
               ? 0.0
               : 2.0 * out.precision * out.sensitivity / (out.precision + out.sensitivity);
  return out;
}

MetricSummary summarize(const std::vector<double>& values) {
  if (values.empty()) {
    throw DomainError("summarize: empty value sequence");
  }
  std::vector<double> sorted(values);
  std::sort(sorted.begin(), sorted.end());
  auto quantile = [&](double q) {
    double h = q * static_cast<double>(sorted.size() - 1);
    std::size_t lo = static_cast<std::size_t>(std::floor(h));
    std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
  };
  MetricSummary out;
  out.mean = std::accumulate(sorted.begin(), sorted.end(), 0.0) /
             static_cast<double>(sorted.size());
  out.q05 = quantile(0.05);
  out.q95 = quantile(0.95);
  out.count = sorted.size();
  return out;
}

}  // namespace dart2
