#pragma once

#include <cstddef>
#include <vector>

namespace dart2 {

/// Per-hypothesis z-scale test statistics. Immutable after construction;
/// the constructor rejects empty or non-finite input.
class StatisticVector {
 public:
  explicit StatisticVector(std::vector<double> values);

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  const std::vector<double>& values() const { return values_; }

 private:
  std::vector<double> values_;
};

/// P-values strictly inside (0,1). Boundary values are rejected, not
/// clipped; callers that want clipping must do it themselves.
class PValueVector {
 public:
  explicit PValueVector(std::vector<double> values);

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  const std::vector<double>& values() const { return values_; }

 private:
  std::vector<double> values_;
};

enum class RefineMode { naive, robust };
enum class LayerAlphaRule { constant, scaled };

struct Dart2Config {
  double alpha = 0.05;
  RefineMode mode = RefineMode::robust;
  LayerAlphaRule layer_alpha_rule = LayerAlphaRule::scaled;

  /// Throws DomainError unless 0 < alpha < 1.
  void validate() const;
};

/// The floor alpha_m = (m log m)^{-1} bounding the threshold search range.
/// Requires m >= 2 (the floor is undefined at m = 1).
double alpha_floor(std::size_t m);

/// T_i = Phibar^{-1}(p_i), i.e. the z statistic whose upper tail
/// probability equals p_i. Strictly decreasing in each p_i.
StatisticVector pvalue_to_z(const PValueVector& p);

}  // namespace dart2
