#include "core.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "error.hpp"
#include "normal.hpp"

namespace dart2 {

StatisticVector::StatisticVector(std::vector<double> values)
    : values_(std::move(values)) {
  if (values_.empty()) {
    throw DomainError("StatisticVector: must contain at least one statistic");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      std::ostringstream msg;
      msg << "StatisticVector: non-finite statistic at index " << i + 1;
      throw DomainError(msg.str());
    }
  }
}

PValueVector::PValueVector(std::vector<double> values)
    : values_(std::move(values)) {
  if (values_.empty()) {
    throw DomainError("PValueVector: must contain at least one p-value");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!(values_[i] > 0.0 && values_[i] < 1.0)) {
      std::ostringstream msg;
      msg << "PValueVector: p-value " << values_[i] << " at index " << i + 1
          << " is outside the open interval (0, 1)";
      throw DomainError(msg.str());
    }
  }
}

void Dart2Config::validate() const {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    std::ostringstream msg;
    msg << "Dart2Config: alpha=" << alpha << " outside (0, 1)";
    throw DomainError(msg.str());
  }
}

double alpha_floor(std::size_t m) {
  if (m < 2) {
    throw DomainError("alpha_floor: requires m >= 2");
  }
  return 1.0 / (static_cast<double>(m) * std::log(static_cast<double>(m)));
}

StatisticVector pvalue_to_z(const PValueVector& p) {
  std::vector<double> z(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    z[i] = std_normal_sf_inv(p[i]);
  }
  return StatisticVector(std::move(z));
}

}  // namespace dart2
