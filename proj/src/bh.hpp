#pragma once

#include <cstddef>
#include <vector>

#include "core.hpp"

namespace dart2 {

/// Benjamini-Hochberg step-up: reject the k* smallest p-values where
/// k* = max{k : p_(k) <= k * alpha / m}. Returns sorted 0-based indices;
/// tied p-values at the cutoff are all rejected.
std::vector<std::size_t> bh_procedure(const PValueVector& p, double alpha);

}  // namespace dart2
