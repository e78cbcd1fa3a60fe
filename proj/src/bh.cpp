#include "bh.hpp"

#include <algorithm>
#include <numeric>

#include "error.hpp"

namespace dart2 {

std::vector<std::size_t> bh_procedure(const PValueVector& p, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("bh_procedure: alpha outside (0, 1)");
  }
  const std::size_t m = p.size();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return p[a] < p[b]; });

  std::size_t k_star = 0;
  for (std::size_t k = 1; k <= m; ++k) {
    if (p[order[k - 1]] <= static_cast<double>(k) * alpha / static_cast<double>(m)) {
      k_star = k;
    }
  }
  // Ties at the cutoff need no special casing: an equal value at rank k+1
  // satisfies the step-up inequality whenever rank k does, so k_star
  // already covers the whole tie group.
  std::vector<std::size_t> rejected(order.begin(), order.begin() + k_star);
  std::sort(rejected.begin(), rejected.end());
  return rejected;
}

}  // namespace dart2
