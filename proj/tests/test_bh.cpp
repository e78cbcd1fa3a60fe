#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "bh.hpp"
#include "core.hpp"
#include "error.hpp"
#include "rng.hpp"

using namespace dart2;

namespace {

// Exhaustive step-up scan used as the comparison oracle.
std::vector<std::size_t> bh_oracle(const std::vector<double>& p, double alpha) {
  std::size_t m = p.size();
  std::vector<std::size_t> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return p[a] < p[b]; });
  std::size_t kstar = 0;
  for (std::size_t k = 1; k <= m; ++k) {
    if (p[order[k - 1]] <= static_cast<double>(k) * alpha / static_cast<double>(m)) {
      kstar = k;
    }
  }
  std::vector<std::size_t> out(order.begin(), order.begin() + kstar);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("step-up examples") {
  auto r = bh_procedure(PValueVector({0.001, 0.012, 0.04, 0.9}), 0.05);
  CHECK(r == std::vector<std::size_t>{0, 1});

  CHECK(bh_procedure(PValueVector({0.9, 0.9, 0.9}), 0.05).empty());

  // Single hypothesis right on the boundary: p = alpha is rejected.
  CHECK(bh_procedure(PValueVector({0.05}), 0.05) == std::vector<std::size_t>{0});
}

TEST_CASE("ties at the cutoff are all rejected") {
  auto r = bh_procedure(PValueVector({0.02, 0.02, 0.9, 0.9}), 0.05);
  CHECK(r == std::vector<std::size_t>{0, 1});
}

TEST_CASE("alpha validation") {
  CHECK_THROWS_AS(bh_procedure(PValueVector({0.5}), 0.0), DomainError);
  CHECK_THROWS_AS(bh_procedure(PValueVector({0.5}), 1.0), DomainError);
}

TEST_CASE("matches the exhaustive oracle on random vectors") {
  Rng rng(101);
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t m = 1 + rng.uniform_index(100);
    std::vector<double> p;
    for (std::size_t i = 0; i < m; ++i) {
      double v = rng.uniform01();
      if (rng.bernoulli(0.3)) v *= 0.05;  // force some small p-values
      p.push_back(v);
    }
    double alpha = rng.uniform(0.01, 0.3);
    CHECK(bh_procedure(PValueVector(p), alpha) == bh_oracle(p, alpha));
  }
}

TEST_CASE("rejections are a prefix of the sorted order and monotone in alpha") {
  Rng rng(55);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t m = 5 + rng.uniform_index(50);
    std::vector<double> p;
    for (std::size_t i = 0; i < m; ++i) p.push_back(rng.uniform01());
    auto lo = bh_procedure(PValueVector(p), 0.05);
    auto hi = bh_procedure(PValueVector(p), 0.2);
    CHECK(std::includes(hi.begin(), hi.end(), lo.begin(), lo.end()));
    if (!lo.empty()) {
      double cut = 0.0;
      for (std::size_t i : lo) cut = std::max(cut, p[i]);
      for (std::size_t i = 0; i < m; ++i) {
        if (p[i] < cut) {
          CHECK(std::binary_search(lo.begin(), lo.end(), i));
        }
      }
    }
  }
}
