#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "error.hpp"
#include "metrics.hpp"
#include "rng.hpp"

using namespace dart2;

TEST_CASE("fdp") {
  CHECK(fdp({1, 2, 3}, {2}) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(fdp({}, {1, 2}) == 0.0);
  CHECK(fdp({4, 5}, {4, 5}) == 1.0);
  CHECK(fdp({1, 2}, {}) == 0.0);
}

TEST_CASE("sensitivity") {
  CHECK(sensitivity({1, 2, 3, 4}, {2, 3}) == 1.0);
  CHECK(sensitivity({9, 10}, {2, 3}) == 0.0);
  std::vector<std::size_t> omega1(216), rejected;
  for (std::size_t i = 0; i < 216; ++i) omega1[i] = i;
  for (std::size_t i = 0; i < 108; ++i) rejected.push_back(i);
  CHECK(sensitivity(rejected, omega1) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK_THROWS_AS(sensitivity({1}, {}), DomainError);
}

TEST_CASE("fdp and true-discovery proportion sum to one") {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::size_t> nulls, alts, rejected;
    for (std::size_t i = 0; i < 50; ++i) {
      (rng.bernoulli(0.7) ? nulls : alts).push_back(i);
      if (rng.bernoulli(0.3)) rejected.push_back(i);
    }
    if (rejected.empty() || alts.empty()) continue;
    double tdp = 0.0;
    for (std::size_t i : rejected) {
      if (std::find(alts.begin(), alts.end(), i) != alts.end()) tdp += 1.0;
    }
    tdp /= static_cast<double>(rejected.size());
    CHECK(fdp(rejected, nulls) + tdp == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("precision and F1") {
  auto same = precision_f1({1, 2, 3}, {1, 2, 3});
  CHECK(same.precision == 1.0);
  CHECK(same.sensitivity == 1.0);
  CHECK(same.f1 == 1.0);

  auto disjoint = precision_f1({1, 2}, {3, 4});
  CHECK(disjoint.precision == 0.0);
  CHECK(disjoint.sensitivity == 0.0);
  CHECK(disjoint.f1 == 0.0);

  std::vector<std::size_t> r, b;
  for (std::size_t i = 0; i < 10; ++i) r.push_back(i);        // 0..9
  for (std::size_t i = 5; i < 25; ++i) b.push_back(i);        // 5..24, overlap 5
  auto mixed = precision_f1(r, b);
  CHECK(mixed.precision == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(mixed.sensitivity == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(mixed.f1 == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

  CHECK(precision_f1({}, {1}).precision == 0.0);
  CHECK_THROWS_AS(precision_f1({1}, {}), DomainError);
}

TEST_CASE("summarize") {
  auto single = summarize({0.5});
  CHECK(single.mean == 0.5);
  CHECK(single.q05 == 0.5);
  CHECK(single.q95 == 0.5);
  CHECK(single.count == 1);

  std::vector<double> grid(101);
  for (int i = 0; i <= 100; ++i) grid[i] = i / 100.0;
  auto g = summarize(grid);
  CHECK(g.mean == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(g.q05 == doctest::Approx(0.05).epsilon(1e-12));
  CHECK(g.q95 == doctest::Approx(0.95).epsilon(1e-12));

  auto constant = summarize({2.0, 2.0, 2.0});
  CHECK(constant.mean == 2.0);
  CHECK(constant.q05 == 2.0);
  CHECK(constant.q95 == 2.0);

  CHECK_THROWS_AS(summarize({}), DomainError);
}

TEST_CASE("summarize is permutation invariant") {
  Rng rng(8);
  std::vector<double> values;
  for (int i = 0; i < 37; ++i) values.push_back(rng.normal());
  auto a = summarize(values);
  std::reverse(values.begin(), values.end());
  auto b = summarize(values);
  CHECK(a.mean == doctest::Approx(b.mean).epsilon(1e-14));
  CHECK(a.q05 == b.q05);
  CHECK(a.q95 == b.q95);
  CHECK(a.q05 <= a.q95);
}
