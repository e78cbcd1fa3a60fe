#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "core.hpp"
#include "error.hpp"
#include "normal.hpp"
#include "rng.hpp"
#include "screen.hpp"
#include "tree.hpp"

using namespace dart2;

TEST_CASE("node statistic") {
  StatisticVector stats({1.5, 1.0, 1.0, 2.0, 0.0, 1.0});
  std::vector<std::size_t> single{0};
  CHECK(node_statistic(stats, single) == doctest::Approx(1.5).epsilon(1e-15));
  std::vector<std::size_t> pair{1, 2};
  CHECK(node_statistic(stats, pair) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));
  std::vector<std::size_t> triple{3, 4, 5};
  CHECK(node_statistic(stats, triple) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-13));
  std::vector<std::size_t> empty;
  CHECK_THROWS_AS(node_statistic(stats, empty), DomainError);
}

TEST_CASE("layer alpha rules") {
  CHECK(layer_alpha(0.05, {2, 4, 3}, LayerAlphaRule::scaled) ==
        doctest::Approx(0.0125).epsilon(1e-15));
  CHECK(layer_alpha(0.05, {2, 4, 3}, LayerAlphaRule::constant) == 0.05);
  CHECK(layer_alpha(0.05, {1, 1, 1}, LayerAlphaRule::scaled) == 0.05);
}

TEST_CASE("layer threshold solves the estimated-FDP crossing") {
  std::vector<NodeStat> stats{{3.0, 1}, {2.5, 1}, {-0.5, 1}, {0.1, 1}};
  auto r = layer_threshold(stats, 0.05, 1e-6);
  CHECK(r.feasible);
  // 4 * sf(c) / 2 = 0.05 at c = sf_inv(0.025).
  CHECK(r.c_hat == doctest::Approx(1.959963984540054).epsilon(1e-9));
  std::size_t screened = 0;
  for (const auto& s : stats) {
    if (s.value > r.c_hat) ++screened;
  }
  CHECK(screened == 2);
}

TEST_CASE("layer threshold falls back when nothing clears the range") {
  // No statistic exceeds the range and 3 * sf(c) stays above 0.05
  // everywhere in [sf_inv(0.05), sf_inv(0.03)], so no threshold works.
  std::vector<NodeStat> stats{{0.2, 1}, {-1.0, 1}, {0.5, 1}};
  auto r = layer_threshold(stats, 0.05, 0.03);
  CHECK(!r.feasible);
  CHECK(r.c_hat == doctest::Approx(std_normal_sf_inv(0.03)).epsilon(1e-12));
  for (const auto& s : stats) {
    CHECK(s.value <= r.c_hat);
  }
}

TEST_CASE("layer threshold can clear the range with zero exceedances") {
  // With a tiny floor the range extends far enough that the numerator
  // alone drops below the level; the threshold is feasible even though
  // no node is screened by it.
  std::vector<NodeStat> stats{{0.2, 1}, {-1.0, 1}, {0.5, 1}};
  auto r = layer_threshold(stats, 0.05, 1e-6);
  CHECK(r.feasible);
  CHECK(r.c_hat == doctest::Approx(std_normal_sf_inv(0.05 / 3.0)).epsilon(1e-9));
  for (const auto& s : stats) {
    CHECK(s.value <= r.c_hat);
  }
}

TEST_CASE("layer threshold hits the lower bound for one huge statistic") {
  std::vector<NodeStat> stats{{10.0, 1}};
  auto r = layer_threshold(stats, 0.05, 1e-6);
  CHECK(r.feasible);
  CHECK(r.c_hat == doctest::Approx(1.6448536269514722).epsilon(1e-9));
}

TEST_CASE("layer threshold validates input") {
  CHECK_THROWS_AS(layer_threshold({}, 0.05, 1e-6), DomainError);
  std::vector<NodeStat> stats{{1.0, 1}};
  CHECK_THROWS_AS(layer_threshold(stats, 0.05, 0.1), DomainError);
  CHECK_THROWS_AS(layer_threshold(stats, 0.05, 0.0), DomainError);
}

TEST_CASE("estimated FDP at the returned threshold respects the level") {
  Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t k = 1 + rng.uniform_index(30);
    std::vector<NodeStat> stats;
    for (std::size_t i = 0; i < k; ++i) {
      stats.push_back({rng.normal() + rng.uniform(0, 3), 1 + rng.uniform_index(4)});
    }
    double level = rng.uniform(0.02, 0.3);
    double floor = level * rng.uniform(1e-4, 0.5);
    auto r = layer_threshold(stats, level, floor);
    if (!r.feasible) continue;
    double weight = 0.0, hits = 0.0;
    for (const auto& s : stats) {
      weight += static_cast<double>(s.size);
      if (s.value > r.c_hat) hits += static_cast<double>(s.size);
    }
    // Product form of the estimated-FDP inequality (no division rounding).
    CHECK(weight * std_normal_sf(r.c_hat) <= level * std::max(hits, 1.0));
  }
}

TEST_CASE("all-zero statistics screen nothing") {
  auto tree = build_tree_from_ordering({1, 2, 3, 4, 5, 6, 7, 8}, 2, 2);
  StatisticVector stats(std::vector<double>(8, 0.0));
  Dart2Config cfg{0.2, RefineMode::robust, LayerAlphaRule::scaled};
  auto result = screening_stage(stats, tree, cfg);
  CHECK(result.screened.empty());
  CHECK(result.layer1_rejections.empty());
  for (const auto& audit : result.layers) {
    CHECK(audit.screened == 0);
  }
}

TEST_CASE("screened hypotheses are removed before qualifying the next layer") {
  std::vector<std::size_t> ranks(16);
  for (std::size_t i = 0; i < 16; ++i) ranks[i] = i + 1;
  auto tree = build_tree_from_ordering(ranks, 2, 2);
  std::vector<double> values(16, 0.0);
  values[0] = 10.0;
  Dart2Config cfg{0.4, RefineMode::robust, LayerAlphaRule::constant};
  auto result = screening_stage(StatisticVector(values), tree, cfg);

  REQUIRE(result.layer1_rejections.size() == 1);
  CHECK(result.layer1_rejections[0] == 0);
  CHECK(result.layers[0].c_hat == doctest::Approx(1.959963984540054).epsilon(1e-9));

  // The pair {1,2} lost hypothesis 1, leaving one surviving child; the
  // other 7 pairs stay qualified but hold only zeros.
  REQUIRE(result.layers.size() == 2);
  CHECK(result.layers[1].qualified == 7);
  CHECK(result.layers[1].screened == 0);
  CHECK(result.screened.size() == 1);
}

TEST_CASE("two extreme statistics in one pair screen at layer 1") {
  std::vector<std::size_t> ranks(8);
  for (std::size_t i = 0; i < 8; ++i) ranks[i] = i + 1;
  auto tree = build_tree_from_ordering(ranks, 2, 2);
  std::vector<double> values(8, 0.0);
  values[0] = 10.0;
  values[1] = 9.0;
  Dart2Config cfg{0.3, RefineMode::robust, LayerAlphaRule::constant};
  auto result = screening_stage(StatisticVector(values), tree, cfg);
  CHECK(result.layer1_rejections == std::vector<std::size_t>{0, 1});
  CHECK(result.layers[1].qualified == 3);
}

TEST_CASE("screened node sets are pairwise disjoint") {
  Rng rng(1234);
  std::vector<std::size_t> ranks(64);
  for (std::size_t i = 0; i < 64; ++i) ranks[i] = i + 1;
  auto tree = build_tree_from_ordering(ranks, 2, 4);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> values(64);
    for (auto& v : values) v = rng.normal() + (rng.bernoulli(0.3) ? 2.5 : 0.0);
    Dart2Config cfg{0.1, RefineMode::robust, LayerAlphaRule::scaled};
    auto result = screening_stage(StatisticVector(values), tree, cfg);
    std::vector<bool> seen(64, false);
    for (const auto& node : result.screened) {
      for (std::size_t i : node.members) {
        CHECK(!seen[i]);
        seen[i] = true;
      }
    }
  }
}

TEST_CASE("raising one statistic never shrinks the layer-1 screened set") {
  Rng rng(5);
  std::vector<std::size_t> ranks(32);
  for (std::size_t i = 0; i < 32; ++i) ranks[i] = i + 1;
  auto tree = build_tree_from_ordering(ranks, 2, 1);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> values(32);
    for (auto& v : values) v = rng.normal() + (rng.bernoulli(0.25) ? 2.0 : 0.0);
    Dart2Config cfg{0.2, RefineMode::robust, LayerAlphaRule::scaled};
    auto before = screening_stage(StatisticVector(values), tree, cfg).layer1_rejections;
    std::size_t bump = rng.uniform_index(32);
    values[bump] += rng.uniform(0.1, 2.0);
    auto after = screening_stage(StatisticVector(values), tree, cfg).layer1_rejections;
    CHECK(std::includes(after.begin(), after.end(), before.begin(), before.end()));
  }
}

TEST_CASE("screening rejects mismatched dimensions and bad alpha") {
  auto tree = build_tree_from_ordering({1, 2, 3, 4}, 2, 2);
  Dart2Config cfg{0.3, RefineMode::robust, LayerAlphaRule::scaled};
  CHECK_THROWS_AS(screening_stage(StatisticVector({1.0, 2.0}), tree, cfg), DomainError);
  Dart2Config tight{0.1, RefineMode::robust, LayerAlphaRule::scaled};
  // alpha below the floor 1/(4 ln 4) = 0.18: the search range is empty.
  CHECK_THROWS_AS(screening_stage(StatisticVector({0.0, 0.0, 0.0, 0.0}), tree, tight),
                  DomainError);
}
