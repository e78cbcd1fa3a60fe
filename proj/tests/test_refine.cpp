#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "core.hpp"
#include "error.hpp"
#include "normal.hpp"
#include "refine.hpp"
#include "rng.hpp"
#include "tree.hpp"

using namespace dart2;

TEST_CASE("naive threshold") {
  CHECK(naive_threshold(3.0, 4) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(naive_threshold(2.0, 1) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(naive_threshold(1.95996, 2) == doctest::Approx(1.38591).epsilon(1e-5));
}

TEST_CASE("robust threshold components") {
  {
    std::vector<double> stats{1.2, 0.4, -1.0};
    auto r = robust_threshold(1.5, 0.05, stats);
    CHECK(r.t_s1 == doctest::Approx(1.6448536269514722).epsilon(1e-9));
    CHECK(r.t_s2 == 1.2);
    CHECK(r.t_hat == 1.2);
  }
  {
    std::vector<double> stats{5.0, 2.0};
    auto r = robust_threshold(3.0, 0.05, stats);
    CHECK(r.t_s1 == 3.0);
    CHECK(r.t_s2 == 5.0);
    CHECK(r.t_hat == 3.0);
  }
  std::vector<double> empty;
  CHECK_THROWS_AS(robust_threshold(1.0, 0.05, empty), DomainError);
}

TEST_CASE("robust threshold exact identity on random fixtures") {
  Rng rng(17);
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t k = 1 + rng.uniform_index(10);
    std::vector<double> stats;
    double mx = -1e300;
    for (std::size_t i = 0; i < k; ++i) {
      stats.push_back(rng.normal() * 2.0);
      mx = std::max(mx, stats.back());
    }
    double t_star = rng.normal() + 1.0;
    double alpha = rng.uniform(0.01, 0.4);
    auto r = robust_threshold(t_star, alpha, stats);
    double floor = std_normal_sf_inv(alpha);
    CHECK(r.t_s1 == std::max(t_star, floor));
    CHECK(r.t_s2 == mx);
    CHECK(r.t_hat == std::min(r.t_s1, r.t_s2));
    CHECK(r.t_hat <= mx);  // at least one member always clears a >= cut
  }
}

namespace {

ScreeningResult one_screened_node(std::size_t m, std::vector<std::size_t> members,
                                  double c_hat) {
  ScreeningResult screen;
  screen.m = m;
  ScreenedNode node;
  node.layer = 2;
  node.node_index = 0;
  node.members = std::move(members);
  node.c_hat = c_hat;
  screen.screened.push_back(std::move(node));
  return screen;
}

}  // namespace

TEST_CASE("naive vs robust on a screened pair") {
  Dart2Config naive{0.05, RefineMode::naive, LayerAlphaRule::constant};
  Dart2Config robust{0.05, RefineMode::robust, LayerAlphaRule::constant};
  {
    StatisticVector stats({2.5, 0.3});
    auto screen = one_screened_node(2, {0, 1}, 2.0);
    auto rn = refining_stage(screen, stats, naive);
    auto rr = refining_stage(screen, stats, robust);
    CHECK(rn.rejected == std::vector<std::size_t>{0});
    CHECK(rr.rejected == std::vector<std::size_t>{0});
    CHECK(rn.refines[0].t_hat == doctest::Approx(1.41421).epsilon(1e-5));
    CHECK(rr.refines[0].t_hat == doctest::Approx(1.6448536269514722).epsilon(1e-9));
  }
  {
    StatisticVector stats({1.5, 0.3});
    auto screen = one_screened_node(2, {0, 1}, 2.0);
    auto rn = refining_stage(screen, stats, naive);
    auto rr = refining_stage(screen, stats, robust);
    CHECK(rn.rejected == std::vector<std::size_t>{0});
    CHECK(rr.rejected == std::vector<std::size_t>{0});
    CHECK(rr.refines[0].t_hat == doctest::Approx(1.5).epsilon(1e-12));
  }
}

TEST_CASE("robust mode rejects the top member even when everything is small") {
  StatisticVector stats({0.2, 0.5, -0.1});
  auto screen = one_screened_node(3, {0, 1, 2}, 3.0);
  Dart2Config cfg{0.05, RefineMode::robust, LayerAlphaRule::constant};
  auto report = refining_stage(screen, stats, cfg);
  CHECK(report.rejected == std::vector<std::size_t>{1});
}

TEST_CASE("robust mode always rejects at least one member per screened node") {
  Rng rng(23);
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t m = 2 + rng.uniform_index(10);
    std::vector<double> values;
    for (std::size_t i = 0; i < m; ++i) values.push_back(rng.normal() * 1.5);
    std::vector<std::size_t> members(m);
    for (std::size_t i = 0; i < m; ++i) members[i] = i;
    auto screen = one_screened_node(m, members, rng.uniform(0.5, 4.0));
    Dart2Config cfg{rng.uniform(0.01, 0.3), RefineMode::robust, LayerAlphaRule::constant};
    auto report = refining_stage(screen, StatisticVector(values), cfg);
    CHECK(report.rejected.size() >= 1);
    CHECK(report.refines[0].t_hat <= report.refines[0].t_s1);
    CHECK(report.refines[0].t_hat <=
          *std::max_element(values.begin(), values.end()));
  }
}

TEST_CASE("layer-1 rejections survive refining") {
  std::vector<std::size_t> ranks(16);
  for (std::size_t i = 0; i < 16; ++i) ranks[i] = i + 1;
  auto tree = build_tree_from_ordering(ranks, 2, 2);
  std::vector<double> values(16, 0.0);
  values[0] = 10.0;
  Dart2Config cfg{0.4, RefineMode::robust, LayerAlphaRule::constant};
  auto report = dart2::dart2(StatisticVector(values), tree, cfg);
  CHECK(std::find(report.rejected.begin(), report.rejected.end(), 0) !=
        report.rejected.end());
}

TEST_CASE("worked three-layer example") {
  // Seven hypotheses, pairs {1,2} {3,4} {5,6} {7} at layer 2, then
  // {{1,2},{3,4}} and {{5,6},{7}} at layer 3. With alpha = 0.25 and the
  // constant layer rule: layer 1 finds no feasible threshold, layer 2
  // screens {5,6} at c = 1.38299, layer 3 screens {1,2,3,4} at the lower
  // search bound 0.67449; robust refining then keeps 1, 3, 5, 6.
  AggregationTree tree;
  tree.m = 7;
  tree.max_children = 2;
  tree.layers.resize(3);
  for (std::size_t i = 0; i < 7; ++i) {
    tree.layers[0].push_back(TreeNode{{}, {i}});
  }
  tree.layers[1] = {TreeNode{{0, 1}, {0, 1}}, TreeNode{{2, 3}, {2, 3}},
                    TreeNode{{4, 5}, {4, 5}}, TreeNode{{6}, {6}}};
  tree.layers[2] = {TreeNode{{0, 1}, {0, 1, 2, 3}}, TreeNode{{2, 3}, {4, 5, 6}}};
  REQUIRE(validate_tree(tree).empty());

  StatisticVector stats({1.15, -0.40, 1.05, -0.30, 1.10, 1.00, -0.80});
  Dart2Config cfg{0.25, RefineMode::robust, LayerAlphaRule::constant};
  auto report = dart2::dart2(stats, tree, cfg);
  CHECK(report.rejected == std::vector<std::size_t>{0, 2, 4, 5});

  REQUIRE(report.layers.size() == 3);
  CHECK(!report.layers[0].feasible);
  CHECK(report.layers[0].screened == 0);
  CHECK(report.layers[1].feasible);
  CHECK(report.layers[1].c_hat == doctest::Approx(1.3829941271006324).epsilon(1e-9));
  CHECK(report.layers[1].screened == 1);
  CHECK(report.layers[2].feasible);
  CHECK(report.layers[2].c_hat == doctest::Approx(0.6744897501960817).epsilon(1e-9));
  CHECK(report.layers[2].screened == 1);
}

TEST_CASE("L=1 reduces to thresholding the raw statistics") {
  Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t m = 30 + rng.uniform_index(30);
    std::vector<double> values;
    for (std::size_t i = 0; i < m; ++i) {
      values.push_back(rng.normal() + (rng.bernoulli(0.3) ? 2.5 : 0.0));
    }
    std::vector<std::size_t> ranks(m);
    for (std::size_t i = 0; i < m; ++i) ranks[i] = i + 1;
    auto tree = build_tree_from_ordering(ranks, 2, 1);
    Dart2Config cfg{0.1, RefineMode::robust, LayerAlphaRule::scaled};
    auto report = dart2::dart2(StatisticVector(values), tree, cfg);
    auto screen = screening_stage(StatisticVector(values), tree, cfg);
    CHECK(report.rejected == screen.layer1_rejections);
  }
}
