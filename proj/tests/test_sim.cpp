#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "rng.hpp"
#include "sim.hpp"
#include "tree.hpp"

using namespace dart2;

TEST_CASE("built-in locations") {
  const auto& locs = builtin_locations();
  REQUIRE(locs.size() == 1000);
  for (const auto& p : locs) {
    CHECK(p.x >= 0.0);
    CHECK(p.x <= 5.0);
    CHECK(p.y >= 0.0);
    CHECK(p.y <= 5.0);
  }
}

TEST_CASE("signal field at the first center") {
  auto field = eta_field(builtin_locations(), kMainCoeffs, kCenter1, kCenter2);
  // 3.4 * phi1(0) - 0.6 - 0.1 with a vanishing second-center term.
  CHECK(field.eta[kCenter1] == doctest::Approx(0.65640).epsilon(1e-3));
  CHECK(field.eta[kCenter2] > 0.0);
}

TEST_CASE("frozen field has exactly 216 alternatives") {
  auto field = eta_field(builtin_locations(), kMainCoeffs, kCenter1, kCenter2);
  CHECK(field.alternatives().size() == 216);
  CHECK(field.nulls().size() == 784);
  for (double e : field.eta) {
    CHECK(e >= 0.0);
  }
}

TEST_CASE("far-from-both-centers locations are null") {
  std::vector<Point2> locs{{0.0, 0.0}, {100.0, 100.0}, {0.0, 3.0}};
  auto field = eta_field(locs, kMainCoeffs, 0, 2);
  CHECK(field.eta[1] == 0.0);
}

TEST_CASE("misleading corruption preserves the eta multiset") {
  auto field = eta_field(builtin_locations(), kMainCoeffs, kCenter1, kCenter2);
  std::size_t m1 = field.alternatives().size();

  auto zero = apply_misleading(field, 0.0, 11);
  CHECK(zero.eta == field.eta);

  auto half = apply_misleading(field, 0.5, 11);
  CHECK(half.alternatives().size() == m1);
  std::size_t moved = 0;
  for (std::size_t i = 0; i < field.size(); ++i) {
    if ((field.eta[i] > 0.0) != (half.eta[i] > 0.0)) ++moved;
  }
  CHECK(moved == 2 * ((m1 + 1) / 2));  // 108 alternatives out, 108 nulls in

  auto full = apply_misleading(field, 1.0, 11);
  CHECK(full.alternatives().size() == m1);
  std::vector<double> a = field.eta, b = full.eta;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  CHECK(a == b);
  // Locations never move.
  CHECK(full.locations[0].x == field.locations[0].x);

  // Same seed, same corruption; different seed, different corruption.
  CHECK(apply_misleading(field, 0.5, 11).eta == half.eta);
  CHECK(apply_misleading(field, 0.5, 12).eta != half.eta);
}

TEST_CASE("SE1 statistics") {
  std::vector<Point2> locs(2000, Point2{0.0, 0.0});
  SignalField field;
  field.locations = locs;
  field.eta.assign(2000, 0.65640);
  auto stats = gen_se1(field, 300, 77);
  double mean = 0.0;
  for (std::size_t i = 0; i < stats.size(); ++i) mean += stats[i];
  mean /= static_cast<double>(stats.size());
  // sqrt(300) * 0.65640 / 5 = 2.2738, plus N(0,1) noise averaged over 2000.
  CHECK(mean == doctest::Approx(2.2738).epsilon(0.05));

  field.eta.assign(2000, 0.0);
  auto nulls = gen_se1(field, 300, 78);
  double nmean = 0.0, nvar = 0.0;
  for (std::size_t i = 0; i < nulls.size(); ++i) nmean += nulls[i];
  nmean /= 2000.0;
  for (std::size_t i = 0; i < nulls.size(); ++i) {
    nvar += (nulls[i] - nmean) * (nulls[i] - nmean);
  }
  nvar /= 1999.0;
  CHECK(std::abs(nmean) < 0.1);
  CHECK(nvar == doctest::Approx(1.0).epsilon(0.15));

  CHECK(gen_se1(field, 300, 78).values() == nulls.values());
  CHECK(gen_se1(field, 300, 79).values() != nulls.values());
}

TEST_CASE("OLS closed form") {
  auto beta = ols_fit({{1.0, 2.0, 3.0}}, {1.0, 2.0, 3.0});
  REQUIRE(beta.size() == 1);
  CHECK(beta[0] == doctest::Approx(1.0).epsilon(1e-12));

  // Two-column fit against an exact linear response.
  auto beta2 = ols_fit({{1.0, 1.0, 1.0, 1.0}, {0.0, 1.0, 2.0, 3.0}},
                       {1.0, 3.0, 5.0, 7.0});
  REQUIRE(beta2.size() == 2);
  CHECK(beta2[0] == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(beta2[1] == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("SE2 statistics") {
  std::vector<Point2> locs(400, Point2{0.0, 0.0});
  SignalField field;
  field.locations = locs;
  field.eta.assign(400, 0.0);
  auto nulls = gen_se2(field, 300, 5);
  double mean = 0.0, var = 0.0;
  for (std::size_t i = 0; i < nulls.size(); ++i) mean += nulls[i];
  mean /= 400.0;
  for (std::size_t i = 0; i < nulls.size(); ++i) {
    var += (nulls[i] - mean) * (nulls[i] - mean);
  }
  var /= 399.0;
  CHECK(std::abs(mean) < 0.2);
  CHECK(var == doctest::Approx(1.0).epsilon(0.3));

  field.eta.assign(400, 1.0);
  auto alts = gen_se2(field, 300, 5);
  double amean = 0.0;
  for (std::size_t i = 0; i < alts.size(); ++i) amean += alts[i];
  amean /= 400.0;
  CHECK(amean > 2.0);  // theta1 = 1/3 over n=300 rows is easily detectable

  CHECK(gen_se2(field, 300, 5).values() == alts.values());
}

TEST_CASE("replication runner shape and determinism") {
  SimScenario scenario;
  scenario.field = eta_field(builtin_locations(), kMainCoeffs, kCenter1, kCenter2);
  scenario.setting = Setting::se1;
  scenario.n = 300;
  scenario.taus = {0.0, 1.0};
  scenario.alphas = {0.05};
  scenario.reps = 4;
  scenario.seed = 2026;

  std::vector<std::pair<double, double>> pts;
  for (const auto& p : scenario.field.locations) pts.emplace_back(p.x, p.y);
  auto tree =
      build_tree_from_distances(DistanceMatrix::from_points_2d(pts), 2, 3);

  std::vector<ProcedureSpec> procedures;
  ProcedureSpec d3;
  d3.name = "dart2_L3";
  d3.num_layers = 3;
  procedures.push_back(d3);
  ProcedureSpec bh;
  bh.name = "bh";
  bh.is_bh = true;
  procedures.push_back(bh);

  auto rows = run_replications(scenario, tree, procedures, 1);
  REQUIRE(rows.size() == 4 * 2 * 1 * 2);
  for (const auto& row : rows) {
    CHECK(row.fdp >= 0.0);
    CHECK(row.fdp <= 1.0);
    CHECK(row.sensitivity >= 0.0);
    CHECK(row.sensitivity <= 1.0);
  }
  // Fixed (rep, tau, alpha, procedure) ordering.
  CHECK(rows[0].rep == 1);
  CHECK(rows[0].procedure == "dart2_L3");
  CHECK(rows[1].procedure == "bh");
  CHECK(rows[2].tau == 1.0);
  CHECK(rows[4].rep == 2);

  auto threaded = run_replications(scenario, tree, procedures, 4);
  REQUIRE(threaded.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(threaded[i].rep == rows[i].rep);
    CHECK(threaded[i].procedure == rows[i].procedure);
    CHECK(threaded[i].fdp == rows[i].fdp);
    CHECK(threaded[i].sensitivity == rows[i].sensitivity);
  }
}
