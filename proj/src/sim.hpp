#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "core.hpp"
#include "tree.hpp"

namespace dart2 {

struct Point2 {
  double x;
  double y;
};

/// Frozen 1000-point location fixture for the synthetic study.
const std::vector<Point2>& builtin_locations();

/// Signal-field coefficients:
///   eta_i = max( max(a1*phi1(d1,i) - b1, 0) + a2*phi2(d2,i) - b2, 0 )
/// with phi1 the N(0,1) density and phi2 the N(0,0.1) density (variance
/// 0.1), and d1/d2 the distances to the two center hypotheses.
struct EtaCoeffs {
  double a1, b1, a2, b2;
};

inline constexpr EtaCoeffs kMainCoeffs{3.4, 0.6, 3.0, 0.1};
inline constexpr EtaCoeffs kAppendixCoeffs{5.1, 0.9, 4.5, 0.1};

/// Default center hypotheses (0-based).
inline constexpr std::size_t kCenter1 = 155;
inline constexpr std::size_t kCenter2 = 799;

struct SignalField {
  std::vector<Point2> locations;
  std::vector<double> eta;  // eta_i >= 0; eta_i > 0 means alternative

  std::size_t size() const { return eta.size(); }
  std::vector<std::size_t> alternatives() const;
  std::vector<std::size_t> nulls() const;
};

SignalField eta_field(std::vector<Point2> locations, const EtaCoeffs& coeffs,
                      std::size_t center1, std::size_t center2);

/// Swap eta between ceil(tau * m1) uniformly chosen alternatives and an
/// equal number of uniformly chosen nulls. Locations stay put, so the
/// label geometry the tree was built from becomes misleading.
SignalField apply_misleading(const SignalField& field, double tau, std::uint64_t seed);

/// SE1: T_i ~ N(sqrt(n) * eta_i / 5, 1), independent.
StatisticVector gen_se1(const SignalField& field, std::size_t n, std::uint64_t seed);

/// SE2: per hypothesis, n rows of Y = 0.1 + theta1*W1 + 0.1*W2 + eps with
/// theta1 = eta_i / 3, W1 ~ Bernoulli(0.5), W2 ~ Uniform(0.1, 0.5),
/// eps ~ N(0,1); T_i is the OLS Wald statistic for theta1.
StatisticVector gen_se2(const SignalField& field, std::size_t n, std::uint64_t seed);

/// OLS via modified Gram-Schmidt QR; exposed for testing. Returns the
/// coefficients for the columns of `design` fit to `response`.
std::vector<double> ols_fit(const std::vector<std::vector<double>>& design,
                            const std::vector<double>& response);

enum class Setting { se1, se2 };

struct SimScenario {
  SignalField field;
  Setting setting = Setting::se1;
  std::size_t n = 300;
  std::vector<double> taus;
  std::vector<double> alphas;
  std::size_t reps = 200;
  std::uint64_t seed = 0;
};

struct ProcedureSpec {
  std::string name;
  bool is_bh = false;
  int num_layers = 1;  // ignored for BH
  RefineMode mode = RefineMode::robust;
  LayerAlphaRule layer_alpha_rule = LayerAlphaRule::scaled;
};

struct SimRow {
  std::size_t rep;  // 1-based
  std::string procedure;
  double alpha;
  double tau;
  double fdp;
  double sensitivity;
};

/// Runs the replication study. The tree is a function of the locations
/// only and is passed in pre-built at its deepest requested depth; each
/// DART2 procedure uses its layer-count prefix. Repetitions may run on
/// `threads` workers; rows always come back in (rep, tau, alpha,
/// procedure) order regardless of scheduling.
std::vector<SimRow> run_replications(const SimScenario& scenario,
                                     const AggregationTree& tree,
                                     const std::vector<ProcedureSpec>& procedures,
                                     int threads = 1);

}  // namespace dart2
