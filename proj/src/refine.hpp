#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "core.hpp"
#include "screen.hpp"
#include "tree.hpp"

namespace dart2 {

/// Naive refining threshold t*_S = c_hat / sqrt(|S|).
double naive_threshold(double c_hat, std::size_t node_size);

struct RobustThreshold {
  double t_s1;   // max(t*, sf_inv(alpha))
  double t_s2;   // max member statistic
  double t_hat;  // min(t_s1, t_s2)
};

/// Robust refining threshold: floored at sf_inv(alpha) so the node cannot
/// reject on an arbitrarily small cut, and capped at the node's largest
/// statistic so every screened node rejects at least one member.
RobustThreshold robust_threshold(double t_star, double alpha,
                                 std::span<const double> member_stats);

struct RefineRecord {
  ScreenedNode node;
  double t_star = 0.0;
  double t_s1 = 0.0;
  double t_s2 = 0.0;
  double t_hat = 0.0;  // applied threshold (equals t_star in naive mode)
  std::vector<std::size_t> rejected;
};

struct Rejection {
  std::size_t hypothesis;
  int layer;
  std::size_t node_index;
  double threshold;
};

struct RejectionReport {
  std::vector<std::size_t> rejected;  // sorted, unique
  std::vector<Rejection> provenance;  // one entry per rejected hypothesis
  std::vector<LayerAudit> layers;
  std::vector<RefineRecord> refines;
  RefineMode mode = RefineMode::robust;
};

/// Stage 2: per-node refining thresholds over the screened-out nodes.
/// Members with T_i >= t_hat are rejected (>= so the t_s2 cap always
/// fires). Layer-1 singletons run through the same path, where refining
/// is provably a no-op.
RejectionReport refining_stage(const ScreeningResult& screen, const StatisticVector& stats,
                               const Dart2Config& cfg);

/// The full two-stage procedure: screening then refining.
RejectionReport dart2(const StatisticVector& stats, const AggregationTree& tree,
                      const Dart2Config& cfg);

}  // namespace dart2
