#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "core.hpp"
#include "tree.hpp"

namespace dart2 {

/// Stouffer combination: sum of member statistics over sqrt(|S|).
double node_statistic(const StatisticVector& stats, std::span<const std::size_t> members);

struct NodeStat {
  double value;      // Stouffer statistic T_S
  std::size_t size;  // |S|
};

/// Layer-level control level. The scaled rule divides alpha by the largest
/// qualified-node size, which numerical studies favor in finite samples;
/// the constant rule uses alpha unchanged.
double layer_alpha(double alpha, const std::vector<std::size_t>& node_sizes,
                   LayerAlphaRule rule);

struct ThresholdResult {
  double c_hat;
  /// False when no threshold in the search range satisfies the estimated-FDP
  /// bound; c_hat is then the conservative upper bound of the range.
  bool feasible;
};

/// Smallest c in [sf_inv(alpha_level), sf_inv(alpha_floor)] with
///   sum_S |S| * sf(c) / max(sum_S |S| * 1{T_S > c}, 1) <= alpha_level.
/// The estimated-FDP curve only changes at observed statistics, so the
/// search walks the sorted statistic values and solves the crossing
/// analytically inside each interval; no grid is involved.
/// Requires 0 < alpha_floor < alpha_level < 1.
ThresholdResult layer_threshold(const std::vector<NodeStat>& node_stats, double alpha_level,
                                double alpha_floor);

struct ScreenedNode {
  int layer = 1;
  std::size_t node_index = 0;               // index within its layer
  std::vector<std::size_t> members;         // surviving members at screening time
  double c_hat = 0.0;                       // layer threshold that screened it
};

struct LayerAudit {
  int layer = 1;
  double alpha_layer = 0.0;
  double c_hat = 0.0;
  bool feasible = false;
  std::size_t qualified = 0;
  std::size_t screened = 0;
};

struct ScreeningResult {
  std::size_t m = 0;
  std::vector<LayerAudit> layers;
  std::vector<ScreenedNode> screened;             // all layers, screening order
  std::vector<std::size_t> layer1_rejections;     // sorted hypothesis indices
};

/// Stage 1: layer-by-layer node testing. Layer 1 thresholds the raw
/// statistics; higher layers drop already-screened hypotheses, keep nodes
/// with at least two surviving children, and threshold the Stouffer
/// statistics of the survivors. A layer whose scaled control level falls
/// to or below the alpha floor is treated as infeasible (conservative
/// fallback) rather than an error so multi-layer runs stay total.
ScreeningResult screening_stage(const StatisticVector& stats, const AggregationTree& tree,
                                const Dart2Config& cfg);

}  // namespace dart2
