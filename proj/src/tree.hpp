#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace dart2 {

struct TreeNode {
  /// Indices into the previous layer's node list. Empty for layer 1.
  std::vector<std::size_t> children;
  /// Hypothesis indices (0-based) covered by this node, sorted.
  std::vector<std::size_t> members;
};

/// Layered aggregation tree. layers[0] holds the m singleton leaves;
/// each higher layer partitions the hypotheses into parents of between
/// 1 and max_children children. Immutable once built.
struct AggregationTree {
  std::size_t m = 0;
  int max_children = 2;
  std::vector<std::vector<TreeNode>> layers;

  int num_layers() const { return static_cast<int>(layers.size()); }

  /// The same tree truncated to its first `num_layers` layers.
  AggregationTree prefix(int num_layers) const;
};

/// Symmetric nonnegative distances with zero diagonal, stored dense.
class DistanceMatrix {
 public:
  DistanceMatrix(std::size_t m, std::vector<double> row_major);

  static DistanceMatrix from_points_2d(const std::vector<std::pair<double, double>>& pts);

  std::size_t size() const { return m_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * m_ + j]; }

 private:
  std::size_t m_;
  std::vector<double> data_;
};

/// L = max(1, floor(log_M(m / c_m))). Throws if c_m > m or c_m < 1.
int max_layers(std::size_t m, int max_children, std::size_t cm);

/// Per-layer merge distance cutoffs g^(2)..g^(L) when the caller supplies
/// none: the empirical quantile of the pairwise distances at level
/// 1 - 2^{-(l-1)}, so the candidate-pair pool roughly halves per layer.
std::vector<double> default_thresholds(const DistanceMatrix& d, int num_layers);

/// Greedy agglomeration: at each layer, repeatedly merge the closest pair
/// of nodes whose average-linkage distance is within the layer cutoff and
/// whose combined child count stays within max_children. Ties break on the
/// smallest (min-hypothesis-index, min-hypothesis-index) pair. Nodes left
/// unmerged pass through as single-child parents.
AggregationTree build_tree_from_distances(
    const DistanceMatrix& d, int max_children, int num_layers,
    const std::optional<std::vector<double>>& thresholds = std::nullopt);

/// Tree over a 1-D ordering: layer l groups consecutive rank-blocks of
/// size max_children^{l-1}. `ranks` maps hypothesis i (0-based) to its
/// rank in 1..m and must be a permutation.
AggregationTree build_tree_from_ordering(const std::vector<std::size_t>& ranks,
                                         int max_children, int num_layers);

/// Human-readable invariant violations; empty means the tree is valid.
std::vector<std::string> validate_tree(const AggregationTree& tree);

}  // namespace dart2
