#include "tree.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <queue>
#include <sstream>
#include <tuple>
#include <utility>

#include "error.hpp"

namespace dart2 {

AggregationTree AggregationTree::prefix(int num_layers) const {
  if (num_layers < 1 || num_layers > this->num_layers()) {
    std::ostringstream msg;
    msg << "AggregationTree::prefix: requested " << num_layers << " layers from a "
        << this->num_layers() << "-layer tree";
    throw DomainError(msg.str());
  }
  AggregationTree out;
  out.m = m;
  out.max_children = max_children;
  out.layers.assign(layers.begin(), layers.begin() + num_layers);
  return out;
}

DistanceMatrix::DistanceMatrix(std::size_t m, std::vector<double> row_major)
    : m_(m), data_(std::move(row_major)) {
  if (m_ == 0 || data_.size() != m_ * m_) {
    throw DomainError("DistanceMatrix: data size does not match dimension");
  }
  for (std::size_t i = 0; i < m_; ++i) {
    if (data_[i * m_ + i] != 0.0) {
      throw DomainError("DistanceMatrix: nonzero diagonal at row " + std::to_string(i + 1));
    }
    for (std::size_t j = 0; j < m_; ++j) {
      double v = data_[i * m_ + j];
      if (!std::isfinite(v) || v < 0.0) {
        throw DomainError("DistanceMatrix: invalid entry at (" + std::to_string(i + 1) +
                          ", " + std::to_string(j + 1) + ")");
      }
      if (std::abs(v - data_[j * m_ + i]) > 1e-12) {
        throw DomainError("DistanceMatrix: asymmetry at (" + std::to_string(i + 1) + ", " +
                          std::to_string(j + 1) + ")");
      }
    }
  }
}

DistanceMatrix DistanceMatrix::from_points_2d(
    const std::vector<std::pair<double, double>>& pts) {
  std::size_t m = pts.size();
  std::vector<double> d(m * m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      double dx = pts[i].first - pts[j].first;
      double dy = pts[i].second - pts[j].second;
      double v = std::hypot(dx, dy);
      d[i * m + j] = v;
      d[j * m + i] = v;
    }
  }
  return DistanceMatrix(m, std::move(d));
}

int max_layers(std::size_t m, int max_children, std::size_t cm) {
  if (max_children < 2) {
    throw DomainError("max_layers: max_children must be >= 2");
  }
  if (cm < 1 || cm > m) {
    throw DomainError("max_layers: need 1 <= c_m <= m");
  }
  double l = std::log(static_cast<double>(m) / static_cast<double>(cm)) /
             std::log(static_cast<double>(max_children));
  // Guard against log round-off at exact powers (e.g. m/c_m = 2^10).
  int floor_l = static_cast<int>(std::floor(l + 1e-9));
  return std::max(1, floor_l);
}

std::vector<double> default_thresholds(const DistanceMatrix& d, int num_layers) {
  std::vector<double> out;
  if (num_layers < 2) {
    return out;
  }
  std::size_t m = d.size();
  std::vector<double> pair_dists;
  pair_dists.reserve(m * (m - 1) / 2);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      pair_dists.push_back(d(i, j));
    }
  }
  if (pair_dists.empty()) {
    return std::vector<double>(num_layers - 1, 0.0);
  }
  std::sort(pair_dists.begin(), pair_dists.end());
  auto quantile = [&](double q) {
    double h = q * static_cast<double>(pair_dists.size() - 1);
    std::size_t lo = static_cast<std::size_t>(std::floor(h));
    std::size_t hi = std::min(lo + 1, pair_dists.size() - 1);
    double frac = h - static_cast<double>(lo);
    return pair_dists[lo] + frac * (pair_dists[hi] - pair_dists[lo]);
  };
  for (int layer = 2; layer <= num_layers; ++layer) {
    out.push_back(quantile(1.0 - std::pow(2.0, -(layer - 1))));
  }
  return out;
}

namespace {

struct MergeEntity {
  std::vector<std::size_t> children;  // indices into previous layer
  double weight = 0.0;                // hypothesis count
  std::size_t min_member = 0;
  bool alive = true;
  std::uint32_t version = 0;
};

// Candidate merge, ordered by (distance, min-index pair).
struct MergeEvent {
  double dist;
  std::size_t lo, hi;  // min members of the two entities, ordered
  std::size_t a, b;    // entity slots
  std::uint32_t va, vb;

  bool operator>(const MergeEvent& o) const {
    return std::tie(dist, lo, hi) > std::tie(o.dist, o.lo, o.hi);
  }
};

// One greedy agglomeration pass: merges `items` (with pairwise average-
// linkage distances `dist`, k x k row major) under the distance cutoff and
// child-count cap. Returns the parent entities sorted by min member.
std::vector<MergeEntity> merge_layer(std::vector<MergeEntity> items,
                                     const std::vector<double>& dist, double cutoff,
                                     int max_children) {
  std::size_t k = items.size();
  std::vector<double> work(dist);  // updated in place via Lance-Williams
  auto d_at = [&](std::size_t i, std::size_t j) -> double& { return work[i * k + j]; };

  std::priority_queue<MergeEvent, std::vector<MergeEvent>, std::greater<MergeEvent>> heap;
  auto push_pair = [&](std::size_t i, std::size_t j) {
    if (items[i].children.size() + items[j].children.size() >
        static_cast<std::size_t>(max_children)) {
      return;
    }
    double dv = d_at(i, j);
    if (dv > cutoff) {
      return;
    }
    std::size_t lo = std::min(items[i].min_member, items[j].min_member);
    std::size_t hi = std::max(items[i].min_member, items[j].min_member);
    heap.push({dv, lo, hi, i, j, items[i].version, items[j].version});
  };

  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      push_pair(i, j);
    }
  }

  while (!heap.empty()) {
    MergeEvent ev = heap.top();
    heap.pop();
    MergeEntity& a = items[ev.a];
    MergeEntity& b = items[ev.b];
    if (!a.alive || !b.alive || a.version != ev.va || b.version != ev.vb) {
      continue;
    }
    // Merge b into a.
    double wa = a.weight, wb = b.weight;
    a.children.insert(a.children.end(), b.children.begin(), b.children.end());
    a.weight = wa + wb;
    a.min_member = std::min(a.min_member, b.min_member);
    a.version++;
    b.alive = false;
    for (std::size_t t = 0; t < k; ++t) {
      if (t == ev.a || t == ev.b || !items[t].alive) {
        continue;
      }
      double nd = (wa * d_at(ev.a, t) + wb * d_at(ev.b, t)) / (wa + wb);
      d_at(ev.a, t) = nd;
      d_at(t, ev.a) = nd;
    }
    if (a.children.size() < static_cast<std::size_t>(max_children)) {
      for (std::size_t t = 0; t < k; ++t) {
        if (t != ev.a && items[t].alive) {
          push_pair(std::min(t, ev.a), std::max(t, ev.a));
        }
      }
    }
  }

  std::vector<MergeEntity> parents;
  for (auto& e : items) {
    if (e.alive) {
      parents.push_back(std::move(e));
    }
  }
  std::sort(parents.begin(), parents.end(),
            [](const MergeEntity& x, const MergeEntity& y) { return x.min_member < y.min_member; });
  return parents;
}

}  // namespace

AggregationTree build_tree_from_distances(
    const DistanceMatrix& d, int max_children, int num_layers,
    const std::optional<std::vector<double>>& thresholds) {
  if (max_children < 2) {
    throw DomainError("build_tree_from_distances: max_children must be >= 2");
  }
  if (num_layers < 1) {
    throw DomainError("build_tree_from_distances: num_layers must be >= 1");
  }
  std::size_t m = d.size();

  std::vector<double> cutoffs;
  if (thresholds.has_value()) {
    cutoffs = *thresholds;
    if (cutoffs.size() != static_cast<std::size_t>(num_layers - 1)) {
      throw DomainError("build_tree_from_distances: expected " +
                        std::to_string(num_layers - 1) + " thresholds, got " +
                        std::to_string(cutoffs.size()));
    }
    for (std::size_t i = 0; i < cutoffs.size(); ++i) {
      if (!(cutoffs[i] > 0.0) || (i > 0 && cutoffs[i] < cutoffs[i - 1])) {
        throw DomainError(
            "build_tree_from_distances: thresholds must be positive and nondecreasing");
      }
    }
  } else {
    cutoffs = default_thresholds(d, num_layers);
  }

  AggregationTree tree;
  tree.m = m;
  tree.max_children = max_children;
  tree.layers.emplace_back();
  for (std::size_t i = 0; i < m; ++i) {
    tree.layers[0].push_back(TreeNode{{}, {i}});
  }

  // Average-linkage distances between current-layer nodes.
  std::size_t k = m;
  std::vector<double> node_dist(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      node_dist[i * m + j] = d(i, j);
    }
  }

  for (int layer = 2; layer <= num_layers; ++layer) {
    const auto& prev = tree.layers.back();
    std::vector<MergeEntity> items(k);
    for (std::size_t i = 0; i < k; ++i) {
      items[i].children = {i};
      items[i].weight = static_cast<double>(prev[i].members.size());
      items[i].min_member = prev[i].members.front();
    }
    auto parents = merge_layer(std::move(items), node_dist, cutoffs[layer - 2], max_children);

    std::vector<TreeNode> nodes;
    nodes.reserve(parents.size());
    for (auto& p : parents) {
      TreeNode node;
      std::sort(p.children.begin(), p.children.end(),
                [&](std::size_t a, std::size_t b) {
                  return prev[a].members.front() < prev[b].members.front();
                });
      node.children = p.children;
      for (std::size_t c : node.children) {
        node.members.insert(node.members.end(), prev[c].members.begin(), prev[c].members.end());
      }
      std::sort(node.members.begin(), node.members.end());
      nodes.push_back(std::move(node));
    }

    // Distances between the new parents, for the next pass.
    std::size_t nk = nodes.size();
    std::vector<double> next_dist(nk * nk, 0.0);
    for (std::size_t p = 0; p < nk; ++p) {
      for (std::size_t q = p + 1; q < nk; ++q) {
        double acc = 0.0, wsum = 0.0;
        for (std::size_t a : nodes[p].children) {
          for (std::size_t b : nodes[q].children) {
            double w = static_cast<double>(prev[a].members.size()) *
                       static_cast<double>(prev[b].members.size());
            acc += w * node_dist[a * k + b];
            wsum += w;
          }
        }
        double v = acc / wsum;
        next_dist[p * nk + q] = v;
        next_dist[q * nk + p] = v;
      }
    }
    node_dist = std::move(next_dist);
    k = nk;
    tree.layers.push_back(std::move(nodes));
  }
  return tree;
}

AggregationTree build_tree_from_ordering(const std::vector<std::size_t>& ranks,
                                         int max_children, int num_layers) {
  std::size_t m = ranks.size();
  if (m == 0) {
    throw DomainError("build_tree_from_ordering: empty ranking");
  }
  if (max_children < 2) {
    throw DomainError("build_tree_from_ordering: max_children must be >= 2");
  }
  if (num_layers < 1) {
    throw DomainError("build_tree_from_ordering: num_layers must be >= 1");
  }
  std::vector<std::size_t> by_rank(m, m);  // by_rank[r-1] = hypothesis with rank r
  for (std::size_t i = 0; i < m; ++i) {
    if (ranks[i] < 1 || ranks[i] > m || by_rank[ranks[i] - 1] != m) {
      throw DomainError("build_tree_from_ordering: ranks are not a permutation of 1.." +
                        std::to_string(m));
    }
    by_rank[ranks[i] - 1] = i;
  }

  AggregationTree tree;
  tree.m = m;
  tree.max_children = max_children;
  tree.layers.emplace_back();
  for (std::size_t r = 0; r < m; ++r) {
    tree.layers[0].push_back(TreeNode{{}, {by_rank[r]}});
  }
  for (int layer = 2; layer <= num_layers; ++layer) {
    const auto& prev = tree.layers.back();
    std::vector<TreeNode> nodes;
    for (std::size_t start = 0; start < prev.size();
         start += static_cast<std::size_t>(max_children)) {
      std::size_t stop = std::min(start + static_cast<std::size_t>(max_children), prev.size());
      TreeNode node;
      for (std::size_t c = start; c < stop; ++c) {
        node.children.push_back(c);
        node.members.insert(node.members.end(), prev[c].members.begin(), prev[c].members.end());
      }
      std::sort(node.members.begin(), node.members.end());
      nodes.push_back(std::move(node));
    }
    tree.layers.push_back(std::move(nodes));
  }
  // Leaf slots above are in rank order; normalize the leaf layer to
  // hypothesis order to match the distance-based builder's conventions.
  // A layer-2 node's children are exactly its member singletons, so its
  // child slots become the member indices themselves.
  std::vector<TreeNode> leaves(m);
  for (std::size_t i = 0; i < m; ++i) {
    leaves[i] = TreeNode{{}, {i}};
  }
  tree.layers[0] = std::move(leaves);
  if (tree.num_layers() > 1) {
    for (auto& node : tree.layers[1]) {
      node.children.assign(node.members.begin(), node.members.end());
    }
  }
  return tree;
}

std::vector<std::string> validate_tree(const AggregationTree& tree) {
  std::vector<std::string> violations;
  auto complain = [&](std::string s) { violations.push_back(std::move(s)); };

  if (tree.layers.empty()) {
    complain("tree has no layers");
    return violations;
  }
  const auto& leaves = tree.layers[0];
  if (leaves.size() != tree.m) {
    complain("layer 1 has " + std::to_string(leaves.size()) + " nodes, expected m=" +
             std::to_string(tree.m));
    return violations;
  }
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    if (!leaves[i].children.empty()) {
      complain("layer 1 node " + std::to_string(i + 1) + " has children");
    }
    if (leaves[i].members.size() != 1 || leaves[i].members[0] != i) {
      complain("layer 1 node " + std::to_string(i + 1) + " is not the singleton {" +
               std::to_string(i + 1) + "}");
    }
  }

  for (int layer = 2; layer <= tree.num_layers(); ++layer) {
    const auto& nodes = tree.layers[layer - 1];
    const auto& prev = tree.layers[layer - 2];
    std::vector<int> parent_count(prev.size(), 0);
    std::vector<int> member_seen(tree.m, 0);
    for (std::size_t n = 0; n < nodes.size(); ++n) {
      const auto& node = nodes[n];
      std::string where = "layer " + std::to_string(layer) + " node " + std::to_string(n + 1);
      if (node.children.empty() ||
          node.children.size() > static_cast<std::size_t>(tree.max_children)) {
        complain(where + " has " + std::to_string(node.children.size()) +
                 " children, allowed 1.." + std::to_string(tree.max_children));
      }
      std::vector<std::size_t> expected;
      for (std::size_t c : node.children) {
        if (c >= prev.size()) {
          complain(where + " references missing child " + std::to_string(c + 1));
          continue;
        }
        parent_count[c]++;
        expected.insert(expected.end(), prev[c].members.begin(), prev[c].members.end());
      }
      std::sort(expected.begin(), expected.end());
      if (expected != node.members) {
        complain(where + " member set does not equal the union of its children's members");
      }
      for (std::size_t i : node.members) {
        if (i >= tree.m) {
          complain(where + " contains out-of-range hypothesis " + std::to_string(i + 1));
        } else if (++member_seen[i] > 1) {
          complain("layer " + std::to_string(layer) + ": hypothesis " + std::to_string(i + 1) +
                   " appears in more than one node");
        }
      }
    }
    for (std::size_t c = 0; c < prev.size(); ++c) {
      if (parent_count[c] != 1) {
        complain("layer " + std::to_string(layer - 1) + " node " + std::to_string(c + 1) +
                 " has " + std::to_string(parent_count[c]) + " parents, expected exactly 1");
      }
    }
    for (std::size_t i = 0; i < tree.m; ++i) {
      if (member_seen[i] == 0) {
        complain("layer " + std::to_string(layer) + " does not cover hypothesis " +
                 std::to_string(i + 1));
      }
    }
  }
  return violations;
}

}  // namespace dart2
