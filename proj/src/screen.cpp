#include "screen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "error.hpp"
#include "normal.hpp"

namespace dart2 {

double node_statistic(const StatisticVector& stats, std::span<const std::size_t> members) {
  if (members.empty()) {
    throw DomainError("node_statistic: empty member set");
  }
  double sum = 0.0;
  for (std::size_t i : members) {
    if (i >= stats.size()) {
      throw DomainError("node_statistic: member index " + std::to_string(i + 1) +
                        " out of range");
    }
    sum += stats[i];
  }
  return sum / std::sqrt(static_cast<double>(members.size()));
}

double layer_alpha(double alpha, const std::vector<std::size_t>& node_sizes,
                   LayerAlphaRule rule) {
  if (node_sizes.empty()) {
    throw DomainError("layer_alpha: empty qualified node set");
  }
  if (rule == LayerAlphaRule::constant) {
    return alpha;
  }
  std::size_t max_size = *std::max_element(node_sizes.begin(), node_sizes.end());
  return alpha / static_cast<double>(max_size);
}

ThresholdResult layer_threshold(const std::vector<NodeStat>& node_stats, double alpha_level,
                                double alpha_floor) {
  if (node_stats.empty()) {
    throw DomainError("layer_threshold: empty node list");
  }
  if (!(alpha_floor > 0.0 && alpha_floor < alpha_level && alpha_level < 1.0)) {
    throw DomainError("layer_threshold: need 0 < alpha_floor < alpha_level < 1");
  }
  const double lo = std_normal_sf_inv(alpha_level);
  const double hi = std_normal_sf_inv(alpha_floor);

  double total_weight = 0.0;
  for (const auto& ns : node_stats) {
    total_weight += static_cast<double>(ns.size);
  }

  // Interval boundaries: lo, then the distinct statistic values inside
  // (lo, hi). The weighted exceedance count is constant on [b_j, b_{j+1}).
  std::vector<double> bounds{lo};
  {
    std::vector<double> inside;
    for (const auto& ns : node_stats) {
      if (ns.value > lo && ns.value < hi) {
        inside.push_back(ns.value);
      }
    }
    std::sort(inside.begin(), inside.end());
    inside.erase(std::unique(inside.begin(), inside.end()), inside.end());
    bounds.insert(bounds.end(), inside.begin(), inside.end());
  }

  auto weight_above = [&](double c) {
    double w = 0.0;
    for (const auto& ns : node_stats) {
      if (ns.value > c) {
        w += static_cast<double>(ns.size);
      }
    }
    return w;
  };
  auto estimated_fdp_ok = [&](double c, double denom) {
    return total_weight * std_normal_sf(c) <= alpha_level * denom;
  };

  for (std::size_t j = 0; j < bounds.size(); ++j) {
    const double left = bounds[j];
    const double right = (j + 1 < bounds.size()) ? bounds[j + 1] : hi;
    const double denom = std::max(weight_above(left), 1.0);
    if (estimated_fdp_ok(left, denom)) {
      return {left, true};
    }
    double q = alpha_level * denom / total_weight;
    if (q >= 1.0) {
      continue;  // cannot happen after the check above, kept for safety
    }
    double crossing = std_normal_sf_inv(q);
    for (int guard = 0; guard < 64 && !estimated_fdp_ok(crossing, denom); ++guard) {
      crossing = std::nextafter(crossing, std::numeric_limits<double>::infinity());
    }
    const bool in_interval =
        (j + 1 < bounds.size()) ? (crossing > left && crossing < right)
                                : (crossing > left && crossing <= hi);
    if (in_interval && estimated_fdp_ok(crossing, denom)) {
      return {crossing, true};
    }
  }
  return {hi, false};
}

ScreeningResult screening_stage(const StatisticVector& stats, const AggregationTree& tree,
                                const Dart2Config& cfg) {
  cfg.validate();
  if (tree.m != stats.size()) {
    throw DomainError("screening_stage: tree covers " + std::to_string(tree.m) +
                      " hypotheses but " + std::to_string(stats.size()) +
                      " statistics were given");
  }
  const std::size_t m = stats.size();
  const double floor = alpha_floor(m);
  if (!(cfg.alpha > floor)) {
    throw DomainError("screening_stage: alpha must exceed the floor (m log m)^{-1}");
  }
  const double fallback_c = std_normal_sf_inv(floor);

  ScreeningResult result;
  result.m = m;
  std::vector<bool> removed(m, false);

  // Layer 1: all singletons qualify.
  {
    std::vector<NodeStat> node_stats(m);
    for (std::size_t i = 0; i < m; ++i) {
      node_stats[i] = {stats[i], 1};
    }
    LayerAudit audit;
    audit.layer = 1;
    audit.alpha_layer = cfg.alpha;  // both rules: max singleton size is 1
    audit.qualified = m;
    auto thr = layer_threshold(node_stats, audit.alpha_layer, floor);
    audit.c_hat = thr.c_hat;
    audit.feasible = thr.feasible;
    for (std::size_t i = 0; i < m; ++i) {
      if (stats[i] > thr.c_hat) {
        result.layer1_rejections.push_back(i);
        result.screened.push_back(ScreenedNode{1, i, {i}, thr.c_hat});
        removed[i] = true;
        audit.screened++;
      }
    }
    result.layers.push_back(audit);
  }

  for (int layer = 2; layer <= tree.num_layers(); ++layer) {
    const auto& nodes = tree.layers[layer - 1];
    const auto& prev = tree.layers[layer - 2];

    struct Qualified {
      std::size_t node_index;
      std::vector<std::size_t> members;
      double stat;
    };
    std::vector<Qualified> qualified;
    std::vector<NodeStat> node_stats;
    std::vector<std::size_t> sizes;
    for (std::size_t n = 0; n < nodes.size(); ++n) {
      std::size_t surviving_children = 0;
      for (std::size_t c : nodes[n].children) {
        bool child_alive = std::any_of(prev[c].members.begin(), prev[c].members.end(),
                                       [&](std::size_t i) { return !removed[i]; });
        surviving_children += child_alive ? 1 : 0;
      }
      if (surviving_children < 2) {
        continue;
      }
      std::vector<std::size_t> members;
      for (std::size_t i : nodes[n].members) {
        if (!removed[i]) {
          members.push_back(i);
        }
      }
      double t_s = node_statistic(stats, members);
      node_stats.push_back({t_s, members.size()});
      sizes.push_back(members.size());
      qualified.push_back({n, std::move(members), t_s});
    }

    LayerAudit audit;
    audit.layer = layer;
    audit.qualified = qualified.size();
    if (qualified.empty()) {
      audit.alpha_layer = cfg.alpha;
      audit.c_hat = fallback_c;
      audit.feasible = false;
      result.layers.push_back(audit);
      continue;
    }
    audit.alpha_layer = layer_alpha(cfg.alpha, sizes, cfg.layer_alpha_rule);
    if (audit.alpha_layer <= floor) {
      // Scaled control level degenerated below the search floor; screen
      // only what clears the conservative upper bound.
      audit.c_hat = fallback_c;
      audit.feasible = false;
    } else {
      auto thr = layer_threshold(node_stats, audit.alpha_layer, floor);
      audit.c_hat = thr.c_hat;
      audit.feasible = thr.feasible;
    }
    for (auto& q : qualified) {
      if (q.stat > audit.c_hat) {
        for (std::size_t i : q.members) {
          removed[i] = true;
        }
        result.screened.push_back(
            ScreenedNode{layer, q.node_index, std::move(q.members), audit.c_hat});
        audit.screened++;
      }
    }
    result.layers.push_back(audit);
  }
  return result;
}

}  // namespace dart2
