#include "refine.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"
#include "normal.hpp"

namespace dart2 {

double naive_threshold(double c_hat, std::size_t node_size) {
  if (node_size < 1) {
    throw DomainError("naive_threshold: node size must be >= 1");
  }
  return c_hat / std::sqrt(static_cast<double>(node_size));
}

RobustThreshold robust_threshold(double t_star, double alpha,
                                 std::span<const double> member_stats) {
  if (member_stats.empty()) {
    throw DomainError("robust_threshold: empty member list");
  }
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("robust_threshold: alpha outside (0, 1)");
  }
  RobustThreshold out;
  out.t_s1 = std::max(t_star, std_normal_sf_inv(alpha));
  out.t_s2 = *std::max_element(member_stats.begin(), member_stats.end());
  out.t_hat = std::min(out.t_s1, out.t_s2);
  return out;
}

RejectionReport refining_stage(const ScreeningResult& screen, const StatisticVector& stats,
                               const Dart2Config& cfg) {
  cfg.validate();
  if (screen.m != stats.size()) {
    throw DomainError("refining_stage: screening result covers " + std::to_string(screen.m) +
                      " hypotheses but " + std::to_string(stats.size()) +
                      " statistics were given");
  }

  RejectionReport report;
  report.mode = cfg.mode;
  report.layers = screen.layers;

  for (const auto& node : screen.screened) {
    RefineRecord rec;
    rec.node = node;
    rec.t_star = naive_threshold(node.c_hat, node.members.size());
    if (cfg.mode == RefineMode::robust) {
      std::vector<double> member_stats;
      member_stats.reserve(node.members.size());
      for (std::size_t i : node.members) {
        member_stats.push_back(stats[i]);
      }
      auto rt = robust_threshold(rec.t_star, cfg.alpha, member_stats);
      rec.t_s1 = rt.t_s1;
      rec.t_s2 = rt.t_s2;
      rec.t_hat = rt.t_hat;
    } else {
      rec.t_hat = rec.t_star;
    }
    for (std::size_t i : node.members) {
      if (stats[i] >= rec.t_hat) {
        rec.rejected.push_back(i);
        report.provenance.push_back(Rejection{i, node.layer, node.node_index, rec.t_hat});
      }
    }
    report.refines.push_back(std::move(rec));
  }

  // Screened nodes are pairwise disjoint, so no hypothesis repeats.
  std::sort(report.provenance.begin(), report.provenance.end(),
            [](const Rejection& a, const Rejection& b) { return a.hypothesis < b.hypothesis; });
  for (const auto& r : report.provenance) {
    report.rejected.push_back(r.hypothesis);
  }
  if (std::adjacent_find(report.rejected.begin(), report.rejected.end()) !=
      report.rejected.end()) {
    throw InternalError("refining_stage: duplicate rejection across screened nodes");
  }
  return report;
}

RejectionReport dart2(const StatisticVector& stats, const AggregationTree& tree,
                      const Dart2Config& cfg) {
  return refining_stage(screening_stage(stats, tree, cfg), stats, cfg);
}

}  // namespace dart2
