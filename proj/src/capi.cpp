#include "dart2/dart2.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "bh.hpp"
#include "core.hpp"
#include "error.hpp"
#include "metrics.hpp"
#include "normal.hpp"
#include "refine.hpp"
#include "sim.hpp"
#include "tree.hpp"
#include "treeio.hpp"

struct dart2_tree {
  dart2::AggregationTree tree;
};

struct dart2_report {
  dart2::RejectionReport report;
};

struct dart2_sim_result {
  std::vector<dart2::SimRow> rows;
};

namespace {

thread_local std::string g_last_error;

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    return DART2_OK;
  } catch (const dart2::DomainError& e) {
    g_last_error = e.what();
    return DART2_ERR_DOMAIN;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return DART2_ERR_INTERNAL;
  }
}

int domain_fail(const char* message) {
  g_last_error = message;
  return DART2_ERR_DOMAIN;
}

dart2::RefineMode to_mode(int mode) {
  if (mode != DART2_MODE_NAIVE && mode != DART2_MODE_ROBUST) {
    throw dart2::DomainError("mode must be DART2_MODE_NAIVE or DART2_MODE_ROBUST");
  }
  return mode == DART2_MODE_NAIVE ? dart2::RefineMode::naive : dart2::RefineMode::robust;
}

dart2::LayerAlphaRule to_rule(int rule) {
  if (rule != DART2_LAYER_ALPHA_CONSTANT && rule != DART2_LAYER_ALPHA_SCALED) {
    throw dart2::DomainError("layer_alpha_rule must be constant or scaled");
  }
  return rule == DART2_LAYER_ALPHA_CONSTANT ? dart2::LayerAlphaRule::constant
                                            : dart2::LayerAlphaRule::scaled;
}

}  // namespace

extern "C" {

const char* dart2_version(void) { return "0.1.0"; }

const char* dart2_last_error(void) { return g_last_error.c_str(); }

void dart2_string_free(char* s) { std::free(s); }

double dart2_std_normal_sf(double z) { return dart2::std_normal_sf(z); }

int dart2_std_normal_sf_inv(double q, double* out) {
  if (!out) return domain_fail("out is NULL");
  return guarded([&] { *out = dart2::std_normal_sf_inv(q); });
}

int dart2_pvalues_to_stats(const double* pvalues, size_t m, double* stats_out) {
  if (!pvalues || !stats_out) return domain_fail("NULL buffer");
  return guarded([&] {
    dart2::StatisticVector z =
        dart2::pvalue_to_z(dart2::PValueVector(std::vector<double>(pvalues, pvalues + m)));
    std::memcpy(stats_out, z.values().data(), m * sizeof(double));
  });
}

int dart2_max_layers(size_t m, int max_children, size_t cm, int* out) {
  if (!out) return domain_fail("out is NULL");
  return guarded([&] { *out = dart2::max_layers(m, max_children, cm); });
}

int dart2_tree_from_distances(const double* distances, size_t m, int max_children,
                              int num_layers, const double* thresholds, dart2_tree** out) {
  if (!distances || !out) return domain_fail("NULL buffer");
  return guarded([&] {
    dart2::DistanceMatrix d(m, std::vector<double>(distances, distances + m * m));
    std::optional<std::vector<double>> cuts;
    if (thresholds && num_layers > 1) {
      cuts = std::vector<double>(thresholds, thresholds + (num_layers - 1));
    }
    *out = new dart2_tree{dart2::build_tree_from_distances(d, max_children, num_layers, cuts)};
  });
}

int dart2_tree_from_ordering(const size_t* ranks, size_t m, int max_children, int num_layers,
                             dart2_tree** out) {
  if (!ranks || !out) return domain_fail("NULL buffer");
  return guarded([&] {
    *out = new dart2_tree{dart2::build_tree_from_ordering(
        std::vector<std::size_t>(ranks, ranks + m), max_children, num_layers)};
  });
}

int dart2_tree_load(const char* path, dart2_tree** out) {
  if (!path || !out) return domain_fail("NULL argument");
  return guarded([&] { *out = new dart2_tree{dart2::load_tree(path)}; });
}

int dart2_tree_save(const dart2_tree* tree, const char* path) {
  if (!tree || !path) return domain_fail("NULL argument");
  return guarded([&] { dart2::save_tree(tree->tree, path); });
}

int dart2_tree_validate(const dart2_tree* tree, char** violations_out) {
  if (!tree || !violations_out) return domain_fail("NULL argument");
  return guarded([&] {
    auto violations = dart2::validate_tree(tree->tree);
    if (violations.empty()) {
      *violations_out = nullptr;
      return;
    }
    std::string joined;
    for (const auto& v : violations) {
      if (!joined.empty()) joined += '\n';
      joined += v;
    }
    char* buf = static_cast<char*>(std::malloc(joined.size() + 1));
    std::memcpy(buf, joined.c_str(), joined.size() + 1);
    *violations_out = buf;
  });
}

size_t dart2_tree_num_hypotheses(const dart2_tree* tree) { return tree ? tree->tree.m : 0; }

int dart2_tree_num_layers(const dart2_tree* tree) {
  return tree ? tree->tree.num_layers() : 0;
}

void dart2_tree_free(dart2_tree* tree) { delete tree; }

int dart2_run(const double* stats, size_t m, const dart2_tree* tree,
              const dart2_config* config, dart2_report** out) {
  if (!stats || !tree || !config || !out) return domain_fail("NULL argument");
  return guarded([&] {
    dart2::Dart2Config cfg{config->alpha, to_mode(config->mode),
                           to_rule(config->layer_alpha_rule)};
    dart2::StatisticVector sv(std::vector<double>(stats, stats + m));
    *out = new dart2_report{dart2::dart2(sv, tree->tree, cfg)};
  });
}

size_t dart2_report_num_rejected(const dart2_report* report) {
  return report ? report->report.rejected.size() : 0;
}

int dart2_report_rejected(const dart2_report* report, size_t k, size_t* hypothesis_out,
                          int* layer_out, size_t* node_out, double* threshold_out) {
  if (!report) return domain_fail("NULL report");
  if (k >= report->report.provenance.size()) return domain_fail("rejection index out of range");
  const auto& r = report->report.provenance[k];
  if (hypothesis_out) *hypothesis_out = r.hypothesis + 1;
  if (layer_out) *layer_out = r.layer;
  if (node_out) *node_out = r.node_index + 1;
  if (threshold_out) *threshold_out = r.threshold;
  return DART2_OK;
}

int dart2_report_num_layers(const dart2_report* report) {
  return report ? static_cast<int>(report->report.layers.size()) : 0;
}

int dart2_report_layer(const dart2_report* report, int layer_index, int* layer_out,
                       double* alpha_layer_out, double* threshold_out, int* feasible_out,
                       size_t* qualified_out, size_t* screened_out) {
  if (!report) return domain_fail("NULL report");
  if (layer_index < 0 || layer_index >= static_cast<int>(report->report.layers.size())) {
    return domain_fail("layer index out of range");
  }
  const auto& a = report->report.layers[layer_index];
  if (layer_out) *layer_out = a.layer;
  if (alpha_layer_out) *alpha_layer_out = a.alpha_layer;
  if (threshold_out) *threshold_out = a.c_hat;
  if (feasible_out) *feasible_out = a.feasible ? 1 : 0;
  if (qualified_out) *qualified_out = a.qualified;
  if (screened_out) *screened_out = a.screened;
  return DART2_OK;
}

void dart2_report_free(dart2_report* report) { delete report; }

int dart2_bh(const double* pvalues, size_t m, double alpha, uint8_t* rejected_out) {
  if (!pvalues || !rejected_out) return domain_fail("NULL buffer");
  return guarded([&] {
    auto rejected = dart2::bh_procedure(
        dart2::PValueVector(std::vector<double>(pvalues, pvalues + m)), alpha);
    std::memset(rejected_out, 0, m);
    for (std::size_t i : rejected) {
      rejected_out[i] = 1;
    }
  });
}

int dart2_summarize(const double* values, size_t n, double* mean_out, double* q05_out,
                    double* q95_out) {
  if (!values) return domain_fail("NULL buffer");
  return guarded([&] {
    auto s = dart2::summarize(std::vector<double>(values, values + n));
    if (mean_out) *mean_out = s.mean;
    if (q05_out) *q05_out = s.q05;
    if (q95_out) *q95_out = s.q95;
  });
}

int dart2_simulate(const dart2_sim_spec* spec, dart2_sim_result** out) {
  if (!spec || !out) return domain_fail("NULL argument");
  return guarded([&] {
    if (spec->setting != DART2_SETTING_SE1 && spec->setting != DART2_SETTING_SE2) {
      throw dart2::DomainError("simulate: unknown setting");
    }
    const dart2::EtaCoeffs& coeffs =
        spec->coeffs == DART2_COEFFS_APPENDIX ? dart2::kAppendixCoeffs : dart2::kMainCoeffs;

    dart2::SimScenario scenario;
    scenario.field = dart2::eta_field(dart2::builtin_locations(), coeffs, dart2::kCenter1,
                                      dart2::kCenter2);
    scenario.setting =
        spec->setting == DART2_SETTING_SE1 ? dart2::Setting::se1 : dart2::Setting::se2;
    scenario.n = spec->n ? spec->n : 300;
    scenario.taus.assign(spec->taus, spec->taus + spec->num_taus);
    scenario.alphas.assign(spec->alphas, spec->alphas + spec->num_alphas);
    scenario.reps = spec->reps;
    scenario.seed = spec->seed;

    int deepest = 1;
    std::vector<dart2::ProcedureSpec> procedures;
    for (size_t i = 0; i < spec->num_layer_counts; ++i) {
      int layers = spec->layer_counts[i];
      deepest = std::max(deepest, layers);
      dart2::ProcedureSpec p;
      p.name = std::string("dart2_L") + std::to_string(layers) + "_" +
               (spec->mode == DART2_MODE_NAIVE ? "naive" : "robust");
      p.num_layers = layers;
      p.mode = to_mode(spec->mode);
      p.layer_alpha_rule = to_rule(spec->layer_alpha_rule);
      procedures.push_back(std::move(p));
    }
    if (spec->include_bh) {
      dart2::ProcedureSpec p;
      p.name = "bh";
      p.is_bh = true;
      procedures.push_back(std::move(p));
    }

    std::vector<std::pair<double, double>> pts;
    pts.reserve(scenario.field.locations.size());
    for (const auto& loc : scenario.field.locations) {
      pts.emplace_back(loc.x, loc.y);
    }
    auto distances = dart2::DistanceMatrix::from_points_2d(pts);
    auto tree = dart2::build_tree_from_distances(distances, 2, deepest);

    *out = new dart2_sim_result{
        dart2::run_replications(scenario, tree, procedures, spec->threads)};
  });
}

size_t dart2_sim_num_rows(const dart2_sim_result* result) {
  return result ? result->rows.size() : 0;
}

int dart2_sim_row(const dart2_sim_result* result, size_t row, size_t* rep_out,
                  const char** procedure_out, double* alpha_out, double* tau_out,
                  double* fdp_out, double* sensitivity_out) {
  if (!result) return domain_fail("NULL result");
  if (row >= result->rows.size()) return domain_fail("row index out of range");
  const auto& r = result->rows[row];
  if (rep_out) *rep_out = r.rep;
  if (procedure_out) *procedure_out = r.procedure.c_str();
  if (alpha_out) *alpha_out = r.alpha;
  if (tau_out) *tau_out = r.tau;
  if (fdp_out) *fdp_out = r.fdp;
  if (sensitivity_out) *sensitivity_out = r.sensitivity;
  return DART2_OK;
}

void dart2_sim_result_free(dart2_sim_result* result) { delete result; }

}  // extern "C"
