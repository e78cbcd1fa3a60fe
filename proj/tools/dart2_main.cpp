// Command-line front end for the DART2 shared library. All statistical
// work goes through the extern-C interface in dart2/dart2.h; this file
// only handles argument parsing, CSV/JSON input and output, and the run
// manifest.

#include <dart2/dart2.h>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace {

constexpr int kExitDomain = DART2_ERR_DOMAIN;
constexpr int kExitInternal = DART2_ERR_INTERNAL;

struct CliError {
  int code;
  std::string message;
};

[[noreturn]] void fail(int code, const std::string& message) {
  throw CliError{code, message};
}

[[noreturn]] void fail_api(int code, const std::string& context) {
  fail(code == DART2_ERR_DOMAIN ? kExitDomain : kExitInternal,
       context + ": " + dart2_last_error());
}

void check_api(int code, const std::string& context) {
  if (code != DART2_OK) {
    fail_api(code, context);
  }
}

// Shortest round-trip decimal representation.
std::string fmt(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

// ---- CSV ----

std::vector<std::vector<std::string>> read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    fail(kExitDomain, "cannot open " + path);
  }
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty() && in.peek() == EOF) {
      break;
    }
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) {
      fields.push_back(field);
    }
    if (!line.empty() && line.back() == ',') {
      fields.push_back("");
    }
    rows.push_back(std::move(fields));
  }
  if (rows.empty()) {
    fail(kExitDomain, path + ": empty file (header row required)");
  }
  return rows;
}

double parse_double(const std::string& s, const std::string& path, std::size_t row,
                    std::size_t col) {
  double v{};
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    fail(kExitDomain, path + ": row " + std::to_string(row + 1) + ", column " +
                          std::to_string(col + 1) + ": not a number: '" + s + "'");
  }
  return v;
}

std::size_t parse_index(const std::string& s, const std::string& path, std::size_t row,
                        std::size_t col) {
  std::size_t v{};
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    fail(kExitDomain, path + ": row " + std::to_string(row + 1) + ", column " +
                          std::to_string(col + 1) + ": not an integer: '" + s + "'");
  }
  return v;
}

// Two-column (hypothesis_id, value) file; ids must be exactly 1..m.
std::vector<double> read_id_value_csv(const std::string& path) {
  auto rows = read_csv(path);
  std::size_t m = rows.size() - 1;
  if (m == 0) {
    fail(kExitDomain, path + ": no data rows");
  }
  std::vector<double> values(m);
  std::vector<bool> seen(m, false);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != 2) {
      fail(kExitDomain, path + ": row " + std::to_string(r + 1) + ": expected 2 columns, got " +
                            std::to_string(rows[r].size()));
    }
    std::size_t id = parse_index(rows[r][0], path, r, 0);
    if (id < 1 || id > m || seen[id - 1]) {
      fail(kExitDomain, path + ": row " + std::to_string(r + 1) + ": hypothesis_id " +
                            rows[r][0] + " is not a unique id in 1.." + std::to_string(m));
    }
    seen[id - 1] = true;
    values[id - 1] = parse_double(rows[r][1], path, r, 1);
  }
  return values;
}

std::vector<double> read_matrix_csv(const std::string& path, std::size_t* m_out) {
  auto rows = read_csv(path);
  std::size_t m = rows.size() - 1;
  if (m == 0) {
    fail(kExitDomain, path + ": no data rows");
  }
  std::vector<double> data;
  data.reserve(m * m);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != m) {
      fail(kExitDomain, path + ": row " + std::to_string(r + 1) + ": expected " +
                            std::to_string(m) + " columns, got " +
                            std::to_string(rows[r].size()));
    }
    for (std::size_t c = 0; c < m; ++c) {
      data.push_back(parse_double(rows[r][c], path, r, c));
    }
  }
  *m_out = m;
  return data;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    fail(kExitDomain, "cannot open " + path + " for writing");
  }
  out << content;
  if (!out) {
    fail(kExitInternal, "write failed for " + path);
  }
}

// ---- manifest ----

struct ManifestBuilder {
  nlohmann::json doc;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  ManifestBuilder(const std::string& command) {
    doc["command"] = command;
    doc["library_version"] = dart2_version();
    doc["inputs"] = nlohmann::json::object();
    doc["config"] = nlohmann::json::object();
    doc["outputs"] = nlohmann::json::array();
  }

  void write(const std::string& path) {
    auto elapsed = std::chrono::steady_clock::now() - start;
    doc["wall_clock_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    write_file(path, doc.dump(2) + "\n");
  }
};

std::vector<double> parse_double_list(const std::string& s, const std::string& flag) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    double v{};
    auto res = std::from_chars(item.data(), item.data() + item.size(), v);
    if (res.ec != std::errc{} || res.ptr != item.data() + item.size()) {
      fail(kExitDomain, flag + ": not a number: '" + item + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) {
    fail(kExitDomain, flag + ": empty list");
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& s, const std::string& flag) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int v{};
    auto res = std::from_chars(item.data(), item.data() + item.size(), v);
    if (res.ec != std::errc{} || res.ptr != item.data() + item.size()) {
      fail(kExitDomain, flag + ": not an integer: '" + item + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) {
    fail(kExitDomain, flag + ": empty list");
  }
  return out;
}

int parse_mode(const std::string& mode) {
  if (mode == "naive") return DART2_MODE_NAIVE;
  if (mode == "robust") return DART2_MODE_ROBUST;
  fail(kExitDomain, "--mode must be 'naive' or 'robust'");
}

int parse_rule(const std::string& rule) {
  if (rule == "constant") return DART2_LAYER_ALPHA_CONSTANT;
  if (rule == "scaled") return DART2_LAYER_ALPHA_SCALED;
  fail(kExitDomain, "--layer-alpha must be 'constant' or 'scaled'");
}

using TreeHandle = std::unique_ptr<dart2_tree, decltype(&dart2_tree_free)>;
using ReportHandle = std::unique_ptr<dart2_report, decltype(&dart2_report_free)>;
using SimHandle = std::unique_ptr<dart2_sim_result, decltype(&dart2_sim_result_free)>;

// ---- subcommands ----

struct TreeArgs {
  std::string distances, ordering, thresholds, output = "tree.json";
  int max_children = 2;
  int layers = 0;
  std::size_t cm = 0;
};

int cmd_tree(const TreeArgs& args) {
  ManifestBuilder manifest("tree");
  if (args.distances.empty() == args.ordering.empty()) {
    fail(kExitDomain, "tree: exactly one of --distances or --ordering is required");
  }
  if ((args.layers == 0) == (args.cm == 0)) {
    fail(kExitDomain, "tree: exactly one of --layers or --cm is required");
  }

  dart2_tree* raw = nullptr;
  std::size_t m = 0;
  if (!args.distances.empty()) {
    manifest.doc["inputs"]["distances"] = args.distances;
    auto data = read_matrix_csv(args.distances, &m);
    int layers = args.layers;
    if (layers == 0) {
      check_api(dart2_max_layers(m, args.max_children, args.cm, &layers), "max_layers");
    }
    std::optional<std::vector<double>> cuts;
    if (!args.thresholds.empty()) {
      cuts = parse_double_list(args.thresholds, "--thresholds");
      if (static_cast<int>(cuts->size()) != layers - 1) {
        fail(kExitDomain, "tree: --thresholds needs " + std::to_string(layers - 1) +
                              " values for " + std::to_string(layers) + " layers");
      }
    }
    check_api(dart2_tree_from_distances(data.data(), m, args.max_children, layers,
                                        cuts ? cuts->data() : nullptr, &raw),
              "build tree");
    manifest.doc["config"]["layers"] = layers;
  } else {
    manifest.doc["inputs"]["ordering"] = args.ordering;
    auto values = read_id_value_csv(args.ordering);
    m = values.size();
    std::vector<std::size_t> ranks(m);
    for (std::size_t i = 0; i < m; ++i) {
      ranks[i] = static_cast<std::size_t>(values[i]);
      if (static_cast<double>(ranks[i]) != values[i]) {
        fail(kExitDomain, args.ordering + ": rank for hypothesis " + std::to_string(i + 1) +
                              " is not an integer");
      }
    }
    int layers = args.layers;
    if (layers == 0) {
      check_api(dart2_max_layers(m, args.max_children, args.cm, &layers), "max_layers");
    }
    check_api(dart2_tree_from_ordering(ranks.data(), m, args.max_children, layers, &raw),
              "build tree");
    manifest.doc["config"]["layers"] = layers;
  }
  TreeHandle tree(raw, dart2_tree_free);

  char* violations = nullptr;
  check_api(dart2_tree_validate(tree.get(), &violations), "validate tree");
  if (violations) {
    std::string text(violations);
    dart2_string_free(violations);
    fail(kExitInternal, "built tree failed validation:\n" + text);
  }

  check_api(dart2_tree_save(tree.get(), args.output.c_str()), "save tree");
  manifest.doc["config"]["max_children"] = args.max_children;
  manifest.doc["outputs"].push_back(args.output);
  manifest.doc["tree"] = {{"m", dart2_tree_num_hypotheses(tree.get())},
                          {"num_layers", dart2_tree_num_layers(tree.get())}};
  manifest.write(args.output + ".manifest.json");
  std::cout << "wrote " << args.output << " (m=" << dart2_tree_num_hypotheses(tree.get())
            << ", L=" << dart2_tree_num_layers(tree.get()) << ")\n";
  return 0;
}

struct TestArgs {
  std::string stats, pvalues, tree, mode = "robust", layer_alpha = "scaled";
  std::string output_dir = ".";
  double alpha = 0.05;
  bool baseline_bh = false;
};

int cmd_test(const TestArgs& args) {
  ManifestBuilder manifest("test");
  if (args.stats.empty() == args.pvalues.empty()) {
    fail(kExitDomain, "test: exactly one of --stats or --pvalues is required");
  }
  if (args.tree.empty()) {
    fail(kExitDomain, "test: --tree is required");
  }

  std::vector<double> stats;
  std::vector<double> pvalues;
  if (!args.stats.empty()) {
    manifest.doc["inputs"]["stats"] = args.stats;
    stats = read_id_value_csv(args.stats);
  } else {
    manifest.doc["inputs"]["pvalues"] = args.pvalues;
    pvalues = read_id_value_csv(args.pvalues);
    stats.resize(pvalues.size());
    check_api(dart2_pvalues_to_stats(pvalues.data(), pvalues.size(), stats.data()),
              "transform p-values");
  }

  dart2_tree* raw_tree = nullptr;
  check_api(dart2_tree_load(args.tree.c_str(), &raw_tree), "load tree");
  TreeHandle tree(raw_tree, dart2_tree_free);
  manifest.doc["inputs"]["tree"] = args.tree;
  if (dart2_tree_num_hypotheses(tree.get()) != stats.size()) {
    fail(kExitDomain, "test: tree covers " +
                          std::to_string(dart2_tree_num_hypotheses(tree.get())) +
                          " hypotheses but input has " + std::to_string(stats.size()));
  }

  dart2_config config{args.alpha, parse_mode(args.mode), parse_rule(args.layer_alpha)};
  dart2_report* raw_report = nullptr;
  check_api(dart2_run(stats.data(), stats.size(), tree.get(), &config, &raw_report), "dart2");
  ReportHandle report(raw_report, dart2_report_free);

  std::filesystem::create_directories(args.output_dir);
  auto path_in_dir = [&](const std::string& name) {
    return (std::filesystem::path(args.output_dir) / name).string();
  };

  {
    std::ostringstream csv;
    csv << "hypothesis_id,rejected_at_layer,node_id,threshold\n";
    for (std::size_t k = 0; k < dart2_report_num_rejected(report.get()); ++k) {
      std::size_t hypothesis, node;
      int layer;
      double threshold;
      check_api(dart2_report_rejected(report.get(), k, &hypothesis, &layer, &node, &threshold),
                "report row");
      csv << hypothesis << ',' << layer << ',' << node << ',' << fmt(threshold) << '\n';
    }
    write_file(path_in_dir("rejections.csv"), csv.str());
    manifest.doc["outputs"].push_back(path_in_dir("rejections.csv"));
  }
  {
    std::ostringstream csv;
    csv << "layer,alpha_layer,threshold,feasible,qualified_nodes,screened_nodes\n";
    for (int i = 0; i < dart2_report_num_layers(report.get()); ++i) {
      int layer, feasible;
      double alpha_layer, threshold;
      std::size_t qualified, screened;
      check_api(dart2_report_layer(report.get(), i, &layer, &alpha_layer, &threshold,
                                   &feasible, &qualified, &screened),
                "layer audit");
      csv << layer << ',' << fmt(alpha_layer) << ',' << fmt(threshold) << ',' << feasible
          << ',' << qualified << ',' << screened << '\n';
    }
    write_file(path_in_dir("layers.csv"), csv.str());
    manifest.doc["outputs"].push_back(path_in_dir("layers.csv"));
  }

  if (args.baseline_bh) {
    if (pvalues.empty()) {
      pvalues.resize(stats.size());
      for (std::size_t i = 0; i < stats.size(); ++i) {
        pvalues[i] = dart2_std_normal_sf(stats[i]);
      }
    }
    std::vector<std::uint8_t> rejected(pvalues.size());
    check_api(dart2_bh(pvalues.data(), pvalues.size(), args.alpha, rejected.data()), "bh");
    std::ostringstream csv;
    csv << "hypothesis_id,rejected_at_layer,node_id,threshold\n";
    for (std::size_t i = 0; i < rejected.size(); ++i) {
      if (rejected[i]) {
        csv << i + 1 << ",0,0," << fmt(args.alpha) << '\n';
      }
    }
    write_file(path_in_dir("bh_rejections.csv"), csv.str());
    manifest.doc["outputs"].push_back(path_in_dir("bh_rejections.csv"));
  }

  manifest.doc["config"] = {{"alpha", args.alpha},
                            {"mode", args.mode},
                            {"layer_alpha", args.layer_alpha},
                            {"baseline_bh", args.baseline_bh}};
  manifest.write(path_in_dir("manifest.json"));
  std::cout << dart2_report_num_rejected(report.get()) << " rejection(s); reports in "
            << args.output_dir << "\n";
  return 0;
}

struct SimulateArgs {
  std::string setting = "se1", taus = "0,0.2,0.4,0.6,0.8,1", alphas = "0.01,0.05";
  std::string coeffs = "main", layers = "7", mode = "robust", layer_alpha = "scaled";
  std::string output_dir = ".";
  std::size_t reps = 200;
  std::size_t n = 300;
  std::uint64_t seed = 1;
  int threads = 1;
  bool no_bh = false;
};

int cmd_simulate(const SimulateArgs& args) {
  ManifestBuilder manifest("simulate");
  auto taus = parse_double_list(args.taus, "--tau");
  auto alphas = parse_double_list(args.alphas, "--alpha");
  auto layers = parse_int_list(args.layers, "--layers");
  for (double tau : taus) {
    if (!(tau >= 0.0 && tau <= 1.0)) {
      fail(kExitDomain, "--tau: value " + fmt(tau) + " outside [0, 1]");
    }
  }
  for (double alpha : alphas) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
      fail(kExitDomain, "--alpha: value " + fmt(alpha) + " outside (0, 1)");
    }
  }

  int setting;
  if (args.setting == "se1") {
    setting = DART2_SETTING_SE1;
  } else if (args.setting == "se2") {
    setting = DART2_SETTING_SE2;
  } else {
    fail(kExitDomain, "--setting must be 'se1' or 'se2'");
  }
  int coeffs;
  if (args.coeffs == "main") {
    coeffs = DART2_COEFFS_MAIN;
  } else if (args.coeffs == "appendix") {
    coeffs = DART2_COEFFS_APPENDIX;
  } else {
    fail(kExitDomain, "--coeffs must be 'main' or 'appendix'");
  }

  dart2_sim_spec spec{};
  spec.setting = setting;
  spec.coeffs = coeffs;
  spec.taus = taus.data();
  spec.num_taus = taus.size();
  spec.alphas = alphas.data();
  spec.num_alphas = alphas.size();
  spec.layer_counts = layers.data();
  spec.num_layer_counts = layers.size();
  spec.reps = args.reps;
  spec.n = args.n;
  spec.seed = args.seed;
  spec.mode = parse_mode(args.mode);
  spec.layer_alpha_rule = parse_rule(args.layer_alpha);
  spec.include_bh = args.no_bh ? 0 : 1;
  spec.threads = args.threads;

  dart2_sim_result* raw = nullptr;
  check_api(dart2_simulate(&spec, &raw), "simulate");
  SimHandle result(raw, dart2_sim_result_free);

  std::filesystem::create_directories(args.output_dir);
  auto path_in_dir = [&](const std::string& name) {
    return (std::filesystem::path(args.output_dir) / name).string();
  };

  struct Key {
    std::string procedure;
    double alpha, tau;
    bool operator<(const Key& o) const {
      return std::tie(procedure, alpha, tau) < std::tie(o.procedure, o.alpha, o.tau);
    }
  };
  std::map<Key, std::pair<std::vector<double>, std::vector<double>>> groups;

  {
    std::ostringstream csv;
    csv << "rep,procedure,alpha,tau,fdp,sensitivity\n";
    for (std::size_t r = 0; r < dart2_sim_num_rows(result.get()); ++r) {
      std::size_t rep;
      const char* procedure;
      double alpha, tau, fdp, sens;
      check_api(dart2_sim_row(result.get(), r, &rep, &procedure, &alpha, &tau, &fdp, &sens),
                "sim row");
      csv << rep << ',' << procedure << ',' << fmt(alpha) << ',' << fmt(tau) << ','
          << fmt(fdp) << ',' << fmt(sens) << '\n';
      auto& bucket = groups[Key{procedure, alpha, tau}];
      bucket.first.push_back(fdp);
      bucket.second.push_back(sens);
    }
    write_file(path_in_dir("results.csv"), csv.str());
    manifest.doc["outputs"].push_back(path_in_dir("results.csv"));
  }
  {
    std::ostringstream csv;
    csv << "procedure,alpha,tau,metric,mean,q05,q95,count\n";
    for (const auto& [key, bucket] : groups) {
      const char* names[2] = {"fdp", "sensitivity"};
      const std::vector<double>* series[2] = {&bucket.first, &bucket.second};
      for (int s = 0; s < 2; ++s) {
        double mean, q05, q95;
        check_api(dart2_summarize(series[s]->data(), series[s]->size(), &mean, &q05, &q95),
                  "summarize");
        csv << key.procedure << ',' << fmt(key.alpha) << ',' << fmt(key.tau) << ','
            << names[s] << ',' << fmt(mean) << ',' << fmt(q05) << ',' << fmt(q95) << ','
            << series[s]->size() << '\n';
      }
    }
    write_file(path_in_dir("summary.csv"), csv.str());
    manifest.doc["outputs"].push_back(path_in_dir("summary.csv"));
  }

  manifest.doc["config"] = {{"setting", args.setting},   {"coeffs", args.coeffs},
                            {"taus", taus},              {"alphas", alphas},
                            {"layers", layers},          {"reps", args.reps},
                            {"n", args.n},               {"mode", args.mode},
                            {"layer_alpha", args.layer_alpha},
                            {"include_bh", !args.no_bh}, {"threads", args.threads}};
  manifest.doc["master_seed"] = args.seed;
  manifest.write(path_in_dir("manifest.json"));
  std::cout << "wrote " << path_in_dir("results.csv") << " ("
            << dart2_sim_num_rows(result.get()) << " rows)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"DART2 two-stage multiple testing with aggregation trees"};
  app.require_subcommand(1);

  TreeArgs tree_args;
  auto* tree_cmd = app.add_subcommand("tree", "Build an aggregation tree");
  tree_cmd->add_option("--distances", tree_args.distances,
                       "CSV with an m x m distance matrix (header row + m rows)");
  tree_cmd->add_option("--ordering", tree_args.ordering,
                       "CSV with columns hypothesis_id,rank");
  tree_cmd->add_option("--max-children", tree_args.max_children, "Maximum children per node");
  tree_cmd->add_option("--layers", tree_args.layers, "Number of layers L");
  tree_cmd->add_option("--cm", tree_args.cm,
                       "Preferred top-layer node count; sets L = floor(log_M(m/c_m))");
  tree_cmd->add_option("--thresholds", tree_args.thresholds,
                       "Comma-separated merge cutoffs g2,g3,...");
  tree_cmd->add_option("--output", tree_args.output, "Tree file to write");

  TestArgs test_args;
  auto* test_cmd = app.add_subcommand("test", "Run the two-stage procedure");
  test_cmd->add_option("--stats", test_args.stats, "CSV with columns hypothesis_id,value (z)");
  test_cmd->add_option("--pvalues", test_args.pvalues,
                       "CSV with columns hypothesis_id,value (p-values)");
  test_cmd->add_option("--tree", test_args.tree, "Tree file from the tree subcommand");
  test_cmd->add_option("--alpha", test_args.alpha, "Target FDR level in (0,1)");
  test_cmd->add_option("--mode", test_args.mode, "Refining mode: naive|robust");
  test_cmd->add_option("--layer-alpha", test_args.layer_alpha,
                       "Layer control rule: constant|scaled");
  test_cmd->add_flag("--baseline-bh", test_args.baseline_bh,
                     "Also run the Benjamini-Hochberg baseline");
  test_cmd->add_option("--output-dir", test_args.output_dir, "Directory for report files");

  SimulateArgs sim_args;
  auto* sim_cmd = app.add_subcommand("simulate", "Run the synthetic replication study");
  sim_cmd->add_option("--setting", sim_args.setting, "Statistic generator: se1|se2");
  sim_cmd->add_option("--tau", sim_args.taus, "Comma-separated misleading levels in [0,1]");
  sim_cmd->add_option("--alpha", sim_args.alphas, "Comma-separated FDR levels");
  sim_cmd->add_option("--reps", sim_args.reps, "Number of repetitions");
  sim_cmd->add_option("--n", sim_args.n, "Per-hypothesis sample size");
  sim_cmd->add_option("--seed", sim_args.seed, "Master seed");
  sim_cmd->add_option("--coeffs", sim_args.coeffs, "Signal-field coefficients: main|appendix");
  sim_cmd->add_option("--layers", sim_args.layers,
                      "Comma-separated layer counts, one DART2 arm each");
  sim_cmd->add_option("--mode", sim_args.mode, "Refining mode: naive|robust");
  sim_cmd->add_option("--layer-alpha", sim_args.layer_alpha,
                      "Layer control rule: constant|scaled");
  sim_cmd->add_option("--threads", sim_args.threads, "Worker thread cap");
  sim_cmd->add_flag("--no-bh", sim_args.no_bh, "Skip the BH comparison arm");
  sim_cmd->add_option("--output-dir", sim_args.output_dir, "Directory for result files");

  try {
    app.parse(argc, argv);
    if (tree_cmd->parsed()) {
      return cmd_tree(tree_args);
    }
    if (test_cmd->parsed()) {
      return cmd_test(test_args);
    }
    return cmd_simulate(sim_args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitDomain;
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
