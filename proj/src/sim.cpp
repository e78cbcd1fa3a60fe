#include "sim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

#include "bh.hpp"
#include "error.hpp"
#include "metrics.hpp"
#include "normal.hpp"
#include "refine.hpp"
#include "rng.hpp"

namespace dart2 {

namespace {

double normal_pdf_var(double d, double variance) {
  return std::exp(-d * d / (2.0 * variance)) / std::sqrt(2.0 * M_PI * variance);
}

double dist(const Point2& a, const Point2& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

}  // namespace

std::vector<std::size_t> SignalField::alternatives() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < eta.size(); ++i) {
    if (eta[i] > 0.0) {
      out.push_back(i);
    }
  }
  return out;
}

std::vector<std::size_t> SignalField::nulls() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < eta.size(); ++i) {
    if (eta[i] == 0.0) {
      out.push_back(i);
    }
  }
  return out;
}

SignalField eta_field(std::vector<Point2> locations, const EtaCoeffs& coeffs,
                      std::size_t center1, std::size_t center2) {
  std::size_t m = locations.size();
  if (center1 >= m || center2 >= m) {
    throw DomainError("eta_field: center index out of range");
  }
  SignalField field;
  field.eta.resize(m);
  const Point2 c1 = locations[center1];
  const Point2 c2 = locations[center2];
  for (std::size_t i = 0; i < m; ++i) {
    double d1 = dist(locations[i], c1);
    double d2 = dist(locations[i], c2);
    double cluster1 = std::max(coeffs.a1 * normal_pdf_var(d1, 1.0) - coeffs.b1, 0.0);
    field.eta[i] = std::max(cluster1 + coeffs.a2 * normal_pdf_var(d2, 0.1) - coeffs.b2, 0.0);
  }
  field.locations = std::move(locations);
  return field;
}

SignalField apply_misleading(const SignalField& field, double tau, std::uint64_t seed) {
  if (!(tau >= 0.0 && tau <= 1.0)) {
    throw DomainError("apply_misleading: tau outside [0, 1]");
  }
  SignalField out = field;
  std::vector<std::size_t> alts = field.alternatives();
  std::vector<std::size_t> nulls = field.nulls();
  std::size_t swaps = static_cast<std::size_t>(
      std::ceil(tau * static_cast<double>(alts.size())));
  if (swaps == 0) {
    return out;
  }
  if (swaps > nulls.size()) {
    throw DomainError("apply_misleading: not enough nulls to swap with");
  }
  Rng rng(seed);
  // Partial Fisher-Yates on both sides, then swap the chosen pairs.
  for (std::size_t k = 0; k < swaps; ++k) {
    std::swap(alts[k], alts[k + rng.uniform_index(alts.size() - k)]);
    std::swap(nulls[k], nulls[k + rng.uniform_index(nulls.size() - k)]);
    std::swap(out.eta[alts[k]], out.eta[nulls[k]]);
  }
  return out;
}

StatisticVector gen_se1(const SignalField& field, std::size_t n, std::uint64_t seed) {
  if (n < 1) {
    throw DomainError("gen_se1: n must be >= 1");
  }
  Rng rng(seed);
  double scale = std::sqrt(static_cast<double>(n)) / 5.0;
  std::vector<double> stats(field.size());
  for (std::size_t i = 0; i < field.size(); ++i) {
    stats[i] = scale * field.eta[i] + rng.normal();
  }
  return StatisticVector(std::move(stats));
}

std::vector<double> ols_fit(const std::vector<std::vector<double>>& design,
                            const std::vector<double>& response) {
  std::size_t p = design.size();
  if (p == 0) {
    throw DomainError("ols_fit: empty design");
  }
  std::size_t n = response.size();
  for (const auto& col : design) {
    if (col.size() != n) {
      throw DomainError("ols_fit: column length mismatch");
    }
  }
  // Modified Gram-Schmidt QR.
  std::vector<std::vector<double>> q(design);
  std::vector<std::vector<double>> r(p, std::vector<double>(p, 0.0));
  for (std::size_t j = 0; j < p; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      double proj = std::inner_product(q[k].begin(), q[k].end(), q[j].begin(), 0.0);
      r[k][j] = proj;
      for (std::size_t t = 0; t < n; ++t) {
        q[j][t] -= proj * q[k][t];
      }
    }
    double norm = std::sqrt(std::inner_product(q[j].begin(), q[j].end(), q[j].begin(), 0.0));
    if (norm < 1e-12) {
      throw DomainError("ols_fit: rank-deficient design");
    }
    r[j][j] = norm;
    for (std::size_t t = 0; t < n; ++t) {
      q[j][t] /= norm;
    }
  }
  // beta = R^{-1} Q^T y by back substitution.
  std::vector<double> qty(p);
  for (std::size_t j = 0; j < p; ++j) {
    qty[j] = std::inner_product(q[j].begin(), q[j].end(), response.begin(), 0.0);
  }
  std::vector<double> beta(p);
  for (std::size_t j = p; j-- > 0;) {
    double acc = qty[j];
    for (std::size_t k = j + 1; k < p; ++k) {
      acc -= r[j][k] * beta[k];
    }
    beta[j] = acc / r[j][j];
  }
  return beta;
}

namespace {

// Wald statistic for the W1 coefficient of Y ~ 1 + W1 + W2.
double wald_w1(const std::vector<double>& w1, const std::vector<double>& w2,
               const std::vector<double>& y) {
  std::size_t n = y.size();
  std::vector<std::vector<double>> design{std::vector<double>(n, 1.0), w1, w2};
  std::vector<double> beta = ols_fit(design, y);
  double rss = 0.0;
  for (std::size_t t = 0; t < n; ++t) {
    double fit = beta[0] + beta[1] * w1[t] + beta[2] * w2[t];
    rss += (y[t] - fit) * (y[t] - fit);
  }
  double sigma2 = rss / static_cast<double>(n - 3);
  // Var(beta) = sigma2 * (X'X)^{-1}; solve (X'X) v = e_1 for the W1 slot.
  double xtx[3][3] = {};
  for (std::size_t t = 0; t < n; ++t) {
    double row[3] = {1.0, w1[t], w2[t]};
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        xtx[a][b] += row[a] * row[b];
      }
    }
  }
  // 3x3 inverse entry (1,1) via cofactors.
  double det = xtx[0][0] * (xtx[1][1] * xtx[2][2] - xtx[1][2] * xtx[2][1]) -
               xtx[0][1] * (xtx[1][0] * xtx[2][2] - xtx[1][2] * xtx[2][0]) +
               xtx[0][2] * (xtx[1][0] * xtx[2][1] - xtx[1][1] * xtx[2][0]);
  double cof11 = xtx[0][0] * xtx[2][2] - xtx[0][2] * xtx[2][0];
  double var1 = sigma2 * cof11 / det;
  return beta[1] / std::sqrt(var1);
}

}  // namespace

StatisticVector gen_se2(const SignalField& field, std::size_t n, std::uint64_t seed) {
  if (n < 4) {
    throw DomainError("gen_se2: need n >= 4 for three coefficients");
  }
  Rng rng(seed);
  std::vector<double> stats(field.size());
  std::vector<double> w1(n), w2(n), y(n);
  for (std::size_t i = 0; i < field.size(); ++i) {
    double theta1 = field.eta[i] / 3.0;
    for (int attempt = 0;; ++attempt) {
      for (std::size_t t = 0; t < n; ++t) {
        w1[t] = rng.bernoulli(0.5) ? 1.0 : 0.0;
        w2[t] = rng.uniform(0.1, 0.5);
        y[t] = 0.1 + theta1 * w1[t] + 0.1 * w2[t] + rng.normal();
      }
      bool degenerate = std::all_of(w1.begin(), w1.end(), [&](double v) { return v == w1[0]; });
      if (!degenerate) {
        break;
      }
      if (attempt >= 1) {
        throw DomainError("gen_se2: degenerate W1 draw twice in a row");
      }
    }
    stats[i] = wald_w1(w1, w2, y);
  }
  return StatisticVector(std::move(stats));
}

std::vector<SimRow> run_replications(const SimScenario& scenario,
                                     const AggregationTree& tree,
                                     const std::vector<ProcedureSpec>& procedures,
                                     int threads) {
  if (scenario.reps == 0 || scenario.taus.empty() || scenario.alphas.empty() ||
      procedures.empty()) {
    throw DomainError("run_replications: empty replication grid");
  }
  for (double tau : scenario.taus) {
    if (!(tau >= 0.0 && tau <= 1.0)) {
      throw DomainError("run_replications: tau outside [0, 1]");
    }
  }
  for (double alpha : scenario.alphas) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
      throw DomainError("run_replications: alpha outside (0, 1)");
    }
  }
  if (tree.m != scenario.field.size()) {
    throw DomainError("run_replications: tree and field dimension mismatch");
  }

  // Per-procedure tree prefixes, shared across repetitions.
  std::vector<const AggregationTree*> proc_trees(procedures.size(), nullptr);
  std::vector<AggregationTree> prefixes;
  prefixes.reserve(procedures.size());
  for (std::size_t p = 0; p < procedures.size(); ++p) {
    if (!procedures[p].is_bh) {
      prefixes.push_back(tree.prefix(procedures[p].num_layers));
      proc_trees[p] = &prefixes.back();
    }
  }

  const std::size_t num_taus = scenario.taus.size();
  const std::size_t rows_per_rep = num_taus * scenario.alphas.size() * procedures.size();
  std::vector<SimRow> rows(scenario.reps * rows_per_rep);

  auto run_rep = [&](std::size_t rep) {
    std::size_t base = rep * rows_per_rep;
    for (std::size_t ti = 0; ti < num_taus; ++ti) {
      double tau = scenario.taus[ti];
      std::uint64_t item = rep * num_taus + ti;
      SignalField truth =
          apply_misleading(scenario.field, tau, derive_seed(scenario.seed, 1, item));
      StatisticVector stats =
          scenario.setting == Setting::se1
              ? gen_se1(truth, scenario.n, derive_seed(scenario.seed, 2, item))
              : gen_se2(truth, scenario.n, derive_seed(scenario.seed, 2, item));
      std::vector<std::size_t> omega0 = truth.nulls();
      std::vector<std::size_t> omega1 = truth.alternatives();

      std::vector<double> pvals;
      if (std::any_of(procedures.begin(), procedures.end(),
                      [](const ProcedureSpec& p) { return p.is_bh; })) {
        pvals.resize(stats.size());
        for (std::size_t i = 0; i < stats.size(); ++i) {
          pvals[i] = std_normal_sf(stats[i]);
        }
      }

      for (std::size_t ai = 0; ai < scenario.alphas.size(); ++ai) {
        double alpha = scenario.alphas[ai];
        for (std::size_t pi = 0; pi < procedures.size(); ++pi) {
          const ProcedureSpec& proc = procedures[pi];
          std::vector<std::size_t> rejected;
          if (proc.is_bh) {
            rejected = bh_procedure(PValueVector(pvals), alpha);
          } else {
            Dart2Config cfg{alpha, proc.mode, proc.layer_alpha_rule};
            rejected = dart2(stats, *proc_trees[pi], cfg).rejected;
          }
          SimRow& row = rows[base + (ti * scenario.alphas.size() + ai) * procedures.size() + pi];
          row.rep = rep + 1;
          row.procedure = proc.name;
          row.alpha = alpha;
          row.tau = tau;
          row.fdp = fdp(rejected, omega0);
          row.sensitivity = sensitivity(rejected, omega1);
        }
      }
    }
  };

  int workers = std::max(1, threads);
  if (workers == 1) {
    for (std::size_t rep = 0; rep < scenario.reps; ++rep) {
      run_rep(rep);
    }
  } else {
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t rep = next.fetch_add(1); rep < scenario.reps;
             rep = next.fetch_add(1)) {
          run_rep(rep);
        }
      });
    }
    for (auto& t : pool) {
      t.join();
    }
  }
  return rows;
}

}  // namespace dart2
