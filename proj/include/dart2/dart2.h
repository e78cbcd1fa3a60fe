/* Public C interface to the DART2 multiple-testing library.
 *
 * All functions returning int yield DART2_OK on success, DART2_ERR_DOMAIN
 * for invalid caller input and DART2_ERR_INTERNAL for broken internal
 * invariants. After a failure, dart2_last_error() returns a thread-local
 * message describing it. Objects returned through handle out-parameters
 * must be released with the matching *_free function.
 */
#ifndef DART2_DART2_H
#define DART2_DART2_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define DART2_OK 0
#define DART2_ERR_DOMAIN 2
#define DART2_ERR_INTERNAL 3

#define DART2_MODE_NAIVE 0
#define DART2_MODE_ROBUST 1

#define DART2_LAYER_ALPHA_CONSTANT 0
#define DART2_LAYER_ALPHA_SCALED 1

#define DART2_SETTING_SE1 1
#define DART2_SETTING_SE2 2

#define DART2_COEFFS_MAIN 0
#define DART2_COEFFS_APPENDIX 1

typedef struct dart2_tree dart2_tree;
typedef struct dart2_report dart2_report;
typedef struct dart2_sim_result dart2_sim_result;

const char *dart2_version(void);
const char *dart2_last_error(void);
void dart2_string_free(char *s);

/* ---- standard-normal utilities ---- */

/* Upper-tail probability of the standard normal. */
double dart2_std_normal_sf(double z);

/* Inverse survival function; q must lie in (0,1). */
int dart2_std_normal_sf_inv(double q, double *out);

/* z[i] = sf_inv(p[i]); every p[i] must lie strictly inside (0,1). */
int dart2_pvalues_to_stats(const double *pvalues, size_t m, double *stats_out);

/* ---- aggregation tree ---- */

/* L = max(1, floor(log_M(m / c_m))). */
int dart2_max_layers(size_t m, int max_children, size_t cm, int *out);

/* distances: row-major m*m symmetric matrix. thresholds: merge cutoffs
 * g^(2)..g^(L) (num_layers-1 values) or NULL for data-driven defaults. */
int dart2_tree_from_distances(const double *distances, size_t m, int max_children,
                              int num_layers, const double *thresholds,
                              dart2_tree **out);

/* ranks[i] in 1..m, a permutation; layer l groups consecutive rank blocks. */
int dart2_tree_from_ordering(const size_t *ranks, size_t m, int max_children,
                             int num_layers, dart2_tree **out);

int dart2_tree_load(const char *path, dart2_tree **out);
int dart2_tree_save(const dart2_tree *tree, const char *path);

/* On success *violations_out is NULL for a valid tree, else a newline-
 * separated list to release with dart2_string_free. */
int dart2_tree_validate(const dart2_tree *tree, char **violations_out);

size_t dart2_tree_num_hypotheses(const dart2_tree *tree);
int dart2_tree_num_layers(const dart2_tree *tree);
void dart2_tree_free(dart2_tree *tree);

/* ---- the two-stage procedure ---- */

typedef struct {
  double alpha;         /* target FDR level, in (0,1) */
  int mode;             /* DART2_MODE_* */
  int layer_alpha_rule; /* DART2_LAYER_ALPHA_* */
} dart2_config;

/* Runs screening + refining of `stats` (length m, z scale) on `tree`. */
int dart2_run(const double *stats, size_t m, const dart2_tree *tree,
              const dart2_config *config, dart2_report **out);

size_t dart2_report_num_rejected(const dart2_report *report);

/* k-th rejection (sorted by hypothesis). hypothesis_out is 1-based;
 * layer/node identify the screened node it came from; threshold_out is the
 * refining threshold that admitted it. */
int dart2_report_rejected(const dart2_report *report, size_t k, size_t *hypothesis_out,
                          int *layer_out, size_t *node_out, double *threshold_out);

int dart2_report_num_layers(const dart2_report *report);

/* Audit record for one screening layer (layer_index is 0-based). */
int dart2_report_layer(const dart2_report *report, int layer_index, int *layer_out,
                       double *alpha_layer_out, double *threshold_out, int *feasible_out,
                       size_t *qualified_out, size_t *screened_out);

void dart2_report_free(dart2_report *report);

/* Benjamini-Hochberg step-up; rejected_out must hold m bytes (1 = rejected). */
int dart2_bh(const double *pvalues, size_t m, double alpha, uint8_t *rejected_out);

/* ---- metrics ---- */

int dart2_summarize(const double *values, size_t n, double *mean_out, double *q05_out,
                    double *q95_out);

/* ---- simulation harness ---- */

typedef struct {
  int setting;              /* DART2_SETTING_* */
  int coeffs;               /* DART2_COEFFS_* */
  const double *taus;       /* misleading levels in [0,1] */
  size_t num_taus;
  const double *alphas;     /* FDR levels in (0,1) */
  size_t num_alphas;
  const int *layer_counts;  /* one DART2 arm per entry */
  size_t num_layer_counts;
  size_t reps;
  size_t n;                 /* per-hypothesis sample size, 0 = default 300 */
  uint64_t seed;
  int mode;                 /* DART2_MODE_* for the DART2 arms */
  int layer_alpha_rule;
  int include_bh;           /* nonzero adds a BH arm */
  int threads;              /* worker cap, <=1 = sequential */
} dart2_sim_spec;

/* Runs the replication study on the frozen built-in location fixture. */
int dart2_simulate(const dart2_sim_spec *spec, dart2_sim_result **out);

size_t dart2_sim_num_rows(const dart2_sim_result *result);

/* procedure_out points at storage owned by the result handle. */
int dart2_sim_row(const dart2_sim_result *result, size_t row, size_t *rep_out,
                  const char **procedure_out, double *alpha_out, double *tau_out,
                  double *fdp_out, double *sensitivity_out);

void dart2_sim_result_free(dart2_sim_result *result);

#ifdef __cplusplus
}
#endif

#endif /* DART2_DART2_H */
