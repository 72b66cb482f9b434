/* C interface to the aloha interference/throughput library.
 *
 * All entry points return an aloha_status; results come back through out
 * parameters. On any non-OK status, aloha_last_error() returns a
 * human-readable message for the calling thread. Scenario handles are opaque
 * and immutable after creation; every function here is safe to call
 * concurrently from multiple threads on the same handle.
 */
#ifndef ALOHA_H
#define ALOHA_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct aloha_scenario_s aloha_scenario;

typedef enum aloha_status {
    ALOHA_OK = 0,
    ALOHA_ERR_INVALID_ARG = 1,
    ALOHA_ERR_PARSE = 2,          /* malformed scenario file/JSON */
    ALOHA_ERR_DOMAIN = 3,         /* argument outside mathematical domain */
    ALOHA_ERR_TAIL_CONDITION = 4, /* shape tail too heavy for the quantity */
    ALOHA_ERR_NO_CONVERGENCE = 5, /* quadrature budget exhausted */
    ALOHA_ERR_INFEASIBLE = 6,     /* noise-limited regime (DTC) */
    ALOHA_ERR_FLAT_OBJECTIVE = 7, /* beta optimization: objective flat */
    ALOHA_ERR_INTERNAL = 8
} aloha_status;

typedef struct aloha_estimate {
    double mean;
    double std_error;
    double ci95_low;
    double ci95_high;
    long long trials;
    uint64_t master_seed;
} aloha_estimate;

const char* aloha_version(void);

/* Message for the most recent failure on the calling thread. */
const char* aloha_last_error(void);

/* ---- scenario lifecycle ------------------------------------------------ */

/* Scenario files are JSON:
 *   { "shape":   { "kind": "exp_power", "params": { "a": 100, "b": 3 } },
 *     "lambda":  0.001,
 *     "channel": { "alpha": 2, "c": 1, "d": 10, "eta": 0.1, "beta": 0.5 } }
 * kinds: exp_power{a,b}, exponential{a}, disk{R}, constant, power_law{nu},
 * hotspot{r0,r1}, tabulated{r[],F[],tail_nu,tail_onset,tail_limit}.
 * eta/beta accept dB strings ("-8dB"). */
aloha_status aloha_scenario_load(const char* path, aloha_scenario** out);
aloha_status aloha_scenario_parse(const char* json_text, aloha_scenario** out);
void aloha_scenario_free(aloha_scenario* s);

/* Stable hex digest of the scenario parameters (output provenance). */
aloha_status aloha_scenario_digest(const aloha_scenario* s, char* buf,
                                   size_t buflen);

/* Model-restriction report, one violation per line. n_errors/n_warnings may
 * be NULL. Returns ALOHA_OK even when violations exist; they are data. */
aloha_status aloha_scenario_check(const aloha_scenario* s, char* buf,
                                  size_t buflen, int* n_errors,
                                  int* n_warnings);

/* ---- closed forms ------------------------------------------------------ */

aloha_status aloha_shape_eval(const aloha_scenario* s, double r, double* out);
aloha_status aloha_path_loss(const aloha_scenario* s, double dist, double* out);
aloha_status aloha_mean_interference(const aloha_scenario* s, double y0,
                                     double* out);
aloha_status aloha_laplace_interference(const aloha_scenario* s, double y0,
                                        double s_arg, double* out);
aloha_status aloha_outage(const aloha_scenario* s, double y0, double* out);
aloha_status aloha_approx_outage(const aloha_scenario* s, double y0,
                                 double* out);
aloha_status aloha_gamma_ratio(const aloha_scenario* s, double y0, double* out);

/* ---- local throughput -------------------------------------------------- */

aloha_status aloha_dtc(const aloha_scenario* s, double y0, double epsilon,
                       double* out);
/* beta_override: NULL uses the scenario threshold. */
aloha_status aloha_ast(const aloha_scenario* s, const double* beta_override,
                       double* out);
aloha_status aloha_sum_rate(const aloha_scenario* s, double lambda_r,
                            double beta, double* out);
aloha_status aloha_optimize_beta(const aloha_scenario* s, double lambda_r,
                                 double lo_db, double hi_db,
                                 double* beta_star_db, double* rate_star,
                                 int* at_boundary);

/* ---- Monte Carlo ------------------------------------------------------- */

/* dump_csv_path: when non-NULL, writes one row per trial
 * (trial_index, interference, sinr, outage_flag). */
aloha_status aloha_sim_mean_interference(const aloha_scenario* s, double y0,
                                         long long trials, uint64_t seed,
                                         const char* dump_csv_path,
                                         aloha_estimate* out);
aloha_status aloha_sim_outage(const aloha_scenario* s, double y0,
                              long long trials, uint64_t seed,
                              const char* dump_csv_path, aloha_estimate* out);
aloha_status aloha_sim_laplace(const aloha_scenario* s, double y0, double s_arg,
                               long long trials, uint64_t seed,
                               const char* dump_csv_path, aloha_estimate* out);
/* lambda_r: NULL runs the fixed-distance SINR-only success model. */
aloha_status aloha_sim_ast(const aloha_scenario* s, long long trials,
                           uint64_t seed, const double* lambda_r,
                           aloha_estimate* out);

/* ---- self-validation --------------------------------------------------- */

/* Runs the analytic-vs-brute-force suite (plus the Monte Carlo tier when
 * full != 0) and writes a PASS/FAIL line per check. *n_failed receives the
 * number of failing checks. */
aloha_status aloha_run_checks(const aloha_scenario* s, int full,
                              long long trials, uint64_t seed, char* report_buf,
                              size_t buflen, int* n_failed);

#ifdef __cplusplus
}
#endif

#endif /* ALOHA_H */
