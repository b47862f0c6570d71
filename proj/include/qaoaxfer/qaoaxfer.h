#ifndef QAOAXFER_H
#define QAOAXFER_H

/* C interface to the QAOA parameter-transferability toolkit.
 *
 * All objects are opaque handles created and destroyed by the library.
 * Functions return QX_OK on success; on failure they return a status code
 * and leave a message retrievable with qx_last_error() (thread-local).
 * Strings written to char** out-parameters are owned by the caller and must
 * be released with qx_string_free().
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Parameter-class failures map to 2 and capacity failures to 3, mirroring
 * the CLI exit-code taxonomy. */
typedef enum qx_status {
    QX_OK = 0,
    QX_ERR_INTERNAL = 1,
    QX_ERR_PARAM = 2,
    QX_ERR_CAPACITY = 3,
    QX_ERR_PARSE = 4,
    QX_ERR_NUMERIC = 5
} qx_status;

/* Expectation backends. */
typedef enum qx_backend {
    QX_BACKEND_FAST = 0,        /* p=1 closed form per lightcone class */
    QX_BACKEND_STATEVECTOR = 1, /* dense statevector per lightcone */
    QX_BACKEND_TENSORNET = 2    /* tensor-network contraction per lightcone */
} qx_backend;

typedef struct qx_graph qx_graph;
typedef struct qx_transfer_map qx_transfer_map;

typedef struct qx_optimizer_config {
    int32_t steps;
    int32_t restarts;
    double learning_rate;
    double rms_decay;
    double rms_epsilon;
    double grad_step;
    uint64_t seed;
    int32_t jobs; /* <= 0: use hardware parallelism */
} qx_optimizer_config;

const char* qx_version(void);
const char* qx_last_error(void);
void qx_string_free(char* s);

/* Fills cfg with the library defaults (200 steps, 20 restarts, lr 0.05,
 * decay 0.9, eps 1e-8, grad step 1e-6, seed 0, jobs 0). */
void qx_optimizer_config_init(qx_optimizer_config* cfg);

/* ---- graphs ---- */

qx_status qx_graph_random_regular(int32_t n, int32_t d, uint64_t seed,
                                  qx_graph** out);
qx_status qx_graph_random_bounded(int32_t n, int32_t m, int32_t d_max,
                                  uint64_t seed, qx_graph** out);
qx_status qx_graph_random_degrees(const int32_t* degrees, int32_t n,
                                  uint64_t seed, qx_graph** out);
qx_status qx_graph_parse(const char* edge_list_text, qx_graph** out);
qx_status qx_graph_format(const qx_graph* g, char** out_text);
void qx_graph_free(qx_graph* g);
int32_t qx_graph_nodes(const qx_graph* g);
int32_t qx_graph_edges(const qx_graph* g);

/* ---- lightcone classes ---- */

/* JSON object {"histogram": {"d1-d2-t": count, ...}, "total": m}. */
qx_status qx_histogram_json(const qx_graph* g, char** out_json);

/* JSON array of class tokens; regular_only != 0 restricts to (d, d, t). */
qx_status qx_enumerate_classes_json(int32_t d_max, int32_t regular_only,
                                    char** out_json);

/* ---- qaoa ---- */

qx_status qx_energy(const qx_graph* g, const double* gammas, const double* betas,
                    int32_t p, qx_backend backend, double* out_energy);

/* CSV grid of central-edge contributions for one class; grids cover
 * [lo, hi) with `steps` points each. */
qx_status qx_landscape_csv(const char* class_token, double gamma_lo,
                           double gamma_hi, int32_t gamma_steps, double beta_lo,
                           double beta_hi, int32_t beta_steps, char** out_csv);

/* ---- optimize ---- */

qx_status qx_optimize_class_json(const char* class_token,
                                 const qx_optimizer_config* cfg, char** out_json);
qx_status qx_optimize_graph_json(const qx_graph* g, const qx_optimizer_config* cfg,
                                 qx_backend backend, char** out_json);

/* ---- maxcut ---- */

qx_status qx_maxcut_brute_force(const qx_graph* g, int32_t* out_value,
                                char** out_assignment);
/* budget_seconds < 0 disables the time limit. out_assignment is a 0/1
 * string, one character per node. */
qx_status qx_maxcut_branch_and_bound(const qx_graph* g, double budget_seconds,
                                     int32_t* out_value, int32_t* out_optimal,
                                     int32_t* out_upper_bound,
                                     char** out_assignment);

/* ---- tensornet ---- */

qx_status qx_width_profile_csv(const qx_graph* g, int32_t p, uint64_t seed,
                               int32_t jobs, char** out_csv, int32_t* out_max,
                               double* out_mean, double* out_stddev);

/* ---- transfer ---- */

qx_status qx_map_build(int32_t d_max, int32_t regular_only,
                       const qx_optimizer_config* cfg, qx_transfer_map** out);
qx_status qx_map_parse(const char* json_text, qx_transfer_map** out);
qx_status qx_map_to_json(const qx_transfer_map* map, char** out_json);
qx_status qx_map_to_csv(const qx_transfer_map* map, char** out_csv);
qx_status qx_map_parity_json(const qx_transfer_map* map, char** out_json);
int32_t qx_map_size(const qx_transfer_map* map);
void qx_map_free(qx_transfer_map* map);

/* out_witness_json receives the failing pair when the check fails, else
 * null. */
qx_status qx_check_sufficient(const qx_graph* donor, const qx_graph* acceptor,
                              const qx_transfer_map* map, double threshold,
                              int32_t* out_ok, char** out_witness_json);

qx_status qx_transfer_experiment_json(const qx_graph* donor,
                                      const qx_graph* acceptor,
                                      const qx_optimizer_config* cfg,
                                      double maxcut_budget_seconds,
                                      const char* donor_id,
                                      const char* acceptor_id, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* QAOAXFER_H */
