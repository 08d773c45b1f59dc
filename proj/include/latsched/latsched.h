/*
 * latsched C API.
 *
 * Message-free STDMA slot assignment for hexagonal and square-grid lattices, with
 * verification oracles, SINR feasibility analysis and perturbed-deployment evaluation.
 *
 * Conventions:
 *  - Every fallible call returns latsched_status. On failure, latsched_last_error()
 *    returns a message for the calling thread that stays valid until its next call.
 *  - Objects are opaque handles created by *_create/_build/_generate/... and released by
 *    the matching *_destroy. Destroy functions accept NULL.
 *  - Output paths of "-" write to standard output.
 */
#ifndef LATSCHED_H
#define LATSCHED_H

#include <stddef.h>
#include <stdint.h>

#if defined(LATSCHED_BUILDING_LIBRARY)
#define LATSCHED_API __attribute__((visibility("default")))
#else
#define LATSCHED_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum latsched_status {
    LATSCHED_OK = 0,
    LATSCHED_ERR_INVALID_ARGUMENT = 1,
    LATSCHED_ERR_DOMAIN = 2,
    LATSCHED_ERR_INFEASIBLE = 3,
    LATSCHED_ERR_BUDGET = 4,
    LATSCHED_ERR_IO = 5,
    LATSCHED_ERR_PARSE = 6,
    LATSCHED_ERR_ORACLE = 7,
    LATSCHED_ERR_INTERNAL = 99
} latsched_status;

typedef enum latsched_kind { LATSCHED_HEX = 0, LATSCHED_SQUARE = 1 } latsched_kind;

/* Axis-aligned box [x0..x1] x [y0..y1]; node_limit < 0 keeps the whole box, otherwise only
 * the first node_limit nodes in row-major order (y outer, x inner). */
typedef struct latsched_extent {
    int32_t x0, y0, x1, y1;
    int64_t node_limit;
} latsched_extent;

typedef struct latsched_schedule latsched_schedule;
typedef struct latsched_verify_report latsched_verify_report;
typedef struct latsched_clique_report latsched_clique_report;
typedef struct latsched_deployment latsched_deployment;
typedef struct latsched_rho_report latsched_rho_report;
typedef struct latsched_simulation latsched_simulation;

LATSCHED_API const char* latsched_version(void);
LATSCHED_API const char* latsched_last_error(void);
LATSCHED_API const char* latsched_status_name(latsched_status status);
LATSCHED_API latsched_status latsched_parse_kind(const char* text, latsched_kind* out);
LATSCHED_API const char* latsched_kind_name(latsched_kind kind);

/* ---- extents ------------------------------------------------------------ */

LATSCHED_API latsched_extent latsched_extent_from_dims(int32_t width, int32_t height);
/* Near-square box holding exactly n nodes. */
LATSCHED_API latsched_extent latsched_extent_with_nodes(uint64_t n);
LATSCHED_API latsched_status latsched_extent_size(const latsched_extent* extent, uint64_t* out);

/* ---- lattice geometry --------------------------------------------------- */

LATSCHED_API latsched_status latsched_graph_distance(latsched_kind kind, int32_t x1, int32_t y1, int32_t x2,
                                                     int32_t y2, int32_t* out);
LATSCHED_API latsched_status latsched_bfs_distance(latsched_kind kind, int32_t x1, int32_t y1, int32_t x2,
                                                   int32_t y2, int32_t search_radius, int32_t* out);

/* ---- scheduling --------------------------------------------------------- */

LATSCHED_API latsched_status latsched_slot(latsched_kind kind, int32_t k, int32_t x, int32_t y, int32_t* out);
LATSCHED_API latsched_status latsched_frame_length(latsched_kind kind, int32_t k, int32_t* out);

LATSCHED_API latsched_status latsched_schedule_build(latsched_kind kind, int32_t k, const latsched_extent* extent,
                                                     latsched_schedule** out);
/* has_extent receives 1 when the file carried extent metadata (then *extent is filled). */
LATSCHED_API latsched_status latsched_schedule_read_csv(const char* path, latsched_schedule** out,
                                                        latsched_extent* extent, int* has_extent);
LATSCHED_API latsched_status latsched_schedule_write_csv(const latsched_schedule* schedule,
                                                         const latsched_extent* extent, const char* path);
LATSCHED_API latsched_status latsched_schedule_info(const latsched_schedule* schedule, latsched_kind* kind,
                                                    int32_t* k, int32_t* frame_length);
LATSCHED_API size_t latsched_schedule_size(const latsched_schedule* schedule);
LATSCHED_API latsched_status latsched_schedule_entry(const latsched_schedule* schedule, size_t index, int32_t* x,
                                                     int32_t* y, int32_t* slot);
LATSCHED_API void latsched_schedule_destroy(latsched_schedule* schedule);

typedef struct latsched_violation {
    int32_t slot; /* -1 for coverage violations */
    int32_t ax, ay;
    int32_t has_b;
    int32_t bx, by;
    const char* reason; /* "k-hop", "primary", "coverage", "duplicate", "slot-range"; static storage */
} latsched_violation;

LATSCHED_API latsched_status latsched_verify(const latsched_schedule* schedule, const latsched_extent* extent,
                                             latsched_verify_report** out);
LATSCHED_API size_t latsched_verify_report_count(const latsched_verify_report* report);
LATSCHED_API latsched_status latsched_verify_report_get(const latsched_verify_report* report, size_t index,
                                                        latsched_violation* out);
LATSCHED_API latsched_status latsched_verify_report_write_csv(const latsched_verify_report* report,
                                                              const char* path);
LATSCHED_API void latsched_verify_report_destroy(latsched_verify_report* report);

/* ---- interference graph and cliques ------------------------------------- */

typedef struct latsched_clique_summary {
    int32_t formula;
    int32_t brute_force; /* -1 when the search was skipped */
    int32_t skipped_budget;
    uint64_t graph_nodes;
    int32_t frame_length;
    int64_t ratio_num, ratio_den; /* frame_length / formula, lowest terms */
} latsched_clique_summary;

/* extent may be NULL for the default box [-k, k]^2. Exceeding budget skips the exact search
 * (skipped_budget = 1) instead of failing. */
LATSCHED_API latsched_status latsched_clique(latsched_kind kind, int32_t k, const latsched_extent* extent,
                                             uint64_t budget, latsched_clique_report** out);
LATSCHED_API latsched_status latsched_clique_report_summary(const latsched_clique_report* report,
                                                            latsched_clique_summary* out);
LATSCHED_API size_t latsched_clique_report_witness_size(const latsched_clique_report* report);
LATSCHED_API latsched_status latsched_clique_report_witness(const latsched_clique_report* report, size_t index,
                                                            int32_t* x, int32_t* y);
LATSCHED_API void latsched_clique_report_destroy(latsched_clique_report* report);

/* ---- SINR analysis ------------------------------------------------------ */

typedef struct latsched_sinr_params {
    double beta, gamma, eta;
    int32_t k;
    double d, D, P;
} latsched_sinr_params;

typedef struct latsched_region {
    double dd_max;
    double beta_max;
    int32_t feasible;
} latsched_region;

LATSCHED_API latsched_status latsched_feasibility(latsched_kind kind, double beta, double gamma, int32_t k,
                                                  latsched_region* out);
/* LATSCHED_ERR_INFEASIBLE when no finite power satisfies the bound. */
LATSCHED_API latsched_status latsched_power_threshold(latsched_kind kind, const latsched_sinr_params* params,
                                                      double* out);
LATSCHED_API latsched_status latsched_interference_bound(latsched_kind kind, const latsched_sinr_params* params,
                                                         double* out);
LATSCHED_API latsched_status latsched_exact_interference(latsched_kind kind, const latsched_sinr_params* params,
                                                         int32_t rings, double* out);

enum { LATSCHED_POINT_INTERIOR = 0, LATSCHED_POINT_DEGENERATE = 1, LATSCHED_POINT_BOUNDARY = 2 };

typedef struct latsched_operating_point {
    double f, beta, dd, beta_max, dd_max_at_beta;
    int32_t status;
} latsched_operating_point;

LATSCHED_API latsched_status latsched_operating_point_at(latsched_kind kind, double gamma, int32_t k, double f,
                                                         latsched_operating_point* out);

/* ---- deployments and evaluation ----------------------------------------- */

LATSCHED_API latsched_status latsched_deployment_generate(latsched_kind kind, const latsched_extent* extent,
                                                          double dd_target, uint64_t seed,
                                                          latsched_deployment** out);
LATSCHED_API size_t latsched_deployment_size(const latsched_deployment* deployment);
LATSCHED_API latsched_status latsched_deployment_position(const latsched_deployment* deployment, size_t index,
                                                          int32_t* x, int32_t* y, double* px, double* py);
LATSCHED_API latsched_status latsched_deployment_write_csv(const latsched_deployment* deployment,
                                                           const char* path);
LATSCHED_API void latsched_deployment_destroy(latsched_deployment* deployment);

typedef struct latsched_rho_summary {
    double min_rho;
    double avg_rho;
    uint64_t records;
    uint64_t violations;
    int32_t empty;
} latsched_rho_summary;

typedef struct latsched_rho_record {
    int32_t slot, tx_x, tx_y, rx_x, rx_y;
    double sinr, rho;
} latsched_rho_record;

LATSCHED_API latsched_status latsched_evaluate(const latsched_deployment* deployment,
                                               const latsched_schedule* schedule,
                                               const latsched_sinr_params* params, latsched_rho_report** out);
LATSCHED_API latsched_status latsched_rho_report_summary(const latsched_rho_report* report,
                                                         latsched_rho_summary* out);
LATSCHED_API latsched_status latsched_rho_report_record(const latsched_rho_report* report, size_t index,
                                                        latsched_rho_record* out);
LATSCHED_API latsched_status latsched_rho_report_write_csv(const latsched_rho_report* report, const char* path);
LATSCHED_API void latsched_rho_report_destroy(latsched_rho_report* report);

/* ---- full pipeline ------------------------------------------------------ */

typedef struct latsched_sim_config {
    latsched_kind kind;
    int32_t k;
    double gamma;
    double f;
    double eta;
    latsched_extent extent;
    uint64_t seed;
    double power_margin;
    int32_t hold_point; /* nonzero: use fixed_beta and fixed_dd instead of deriving them from f */
    double fixed_beta;
    double fixed_dd;
} latsched_sim_config;

/* Defaults: hex, k=2, gamma=3, f=0.5, eta=1, 4000 nodes, seed 1, margin 1e-3. */
LATSCHED_API latsched_sim_config latsched_sim_config_default(void);

typedef struct latsched_sim_summary {
    latsched_operating_point point;
    double beta, dd, power;
    double nominal_spacing;
    double realized_min_distance, realized_max_distance;
    latsched_rho_summary rho;
} latsched_sim_summary;

LATSCHED_API latsched_status latsched_simulate(const latsched_sim_config* config, latsched_simulation** out);
LATSCHED_API latsched_status latsched_simulation_summary(const latsched_simulation* sim, latsched_sim_summary* out);
/* Borrowed views, valid until the simulation is destroyed. */
LATSCHED_API const latsched_rho_report* latsched_simulation_report(const latsched_simulation* sim);
LATSCHED_API const latsched_deployment* latsched_simulation_deployment(const latsched_simulation* sim);
/* Per-record CSV with the run configuration and summary in its metadata block. */
LATSCHED_API latsched_status latsched_simulation_write_report_csv(const latsched_simulation* sim, const char* path);
LATSCHED_API void latsched_simulation_destroy(latsched_simulation* sim);

#ifdef __cplusplus
}
#endif

#endif /* LATSCHED_H */
