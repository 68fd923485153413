#ifndef OFT_OFT_H
#define OFT_OFT_H

/* C interface to the Helmholtz / operator-Fourier-transform solver. Every
 * call returns a status code; on failure oft_last_error() carries a message
 * for the calling thread. Handles are opaque and freed by their _free call. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
    OFT_OK = 0,
    OFT_ERR_ARGUMENT = 1, /* bad argument or call in the wrong state */
    OFT_ERR_CONFIG = 2,   /* invalid or inconsistent configuration */
    OFT_ERR_SOLVER = 3,   /* numerical failure inside a solver */
    OFT_ERR_IO = 4,       /* file-format or filesystem failure */
    OFT_ERR_INTERNAL = 5  /* unexpected failure */
};

/* Message for this thread's most recent failure; "" when none. The pointer
 * stays valid until the next failing call on the same thread. */
const char* oft_last_error(void);

const char* oft_version(void);

/* ---- run configuration ---- */

typedef struct oft_config oft_config;

int oft_config_load(const char* path, oft_config** out);
int oft_config_parse(const char* text, oft_config** out);
void oft_config_free(oft_config* cfg);

/* Canonical key = value form. Copies at most cap-1 bytes into buf and
 * NUL-terminates; *needed (optional) receives the full length. */
int oft_config_serialize(const oft_config* cfg, char* buf, size_t cap, size_t* needed);
int oft_config_output_path(const oft_config* cfg, char* buf, size_t cap, size_t* needed);

/* ---- solver entry points ---- */

typedef struct {
    double rel_residual;            /* max-norm equation residual of the result */
    double ub_estimate;             /* quadrature-tail estimate at the last node */
    unsigned long long steps_pass1; /* pseudo-time steps marched per pass */
    unsigned long long steps_pass2;
    double wall_time;               /* seconds */
    double max_abs_field;           /* max |result| */
} oft_run_stats;

/* Two-pass scattered-field solve; writes the field where the config says. */
int oft_solve(const oft_config* cfg, oft_run_stats* stats);

/* Single application of the inverse-square-root operator. */
int oft_apply_sqrt(const oft_config* cfg, oft_run_stats* stats);

/* ---- convergence sweep ---- */

typedef struct {
    double dt0;
    unsigned long long n_tau;
    unsigned long long nx;
    double relerr_v1;
    double ub;
    double relerr_v2;
    double res;
} oft_converge_row;

/* Reference sweep rows row_begin..row_end (1-based, at most 5) in dim
 * dimensions. Fills up to cap rows; *produced receives the count actually
 * computed (rows over the memory budget are skipped with a stderr notice). */
int oft_converge(int dim, unsigned long long row_begin, unsigned long long row_end,
                 oft_converge_row* rows, size_t cap, size_t* produced);

int oft_converge_csv(const char* path, const oft_converge_row* rows, size_t count);

/* ---- eigenvalue oracle ---- */

/* First `count` impedance eigenvalues for parameters (alpha, length), sorted
 * by real part. re/im/residual are caller arrays of length count; residual
 * receives |f(lambda_n)|. Any of them may be NULL. */
int oft_eigenvalues(double alpha, double length, size_t count, double* re, double* im,
                    double* residual);

/* ---- demo problems ---- */

typedef struct {
    double dx;
    double dt;
    double max_err;
} oft_demo_row;

/* Refinement studies of the two 1D resolvent demos. sizes/n_sizes select the
 * interval counts (NULL uses the built-in ladder); rows must hold n_sizes
 * entries (or the built-in count, 3). fitted_order may be NULL. */
int oft_demo_ode1(const size_t* sizes, size_t n_sizes, oft_demo_row* rows, double* fitted_order);
int oft_demo_ode2(double cfl, const size_t* sizes, size_t n_sizes, oft_demo_row* rows,
                  double* fitted_order);

typedef struct {
    double peak_point[3]; /* argmax of |incident + scattered| */
    double peak_value;
    double wavelength;
    double distance_to_focus; /* from the shadow-side lens pole */
    oft_run_stats stats;
} oft_luneburg_report;

/* Desk-scale Luneburg lens run; writes the scattered field to output_path
 * unless it is NULL or empty. */
int oft_demo_luneburg(const char* output_path, oft_luneburg_report* out);

#ifdef __cplusplus
}
#endif

#endif /* OFT_OFT_H */
