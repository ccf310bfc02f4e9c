/*
 * qinfo - invariant-information calculus for small quantum systems.
 *
 * C interface of the shared library. Every fallible function returns a
 * qinfo_status; outputs are written through pointers only on QINFO_OK.
 * Heap-allocated objects travel as opaque handles and must be released
 * with their matching *_free function. qinfo_last_error() describes the
 * most recent failure on the calling thread.
 *
 * Matrix buffers are row-major double arrays, complex matrices split into
 * separate real and imaginary buffers of dim*dim entries each.
 */

#ifndef QINFO_H
#define QINFO_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define QINFO_API __declspec(dllexport)
#else
#define QINFO_API __attribute__((visibility("default")))
#endif

typedef enum qinfo_status {
    QINFO_OK = 0,
    QINFO_ERR_INVALID_ARGUMENT,
    QINFO_ERR_INVALID_DISTRIBUTION,
    QINFO_ERR_BITS_MODE_REQUIRES_POWER_OF_TWO,
    QINFO_ERR_NOT_BINARY,
    QINFO_ERR_NOT_HERMITIAN,
    QINFO_ERR_NOT_PROJECTOR,
    QINFO_ERR_DIMENSION_TOO_LARGE,
    QINFO_ERR_WRONG_DIMENSION,
    QINFO_ERR_DIMENSION_MISMATCH,
    QINFO_ERR_UNPHYSICAL_VECTOR,
    QINFO_ERR_INVALID_DENSITY,
    QINFO_ERR_ZERO_PROBABILITY_OUTCOME,
    QINFO_ERR_UNSUPPORTED_DIMENSION,
    QINFO_ERR_ZERO_FIELD,
    QINFO_ERR_PARSE,
} qinfo_status;

typedef enum qinfo_norm {
    QINFO_NORM_UNIT = 0, /* measure in [0,1] */
    QINFO_NORM_BITS = 1, /* measure in [0,k] bits; needs a power-of-two outcome count */
} qinfo_norm;

QINFO_API const char* qinfo_version(void);
QINFO_API const char* qinfo_status_name(qinfo_status status);
/* Message of the last failing call on this thread; valid until the next failure. */
QINFO_API const char* qinfo_last_error(void);
QINFO_API void qinfo_string_free(char* s);

/* ---- measures over outcome distributions ---- */

QINFO_API qinfo_status qinfo_shannon_entropy(const double* p, int n, double* out);
QINFO_API qinfo_status qinfo_uncertainty(const double* p, int n, double* out);
QINFO_API qinfo_status qinfo_info_measure(const double* p, int n, qinfo_norm scheme, double* out);
/* Signed binary quantity i = p1 - p2 and its square. */
QINFO_API qinfo_status qinfo_binary_info(const double* p, int n, double* i_out, double* info_out);

/* ---- states ---- */

typedef struct qinfo_state qinfo_state; /* density matrix, dim 2..16 */

QINFO_API void qinfo_state_free(qinfo_state* state);
QINFO_API qinfo_status qinfo_state_from_info(const double i[3], qinfo_state** out);
QINFO_API qinfo_status qinfo_state_from_matrix(int dim, const double* re, const double* im,
                                               qinfo_state** out);
/* Accepts {"dim":n,"re":[[..]],"im":[[..]]} and {"i":[i1,i2,i3]}. */
QINFO_API qinfo_status qinfo_state_from_json(const char* text, qinfo_state** out);
QINFO_API qinfo_status qinfo_state_to_json(const qinfo_state* state, char** out);
QINFO_API int qinfo_state_dim(const qinfo_state* state);
QINFO_API qinfo_status qinfo_state_get(const qinfo_state* state, double* re, double* im);
QINFO_API qinfo_status qinfo_state_to_info(const qinfo_state* state, double i_out[3]);
QINFO_API qinfo_status qinfo_state_purity(const qinfo_state* state, double* out);

QINFO_API qinfo_status qinfo_total_info_qubit(const double i[3], double* out);

/* Post-measurement state for the projector outcome (or its complement) plus
 * the probability of the projector branch. */
QINFO_API qinfo_status qinfo_measurement_update(const qinfo_state* state, const double* proj_re,
                                                const double* proj_im, int outcome_observed,
                                                qinfo_state** post, double* probability);

/* ---- complete sets of mutually unbiased bases ---- */

typedef struct qinfo_mub qinfo_mub;

QINFO_API void qinfo_mub_free(qinfo_mub* mub);
/* Supported dimensions 2,3,4,5,7,8,9; 6 is refused as an open problem. */
QINFO_API qinfo_status qinfo_mub_construct(int dim, qinfo_mub** out);
QINFO_API int qinfo_mub_dim(const qinfo_mub* mub);
QINFO_API int qinfo_mub_count(const qinfo_mub* mub); /* always dim + 1 */
QINFO_API qinfo_status qinfo_mub_basis(const qinfo_mub* mub, int index, double* re, double* im);
QINFO_API qinfo_status qinfo_mub_verify(const qinfo_mub* mub, double* orthonormality_error,
                                        double* unbiasedness_error);
QINFO_API qinfo_status qinfo_mub_to_json(const qinfo_mub* mub, char** out);

/* Outcome probabilities of every basis in the set: count*dim doubles, basis-major. */
QINFO_API qinfo_status qinfo_mub_probabilities(const qinfo_state* state, const qinfo_mub* mub,
                                               double* out);
QINFO_API qinfo_status qinfo_total_info_general(const qinfo_state* state, const qinfo_mub* mub,
                                                qinfo_norm scheme, double* out);

/* Independent-parameter split over the coprime prime-power factors of n.
 * factors/locals receive up to `capacity` entries; *nfactors_out reports the
 * count actually present. */
QINFO_API qinfo_status qinfo_param_count(int n, int capacity, int* factors, long long* locals,
                                         int* nfactors_out, long long* correlations_out,
                                         long long* total_out);

/* ---- probability law against magnet angle ---- */

/* Integrates the information-conservation ODE; theta/f buffers take steps+1
 * samples (either may be NULL). */
QINFO_API qinfo_status qinfo_malus_solve_ode(double n, double theta_max, int steps, double* theta,
                                             double* f, double* max_abs_deviation);
QINFO_API qinfo_status qinfo_malus_probability(double n, double theta, double* out);
/* Row-major 3x3 of the one-parameter rotation block. */
QINFO_API qinfo_status qinfo_malus_rotation(double n, double theta, double r_out[9]);
QINFO_API qinfo_status qinfo_euler_rotation(double alpha, double beta, double gamma,
                                            double r_out[9]);
QINFO_API qinfo_status qinfo_quantum_oracle_probability(double theta, double* out);

/* Uniform sweep of count rows x 6 columns:
 * theta, f_ode, f_closed, p_malus, p_oracle, abs_err. */
QINFO_API qinfo_status qinfo_malus_sweep(double n, double start, double stop, int count,
                                         double* rows);

/* ---- two-qubit correlation information ---- */

QINFO_API qinfo_status qinfo_correlation_tensor(const qinfo_state* state, double t_out[9]);
QINFO_API qinfo_status qinfo_joint_info(const qinfo_state* state, const double a[3],
                                        const double b[3], double* out);
/* planes: a1, a2, b1, b2 as four consecutive unit 3-vectors. */
QINFO_API qinfo_status qinfo_info_corr(const qinfo_state* state, const double planes[12],
                                       double* out);

typedef enum qinfo_opt_method {
    QINFO_OPT_ANALYTIC = 0,
    QINFO_OPT_NUMERIC = 1,
} qinfo_opt_method;

QINFO_API qinfo_status qinfo_max_info_corr(const qinfo_state* state, qinfo_opt_method method,
                                           double* value_out, double planes_out[12]);

/* M = s1^2 + s2^2 over the correlation tensor's singular values; the CHSH
 * ceiling is 2 sqrt(M), and both verdicts test M > 1 strictly. */
QINFO_API qinfo_status qinfo_chsh_report(const qinfo_state* state, double* m_out,
                                         double* chsh_max_out, int* violates_bell,
                                         int* entangled_by_criterion);

/* ---- catalog dynamics ---- */

QINFO_API qinfo_status qinfo_axis_from_hamiltonian(const double h_re[4], const double h_im[4],
                                                   double u_out[3]);
/* Parses {"dim":2,"re":[[..]],"im":[[..]]} and validates hermiticity. */
QINFO_API qinfo_status qinfo_hamiltonian_from_json(const char* text, double h_re[4],
                                                   double h_im[4]);
/* Rows of the integrated trajectory: t, i1, i2, i3, |i|; row count is written
 * to *rows_out (at most capacity; pass rows = NULL, capacity = 0 to query). */
QINFO_API qinfo_status qinfo_evolve_info(const double i0[3], const double u[3], double t,
                                         double dt, int capacity, double* rows, int* rows_out);
QINFO_API qinfo_status qinfo_evolve_exact(const qinfo_state* state, const double h_re[4],
                                          const double h_im[4], double t, qinfo_state** out);
QINFO_API qinfo_status qinfo_debroglie_period(const double u[3], double* out);

/* ---- seeded two-outcome trials ---- */

QINFO_API qinfo_status qinfo_simulate_sg(double theta, long long trials, uint64_t seed,
                                         double* p_out, long long* yes_count_out);
QINFO_API qinfo_status qinfo_chebyshev_report(double theta, long long trials, double k, int runs,
                                              uint64_t seed, double* sigma_out, double* bound_out,
                                              double* violation_rate_out);
QINFO_API qinfo_status qinfo_per_trial_uncertainty(double p, double* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QINFO_H */
