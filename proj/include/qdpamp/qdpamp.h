// Copyright 2026 The qdpamp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to qdpamp. All functions return a qdpa_status; on failure the
 * message is available from qdpa_last_error() until the next call on the same
 * thread. Matrices are dense, row major, with complex entries interleaved as
 * (re, im) pairs. Objects are opaque handles released by their _free
 * function; strings returned through char** are released with
 * qdpa_string_free. */

#ifndef QDPAMP_QDPAMP_H_
#define QDPAMP_QDPAMP_H_

#include <stddef.h>
#include <stdint.h>

#if defined(QDPA_BUILDING_LIBRARY)
#define QDPA_API __attribute__((visibility("default")))
#else
#define QDPA_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qdpa_status {
  QDPA_OK = 0,
  QDPA_ERR_VALIDATION = 1,
  QDPA_ERR_PRECONDITION = 2,
  QDPA_ERR_INSUFFICIENT_NEIGHBORHOOD = 3,
  QDPA_ERR_UNSUPPORTED = 4,
  QDPA_ERR_RESOURCE = 5,
  QDPA_ERR_NULL_ARGUMENT = 6,
  QDPA_ERR_INTERNAL = 7
} qdpa_status;

typedef enum qdpa_encoding {
  QDPA_ENCODING_BASIS = 0,
  QDPA_ENCODING_AMPLITUDE = 1,
  QDPA_ENCODING_ROTATION = 2
} qdpa_encoding;

typedef enum qdpa_noise {
  QDPA_NOISE_NONE = 0,
  QDPA_NOISE_LAPLACE = 1, /* parameter: scale b */
  QDPA_NOISE_GAUSSIAN = 2 /* parameter: variance sigma^2 */
} qdpa_noise;

typedef struct qdpa_dp_params {
  double epsilon; /* +INFINITY is the infinite sentinel */
  double delta;
} qdpa_dp_params;

typedef struct qdpa_dataset qdpa_dataset;
typedef struct qdpa_channel qdpa_channel;
typedef struct qdpa_povm qdpa_povm;
typedef struct qdpa_stream qdpa_stream;
typedef struct qdpa_model qdpa_model;
typedef struct qdpa_report qdpa_report;

/* ---- general ---- */
QDPA_API const char* qdpa_version(void);
QDPA_API const char* qdpa_last_error(void);
QDPA_API const char* qdpa_status_name(qdpa_status status);
QDPA_API void qdpa_string_free(char* s);

/* ---- linear algebra ---- */
/* (1/2) sum |eigenvalues| of a - b for Hermitian a, b of size dim x dim. */
QDPA_API qdpa_status qdpa_trace_distance(const double* a, const double* b,
                                         size_t dim, double* out);
/* sqrt(1 - |<psi|phi>|^2) for kets of length dim. */
QDPA_API qdpa_status qdpa_pure_trace_distance(const double* psi,
                                              const double* phi, size_t dim,
                                              double* out);

/* ---- encodings ---- */
QDPA_API qdpa_status qdpa_dataset_from_json(const char* json,
                                            qdpa_dataset** out);
QDPA_API qdpa_status qdpa_dataset_to_json(const qdpa_dataset* x, char** out);
QDPA_API void qdpa_dataset_free(qdpa_dataset* x);
QDPA_API qdpa_status qdpa_dataset_info(const qdpa_dataset* x,
                                       qdpa_encoding* mode, int* size,
                                       int* bit_width);
/* Writes the encoded ket into amplitudes (2 * capacity doubles) and its
 * length into dim. Fails with QDPA_ERR_RESOURCE if capacity is too small;
 * dim is still set. */
QDPA_API qdpa_status qdpa_encode(const qdpa_dataset* x, double* amplitudes,
                                 size_t capacity, size_t* dim);
QDPA_API qdpa_status qdpa_kernel(const qdpa_dataset* x,
                                 const qdpa_dataset* x_prime, double* out);
QDPA_API qdpa_status qdpa_encoded_trace_distance(const qdpa_dataset* x,
                                                 const qdpa_dataset* x_prime,
                                                 double* out);
QDPA_API qdpa_status qdpa_are_neighbors(const qdpa_dataset* x,
                                        const qdpa_dataset* x_prime,
                                        int* out);
/* max_i |x_i|^2 of an amplitude dataset. */
QDPA_API qdpa_status qdpa_gamma(const qdpa_dataset* x, double* out);
/* gamma is used only for the amplitude encoding (pass NAN otherwise). */
QDPA_API qdpa_status qdpa_min_adjacent_kernel(qdpa_encoding kind, int n,
                                              double gamma, double* out);

/* ---- privacy calculus ---- */
QDPA_API qdpa_status qdpa_encoding_adp_delta(double kappa_hat,
                                             qdpa_dp_params* out);
QDPA_API qdpa_status qdpa_quantum_to_classical(double tau, double epsilon,
                                               double delta, double kappa_hat,
                                               qdpa_dp_params* out);
QDPA_API qdpa_status qdpa_alg1_laplace_scale(double kappa_hat, double t,
                                             double epsilon, double* out);
QDPA_API qdpa_status qdpa_alg1_gaussian_sigma2(double kappa_hat, double t,
                                               double epsilon, double delta,
                                               double* out);
/* Probability that either of two neighbouring means deviates by t/2. */
QDPA_API qdpa_status qdpa_alg1_failure_prob(int m, double t, double* printed,
                                            double* conservative);
/* Probability that one mean deviates by t/2. */
QDPA_API qdpa_status qdpa_alg1_deviation_prob(int m, double t, double* printed,
                                              double* conservative);
QDPA_API qdpa_status qdpa_subsample_amplify(qdpa_dp_params base, double gamma,
                                            int m, qdpa_dp_params* out);
QDPA_API qdpa_status qdpa_subsample_adp(double gamma, int m,
                                        qdpa_dp_params* out);
/* Epsilon curve evaluated at a trace distance d. */
typedef double (*qdpa_eps_curve)(double d, void* user);
QDPA_API qdpa_status qdpa_qpp_amplify(qdpa_eps_curve curve, void* user,
                                      double gamma, double tau,
                                      double* epsilon);
QDPA_API qdpa_status qdpa_eps_depolarizing(double p, double d, int dim,
                                           double* out);
QDPA_API qdpa_status qdpa_eps_pad(double gamma, double lambda, double d,
                                  double* out);
QDPA_API qdpa_status qdpa_eps_unital_dobrushin(double gamma, double d,
                                               double* out);
QDPA_API qdpa_status qdpa_eps_pad_dep(double p, double gamma, double lambda,
                                      double d, double* out);

/* ---- channels ---- */
/* tol bounds the completeness check; pass 0 for the default. */
QDPA_API qdpa_status qdpa_channel_from_json(const char* json, double tol,
                                            qdpa_channel** out);
/* Canonical JSON of the channel description. */
QDPA_API qdpa_status qdpa_channel_to_json(const qdpa_channel* ch, char** out);
QDPA_API void qdpa_channel_free(qdpa_channel* ch);
QDPA_API qdpa_status qdpa_channel_compose(const qdpa_channel* outer,
                                          const qdpa_channel* inner,
                                          qdpa_channel** out);
QDPA_API qdpa_status qdpa_channel_info(const qdpa_channel* ch, int* dim_in,
                                       int* dim_out, int* trace_preserving,
                                       int* kraus_count);
/* Copies Kraus operator k (dim_out x dim_in) into out. */
QDPA_API qdpa_status qdpa_channel_kraus(const qdpa_channel* ch, int k,
                                        double* out);
/* Applies the channel to a density matrix of size dim_in. */
QDPA_API qdpa_status qdpa_channel_apply(const qdpa_channel* ch,
                                        const double* rho, double* out);
/* Qubit channels only: r -> T r + t. */
QDPA_API qdpa_status qdpa_channel_bloch(const qdpa_channel* ch,
                                        double transfer[9], double shift[3],
                                        int* unital);

typedef struct qdpa_dobrushin_search {
  int azimuth;
  int polar;
  int refine_iters;
  int full_search;
  int random_pairs;
  uint64_t seed;
} qdpa_dobrushin_search;

QDPA_API void qdpa_dobrushin_search_default(qdpa_dobrushin_search* search);
/* method receives a static string naming the estimator. With force_search
 * the pair search runs even when the unital shortcut applies. */
QDPA_API qdpa_status qdpa_channel_dobrushin(const qdpa_channel* ch,
                                            const qdpa_dobrushin_search* search,
                                            int force_search, double* value,
                                            const char** method,
                                            int* evaluations);
/* y is a dim_out x dim_out Hermitian matrix, or NULL for I / dim_out. */
QDPA_API qdpa_status qdpa_channel_doeblin_check(const qdpa_channel* ch,
                                                double gamma, const double* y,
                                                double tol, int* holds,
                                                double* min_eigenvalue);
QDPA_API qdpa_status qdpa_doeblin_to_dobrushin(double gamma, double trace_y,
                                               double* out);

/* ---- mechanisms ---- */
QDPA_API qdpa_status qdpa_stream_create(uint64_t seed, qdpa_stream** out);
QDPA_API qdpa_status qdpa_stream_split(const qdpa_stream* parent,
                                       uint64_t stream_id, qdpa_stream** out);
QDPA_API void qdpa_stream_free(qdpa_stream* s);
QDPA_API qdpa_status qdpa_stream_uniform(qdpa_stream* s, double* out);

QDPA_API qdpa_status qdpa_sample_noise(qdpa_noise kind, double parameter,
                                       qdpa_stream* s, double* out);
QDPA_API qdpa_status qdpa_laplace_worst_case_ratio(double scale,
                                                   double sensitivity,
                                                   double* out);
QDPA_API qdpa_status qdpa_gaussian_variance(double sensitivity,
                                            double epsilon, double delta,
                                            double* out);
QDPA_API qdpa_status qdpa_randomized_response(const int* bits, size_t n,
                                              double epsilon, double delta,
                                              qdpa_stream* s, int* out);
/* m zero-based indices drawn with probability |x_i|^2. */
QDPA_API qdpa_status qdpa_l2_sample(const qdpa_dataset* x, int m,
                                    qdpa_stream* s, int* out);

/* JSON {"elements": [matrix, ...], "labels": [1, 0]}; labels must be {0,1}. */
QDPA_API qdpa_status qdpa_povm_from_json(const char* json, qdpa_povm** out);
QDPA_API qdpa_status qdpa_povm_basis_projector(int dim, int index,
                                               qdpa_povm** out);
QDPA_API void qdpa_povm_free(qdpa_povm* povm);
/* Tr(E_1 rho) for the encoding of x. */
QDPA_API qdpa_status qdpa_povm_accept_probability(const qdpa_povm* povm,
                                                  const qdpa_dataset* x,
                                                  double* out);
QDPA_API qdpa_status qdpa_run_alg1(const qdpa_dataset* x,
                                   const qdpa_povm* povm, int m,
                                   qdpa_noise noise, double parameter,
                                   qdpa_stream* s, double* out);

/* ---- auditor ---- */
QDPA_API qdpa_status qdpa_model_from_json(const char* json, qdpa_model** out);
QDPA_API qdpa_status qdpa_model_to_json(const qdpa_model* model, char** out);
QDPA_API void qdpa_model_free(qdpa_model* model);
/* Per-position randomized response over {0,1}^m. */
QDPA_API qdpa_status qdpa_model_randomized_response(int m, double epsilon,
                                                    double delta,
                                                    qdpa_model** out);
/* base o l2-sampling on x, enumerated exactly. */
QDPA_API qdpa_status qdpa_model_subsampled(const qdpa_dataset* x,
                                           const qdpa_model* base, int m,
                                           qdpa_model** out);

QDPA_API qdpa_status qdpa_hockey_stick(const double* p, const double* q,
                                       size_t n, double epsilon, double* out);
QDPA_API qdpa_status qdpa_audit_classical(const qdpa_model* model,
                                          qdpa_dp_params claimed,
                                          qdpa_report** out);
/* Audits base o l2-sampling against subsample_amplify(base_claim); bound
 * receives the amplified claim. */
QDPA_API qdpa_status qdpa_audit_subsampling(const qdpa_dataset* x,
                                            const qdpa_model* base, int m,
                                            qdpa_dp_params base_claim,
                                            qdpa_dp_params* bound,
                                            qdpa_report** out);

typedef struct qdpa_qdp_search {
  int azimuth;
  int polar;
  int refine_iters;
  int pairs;
  int pair_refine_iters;
  int refined_pairs;
  uint64_t seed;
} qdpa_qdp_search;

QDPA_API void qdpa_qdp_search_default(qdpa_qdp_search* search);
QDPA_API qdpa_status qdpa_audit_channel_qdp(const qdpa_channel* ch,
                                            double tau, double claimed_epsilon,
                                            const qdpa_qdp_search* search,
                                            qdpa_report** out);
/* sup over projectors of Tr[P a] / Tr[P b] for density matrices a, b. */
QDPA_API qdpa_status qdpa_measurement_ratio(const double* a, const double* b,
                                            size_t dim,
                                            const qdpa_qdp_search* search,
                                            double* ratio);
/* Exact value of the same supremum via a generalized eigenproblem. */
QDPA_API qdpa_status qdpa_max_generalized_eigenvalue(const double* a,
                                                     const double* b,
                                                     size_t dim, double* out);

QDPA_API qdpa_status qdpa_report_summary(const qdpa_report* report,
                                         double* eps_hat, double* delta_hat,
                                         int* satisfied);
/* Recomputes the witness log-ratio through the audited object: ln(p/q) for
 * classical audits, ln of the measurement ratio for channel audits. */
QDPA_API qdpa_status qdpa_report_recheck(const qdpa_report* report,
                                         double* value);
QDPA_API qdpa_status qdpa_report_to_json(const qdpa_report* report,
                                         char** out);
QDPA_API void qdpa_report_free(qdpa_report* report);

#ifdef __cplusplus
}
#endif

#endif /* QDPAMP_QDPAMP_H_ */
