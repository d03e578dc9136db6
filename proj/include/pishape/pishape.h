/* Copyright 2026 The pishape Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the pishape library. All functions return a status code;
 * on failure pishape_last_error() describes the problem. Opaque handles are
 * released with the matching *_free function, which accepts NULL. */

#ifndef PISHAPE_PISHAPE_H
#define PISHAPE_PISHAPE_H

#include <stddef.h>

#if defined(PISHAPE_BUILDING_LIBRARY)
#define PISHAPE_API __attribute__((visibility("default")))
#else
#define PISHAPE_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  PISHAPE_OK = 0,
  PISHAPE_ERR_INVALID_ARGUMENT = 1,
  PISHAPE_ERR_COMPUTATION = 2,
  PISHAPE_ERR_NULL_POINTER = 3,
  PISHAPE_ERR_OUT_OF_RANGE = 4,
  PISHAPE_ERR_INTERNAL = 5
} pishape_status;

typedef struct {
  double re;
  double im;
} pishape_complex;

/* Message for the last failed call on this thread; "" if none. */
PISHAPE_API const char* pishape_last_error(void);
PISHAPE_API const char* pishape_version(void);

/* ---- tables (row-major numeric results with named columns) ---- */

typedef struct pishape_table pishape_table;

PISHAPE_API size_t pishape_table_rows(const pishape_table* t);
PISHAPE_API size_t pishape_table_cols(const pishape_table* t);
/* NULL when out of range. */
PISHAPE_API const char* pishape_table_column_name(const pishape_table* t, size_t col);
PISHAPE_API pishape_status pishape_table_value(const pishape_table* t, size_t row, size_t col,
                                               double* out);
PISHAPE_API void pishape_table_free(pishape_table* t);

/* ---- source spectrum ---- */

typedef struct {
  double m_eff;
  double omega;
  double beta;
  double R;
  double alpha_R;
  double L_x;
  double k;
  double reg_delta;
} pishape_source_params;

typedef struct {
  pishape_complex h11, h12, h21, h22;
} pishape_hmatrix2;

typedef struct {
  double e_up;
  double e_down;
  double delta_e;
  pishape_complex eigvec_up[2];
  pishape_complex eigvec_down[2];
  int used_fallback;
} pishape_spin_split_result;

PISHAPE_API void pishape_source_params_default(pishape_source_params* p);
/* Spin matrix averaged over the transverse mode. */
PISHAPE_API pishape_status pishape_source_hmatrix(const pishape_source_params* p,
                                                  pishape_hmatrix2* out);
/* Spin matrix weighted by the transverse density at (x, y). */
PISHAPE_API pishape_status pishape_source_local_hmatrix(const pishape_source_params* p, double x,
                                                        double y, pishape_hmatrix2* out);
PISHAPE_API pishape_status pishape_spin_split(const pishape_hmatrix2* h,
                                              pishape_spin_split_result* out);
/* Columns x, y, e_up, e_down, delta_e; rows ordered by x then y. */
PISHAPE_API pishape_status pishape_source_chart(const pishape_source_params* p,
                                                const double* x_values, size_t x_count,
                                                double y_min, double y_max, size_t y_points,
                                                pishape_table** out);

/* ---- channel ---- */

typedef enum { PISHAPE_POTENTIAL_QUARTIC = 0, PISHAPE_POTENTIAL_HARMONIC = 1 } pishape_potential_kind;

typedef struct {
  double m_eff;
  double omega;
  double a;
  double coulomb_k;
  double fermi_l;
  int include_vc;
  pishape_potential_kind kind;
} pishape_channel_params;

typedef struct {
  double g;
  double y_max;
  size_t n_points;
  int max_iterations;
  double quad_tol;
} pishape_qlm_config;

typedef struct pishape_qlm_result pishape_qlm_result;

PISHAPE_API void pishape_channel_params_default(pishape_channel_params* p);
PISHAPE_API pishape_status pishape_qlm_config_default(const pishape_channel_params* p,
                                                      pishape_qlm_config* out);
PISHAPE_API pishape_status pishape_channel_potential(const pishape_channel_params* p, double y,
                                                     double* out);
/* Lowest n_levels eigenvalues of the full-line problem by finite differences. */
PISHAPE_API pishape_status pishape_fd_levels(const pishape_channel_params* p, double lo, double hi,
                                             size_t n_points, size_t n_levels, double* out);
PISHAPE_API pishape_status pishape_qlm_first_energy(const pishape_channel_params* p, double g,
                                                    double tol, double* out);
/* A failing iteration is not an error: the result is marked incomplete. */
PISHAPE_API pishape_status pishape_qlm_run(const pishape_channel_params* p,
                                           const pishape_qlm_config* cfg,
                                           pishape_qlm_result** out);
PISHAPE_API size_t pishape_qlm_iterations(const pishape_qlm_result* r);
PISHAPE_API int pishape_qlm_complete(const pishape_qlm_result* r);
PISHAPE_API const char* pishape_qlm_failure(const pishape_qlm_result* r);
/* index is 0-based; iterate n = index + 1. */
PISHAPE_API pishape_status pishape_qlm_energy(const pishape_qlm_result* r, size_t index,
                                              double* out);
PISHAPE_API size_t pishape_qlm_grid_size(const pishape_qlm_result* r);
PISHAPE_API pishape_status pishape_qlm_log_derivative(const pishape_qlm_result* r, size_t index,
                                                      double* buffer, size_t length);
PISHAPE_API void pishape_qlm_free(pishape_qlm_result* r);

/* ---- two-qubit channel ---- */

typedef enum { PISHAPE_WAVE_ALONG_X = 0, PISHAPE_WAVE_ALONG_Y = 1 } pishape_wave_direction;

typedef struct {
  double m_eff;
  double omega;
  double a_B;
  double lambda;
  double k;
  double alpha_R;
  double coulomb_k;
  double fermi_l;
  pishape_wave_direction wave_direction;
} pishape_twoqubit_params;

typedef struct pishape_eigen_report pishape_eigen_report;

PISHAPE_API void pishape_twoqubit_params_default(pishape_twoqubit_params* p);
PISHAPE_API pishape_status pishape_twoqubit_expectations(const pishape_twoqubit_params* p,
                                                         double* h0, pishape_complex* hr);
PISHAPE_API pishape_status pishape_twoqubit_check(double h0, pishape_complex hr,
                                                  pishape_eigen_report** out);
/* Eigenvalues: index 0..3. Claimed order is h0 - hr, h0 + hr, -s, +s. */
PISHAPE_API pishape_status pishape_report_claimed_eigenvalue(const pishape_eigen_report* r,
                                                             size_t i, pishape_complex* out);
PISHAPE_API pishape_status pishape_report_numeric_eigenvalue(const pishape_eigen_report* r,
                                                             size_t i, pishape_complex* out);
PISHAPE_API pishape_status pishape_report_residual(const pishape_eigen_report* r, size_t i,
                                                   double* out);
/* 1 when the residual used the closed-form vector, 0 for the numeric one. */
PISHAPE_API pishape_status pishape_report_vector_claimed(const pishape_eigen_report* r, size_t i,
                                                         int* out);
PISHAPE_API double pishape_report_set_difference(const pishape_eigen_report* r);
PISHAPE_API int pishape_report_hermitian(const pishape_eigen_report* r);
PISHAPE_API int pishape_report_degenerate(const pishape_eigen_report* r);
PISHAPE_API int pishape_report_numeric_flagged(const pishape_eigen_report* r);
/* Owned by the report. */
PISHAPE_API const char* pishape_report_json(const pishape_eigen_report* r);
PISHAPE_API void pishape_report_free(pishape_eigen_report* r);

/* ---- gates ---- */

typedef enum { PISHAPE_QUBIT_SOURCE = 0, PISHAPE_QUBIT_CHANNEL = 1 } pishape_qubit;

typedef enum {
  PISHAPE_BELL_PHI_PLUS = 0,
  PISHAPE_BELL_PHI_MINUS = 1,
  PISHAPE_BELL_PSI_PLUS = 2,
  PISHAPE_BELL_PSI_MINUS = 3
} pishape_bell;

typedef struct pishape_gate pishape_gate;

PISHAPE_API pishape_status pishape_gate_u_swap_alpha(double alpha, pishape_gate** out);
PISHAPE_API pishape_status pishape_gate_u_swap_projector(double alpha, pishape_gate** out);
PISHAPE_API pishape_status pishape_gate_exchange_evolution(double alpha, pishape_gate** out);
PISHAPE_API pishape_status pishape_gate_exchange_evolution_expm(double alpha, pishape_gate** out);
PISHAPE_API pishape_status pishape_gate_swap(pishape_gate** out);
PISHAPE_API pishape_status pishape_gate_sqrt_swap(pishape_gate** out);
PISHAPE_API pishape_status pishape_gate_cnot(pishape_gate** out);
PISHAPE_API pishape_status pishape_gate_rz(pishape_qubit which, double angle, pishape_gate** out);
PISHAPE_API pishape_status pishape_gate_hadamard(pishape_qubit which, pishape_gate** out);
/* Any of circuit_length, sqrt_swap_count, fidelity may be NULL. */
PISHAPE_API pishape_status pishape_gate_cnot_from_sqrt_swap(pishape_gate** out,
                                                            size_t* circuit_length,
                                                            size_t* sqrt_swap_count,
                                                            double* fidelity);
/* out = a * b */
PISHAPE_API pishape_status pishape_gate_multiply(const pishape_gate* a, const pishape_gate* b,
                                                 pishape_gate** out);
PISHAPE_API pishape_status pishape_gate_fidelity(const pishape_gate* u, const pishape_gate* v,
                                                 double* out);
PISHAPE_API pishape_status pishape_gate_unitarity_error(const pishape_gate* g, double* out);
PISHAPE_API pishape_status pishape_gate_entry(const pishape_gate* g, size_t row, size_t col,
                                              pishape_complex* out);
PISHAPE_API pishape_status pishape_gate_apply(const pishape_gate* g, const pishape_complex in[4],
                                              pishape_complex out[4]);
PISHAPE_API void pishape_gate_free(pishape_gate* g);

PISHAPE_API pishape_status pishape_bell_state(pishape_bell which, pishape_complex out[4]);
PISHAPE_API pishape_status pishape_concurrence(const pishape_complex state[4], double* out);
/* max |4 S.S - (2 SWAP - I)| */
PISHAPE_API pishape_status pishape_exchange_identity_error(double* out);

#ifdef __cplusplus
}
#endif

#endif /* PISHAPE_PISHAPE_H */
