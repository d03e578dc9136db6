// Copyright 2026 The pishape Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "pishape/pishape.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <memory>
#include <new>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "channel/channel_qlm.hpp"
#include "common/error.hpp"
#include "gates/gates.hpp"
#include "numerics/schrodinger_fd.hpp"
#include "source/source_spectrum.hpp"
#include "twoqubit/twoqubit_channel.hpp"

using pishape::numerics::Complex;

struct pishape_table {
  std::vector<std::string> columns;
  std::vector<double> values;  // row-major
};

struct pishape_qlm_result {
  pishape::channel::QlmSpectrum spectrum;
  std::size_t grid_size = 0;
};

struct pishape_eigen_report {
  pishape::twoqubit::EigenReport report;
  std::string json;
};

struct pishape_gate {
  pishape::gates::Gate4 gate;
};

namespace {

thread_local std::string g_last_error;

pishape_status fail(pishape_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs body, translating exceptions into status codes.
template <typename F>
pishape_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return PISHAPE_OK;
  } catch (const pishape::Error& e) {
    return fail(e.kind() == pishape::ErrorKind::computation ? PISHAPE_ERR_COMPUTATION
                                                            : PISHAPE_ERR_INVALID_ARGUMENT,
                e.what());
  } catch (const std::bad_alloc&) {
    return fail(PISHAPE_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PISHAPE_ERR_INTERNAL, e.what());
  }
}

#define PISHAPE_REQUIRE(ptr)                                                        \
  do {                                                                              \
    if ((ptr) == nullptr) return fail(PISHAPE_ERR_NULL_POINTER, #ptr " is NULL"); \
  } while (0)

pishape_complex to_c(Complex z) { return {z.real(), z.imag()}; }
Complex from_c(pishape_complex z) { return {z.re, z.im}; }

pishape::source::SourceParams to_cpp(const pishape_source_params& p) {
  return {p.m_eff, p.omega, p.beta, p.R, p.alpha_R, p.L_x, p.k, p.reg_delta};
}

pishape::channel::ChannelPotentialParams to_cpp(const pishape_channel_params& p) {
  pishape::channel::ChannelPotentialParams out;
  out.m_eff = p.m_eff;
  out.omega = p.omega;
  out.a = p.a;
  out.coulomb_k = p.coulomb_k;
  out.fermi_l = p.fermi_l;
  out.include_vc = p.include_vc != 0;
  out.kind = p.kind == PISHAPE_POTENTIAL_HARMONIC ? pishape::channel::PotentialKind::harmonic
                                                  : pishape::channel::PotentialKind::quartic_double_well;
  return out;
}

pishape::twoqubit::TwoQubitParams to_cpp(const pishape_twoqubit_params& p) {
  pishape::twoqubit::TwoQubitParams out;
  out.m_eff = p.m_eff;
  out.omega = p.omega;
  out.a_B = p.a_B;
  out.lambda = p.lambda;
  out.k = p.k;
  out.alpha_R = p.alpha_R;
  out.coulomb_k = p.coulomb_k;
  out.fermi_l = p.fermi_l;
  out.wave_direction = p.wave_direction == PISHAPE_WAVE_ALONG_X
                           ? pishape::twoqubit::WaveDirection::along_x
                           : pishape::twoqubit::WaveDirection::along_y;
  return out;
}

pishape::source::HMatrix2 to_cpp(const pishape_hmatrix2& h) {
  return {from_c(h.h11), from_c(h.h12), from_c(h.h21), from_c(h.h22)};
}

pishape_hmatrix2 to_c(const pishape::source::HMatrix2& h) {
  return {to_c(h.h11), to_c(h.h12), to_c(h.h21), to_c(h.h22)};
}

pishape::gates::Qubit to_cpp(pishape_qubit q) {
  return q == PISHAPE_QUBIT_SOURCE ? pishape::gates::Qubit::source : pishape::gates::Qubit::channel;
}

pishape::gates::TwoQubitState to_state(const pishape_complex s[4]) {
  return pishape::gates::TwoQubitState({from_c(s[0]), from_c(s[1]), from_c(s[2]), from_c(s[3])});
}

template <typename Make>
pishape_status make_gate(pishape_gate** out, Make&& make) {
  PISHAPE_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new pishape_gate{make()}; });
}

bool is_qubit(pishape_qubit q) { return q == PISHAPE_QUBIT_SOURCE || q == PISHAPE_QUBIT_CHANNEL; }

}  // namespace

extern "C" {

const char* pishape_last_error(void) { return g_last_error.c_str(); }

const char* pishape_version(void) { return PISHAPE_VERSION_STRING; }

/* tables */

size_t pishape_table_rows(const pishape_table* t) {
  return t == nullptr || t->columns.empty() ? 0 : t->values.size() / t->columns.size();
}

size_t pishape_table_cols(const pishape_table* t) { return t == nullptr ? 0 : t->columns.size(); }

const char* pishape_table_column_name(const pishape_table* t, size_t col) {
  if (t == nullptr || col >= t->columns.size()) return nullptr;
  return t->columns[col].c_str();
}

pishape_status pishape_table_value(const pishape_table* t, size_t row, size_t col, double* out) {
  PISHAPE_REQUIRE(t);
  PISHAPE_REQUIRE(out);
  if (row >= pishape_table_rows(t) || col >= t->columns.size()) {
    return fail(PISHAPE_ERR_OUT_OF_RANGE, "table index out of range");
  }
  *out = t->values[row * t->columns.size() + col];
  return PISHAPE_OK;
}

void pishape_table_free(pishape_table* t) { delete t; }

/* source */

void pishape_source_params_default(pishape_source_params* p) {
  if (p == nullptr) return;
  const pishape::source::SourceParams d;
  *p = {d.m_eff, d.omega, d.beta, d.R, d.alpha_R, d.L_x, d.k, d.reg_delta};
}

pishape_status pishape_source_hmatrix(const pishape_source_params* p, pishape_hmatrix2* out) {
  PISHAPE_REQUIRE(p);
  PISHAPE_REQUIRE(out);
  return guarded([&] { *out = to_c(pishape::source::build_hmatrix(to_cpp(*p))); });
}

pishape_status pishape_source_local_hmatrix(const pishape_source_params* p, double x, double y,
                                            pishape_hmatrix2* out) {
  PISHAPE_REQUIRE(p);
  PISHAPE_REQUIRE(out);
  return guarded([&] { *out = to_c(pishape::source::local_hmatrix(to_cpp(*p), x, y)); });
}

pishape_status pishape_spin_split(const pishape_hmatrix2* h, pishape_spin_split_result* out) {
  PISHAPE_REQUIRE(h);
  PISHAPE_REQUIRE(out);
  return guarded([&] {
    const auto r = pishape::source::spin_split(to_cpp(*h));
    out->e_up = r.e_up;
    out->e_down = r.e_down;
    out->delta_e = r.delta_e;
    for (int i = 0; i < 2; ++i) {
      out->eigvec_up[i] = to_c(r.eigvec_up[i]);
      out->eigvec_down[i] = to_c(r.eigvec_down[i]);
    }
    out->used_fallback = r.used_fallback ? 1 : 0;
  });
}

pishape_status pishape_source_chart(const pishape_source_params* p, const double* x_values,
                                    size_t x_count, double y_min, double y_max, size_t y_points,
                                    pishape_table** out) {
  PISHAPE_REQUIRE(p);
  PISHAPE_REQUIRE(out);
  *out = nullptr;
  if (x_count > 0) PISHAPE_REQUIRE(x_values);
  return guarded([&] {
    const pishape::numerics::Grid1D grid(y_min, y_max, y_points);
    const auto rows = pishape::source::chart_delta_e(
        to_cpp(*p), std::span<const double>(x_values, x_count), grid);
    auto t = std::make_unique<pishape_table>();
    t->columns = {"x", "y", "e_up", "e_down", "delta_e"};
    t->values.reserve(rows.size() * 5);
    for (const auto& r : rows) t->values.insert(t->values.end(), {r.x, r.y, r.e_up, r.e_down, r.delta_e});
    *out = t.release();
  });
}

/* channel */

void pishape_channel_params_default(pishape_channel_params* p) {
  if (p == nullptr) return;
  const pishape::channel::ChannelPotentialParams d;
  *p = {d.m_eff, d.omega, d.a, d.coulomb_k, d.fermi_l, d.include_vc ? 1 : 0,
        PISHAPE_POTENTIAL_QUARTIC};
}

pishape_status pishape_qlm_config_default(const pishape_channel_params* p, pishape_qlm_config* out) {
  PISHAPE_REQUIRE(p);
  PISHAPE_REQUIRE(out);
  return guarded([&] {
    const auto c = pishape::channel::QlmConfig::defaults_for(to_cpp(*p));
    *out = {c.g, c.grid.hi(), c.grid.size(), c.max_iterations, c.quad_tol};
  });
}

pishape_status pishape_channel_potential(const pishape_channel_params* p, double y, double* out) {
  PISHAPE_REQUIRE(p);
  PISHAPE_REQUIRE(out);
  return guarded([&] {
    const auto cp = to_cpp(*p);
    cp.validate();
    *out = pishape::channel::channel_potential(cp, y);
  });
}

pishape_status pishape_fd_levels(const pishape_channel_params* p, double lo, double hi,
                                 size_t n_points, size_t n_levels, double* out) {
  PISHAPE_REQUIRE(p);
  PISHAPE_REQUIRE(out);
  return guarded([&] {
    const auto cp = to_cpp(*p);
    cp.validate();
    const auto levels = pishape::numerics::fd_schrodinger_levels(
        [&](double y) { return pishape::channel::channel_potential(cp, y); },
        pishape::numerics::Grid1D(lo, hi, n_points), cp.m_eff, n_levels);
    std::copy(levels.begin(), levels.end(), out);
  });
}

pishape_status pishape_qlm_first_energy(const pishape_channel_params* p, double g, double tol,
                                        double* out) {
  PISHAPE_REQUIRE(p);
  PISHAPE_REQUIRE(out);
  return guarded([&] { *out = pishape::channel::qlm_first_energy(to_cpp(*p), g, tol); });
}

pishape_status pishape_qlm_run(const pishape_channel_params* p, const pishape_qlm_config* cfg,
                               pishape_qlm_result** out) {
  PISHAPE_REQUIRE(p);
  PISHAPE_REQUIRE(cfg);
  PISHAPE_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    const pishape::channel::QlmConfig c{cfg->g, pishape::numerics::Grid1D(0.0, cfg->y_max, cfg->n_points),
                                        cfg->max_iterations, cfg->quad_tol};
    auto r = std::make_unique<pishape_qlm_result>();
    r->spectrum = pishape::channel::qlm_spectrum(to_cpp(*p), c);
    r->grid_size = c.grid.size();
    *out = r.release();
  });
}

size_t pishape_qlm_iterations(const pishape_qlm_result* r) {
  return r == nullptr ? 0 : r->spectrum.iterates.size();
}

int pishape_qlm_complete(const pishape_qlm_result* r) {
  return r != nullptr && r->spectrum.complete ? 1 : 0;
}

const char* pishape_qlm_failure(const pishape_qlm_result* r) {
  return r == nullptr ? "" : r->spectrum.failure.c_str();
}

pishape_status pishape_qlm_energy(const pishape_qlm_result* r, size_t index, double* out) {
  PISHAPE_REQUIRE(r);
  PISHAPE_REQUIRE(out);
  if (index >= r->spectrum.iterates.size()) return fail(PISHAPE_ERR_OUT_OF_RANGE, "no such iterate");
  *out = r->spectrum.iterates[index].e;
  return PISHAPE_OK;
}

size_t pishape_qlm_grid_size(const pishape_qlm_result* r) { return r == nullptr ? 0 : r->grid_size; }

pishape_status pishape_qlm_log_derivative(const pishape_qlm_result* r, size_t index, double* buffer,
                                          size_t length) {
  PISHAPE_REQUIRE(r);
  PISHAPE_REQUIRE(buffer);
  if (index >= r->spectrum.iterates.size()) return fail(PISHAPE_ERR_OUT_OF_RANGE, "no such iterate");
  const auto& l = r->spectrum.iterates[index].l;
  if (length < l.size()) return fail(PISHAPE_ERR_OUT_OF_RANGE, "buffer shorter than the grid");
  std::copy(l.begin(), l.end(), buffer);
  return PISHAPE_OK;
}

void pishape_qlm_free(pishape_qlm_result* r) { delete r; }

/* two-qubit channel */

void pishape_twoqubit_params_default(pishape_twoqubit_params* p) {
  if (p == nullptr) return;
  const pishape::twoqubit::TwoQubitParams d;
  *p = {d.m_eff, d.omega, d.a_B, d.lambda, d.k, d.alpha_R, d.coulomb_k, d.fermi_l,
        PISHAPE_WAVE_ALONG_Y};
}

pishape_status pishape_twoqubit_expectations(const pishape_twoqubit_params* p, double* h0,
                                             pishape_complex* hr) {
  PISHAPE_REQUIRE(p);
  PISHAPE_REQUIRE(h0);
  PISHAPE_REQUIRE(hr);
  return guarded([&] {
    const auto e = pishape::twoqubit::expectations(to_cpp(*p));
    *h0 = e.h0;
    *hr = to_c(e.hr);
  });
}

pishape_status pishape_twoqubit_check(double h0, pishape_complex hr, pishape_eigen_report** out) {
  PISHAPE_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    auto r = std::make_unique<pishape_eigen_report>();
    r->report = pishape::twoqubit::claimed_vs_numeric(pishape::twoqubit::build_matrix(h0, from_c(hr)));
    r->json = r->report.to_json();
    *out = r.release();
  });
}

pishape_status pishape_report_claimed_eigenvalue(const pishape_eigen_report* r, size_t i,
                                                 pishape_complex* out) {
  PISHAPE_REQUIRE(r);
  PISHAPE_REQUIRE(out);
  if (i >= 4) return fail(PISHAPE_ERR_OUT_OF_RANGE, "eigenvalue index must be below 4");
  *out = to_c(r->report.claimed_eigenvalues[i]);
  return PISHAPE_OK;
}

pishape_status pishape_report_numeric_eigenvalue(const pishape_eigen_report* r, size_t i,
                                                 pishape_complex* out) {
  PISHAPE_REQUIRE(r);
  PISHAPE_REQUIRE(out);
  if (i >= r->report.numeric_eigenvalues.size()) {
    return fail(PISHAPE_ERR_OUT_OF_RANGE, "eigenvalue index must be below 4");
  }
  *out = to_c(r->report.numeric_eigenvalues[i]);
  return PISHAPE_OK;
}

pishape_status pishape_report_residual(const pishape_eigen_report* r, size_t i, double* out) {
  PISHAPE_REQUIRE(r);
  PISHAPE_REQUIRE(out);
  if (i >= 4) return fail(PISHAPE_ERR_OUT_OF_RANGE, "residual index must be below 4");
  *out = r->report.residuals[i];
  return PISHAPE_OK;
}

pishape_status pishape_report_vector_claimed(const pishape_eigen_report* r, size_t i, int* out) {
  PISHAPE_REQUIRE(r);
  PISHAPE_REQUIRE(out);
  if (i >= 4) return fail(PISHAPE_ERR_OUT_OF_RANGE, "vector index must be below 4");
  *out = r->report.vector_sources[i] == pishape::twoqubit::VectorSource::claimed ? 1 : 0;
  return PISHAPE_OK;
}

double pishape_report_set_difference(const pishape_eigen_report* r) {
  return r == nullptr ? NAN : r->report.eigenvalue_set_difference;
}

int pishape_report_hermitian(const pishape_eigen_report* r) {
  return r != nullptr && r->report.hermitian ? 1 : 0;
}

int pishape_report_degenerate(const pishape_eigen_report* r) {
  return r != nullptr && r->report.degenerate ? 1 : 0;
}

int pishape_report_numeric_flagged(const pishape_eigen_report* r) {
  return r != nullptr && r->report.numeric_flagged ? 1 : 0;
}

const char* pishape_report_json(const pishape_eigen_report* r) {
  return r == nullptr ? "" : r->json.c_str();
}

void pishape_report_free(pishape_eigen_report* r) { delete r; }

/* gates */

pishape_status pishape_gate_u_swap_alpha(double alpha, pishape_gate** out) {
  return make_gate(out, [&] { return pishape::gates::u_swap_alpha({alpha, {}}); });
}

pishape_status pishape_gate_u_swap_projector(double alpha, pishape_gate** out) {
  return make_gate(out, [&] { return pishape::gates::u_swap_projector({alpha, {}}); });
}

pishape_status pishape_gate_exchange_evolution(double alpha, pishape_gate** out) {
  return make_gate(out, [&] { return pishape::gates::exchange_evolution({alpha, {}}); });
}

pishape_status pishape_gate_exchange_evolution_expm(double alpha, pishape_gate** out) {
  return make_gate(out, [&] { return pishape::gates::exchange_evolution_expm({alpha, {}}); });
}

pishape_status pishape_gate_swap(pishape_gate** out) {
  return make_gate(out, [] { return pishape::gates::swap_gate(); });
}

pishape_status pishape_gate_sqrt_swap(pishape_gate** out) {
  return make_gate(out, [] { return pishape::gates::sqrt_swap_gate(); });
}

pishape_status pishape_gate_cnot(pishape_gate** out) {
  return make_gate(out, [] { return pishape::gates::cnot_gate(); });
}

pishape_status pishape_gate_rz(pishape_qubit which, double angle, pishape_gate** out) {
  if (!is_qubit(which)) return fail(PISHAPE_ERR_INVALID_ARGUMENT, "unknown qubit");
  return make_gate(out, [&] { return pishape::gates::single_qubit_rz(to_cpp(which), angle); });
}

pishape_status pishape_gate_hadamard(pishape_qubit which, pishape_gate** out) {
  if (!is_qubit(which)) return fail(PISHAPE_ERR_INVALID_ARGUMENT, "unknown qubit");
  return make_gate(out, [&] { return pishape::gates::single_qubit_hadamard(to_cpp(which)); });
}

pishape_status pishape_gate_cnot_from_sqrt_swap(pishape_gate** out, size_t* circuit_length,
                                                size_t* sqrt_swap_count, double* fidelity) {
  return make_gate(out, [&] {
    const auto s = pishape::gates::cnot_from_sqrt_swap();
    if (circuit_length != nullptr) *circuit_length = s.circuit.size();
    if (sqrt_swap_count != nullptr) {
      const auto reference = pishape::gates::sqrt_swap_gate();
      *sqrt_swap_count = static_cast<size_t>(
          std::count_if(s.circuit.begin(), s.circuit.end(), [&](const pishape::gates::Gate4& g) {
            return pishape::numerics::max_abs_diff(g.matrix(), reference.matrix()) <= 1e-15;
          }));
    }
    if (fidelity != nullptr) *fidelity = s.fidelity;
    return s.result;
  });
}

pishape_status pishape_gate_multiply(const pishape_gate* a, const pishape_gate* b,
                                     pishape_gate** out) {
  PISHAPE_REQUIRE(a);
  PISHAPE_REQUIRE(b);
  return make_gate(out, [&] { return a->gate * b->gate; });
}

pishape_status pishape_gate_fidelity(const pishape_gate* u, const pishape_gate* v, double* out) {
  PISHAPE_REQUIRE(u);
  PISHAPE_REQUIRE(v);
  PISHAPE_REQUIRE(out);
  return guarded([&] { *out = pishape::gates::fidelity(u->gate, v->gate); });
}

pishape_status pishape_gate_unitarity_error(const pishape_gate* g, double* out) {
  PISHAPE_REQUIRE(g);
  PISHAPE_REQUIRE(out);
  return guarded([&] { *out = g->gate.unitarity_error(); });
}

pishape_status pishape_gate_entry(const pishape_gate* g, size_t row, size_t col,
                                  pishape_complex* out) {
  PISHAPE_REQUIRE(g);
  PISHAPE_REQUIRE(out);
  if (row >= 4 || col >= 4) return fail(PISHAPE_ERR_OUT_OF_RANGE, "gate index must be below 4");
  *out = to_c(g->gate.matrix()(row, col));
  return PISHAPE_OK;
}

pishape_status pishape_gate_apply(const pishape_gate* g, const pishape_complex in[4],
                                  pishape_complex out[4]) {
  PISHAPE_REQUIRE(g);
  PISHAPE_REQUIRE(in);
  PISHAPE_REQUIRE(out);
  return guarded([&] {
    const auto s = pishape::gates::apply(g->gate, to_state(in));
    for (int i = 0; i < 4; ++i) out[i] = to_c(s[i]);
  });
}

void pishape_gate_free(pishape_gate* g) { delete g; }

pishape_status pishape_bell_state(pishape_bell which, pishape_complex out[4]) {
  PISHAPE_REQUIRE(out);
  if (which < PISHAPE_BELL_PHI_PLUS || which > PISHAPE_BELL_PSI_MINUS) {
    return fail(PISHAPE_ERR_INVALID_ARGUMENT, "unknown Bell state");
  }
  return guarded([&] {
    const auto s = pishape::gates::bell_state(static_cast<pishape::gates::BellState>(which));
    for (int i = 0; i < 4; ++i) out[i] = to_c(s[i]);
  });
}

pishape_status pishape_concurrence(const pishape_complex state[4], double* out) {
  PISHAPE_REQUIRE(state);
  PISHAPE_REQUIRE(out);
  return guarded([&] { *out = pishape::gates::concurrence(to_state(state)); });
}

pishape_status pishape_exchange_identity_error(double* out) {
  PISHAPE_REQUIRE(out);
  return guarded([&] { *out = pishape::gates::exchange_identity_error(); });
}

}  // extern "C"
