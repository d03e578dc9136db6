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

#include "twoqubit/twoqubit_channel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "common/error.hpp"
#include "json.hpp"
#include "numerics/quadrature.hpp"
#include "numerics/special.hpp"

namespace pishape::twoqubit {

namespace {

nlohmann::ordered_json complex_json(Complex z) { return {z.real(), z.imag()}; }

// Effective 1D Coulomb interaction, even in y.
double coulomb_1d(const TwoQubitParams& p, double y) {
  return std::sqrt(std::numbers::pi / 2.0) * p.coulomb_k / p.fermi_l *
         numerics::erfcx(std::abs(y) / (std::numbers::sqrt2 * p.fermi_l));
}

double relative_residual(const ComplexMatrix& m, const ComplexVector& v, Complex lambda) {
  ComplexVector mv = m.apply(v);
  for (std::size_t i = 0; i < v.size(); ++i) mv[i] -= lambda * v[i];
  const double n = numerics::norm2(v);
  return n > 0.0 ? numerics::norm2(mv) / n : std::numeric_limits<double>::infinity();
}

}  // namespace

void TwoQubitParams::validate() const {
  auto fail = [](const char* what) { throw_invalid(std::string("TwoQubitParams: ") + what); };
  if (!(m_eff > 0.0)) fail("m_eff must be positive");
  if (!(omega > 0.0)) fail("omega must be positive");
  if (!(a_B > 0.0)) fail("a_B must be positive");
  if (!(lambda > 0.0)) fail("lambda must be positive");
  if (!std::isfinite(k)) fail("k must be finite");
  if (!(alpha_R >= 0.0)) fail("alpha_R must be non-negative");
  if (!(coulomb_k >= 0.0)) fail("coulomb_k must be non-negative");
  if (!(fermi_l > 0.0)) fail("fermi_l must be positive");
}

Expectations expectations(const TwoQubitParams& p) {
  p.validate();
  // |psi|^2 is Gaussian with variance lambda^2/2 in y and a_B^2/2 in x.
  double p_y_squared = 1.0 / (2.0 * p.lambda * p.lambda);
  if (p.wave_direction == WaveDirection::along_y) p_y_squared += p.k * p.k;
  const double kinetic = p_y_squared / (2.0 * p.m_eff);

  // E[(x^2 - a^2)^2] = E[x^4] - 2 a^2 E[x^2] + a^4 = 3a^4/4 - a^4 + a^4.
  const double a2 = p.a_B * p.a_B;
  const double quartic_moment = 0.75 * a2 * a2;
  const double quartic = p.m_eff * p.omega * p.omega / (8.0 * a2) * quartic_moment;

  double coulomb = 0.0;
  if (p.coulomb_k != 0.0) {
    const double upper = p.lambda * std::sqrt(-std::log(1e-16));
    const double norm = 1.0 / (p.lambda * std::sqrt(std::numbers::pi));
    coulomb = 2.0 * numerics::integrate(
                        [&](double y) {
                          return norm * std::exp(-y * y / (p.lambda * p.lambda)) * coulomb_1d(p, y);
                        },
                        0.0, upper, 1e-13);
  }

  // -i alpha <d/dy>: the Gaussian part is odd and drops out.
  const Complex hr = p.wave_direction == WaveDirection::along_y ? Complex(p.alpha_R * p.k) : Complex(0.0);
  return {kinetic + quartic + coulomb, hr};
}

TwoQubitMatrix build_matrix(double h0, Complex hr) {
  if (!std::isfinite(h0) || !std::isfinite(hr.real()) || !std::isfinite(hr.imag())) {
    throw_invalid("build_matrix: non-finite input");
  }
  const Complex z = 0.0;
  const Complex d = h0;
  return {h0, hr,
          ComplexMatrix::from_rows({{d, z, hr, z}, {hr, z, d, z}, {z, d, z, hr}, {z, hr, z, d}})};
}

ClaimedEigenSystem claimed_eigensystem(double h0, Complex hr) {
  const Complex c0 = h0;
  const Complex s = std::sqrt(c0 * c0 - hr * hr);
  ClaimedEigenSystem out;
  out.eigenvalues = {c0 - hr, c0 + hr, -s, s};
  out.eigenvectors[0] = {1.0, -1.0, -1.0, 1.0};
  out.eigenvectors[1] = {1.0, 1.0, 1.0, 1.0};
  out.vector_defined = {true, true, false, false};
  const bool singular = hr == Complex(0.0) || s == Complex(0.0);
  if (!singular) {
    const Complex h02 = c0 * c0, hr2 = hr * hr;
    out.eigenvectors[2] = {-1.0, -(c0 + s) / hr, -(-h02 + hr2 - c0 * s) / (hr * s), 1.0};
    out.eigenvectors[3] = {-1.0, -(c0 - s) / hr, -(h02 - hr2 - c0 * s) / (hr * s), 1.0};
    out.vector_defined[2] = out.vector_defined[3] = true;
  }
  return out;
}

EigenReport claimed_vs_numeric(const TwoQubitMatrix& m) {
  if (!m.matrix.all_finite()) throw_invalid("claimed_vs_numeric: non-finite matrix");
  EigenReport r;
  r.h0 = m.h0;
  r.hr = m.hr;
  r.degenerate = std::abs(m.hr) >= std::abs(m.h0);
  const double scale = std::max(1.0, m.matrix.frobenius_norm());
  r.hermitian = m.matrix.is_hermitian(1e-14 * scale);

  const ClaimedEigenSystem claimed = claimed_eigensystem(m.h0, m.hr);
  const numerics::EigenSystem numeric = numerics::eigen_small(m.matrix);
  r.claimed_eigenvalues = claimed.eigenvalues;
  r.numeric_eigenvalues = numeric.eigenvalues;
  r.numeric_flagged = numeric.flagged;

  // Best one-to-one matching of claimed onto numeric eigenvalues.
  std::array<std::size_t, 4> perm{0, 1, 2, 3}, best = perm;
  double best_cost = std::numeric_limits<double>::infinity();
  do {
    double cost = 0.0;
    for (std::size_t j = 0; j < 4; ++j)
      cost = std::max(cost, std::abs(claimed.eigenvalues[j] - numeric.eigenvalues[perm[j]]));
    if (cost < best_cost) {
      best_cost = cost;
      best = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  r.eigenvalue_set_difference = best_cost;

  for (std::size_t j = 0; j < 4; ++j) {
    const bool use_claimed = claimed.vector_defined[j] && (j < 2 || !r.degenerate);
    const ComplexVector& v = use_claimed ? claimed.eigenvectors[j] : numeric.eigenvectors[best[j]];
    r.vector_sources[j] = use_claimed ? VectorSource::claimed : VectorSource::numeric;
    r.residuals[j] = relative_residual(m.matrix, v, claimed.eigenvalues[j]);
  }
  return r;
}

std::string EigenReport::to_json() const {
  nlohmann::ordered_json j;
  j["h0"] = h0;
  j["hr"] = complex_json(hr);
  j["claimed_eigenvalues"] = nlohmann::ordered_json::array();
  for (const Complex& z : claimed_eigenvalues) j["claimed_eigenvalues"].push_back(complex_json(z));
  j["numeric_eigenvalues"] = nlohmann::ordered_json::array();
  for (const Complex& z : numeric_eigenvalues) j["numeric_eigenvalues"].push_back(complex_json(z));
  j["residuals"] = residuals;
  j["vector_sources"] = nlohmann::ordered_json::array();
  for (VectorSource s : vector_sources)
    j["vector_sources"].push_back(s == VectorSource::claimed ? "claimed" : "numeric");
  j["eigenvalue_set_difference"] = eigenvalue_set_difference;
  j["hermitian"] = hermitian;
  j["degenerate"] = degenerate;
  j["numeric_flagged"] = numeric_flagged;
  return j.dump();
}

double exchange_strength(double e_triplet_low, double e_singlet_high) {
  return e_triplet_low - e_singlet_high;
}

}  // namespace pishape::twoqubit
