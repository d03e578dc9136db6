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

#include "source/source_spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "common/error.hpp"
#include "numerics/eigen.hpp"
#include "numerics/quadrature.hpp"

namespace pishape::source {

namespace {

constexpr double kQuadTol = 1e-11;
constexpr double kDegenerate = 1e-14;

// |phi(x)|^2 of the transverse mode.
double density(const SourceParams& p, double x) {
  const double s = std::sin(std::numbers::pi * x / p.L_x);
  return 2.0 / p.L_x * s * s;
}

double transverse_kinetic(const SourceParams& p) {
  return std::numbers::pi * std::numbers::pi / (2.0 * p.m_eff * p.L_x * p.L_x);
}

double longitudinal_kinetic(const SourceParams& p) { return p.k * p.k / (2.0 * p.m_eff); }

// Mean of ln(|x - y| / R) over the transverse density with |x - y| < reg_delta
// cut out.
double log_average_at(const SourceParams& p, double y) {
  auto f = [&](double x) { return density(p, x) * std::log(std::abs(x - y) / p.R); };
  double total = 0.0;
  const double left = std::min(y - p.reg_delta, p.L_x);
  const double right = std::max(y + p.reg_delta, 0.0);
  if (left > 0.0) total += numerics::integrate(f, 0.0, left, kQuadTol);
  if (right < p.L_x) total += numerics::integrate(f, right, p.L_x, kQuadTol);
  return total;
}

}  // namespace

void SourceParams::validate() const {
  auto fail = [](const char* what) { throw_invalid(std::string("SourceParams: ") + what); };
  if (!(m_eff > 0.0)) fail("m_eff must be positive");
  if (!(omega > 0.0)) fail("omega must be positive");
  if (!(beta >= 0.0)) fail("beta must be non-negative");
  if (!(R > 0.0)) fail("R must be positive");
  if (!(alpha_R >= 0.0)) fail("alpha_R must be non-negative");
  if (!(L_x > 0.0)) fail("L_x must be positive");
  if (!std::isfinite(k)) fail("k must be finite");
  if (!(reg_delta > 0.0)) fail("reg_delta must be positive");
  if (!(reg_delta < L_x / 10.0)) fail("reg_delta must be below L_x/10");
}

numerics::ComplexMatrix HMatrix2::matrix() const {
  return numerics::ComplexMatrix::from_rows({{h11, h12}, {h21, h22}});
}

HMatrix2 build_hmatrix(const SourceParams& p) {
  p.validate();

  const double x2 = numerics::integrate(
      [&](double x) { return density(p, x) * x * x; }, 0.0, p.L_x, kQuadTol);
  const double harmonic = 0.5 * p.m_eff * p.omega * p.omega * x2;

  // Per unit length along y: the window y in [0, 1].
  double coulomb = 0.0;
  if (p.beta != 0.0) {
    const double mean_log =
        numerics::integrate([&](double y) { return log_average_at(p, y); }, 0.0, 1.0, kQuadTol);
    coulomb = -p.beta * mean_log;
  }

  const double diag = transverse_kinetic(p) + longitudinal_kinetic(p) + harmonic + coulomb;
  // <Px> vanishes for the real transverse profile; <Py> = k.
  const Complex rashba = p.alpha_R * p.k;
  return {diag, rashba, std::conj(rashba), diag};
}

HMatrix2 local_hmatrix(const SourceParams& p, double x, double y) {
  p.validate();
  const double rho = density(p, x);
  const double distance = std::max(std::abs(x - y), p.reg_delta);
  const double energy = transverse_kinetic(p) + longitudinal_kinetic(p) +
                        0.5 * p.m_eff * p.omega * p.omega * (x * x + y * y) -
                        p.beta * std::log(distance / p.R);
  const Complex rashba = p.alpha_R * p.k * rho;
  return {rho * energy, rashba, std::conj(rashba), rho * energy};
}

SpinSplitResult spin_split(const HMatrix2& h) {
  const double h11 = h.h11.real();
  const double h22 = h.h22.real();
  const double diff = h11 - h22;
  const Complex coupling = h.h12 * h.h21;
  const double disc = std::max(0.0, diff * diff + 4.0 * coupling.real());
  const double root = std::sqrt(disc);

  SpinSplitResult out;
  out.e_up = 0.5 * (h11 + h22 - root);
  out.e_down = 0.5 * (h11 + h22 + root);
  out.delta_e = root;

  if (disc < kDegenerate) {
    out.eigvec_up = {1.0, 0.0};
    out.eigvec_down = {0.0, 1.0};
    return out;
  }
  if (h.h21 == Complex(0.0)) {
    const numerics::EigenSystem es = numerics::eigen_small(h.matrix());
    out.eigvec_up = es.eigenvectors[0];
    out.eigvec_down = es.eigenvectors[1];
    out.used_fallback = true;
    return out;
  }

  // First component -(-h11 + h22 +/- root) / (2 h21). The numerator is
  // rewritten via (diff - root)(diff + root) = -4 h12 h21 where it would cancel.
  const Complex num_up = diff <= 0.0 ? Complex(diff - root) : -4.0 * coupling / (diff + root);
  const Complex num_down = diff >= 0.0 ? Complex(diff + root) : -4.0 * coupling / (diff - root);
  auto make = [&](Complex num) {
    ComplexVector v{num / (2.0 * h.h21), 1.0};
    const double n = numerics::norm2(v);
    for (Complex& c : v) c /= n;
    return v;
  };
  out.eigvec_up = make(num_up);
  out.eigvec_down = make(num_down);
  return out;
}

std::vector<ChartRow> chart_delta_e(const SourceParams& p, std::span<const double> x_values,
                                    const numerics::Grid1D& y_grid) {
  p.validate();
  for (double x : x_values) {
    if (!(x > 0.0 && x < p.L_x)) {
      std::ostringstream msg;
      msg << "chart_delta_e: x = " << x << " outside (0, L_x = " << p.L_x << ")";
      throw_invalid(msg.str());
    }
  }
  std::vector<ChartRow> rows;
  rows.reserve(x_values.size() * y_grid.size());
  for (double x : x_values) {
    for (std::size_t j = 0; j < y_grid.size(); ++j) {
      const double y = y_grid.point(j);
      const SpinSplitResult s = spin_split(local_hmatrix(p, x, y));
      rows.push_back({x, y, s.e_up, s.e_down, s.delta_e});
    }
  }
  return rows;
}

}  // namespace pishape::source
