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

// Spin-split spectrum of the 2DEG source lead.
//
// The lead is described by a transverse standing wave sqrt(2/L_x) sin(pi x/L_x)
// times a plane wave e^{iky} along the propagation direction, with spin up or
// down. The Hamiltonian is kinetic + isotropic harmonic confinement +
// logarithmic Coulomb term -beta ln(|x - y| / R) + Rashba alpha (sx Py - sy Px).
// Its 2x2 expectation matrix in {up, down} is diagonalized in closed form.
//
// Units: hbar = m = 1; m_eff is a dimensionless ratio.

#ifndef PISHAPE_SOURCE_SOURCE_SPECTRUM_HPP
#define PISHAPE_SOURCE_SOURCE_SPECTRUM_HPP

#include <numbers>
#include <span>
#include <vector>

#include "numerics/complex_matrix.hpp"
#include "numerics/grid.hpp"

namespace pishape::source {

using numerics::Complex;
using numerics::ComplexVector;

struct SourceParams {
  double m_eff = 1.0;
  double omega = 1.0;
  double beta = 0.5;     // log-Coulomb strength
  double R = 1.0;        // Coulomb length scale
  double alpha_R = 0.2;  // Rashba strength
  double L_x = std::numbers::pi;
  double k = 1.0;            // wavenumber along y
  double reg_delta = 1e-3;   // half-width of the excluded window around x = y

  /// Throws Error(invalid_argument) if any invariant is violated.
  void validate() const;
};

struct HMatrix2 {
  Complex h11, h12, h21, h22;

  numerics::ComplexMatrix matrix() const;
};

struct SpinSplitResult {
  double e_up = 0.0;
  double e_down = 0.0;
  double delta_e = 0.0;
  ComplexVector eigvec_up;
  ComplexVector eigvec_down;
  bool used_fallback = false;  // vectors came from eigen_small
};

struct ChartRow {
  double x, y, e_up, e_down, delta_e;
};

/// Expectation matrix over one transverse mode and one unit length along y.
HMatrix2 build_hmatrix(const SourceParams& p);

/// The same matrix with integrand densities at the point (x, y) in place of
/// integrated expectations. Only the Hermitian part of the Rashba density is
/// kept, so h21 = conj(h12) holds pointwise.
HMatrix2 local_hmatrix(const SourceParams& p, double x, double y);

/// Closed-form eigenpairs of a Hermitian 2x2 matrix.
SpinSplitResult spin_split(const HMatrix2& h);

/// Pointwise spin splitting over x_values times y_grid, row-major in x then y.
std::vector<ChartRow> chart_delta_e(const SourceParams& p, std::span<const double> x_values,
                                    const numerics::Grid1D& y_grid);

}  // namespace pishape::source

#endif  // PISHAPE_SOURCE_SOURCE_SPECTRUM_HPP
