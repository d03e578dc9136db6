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

#ifndef PISHAPE_NUMERICS_EIGEN_HPP
#define PISHAPE_NUMERICS_EIGEN_HPP

#include <complex>
#include <vector>

#include "numerics/complex_matrix.hpp"

namespace pishape::numerics {

/// Eigenpairs sorted by ascending real part, ties by ascending imaginary part.
/// Eigenvectors have unit norm; the largest component is made real positive.
struct EigenSystem {
  ComplexVector eigenvalues;
  std::vector<ComplexVector> eigenvectors;
  std::vector<double> residuals;  // ||M v - lambda v|| per pair
  bool hermitian = false;         // solved by the Jacobi path
  bool flagged = false;           // some residual above residual_tolerance
  double residual_tolerance = 0.0;
};

/// Full eigen decomposition of a 2x2 or 4x4 matrix.
///
/// Hermitian input goes through cyclic complex Jacobi rotations. Anything
/// else goes through the characteristic polynomial (Faddeev-LeVerrier,
/// extended precision), closed-form quadratic or quartic roots, Newton
/// polishing of each root, and inverse iteration for the vectors. Defective
/// or nearly defective matrices come back with flagged = true rather than
/// throwing.
EigenSystem eigen_small(const ComplexMatrix& m);

/// Monic characteristic polynomial coefficients c[0..n] (c[n] = 1) of m,
/// i.e. det(lambda I - m) = sum c[k] lambda^k.
std::vector<std::complex<long double>> characteristic_polynomial(
    const ComplexMatrix& m);

/// Roots of a monic quadratic or quartic given ascending coefficients.
std::vector<std::complex<long double>> polynomial_roots(
    const std::vector<std::complex<long double>>& coeffs);

}  // namespace pishape::numerics

#endif  // PISHAPE_NUMERICS_EIGEN_HPP
