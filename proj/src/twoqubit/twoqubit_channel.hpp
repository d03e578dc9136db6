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

#ifndef PISHAPE_TWOQUBIT_TWOQUBIT_CHANNEL_HPP
#define PISHAPE_TWOQUBIT_TWOQUBIT_CHANNEL_HPP

#include <array>
#include <string>

#include "numerics/complex_matrix.hpp"
#include "numerics/eigen.hpp"

namespace pishape::twoqubit {

using numerics::Complex;
using numerics::ComplexMatrix;
using numerics::ComplexVector;

// Spin basis ordering everywhere: (up-up, up-down, down-up, down-down),
// source spin first.

enum class WaveDirection { along_x, along_y };

struct TwoQubitParams {
  double m_eff = 1.0;
  double omega = 1.0;
  double a_B = 1.0;      // harmonic length
  double lambda = 1.0;   // longitudinal Gaussian width
  double k = 0.0;        // plane-wave number
  double alpha_R = 0.0;  // Rashba strength
  double coulomb_k = 0.0;
  double fermi_l = 1.0;
  WaveDirection wave_direction = WaveDirection::along_y;

  void validate() const;
};

struct Expectations {
  double h0 = 0.0;
  Complex hr = 0.0;
};

struct TwoQubitMatrix {
  double h0 = 0.0;
  Complex hr = 0.0;
  ComplexMatrix matrix;
};

/// Closed-form eigenpairs read off the channel matrix. The last two are
/// singular when hr = 0 or |hr| = |h0|.
struct ClaimedEigenSystem {
  std::array<Complex, 4> eigenvalues;  // h0 - hr, h0 + hr, -s, +s; s = sqrt(h0^2 - hr^2)
  std::array<ComplexVector, 4> eigenvectors;
  std::array<bool, 4> vector_defined;  // false where the formula divides by zero
};

enum class VectorSource { claimed, numeric };

struct EigenReport {
  double h0 = 0.0;
  Complex hr = 0.0;
  std::array<Complex, 4> claimed_eigenvalues;
  ComplexVector numeric_eigenvalues;
  std::array<double, 4> residuals{};  // ||M v - lambda v|| / ||v||, claimed order
  std::array<VectorSource, 4> vector_sources{};
  double eigenvalue_set_difference = 0.0;  // max distance after optimal matching
  bool hermitian = false;
  bool degenerate = false;  // |hr| >= |h0|
  bool numeric_flagged = false;

  /// {h0, hr, claimed_eigenvalues[], numeric_eigenvalues[], residuals[],
  /// hermitian, degenerate, ...}; complex numbers are [re, im] pairs.
  std::string to_json() const;
};

/// Gaussian expectations of the channel Hamiltonian: kinetic + quartic +
/// Coulomb go into h0, the Rashba term into hr.
Expectations expectations(const TwoQubitParams& p);

/// The 4x4 matrix laid out as
///   [h0, 0, hr, 0], [hr, 0, h0, 0], [0, h0, 0, hr], [0, hr, 0, h0].
TwoQubitMatrix build_matrix(double h0, Complex hr);

ClaimedEigenSystem claimed_eigensystem(double h0, Complex hr);

EigenReport claimed_vs_numeric(const TwoQubitMatrix& m);

/// J = lowest triplet energy - highest singlet energy.
double exchange_strength(double e_triplet_low, double e_singlet_high);

}  // namespace pishape::twoqubit

#endif  // PISHAPE_TWOQUBIT_TWOQUBIT_CHANNEL_HPP
