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


#ifndef PISHAPE_GATES_GATES_HPP
#define PISHAPE_GATES_GATES_HPP

#include <optional>
#include <string>
#include <vector>

#include "numerics/complex_matrix.hpp"

namespace pishape::gates {

using numerics::Complex;
using numerics::ComplexMatrix;
using numerics::ComplexVector;

// Basis ordering: (up-up, up-down, down-up, down-down), source qubit first.

class TwoQubitState {
 public:
  /// Throws unless amplitudes has four finite entries.
  explicit TwoQubitState(ComplexVector amplitudes);

  const ComplexVector& amplitudes() const noexcept { return amp_; }
  const Complex& operator[](std::size_t i) const { return amp_[i]; }
  double norm() const;
  TwoQubitState normalized() const;

 private:
  ComplexVector amp_;
};

class Gate4 {
 public:
  explicit Gate4(ComplexMatrix m);

  const ComplexMatrix& matrix() const noexcept { return m_; }
  /// max |U^H U - I|.
  double unitarity_error() const;
  bool is_unitary(double tol = 1e-12) const { return unitarity_error() <= tol; }

  friend Gate4 operator*(const Gate4& a, const Gate4& b) { return Gate4(a.m_ * b.m_); }

 private:
  ComplexMatrix m_;
};

struct ExchangePulse {
  double alpha = 0.0;  // integrated exchange, (1/hbar) int J dt
  std::optional<std::string> description;
};

enum class BellState { phi_plus, phi_minus, psi_plus, psi_minus };
enum class Qubit { source, channel };

TwoQubitState bell_state(BellState which);

/// Normalized product state (a_s|up> + b_s|down>) (x) (a_c|up> + b_c|down>).
TwoQubitState product_state(Complex a_s, Complex b_s, Complex a_c, Complex b_c);

/// Identity on the triplet, e^{i alpha} on the singlet, as an explicit matrix.
Gate4 u_swap_alpha(const ExchangePulse& p);

/// Same gate as a sum of Bell projectors.
Gate4 u_swap_projector(const ExchangePulse& p);

Gate4 swap_gate();
Gate4 sqrt_swap_gate();

/// S_s . S_c with S = sigma/2.
ComplexMatrix spin_dot_product();

/// exp(-i alpha S_s.S_c) = e^{i alpha/4} (cos(alpha/2) I - i sin(alpha/2) SWAP).
Gate4 exchange_evolution(const ExchangePulse& p);

/// exp(-i alpha S_s.S_c) by a general matrix exponential.
Gate4 exchange_evolution_expm(const ExchangePulse& p);

/// max |4 S_s.S_c - (2 SWAP - I)|.
double exchange_identity_error();

/// diag(e^{-i angle/2}, e^{i angle/2}) on one qubit.
Gate4 single_qubit_rz(Qubit which, double angle);

Gate4 single_qubit_hadamard(Qubit which);

Gate4 cnot_gate();  // control = source, target = channel

struct CnotSynthesis {
  std::vector<Gate4> circuit;  // in order of application
  Gate4 result;
  double fidelity = 0.0;
};

/// CNOT from two sqrt(SWAP) pulses plus single-qubit gates. Throws a
/// computation error if the product misses CNOT by more than 1e-10.
CnotSynthesis cnot_from_sqrt_swap();

/// Requires a unitary gate (1e-9) and a normalized state (1e-9).
TwoQubitState apply(const Gate4& g, const TwoQubitState& s);

/// |<s*| sigma_y (x) sigma_y |s>| = 2 |s0 s3 - s1 s2|.
double concurrence(const TwoQubitState& s);

/// |tr(U^H V)| / 4; 1 means equal up to a global phase.
double fidelity(const Gate4& u, const Gate4& v);

}  // namespace pishape::gates

#endif  // PISHAPE_GATES_GATES_HPP
