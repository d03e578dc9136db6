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


#include "gates/gates.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "common/error.hpp"

namespace pishape::gates {

namespace {

constexpr double kNormTol = 1e-9;
constexpr double kUnitaryTol = 1e-9;

const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

ComplexMatrix on_qubit(Qubit which, const ComplexMatrix& op) {
  const ComplexMatrix id = ComplexMatrix::identity(2);
  return which == Qubit::source ? numerics::kron(op, id) : numerics::kron(id, op);
}

ComplexMatrix pauli(int axis) {
  const Complex i(0.0, 1.0);
  switch (axis) {
    case 0: return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
    case 1: return ComplexMatrix::from_rows({{0.0, -i}, {i, 0.0}});
    default: return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
  }
}

}  // namespace

TwoQubitState::TwoQubitState(ComplexVector amplitudes) : amp_(std::move(amplitudes)) {
  if (amp_.size() != 4) throw_invalid("TwoQubitState: need 4 amplitudes");
  for (const Complex& a : amp_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw_invalid("TwoQubitState: non-finite amplitude");
    }
  }
}

double TwoQubitState::norm() const { return numerics::norm2(amp_); }

TwoQubitState TwoQubitState::normalized() const {
  const double n = norm();
  if (!(n > 0.0)) throw_invalid("TwoQubitState: cannot normalize the zero vector");
  ComplexVector v = amp_;
  for (Complex& a : v) a /= n;
  return TwoQubitState(std::move(v));
}

Gate4::Gate4(ComplexMatrix m) : m_(std::move(m)) {
  if (m_.dim() != 4) throw_invalid("Gate4: matrix must be 4x4");
  if (!m_.all_finite()) throw_invalid("Gate4: non-finite entry");
}

double Gate4::unitarity_error() const {
  return numerics::max_abs_diff(m_.adjoint() * m_, ComplexMatrix::identity(4));
}

TwoQubitState bell_state(BellState which) {
  const double r = kInvSqrt2;
  switch (which) {
    case BellState::phi_plus: return TwoQubitState({r, 0.0, 0.0, r});
    case BellState::phi_minus: return TwoQubitState({r, 0.0, 0.0, -r});
    case BellState::psi_plus: return TwoQubitState({0.0, r, r, 0.0});
    case BellState::psi_minus: return TwoQubitState({0.0, r, -r, 0.0});
  }
  throw_invalid("bell_state: unknown state");
}

TwoQubitState product_state(Complex a_s, Complex b_s, Complex a_c, Complex b_c) {
  return TwoQubitState({a_s * a_c, a_s * b_c, b_s * a_c, b_s * b_c}).normalized();
}

Gate4 u_swap_alpha(const ExchangePulse& p) {
  const Complex e = std::polar(1.0, p.alpha);
  const Complex d = 0.5 * (1.0 + e), o = 0.5 * (1.0 - e);
  const Complex z = 0.0, one = 1.0;
  return Gate4(ComplexMatrix::from_rows({{one, z, z, z}, {z, d, o, z}, {z, o, d, z}, {z, z, z, one}}));
}

Gate4 u_swap_projector(const ExchangePulse& p) {
  ComplexMatrix m(4);
  for (BellState b : {BellState::phi_plus, BellState::phi_minus, BellState::psi_plus}) {
    const TwoQubitState s = bell_state(b);
    m += ComplexMatrix::outer(s.amplitudes(), s.amplitudes());
  }
  const TwoQubitState singlet = bell_state(BellState::psi_minus);
  m += std::polar(1.0, p.alpha) * ComplexMatrix::outer(singlet.amplitudes(), singlet.amplitudes());
  return Gate4(m);
}

Gate4 swap_gate() { return u_swap_alpha({std::numbers::pi, "swap"}); }

Gate4 sqrt_swap_gate() { return u_swap_alpha({std::numbers::pi / 2.0, "sqrt_swap"}); }

ComplexMatrix spin_dot_product() {
  ComplexMatrix m(4);
  for (int axis = 0; axis < 3; ++axis) m += numerics::kron(pauli(axis), pauli(axis));
  return m * Complex(0.25);
}

Gate4 exchange_evolution(const ExchangePulse& p) {
  const Complex phase = std::polar(1.0, p.alpha / 4.0);
  const ComplexMatrix m = std::cos(p.alpha / 2.0) * ComplexMatrix::identity(4) -
                          Complex(0.0, std::sin(p.alpha / 2.0)) * swap_gate().matrix();
  return Gate4(phase * m);
}

Gate4 exchange_evolution_expm(const ExchangePulse& p) {
  return Gate4(numerics::expm(Complex(0.0, -p.alpha) * spin_dot_product()));
}

double exchange_identity_error() {
  const ComplexMatrix rhs =
      Complex(2.0) * swap_gate().matrix() - ComplexMatrix::identity(4);
  return numerics::max_abs_diff(Complex(4.0) * spin_dot_product(), rhs);
}

Gate4 single_qubit_rz(Qubit which, double angle) {
  const Complex z = 0.0;
  return Gate4(on_qubit(
      which, ComplexMatrix::from_rows({{std::polar(1.0, -angle / 2.0), z},
                                       {z, std::polar(1.0, angle / 2.0)}})));
}

Gate4 single_qubit_hadamard(Qubit which) {
  const double r = kInvSqrt2;
  return Gate4(on_qubit(which, ComplexMatrix::from_rows({{r, r}, {r, -r}})));
}

Gate4 cnot_gate() {
  const Complex z = 0.0, one = 1.0;
  return Gate4(
      ComplexMatrix::from_rows({{one, z, z, z}, {z, one, z, z}, {z, z, z, one}, {z, z, one, z}}));
}

CnotSynthesis cnot_from_sqrt_swap() {
  constexpr double pi = std::numbers::pi;
  // The z-rotation sequence alone is a controlled phase; Hadamards on the
  // target turn it into CNOT.
  CnotSynthesis out{{single_qubit_hadamard(Qubit::channel),
                     sqrt_swap_gate(),
                     single_qubit_rz(Qubit::source, pi),
                     sqrt_swap_gate(),
                     single_qubit_rz(Qubit::channel, -pi / 2.0),
                     single_qubit_rz(Qubit::source, pi / 2.0),
                     single_qubit_hadamard(Qubit::channel)},
                    Gate4(ComplexMatrix::identity(4)),
                    0.0};
  ComplexMatrix product = ComplexMatrix::identity(4);
  for (const Gate4& g : out.circuit) product = g.matrix() * product;
  // Global phase left over by the sequence.
  out.result = Gate4(Complex(0.0, 1.0) * product);
  out.fidelity = fidelity(out.result, cnot_gate());
  if (!(out.fidelity >= 1.0 - 1e-10)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "cnot_from_sqrt_swap: fidelity " << out.fidelity << " below 1 - 1e-10";
    throw_computation(msg.str());
  }
  return out;
}

TwoQubitState apply(const Gate4& g, const TwoQubitState& s) {
  if (g.unitarity_error() > kUnitaryTol) throw_invalid("apply: gate is not unitary");
  if (std::abs(s.norm() - 1.0) > kNormTol) throw_invalid("apply: state is not normalized");
  return TwoQubitState(g.matrix().apply(s.amplitudes()));
}

double concurrence(const TwoQubitState& s) {
  if (std::abs(s.norm() - 1.0) > kNormTol) throw_invalid("concurrence: state is not normalized");
  return 2.0 * std::abs(s[0] * s[3] - s[1] * s[2]);
}

double fidelity(const Gate4& u, const Gate4& v) {
  return std::abs((u.matrix().adjoint() * v.matrix()).trace()) / 4.0;
}

}  // namespace pishape::gates
