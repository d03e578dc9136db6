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

// Channel spectrum by quasilinearization of the Riccati equation.
//
// With l = phi'/phi the 1D Schrodinger equation becomes l' + l^2 + k^2 = 0,
// k^2(y) = 2 m [E - V(y)]. Linearizing about the previous iterate gives
//
//   l_n' + 2 l_{n-1} l_n = l_{n-1}^2 - k^2,
//
// solved on the half line [0, Y] with l_n(0) = 0 (even states) through the
// integrating factor u = exp(int 2 l_{n-1}). The energy of each iterate is
// fixed by requiring l_n u -> 0 at infinity, i.e. int u Q = 0.

#ifndef PISHAPE_CHANNEL_CHANNEL_QLM_HPP
#define PISHAPE_CHANNEL_CHANNEL_QLM_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "numerics/grid.hpp"

namespace pishape::channel {

enum class PotentialKind {
  quartic_double_well,  // (m w^2 / 8a^2)(y^2 - a^2)^2
  harmonic,             // m w^2 y^2 / 2, used as an exactly solvable reference
};

struct ChannelPotentialParams {
  double m_eff = 1.0;
  double omega = 1.0;
  double a = 1.0;          // harmonic length; 1/sqrt(m omega) in natural units
  double coulomb_k = 0.0;  // Coulomb prefactor of the effective 1D interaction
  double fermi_l = 1.0;
  bool include_vc = false;
  PotentialKind kind = PotentialKind::quartic_double_well;

  void validate() const;

  /// Set when a differs from 1/sqrt(m_eff * omega).
  std::optional<std::string> consistency_warning() const;
};

struct QlmConfig {
  double g;  // zero iterate l_0(y) = -g y
  numerics::Grid1D grid;
  int max_iterations = 3;
  double quad_tol = 1e-10;  // adaptive quadrature tolerance (closed-form E_1)

  /// Grid must start at 0 and reach far enough that exp(-g Y^2) < 1e-12.
  void validate() const;

  /// g = omega, Y = 9/sqrt(g), 6001 nodes, 3 iterations.
  static QlmConfig defaults_for(const ChannelPotentialParams& p);
};

struct QlmIterate {
  int n = 0;
  std::vector<double> l;  // log-derivative sampled on the config grid
  double e = 0.0;
};

struct QlmSpectrum {
  std::vector<QlmIterate> iterates;
  bool complete = true;  // false when the loop stopped early
  std::string failure;   // reason when !complete
};

/// Confinement plus (optionally) the effective 1D Coulomb term
/// sqrt(pi/2) (k/l) erfcx(|y| / (sqrt(2) l)).
double channel_potential(const ChannelPotentialParams& p, double y);

std::vector<double> initial_log_derivative(const QlmConfig& cfg);

/// One quasilinear step: l_n(y) = (1/u(y)) int_0^y u(s) Q(s) ds.
/// When energy satisfies the decay condition the same function is evaluated
/// as -(1/u(y)) int_y^inf u Q ds, which does not amplify rounding in the tail.
std::vector<double> qlm_step(std::span<const double> prev_l, double energy,
                             const ChannelPotentialParams& p, const QlmConfig& cfg);

/// Energy from the decay condition:
/// E = int w (l^2 + 2 m V) / (2 m int w), w = exp(2 int_0^s l).
double qlm_energy(std::span<const double> prev_l, const ChannelPotentialParams& p,
                  const QlmConfig& cfg);

/// First-iterate energy for l_0 = -g s by adaptive quadrature on [0, inf),
/// truncated where exp(-g s^2) < 1e-14. Independent of the grid.
double qlm_first_energy(const ChannelPotentialParams& p, double g, double tol);

/// Alternates qlm_energy and qlm_step for cfg.max_iterations rounds.
QlmSpectrum qlm_spectrum(const ChannelPotentialParams& p, const QlmConfig& cfg);

}  // namespace pishape::channel

#endif  // PISHAPE_CHANNEL_CHANNEL_QLM_HPP
