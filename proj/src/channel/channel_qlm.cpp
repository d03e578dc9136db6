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

#include "channel/channel_qlm.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "common/error.hpp"
#include "numerics/quadrature.hpp"
#include "numerics/special.hpp"

namespace pishape::channel {

namespace {

// Relative size of int u Q below which the decay condition counts as met.
constexpr double kDecayResidual = 1e-9;

std::vector<double> sample_potential(const ChannelPotentialParams& p, const numerics::Grid1D& g) {
  std::vector<double> v(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) v[i] = channel_potential(p, g.point(i));
  return v;
}

void check_samples(std::span<const double> prev_l, const QlmConfig& cfg, const char* who) {
  if (prev_l.size() != cfg.grid.size()) {
    throw_invalid(std::string(who) + ": prev_l is not sampled on the config grid");
  }
  for (double v : prev_l)
    if (!std::isfinite(v)) throw_invalid(std::string(who) + ": prev_l has non-finite samples");
}

[[noreturn]] void overflow_at(double y) {
  std::ostringstream msg;
  msg << "qlm_step: integrating factor overflows at y = " << y;
  throw_computation(msg.str());
}

// Local panel rule applied to g_j = exp(U_j - U_ref) Q_j on [y_i, y_{i+1}].
double scaled_panel(std::span<const double> u_exp, std::span<const double> q, std::size_t i,
                    double u_ref, double h) {
  const std::size_t n = q.size();
  const std::size_t lo = i == 0 ? 0 : i - 1;
  const std::size_t hi = std::min(n - 1, i + 2);
  std::array<double, 4> g{};
  for (std::size_t j = lo; j <= hi; ++j) g[j - lo] = std::exp(u_exp[j] - u_ref) * q[j];
  return numerics::panel_integral(std::span<const double>(g.data(), hi - lo + 1), i - lo, h);
}

// Second-order finite-difference derivative of samples spaced by h.
std::vector<double> derivative(std::span<const double> f, double h) {
  const std::size_t n = f.size();
  std::vector<double> d(n);
  d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
  for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (f[i + 1] - f[i - 1]) / (2.0 * h);
  d[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
  return d;
}

// Value of the decaying solution at Y. Where 2|l_prev| is large the solution
// follows l = (Q - l') / (2 l_prev); two refinements of that relation on the
// last few nodes stand in for the integral beyond Y.
double tail_boundary(std::span<const double> prev_l, std::span<const double> q, double h) {
  constexpr std::size_t kNodes = 12;
  const std::size_t n = prev_l.size();
  const std::size_t m = std::min(kNodes, n);
  const std::size_t off = n - m;
  std::vector<double> l(m);
  for (std::size_t j = 0; j < m; ++j) l[j] = q[off + j] / (2.0 * prev_l[off + j]);
  for (int pass = 0; pass < 2; ++pass) {
    const std::vector<double> dl = derivative(l, h);
    for (std::size_t j = 0; j < m; ++j) l[j] = (q[off + j] - dl[j]) / (2.0 * prev_l[off + j]);
  }
  return std::isfinite(l[m - 1]) ? l[m - 1] : 0.0;
}

}  // namespace

void ChannelPotentialParams::validate() const {
  auto fail = [](const char* what) { throw_invalid(std::string("ChannelPotentialParams: ") + what); };
  if (!(m_eff > 0.0)) fail("m_eff must be positive");
  if (!(omega > 0.0)) fail("omega must be positive");
  if (!(a > 0.0)) fail("a must be positive");
  if (!(coulomb_k >= 0.0)) fail("coulomb_k must be non-negative");
  if (!(fermi_l > 0.0)) fail("fermi_l must be positive");
}

std::optional<std::string> ChannelPotentialParams::consistency_warning() const {
  const double expected = 1.0 / std::sqrt(m_eff * omega);
  if (std::abs(a - expected) <= 1e-9 * expected) return std::nullopt;
  std::ostringstream msg;
  msg.precision(17);
  msg << "harmonic length a = " << a << " differs from 1/sqrt(m_eff*omega) = " << expected;
  return msg.str();
}

void QlmConfig::validate() const {
  if (!(g > 0.0)) throw_invalid("QlmConfig: g must be positive");
  if (grid.lo() != 0.0) throw_invalid("QlmConfig: grid must start at y = 0");
  if (!(std::exp(-g * grid.hi() * grid.hi()) < 1e-12)) {
    std::ostringstream msg;
    msg << "QlmConfig: Y_max = " << grid.hi() << " too small for g = " << g
        << " (need exp(-g Y^2) < 1e-12)";
    throw_invalid(msg.str());
  }
  if (max_iterations < 1) throw_invalid("QlmConfig: max_iterations must be at least 1");
  if (!(quad_tol > 0.0)) throw_invalid("QlmConfig: quad_tol must be positive");
}

QlmConfig QlmConfig::defaults_for(const ChannelPotentialParams& p) {
  const double g = p.omega;
  return QlmConfig{g, numerics::Grid1D(0.0, 9.0 / std::sqrt(g), 6001), 3, 1e-10};
}

double channel_potential(const ChannelPotentialParams& p, double y) {
  double v = 0.0;
  if (p.kind == PotentialKind::harmonic) {
    v = 0.5 * p.m_eff * p.omega * p.omega * y * y;
  } else {
    const double d = y * y - p.a * p.a;
    v = p.m_eff * p.omega * p.omega / (8.0 * p.a * p.a) * d * d;
  }
  if (p.include_vc) {
    v += std::sqrt(std::numbers::pi / 2.0) * p.coulomb_k / p.fermi_l *
         numerics::erfcx(std::abs(y) / (std::numbers::sqrt2 * p.fermi_l));
  }
  return v;
}

std::vector<double> initial_log_derivative(const QlmConfig& cfg) {
  std::vector<double> l(cfg.grid.size());
  for (std::size_t i = 0; i < l.size(); ++i) l[i] = -cfg.g * cfg.grid.point(i);
  return l;
}

double qlm_energy(std::span<const double> prev_l, const ChannelPotentialParams& p,
                  const QlmConfig& cfg) {
  p.validate();
  cfg.validate();
  check_samples(prev_l, cfg, "qlm_energy");
  const double h = cfg.grid.spacing();
  const std::size_t n = prev_l.size();

  std::vector<double> twice(n);
  for (std::size_t i = 0; i < n; ++i) twice[i] = 2.0 * prev_l[i];
  const std::vector<double> u_exp = numerics::cumulative_integral(twice, h);

  const double peak = *std::max_element(u_exp.begin(), u_exp.end());
  if (!(u_exp.back() - peak < std::log(1e-12))) {
    std::ostringstream msg;
    msg << "qlm_energy: weight is not decaying at Y = " << cfg.grid.hi();
    throw_computation(msg.str());
  }

  const std::vector<double> v = sample_potential(p, cfg.grid);
  std::vector<double> w(n), wf(n);
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = std::exp(u_exp[i] - peak);
    wf[i] = w[i] * (prev_l[i] * prev_l[i] + 2.0 * p.m_eff * v[i]);
  }
  const double num = numerics::cumulative_integral(wf, h).back();
  const double den = numerics::cumulative_integral(w, h).back();
  return num / (2.0 * p.m_eff * den);
}

std::vector<double> qlm_step(std::span<const double> prev_l, double energy,
                             const ChannelPotentialParams& p, const QlmConfig& cfg) {
  p.validate();
  cfg.validate();
  check_samples(prev_l, cfg, "qlm_step");
  if (!std::isfinite(energy)) throw_invalid("qlm_step: energy must be finite");

  const double h = cfg.grid.spacing();
  const std::size_t n = prev_l.size();
  std::vector<double> twice(n);
  for (std::size_t i = 0; i < n; ++i) twice[i] = 2.0 * prev_l[i];
  const std::vector<double> u_exp = numerics::cumulative_integral(twice, h);  // ln u
  const std::vector<double> v = sample_potential(p, cfg.grid);
  std::vector<double> q(n);
  for (std::size_t i = 0; i < n; ++i)
    q[i] = prev_l[i] * prev_l[i] - 2.0 * p.m_eff * (energy - v[i]);

  std::vector<double> l(n, 0.0);
  const bool decaying = std::all_of(prev_l.begin(), prev_l.end(), [](double x) { return x <= 0.0; });

  if (!decaying) {
    // Plain forward recursion F_i = int_0^{y_i} (u(s)/u(y_i)) Q(s) ds.
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const double carry = std::exp(u_exp[i] - u_exp[i + 1]);
      l[i + 1] = carry * l[i] + scaled_panel(u_exp, q, i, u_exp[i + 1], h);
      if (!std::isfinite(l[i + 1])) overflow_at(cfg.grid.point(i + 1));
    }
    return l;
  }

  // Tail integrals S_i = int_{y_i}^inf (u(s)/u(y_i)) Q(s) ds, accumulated from
  // the far end where every factor is <= 1.
  std::vector<double> tail(n, 0.0);
  if (prev_l[n - 1] < 0.0) tail[n - 1] = -tail_boundary(prev_l, q, h);
  for (std::size_t i = n - 1; i-- > 0;) {
    tail[i] = std::exp(u_exp[i + 1] - u_exp[i]) * tail[i + 1] +
              scaled_panel(u_exp, q, i, u_exp[i], h);
  }
  std::vector<double> abs_q(n);
  for (std::size_t i = 0; i < n; ++i) abs_q[i] = std::exp(u_exp[i]) * std::abs(q[i]);
  const double scale = numerics::cumulative_integral(abs_q, h).back();

  // u(0) = 1, so tail[0] is the full integral of u Q.
  double total = tail[0];
  if (std::abs(total) <= kDecayResidual * scale) total = 0.0;

  for (std::size_t i = 1; i < n; ++i) {
    double grow = 0.0;
    if (total != 0.0) {
      grow = total * std::exp(-u_exp[i]);
      if (!std::isfinite(grow)) overflow_at(cfg.grid.point(i));
    }
    l[i] = grow - tail[i];
  }
  return l;
}

double qlm_first_energy(const ChannelPotentialParams& p, double g, double tol) {
  p.validate();
  if (!(g > 0.0)) throw_invalid("qlm_first_energy: g must be positive");
  const double upper = numerics::gaussian_cutoff(g, 1e-14);
  auto weight = [g](double s) { return std::exp(-g * s * s); };
  const double num = numerics::integrate(
      [&](double s) {
        return weight(s) * (g * g * s * s + 2.0 * p.m_eff * channel_potential(p, s));
      },
      0.0, upper, tol);
  const double den = numerics::integrate(weight, 0.0, upper, tol);
  return num / (2.0 * p.m_eff * den);
}

QlmSpectrum qlm_spectrum(const ChannelPotentialParams& p, const QlmConfig& cfg) {
  p.validate();
  cfg.validate();
  QlmSpectrum out;
  std::vector<double> l = initial_log_derivative(cfg);
  for (int n = 1; n <= cfg.max_iterations; ++n) {
    try {
      const double e = qlm_energy(l, p, cfg);
      if (!std::isfinite(e)) throw_computation("qlm_spectrum: non-finite energy");
      std::vector<double> next = qlm_step(l, e, p, cfg);
      if (!std::all_of(next.begin(), next.end(), [](double x) { return std::isfinite(x); })) {
        throw_computation("qlm_spectrum: non-finite log-derivative");
      }
      out.iterates.push_back({n, next, e});
      l = std::move(next);
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::computation) throw;
      out.complete = false;
      out.failure = "iteration " + std::to_string(n) + ": " + err.what();
      break;
    }
  }
  return out;
}

}  // namespace pishape::channel
