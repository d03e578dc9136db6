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


#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "channel/channel_qlm.hpp"
#include "common/error.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "numerics/schrodinger_fd.hpp"

namespace pc = pishape::channel;
namespace pn = pishape::numerics;
namespace pt = pishape::testing;

namespace {

pc::ChannelPotentialParams harmonic(double omega) {
  pc::ChannelPotentialParams p;
  p.kind = pc::PotentialKind::harmonic;
  p.omega = omega;
  p.a = 1.0 / std::sqrt(omega);
  return p;
}

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

TEST_CASE("channel potential") {
  pc::ChannelPotentialParams p;
  CHECK(pc::channel_potential(p, 1.0) == 0.0);
  CHECK(pc::channel_potential(p, 0.0) == doctest::Approx(0.125));
  CHECK(pc::channel_potential(p, -2.0) == pc::channel_potential(p, 2.0));

  p.include_vc = true;
  p.coulomb_k = 1.0;
  // V_c(0) = sqrt(pi/2) k / l.
  CHECK(pc::channel_potential(p, 0.0) == doctest::Approx(0.125 + std::sqrt(std::numbers::pi / 2.0)));
  CHECK(pc::channel_potential(p, -3.0) == doctest::Approx(pc::channel_potential(p, 3.0)));

  CHECK(pc::channel_potential(harmonic(2.0), 1.5) == doctest::Approx(0.5 * 4.0 * 2.25));
}

TEST_CASE("parameter and config validation") {
  pc::ChannelPotentialParams p;
  CHECK_FALSE(p.consistency_warning().has_value());
  p.a = 2.0;
  REQUIRE(p.consistency_warning().has_value());
  CHECK(p.consistency_warning()->find("1/sqrt") != std::string::npos);
  p.fermi_l = 0.0;
  CHECK_THROWS_AS(p.validate(), pishape::Error);

  const pc::QlmConfig short_grid{1.0, pn::Grid1D(0.0, 4.0, 401), 3, 1e-10};
  CHECK_THROWS_AS(short_grid.validate(), pishape::Error);
  const pc::QlmConfig offset_grid{1.0, pn::Grid1D(0.5, 9.0, 401), 3, 1e-10};
  CHECK_THROWS_AS(offset_grid.validate(), pishape::Error);

  const pc::QlmConfig d = pc::QlmConfig::defaults_for(harmonic(4.0));
  CHECK(d.g == 4.0);
  CHECK(d.grid.hi() == doctest::Approx(4.5));
  CHECK_NOTHROW(d.validate());
}

TEST_CASE("first energy of the quartic well") {
  pc::ChannelPotentialParams p;
  CHECK(std::abs(pc::qlm_first_energy(p, 1.0, 1e-12) - pt::kQuarticFirstEnergy) < 1e-12);
  // m = 1.3, omega = 0.9, a = 1.1, g = 0.7; 40-digit quadrature reference.
  p.m_eff = 1.3;
  p.omega = 0.9;
  p.a = 1.1;
  CHECK(std::abs(pc::qlm_first_energy(p, 0.7, 1e-12) - 0.27234743829222725327) < 1e-12);
}

TEST_CASE("grid energy of the zero iterate matches adaptive quadrature") {
  pc::ChannelPotentialParams p;
  const pc::QlmConfig cfg = pc::QlmConfig::defaults_for(p);
  const double grid_e = pc::qlm_energy(pc::initial_log_derivative(cfg), p, cfg);
  CHECK(std::abs(grid_e - pc::qlm_first_energy(p, cfg.g, 1e-12)) < 1e-10);
}

TEST_CASE("harmonic well is reproduced exactly from l_0 = -omega y") {
  for (double omega : {0.5, 1.0, 2.0}) {
    const pc::ChannelPotentialParams p = harmonic(omega);
    const pc::QlmSpectrum s = pc::qlm_spectrum(p, pc::QlmConfig::defaults_for(p));
    REQUIRE(s.complete);
    REQUIRE(s.iterates.size() == 3);
    CAPTURE(omega);
    CHECK(std::abs(s.iterates[0].e - omega / 2.0) < 1e-8);
    CHECK(max_diff(s.iterates[1].l, s.iterates[0].l) < 1e-5);
    // The first iterate is the exact log-derivative -omega y.
    const pn::Grid1D& g = pc::QlmConfig::defaults_for(p).grid;
    double dev = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) dev = std::max(dev, std::abs(s.iterates[0].l[i] + omega * g.point(i)));
    CHECK(dev < 1e-5);
  }
}

TEST_CASE("quartic iterates approach the finite-difference ground state") {
  pc::ChannelPotentialParams p;
  const pc::QlmSpectrum s = pc::qlm_spectrum(p, pc::QlmConfig::defaults_for(p));
  REQUIRE(s.complete);
  REQUIRE(s.iterates.size() == 3);
  CHECK(s.iterates[0].e == doctest::Approx(pt::kQuarticFirstEnergy).epsilon(1e-10));
  double prev = INFINITY;
  for (const auto& it : s.iterates) {
    const double gap = std::abs(it.e - pt::kQuarticFdE0);
    CHECK(gap <= prev);
    prev = gap;
  }
  CHECK(prev / pt::kQuarticFdE0 < 1e-4);
  // Successive changes shrink by at least a factor of 4.
  const double d1 = std::abs(s.iterates[1].e - s.iterates[0].e);
  const double d2 = std::abs(s.iterates[2].e - s.iterates[1].e);
  CHECK(d2 * 4.0 <= d1);
}

TEST_CASE("quartic QLM energy is stable under grid refinement") {
  pc::ChannelPotentialParams p;
  const pc::QlmConfig coarse{1.0, pn::Grid1D(0.0, 9.0, 3001), 3, 1e-10};
  const pc::QlmConfig fine{1.0, pn::Grid1D(0.0, 9.0, 6001), 3, 1e-10};
  const double ec = pc::qlm_spectrum(p, coarse).iterates.back().e;
  const double ef = pc::qlm_spectrum(p, fine).iterates.back().e;
  CHECK(std::abs(ec - ef) < 1e-8);
}

TEST_CASE("energy below the potential minimum has no decaying solution") {
  pc::ChannelPotentialParams p;
  const pc::QlmConfig cfg = pc::QlmConfig::defaults_for(p);
  const auto l0 = pc::initial_log_derivative(cfg);
  const auto l = pc::qlm_step(l0, -5.0, p, cfg);
  CHECK(l[0] == 0.0);
  // Q > 0 everywhere, so l grows and stays positive.
  CHECK(l[cfg.grid.size() / 2] > 0.0);
  CHECK(l.back() > l[cfg.grid.size() / 2]);
}

TEST_CASE("integrating factor overflow is reported with its position") {
  pc::ChannelPotentialParams p;
  p.omega = 10.0;
  const pc::QlmConfig cfg{10.0, pn::Grid1D(0.0, 9.0, 4001), 3, 1e-10};
  const auto l0 = pc::initial_log_derivative(cfg);
  try {
    pc::qlm_step(l0, 3.0, p, cfg);
    FAIL("expected overflow");
  } catch (const pishape::Error& e) {
    CHECK(e.kind() == pishape::ErrorKind::computation);
    CHECK(std::string(e.what()).find("y = ") != std::string::npos);
  }
}

TEST_CASE("non-decaying weight is rejected") {
  pc::ChannelPotentialParams p;
  const pc::QlmConfig cfg = pc::QlmConfig::defaults_for(p);
  std::vector<double> rising(cfg.grid.size(), 0.1);
  CHECK_THROWS_AS(pc::qlm_energy(rising, p, cfg), pishape::Error);
  std::vector<double> wrong_size(10, -1.0);
  CHECK_THROWS_AS(pc::qlm_energy(wrong_size, p, cfg), pishape::Error);
}

TEST_CASE("Coulomb term raises the ground state") {
  pc::ChannelPotentialParams p;
  const double bare = pc::qlm_spectrum(p, pc::QlmConfig::defaults_for(p)).iterates.back().e;
  p.include_vc = true;
  p.coulomb_k = 0.2;
  const pc::QlmSpectrum s = pc::qlm_spectrum(p, pc::QlmConfig::defaults_for(p));
  REQUIRE(s.complete);
  CHECK(s.iterates.back().e > bare);
  // Cross-check against finite differences of the same potential.
  const auto fd = pn::fd_schrodinger_levels([&](double y) { return pc::channel_potential(p, y); },
                                            pn::Grid1D(-10.0, 10.0, 4001), 1.0, 1);
  CHECK(std::abs(s.iterates.back().e - fd[0]) / fd[0] < 1e-3);
}
