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


#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "common/error.hpp"
#include "doctest.h"
#include "eigen_oracle.hpp"
#include "source/source_spectrum.hpp"

namespace ps = pishape::source;
namespace pt = pishape::testing;
using ps::Complex;

namespace {

ps::HMatrix2 from_eigen(const pt::CMat& m) { return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)}; }

double residual(const ps::HMatrix2& h, const pishape::numerics::ComplexVector& v, double lambda) {
  const Complex r0 = h.h11 * v[0] + h.h12 * v[1] - lambda * v[0];
  const Complex r1 = h.h21 * v[0] + h.h22 * v[1] - lambda * v[1];
  return std::sqrt(std::norm(r0) + std::norm(r1));
}

}  // namespace

TEST_CASE("parameter validation") {
  ps::SourceParams p;
  CHECK_NOTHROW(p.validate());
  p.reg_delta = p.L_x / 10.0;
  CHECK_THROWS_AS(p.validate(), pishape::Error);
  p = {};
  p.m_eff = 0.0;
  CHECK_THROWS_AS(ps::build_hmatrix(p), pishape::Error);
  p = {};
  p.k = NAN;
  CHECK_THROWS_AS(ps::build_hmatrix(p), pishape::Error);
}

TEST_CASE("mode-averaged matrix against a high-precision reference") {
  // Default parameters; reference from 40-digit quadrature of the same
  // averages (kinetic + harmonic + log-Coulomb over y in [0, 1]).
  const ps::HMatrix2 h = ps::build_hmatrix(ps::SourceParams{});
  CHECK(std::abs(h.h11.real() - 2.4794576883813160921) < 1e-11);
  CHECK(h.h11 == h.h22);
  CHECK(h.h12 == Complex(0.2 * 1.0));
  CHECK(h.h21 == std::conj(h.h12));
  CHECK(h.matrix().is_hermitian(0.0));
}

TEST_CASE("without Coulomb the diagonal is kinetic plus harmonic") {
  ps::SourceParams p;
  p.beta = 0.0;
  p.L_x = 2.0;
  p.k = 0.5;
  p.m_eff = 0.7;
  const double pi = std::numbers::pi;
  // <x^2> over (2/L) sin^2(pi x / L) on [0, L] is L^2 (1/3 - 1/(2 pi^2)).
  const double x2 = p.L_x * p.L_x * (1.0 / 3.0 - 1.0 / (2.0 * pi * pi));
  const double want = pi * pi / (2 * p.m_eff * p.L_x * p.L_x) + p.k * p.k / (2 * p.m_eff) +
                      0.5 * p.m_eff * p.omega * p.omega * x2;
  CHECK(ps::build_hmatrix(p).h11.real() == doctest::Approx(want).epsilon(1e-13));
}

TEST_CASE("spin_split agrees with an independent solver on random Hermitian matrices") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const pt::CMat m = pt::random_matrix(rng, 2, true) * 4.0;
    const auto want = pt::sorted_eigenvalues(m);
    const ps::HMatrix2 h = from_eigen(m);
    const ps::SpinSplitResult r = ps::spin_split(h);
    CAPTURE(trial);
    CHECK(std::abs(r.e_up - want[0].real()) < 1e-12);
    CHECK(std::abs(r.e_down - want[1].real()) < 1e-12);
    CHECK(r.delta_e >= 0.0);
    CHECK(residual(h, r.eigvec_up, r.e_up) < 1e-12);
    CHECK(residual(h, r.eigvec_down, r.e_down) < 1e-12);
  }
}

TEST_CASE("spin_split special cases") {
  // No coupling: no splitting.
  const ps::SpinSplitResult flat = ps::spin_split({1.5, 0.0, 0.0, 1.5});
  CHECK(flat.delta_e == 0.0);
  CHECK(flat.eigvec_up[0] == Complex(1.0));

  // Equal diagonal: the splitting is 2 |h12|.
  const Complex h12(0.3, -0.4);
  const ps::SpinSplitResult eq = ps::spin_split({2.0, h12, std::conj(h12), 2.0});
  CHECK(std::abs(eq.delta_e - 2.0 * std::abs(h12)) < 1e-12);

  // Triangular input goes through the general solver.
  const ps::HMatrix2 tri{1.0, 0.5, 0.0, 3.0};
  const ps::SpinSplitResult t = ps::spin_split(tri);
  CHECK(t.used_fallback);
  CHECK(t.e_up == doctest::Approx(1.0));
  CHECK(t.e_down == doctest::Approx(3.0));
  CHECK(residual(tri, t.eigvec_down, t.e_down) < 1e-12);

  // Large diagonal gap with a tiny coupling keeps full relative accuracy.
  const ps::SpinSplitResult gap = ps::spin_split({1e8, 1e-4, 1e-4, -1e8});
  CHECK(residual({1e8, 1e-4, 1e-4, -1e8}, gap.eigvec_up, gap.e_up) < 1e-7);
  CHECK(std::abs(gap.eigvec_up[0]) < 1e-11);
}

TEST_CASE("zero Rashba strength gives zero splitting") {
  ps::SourceParams p;
  p.alpha_R = 0.0;
  CHECK(ps::spin_split(ps::build_hmatrix(p)).delta_e == 0.0);
  CHECK(ps::spin_split(ps::local_hmatrix(p, 1.0, 0.3)).delta_e == 0.0);
}

TEST_CASE("local splitting follows the transverse density") {
  ps::SourceParams p;
  p.alpha_R = 0.3;
  p.k = -1.2;
  for (double x : {0.2, 1.0, 1.5707963267948966, 2.9}) {
    const double s = std::sin(std::numbers::pi * x / p.L_x);
    const double rho = 2.0 / p.L_x * s * s;
    for (double y : {-4.0, 0.0, x, 3.0}) {
      const ps::SpinSplitResult r = ps::spin_split(ps::local_hmatrix(p, x, y));
      CAPTURE(x);
      CAPTURE(y);
      CHECK(std::abs(r.delta_e - 2.0 * std::abs(p.alpha_R * p.k) * rho) < 1e-12);
    }
  }
}

TEST_CASE("chart ordering and domain") {
  ps::SourceParams p;
  const std::vector<double> xs = {0.5, 1.0};
  const pishape::numerics::Grid1D ys(-1.0, 1.0, 3);
  const auto rows = ps::chart_delta_e(p, xs, ys);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0].x == 0.5);
  CHECK(rows[0].y == -1.0);
  CHECK(rows[2].y == 1.0);
  CHECK(rows[3].x == 1.0);
  for (const auto& r : rows) CHECK(r.delta_e >= 0.0);
  const std::vector<double> outside = {0.0};
  CHECK_THROWS_AS(ps::chart_delta_e(p, outside, ys), pishape::Error);
}
