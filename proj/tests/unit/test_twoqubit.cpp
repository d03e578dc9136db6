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
#include <random>

#include "common/error.hpp"
#include "doctest.h"
#include "eigen_oracle.hpp"
#include "fixtures.hpp"
#include "json.hpp"
#include "twoqubit/twoqubit_channel.hpp"

namespace tq = pishape::twoqubit;
namespace pt = pishape::testing;
using tq::Complex;

TEST_CASE("expectations for unit parameters") {
  const tq::Expectations e = tq::expectations(tq::TwoQubitParams{});
  // 1/(4 lambda^2) kinetic + 3/32 quartic.
  CHECK(e.h0 == doctest::Approx(0.34375).epsilon(1e-15));
  CHECK(e.hr == Complex(0.0));
}

TEST_CASE("expectations against a high-precision reference") {
  tq::TwoQubitParams p;
  p.k = 0.7;
  p.alpha_R = 0.3;
  p.coulomb_k = 1.0;
  CHECK(std::abs(tq::expectations(p).h0 - 1.4749769254527580136) < 1e-12);
  CHECK(tq::expectations(p).hr == Complex(0.3 * 0.7));

  tq::TwoQubitParams q;
  q.lambda = 0.5;
  q.a_B = 2.0;
  q.m_eff = 2.0;
  q.omega = 0.5;
  q.k = 0.3;
  q.coulomb_k = 0.4;
  q.fermi_l = 0.8;
  q.alpha_R = 1.0;
  q.wave_direction = tq::WaveDirection::along_x;
  const tq::Expectations e = tq::expectations(q);
  CHECK(std::abs(e.h0 - 1.1824997166170967625) < 1e-12);
  CHECK(e.hr == Complex(0.0));
}

TEST_CASE("hr is linear in alpha and k along y") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 50; ++i) {
    tq::TwoQubitParams p;
    p.alpha_R = std::abs(u(rng));
    p.k = u(rng);
    CHECK(tq::expectations(p).hr == Complex(p.alpha_R * p.k));
  }
}

TEST_CASE("validation") {
  tq::TwoQubitParams p;
  p.lambda = 0.0;
  CHECK_THROWS_AS(tq::expectations(p), pishape::Error);
  CHECK_THROWS_AS(tq::build_matrix(NAN, 1.0), pishape::Error);
}

TEST_CASE("matrix layout") {
  const tq::TwoQubitMatrix m = tq::build_matrix(2.0, Complex(0.5, 0.1));
  const Complex hr(0.5, 0.1);
  CHECK(m.matrix(0, 0) == Complex(2.0));
  CHECK(m.matrix(0, 2) == hr);
  CHECK(m.matrix(1, 0) == hr);
  CHECK(m.matrix(1, 2) == Complex(2.0));
  CHECK(m.matrix(2, 1) == Complex(2.0));
  CHECK(m.matrix(2, 3) == hr);
  CHECK(m.matrix(3, 1) == hr);
  CHECK(m.matrix(3, 3) == Complex(2.0));
  CHECK(m.matrix(1, 1) == Complex(0.0));
  CHECK(m.matrix.trace() == Complex(4.0));
}

TEST_CASE("closed-form eigenpairs on random real inputs") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int trial = 0; trial < 100; ++trial) {
    const double h0 = u(rng);
    const double hr = h0 * std::uniform_real_distribution<double>(-0.98, 0.98)(rng);
    const tq::EigenReport r = tq::claimed_vs_numeric(tq::build_matrix(h0, hr));
    const double scale = std::max(1.0, std::abs(h0) + std::abs(hr));
    CAPTURE(trial);
    CHECK_FALSE(r.degenerate);
    CHECK(r.residuals[0] <= 1e-12 * scale);
    CHECK(r.residuals[1] <= 1e-12 * scale);
    CHECK(r.residuals[2] <= 1e-9 * scale);
    CHECK(r.residuals[3] <= 1e-9 * scale);
    CHECK(r.eigenvalue_set_difference <= 1e-10 * scale);

    Complex sum = 0.0;
    for (const Complex& l : r.numeric_eigenvalues) sum += l;
    CHECK(std::abs(sum - 2.0 * h0) <= 1e-10 * scale);

    // Independent oracle: Eigen on the same matrix.
    const auto want = pt::sorted_eigenvalues(pt::to_eigen(tq::build_matrix(h0, hr).matrix));
    for (int j = 0; j < 4; ++j) CHECK(std::abs(r.numeric_eigenvalues[j] - want[j]) <= 1e-10 * scale);
  }
}

TEST_CASE("numeric spectrum contains a pair summing to zero") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.5, 4.0);
  for (int trial = 0; trial < 50; ++trial) {
    const double h0 = u(rng), hr = 0.9 * h0 * std::uniform_real_distribution<double>(-1.0, 1.0)(rng);
    const tq::EigenReport r = tq::claimed_vs_numeric(tq::build_matrix(h0, hr));
    double best = INFINITY;
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b)
        best = std::min(best, std::abs(r.numeric_eigenvalues[a] + r.numeric_eigenvalues[b]));
    CHECK(best <= 1e-10);
  }
}

TEST_CASE("degenerate and singular branches use numeric vectors") {
  const tq::EigenReport deg = tq::claimed_vs_numeric(tq::build_matrix(1.0, 2.0));
  CHECK(deg.degenerate);
  CHECK(deg.vector_sources[0] == tq::VectorSource::claimed);
  CHECK(deg.vector_sources[2] == tq::VectorSource::numeric);
  CHECK(deg.vector_sources[3] == tq::VectorSource::numeric);
  CHECK(deg.eigenvalue_set_difference < 1e-10);

  const tq::EigenReport zero = tq::claimed_vs_numeric(tq::build_matrix(1.5, 0.0));
  CHECK_FALSE(zero.degenerate);
  CHECK(zero.hermitian);
  CHECK(zero.vector_sources[2] == tq::VectorSource::numeric);
  for (double res : zero.residuals) CHECK(res < 1e-12);

  const tq::ClaimedEigenSystem c = tq::claimed_eigensystem(1.0, 1.0);
  CHECK_FALSE(c.vector_defined[2]);
  CHECK_FALSE(c.vector_defined[3]);
}

TEST_CASE("Hermiticity is reported, not enforced") {
  CHECK_FALSE(tq::claimed_vs_numeric(tq::build_matrix(2.0, 0.5)).hermitian);
  CHECK(tq::claimed_vs_numeric(tq::build_matrix(2.0, 0.0)).hermitian);
}

TEST_CASE("complex hr") {
  const Complex hr(0.4, 0.3);
  const tq::EigenReport r = tq::claimed_vs_numeric(tq::build_matrix(2.0, hr));
  CHECK(r.eigenvalue_set_difference < 1e-10);
  for (double res : r.residuals) CHECK(res < 1e-10);
}

TEST_CASE("report JSON fields") {
  const auto j = nlohmann::json::parse(tq::claimed_vs_numeric(tq::build_matrix(2.0, 1.0)).to_json());
  for (const char* key : {"h0", "hr", "claimed_eigenvalues", "numeric_eigenvalues", "residuals",
                          "hermitian", "degenerate"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["claimed_eigenvalues"].size() == 4);
  CHECK(j["claimed_eigenvalues"][0][0].get<double>() == 1.0);
  CHECK(j["hermitian"].get<bool>() == false);
}

TEST_CASE("exchange strength") {
  CHECK(tq::exchange_strength(1.0, 0.4) == doctest::Approx(0.6));
  CHECK(tq::exchange_strength(0.7, 0.7) == 0.0);
  // Lowest odd and even levels of the quartic well from the frozen
  // finite-difference fixture.
  CHECK(tq::exchange_strength(pt::kQuarticFdE1, pt::kQuarticFdE0) ==
        doctest::Approx(pt::kQuarticFdJ).epsilon(1e-15));
}
