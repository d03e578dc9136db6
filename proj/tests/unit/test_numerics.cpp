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


#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "common/error.hpp"
#include "doctest.h"
#include "eigen_oracle.hpp"
#include "fixtures.hpp"
#include "numerics/complex_matrix.hpp"
#include "numerics/eigen.hpp"
#include "numerics/grid.hpp"
#include "numerics/quadrature.hpp"
#include "numerics/schrodinger_fd.hpp"
#include "numerics/special.hpp"

namespace pn = pishape::numerics;
namespace pt = pishape::testing;
using pn::Complex;
using pn::ComplexMatrix;

TEST_CASE("grid nodes and validation") {
  const pn::Grid1D g(-1.0, 1.0, 5);
  CHECK(g.size() == 5);
  CHECK(g.spacing() == doctest::Approx(0.5));
  CHECK(g.point(0) == -1.0);
  CHECK(g.point(4) == 1.0);
  CHECK(g.points()[2] == doctest::Approx(0.0));
  CHECK_THROWS_AS(pn::Grid1D(1.0, 1.0, 5), pishape::Error);
  CHECK_THROWS_AS(pn::Grid1D(0.0, 1.0, 2), pishape::Error);
  CHECK_THROWS_AS(pn::Grid1D(0.0, INFINITY, 10), pishape::Error);
}

TEST_CASE("adaptive quadrature on closed forms") {
  CHECK(pn::integrate([](double x) { return x * x * x - 2.0 * x; }, 0.0, 2.0, 1e-12) ==
        doctest::Approx(0.0).epsilon(1e-13));
  const double half_gauss = pn::integrate([](double x) { return std::exp(-x * x); }, 0.0,
                                          pn::gaussian_cutoff(1.0), 1e-13);
  CHECK(std::abs(half_gauss - std::sqrt(std::numbers::pi) / 2.0) < 1e-13);
  // Derivative singular at the endpoint: int_0^1 sqrt(x) = 2/3.
  CHECK(std::abs(pn::integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0, 1e-12) - 2.0 / 3.0) <
        1e-12);
}

TEST_CASE("adaptive quadrature names the failing interval") {
  try {
    pn::integrate([](double x) { return 1.0 / x; }, -1.0, 2.0, 1e-12);
    FAIL("expected a computation error");
  } catch (const pishape::Error& e) {
    CHECK(e.kind() == pishape::ErrorKind::computation);
    CHECK(std::string(e.what()).find('[') != std::string::npos);
  }
  CHECK_THROWS_AS(pn::integrate([](double x) { return x; }, 0.0, 1.0, 0.0), pishape::Error);
}

TEST_CASE("gaussian cutoff") {
  const double y = pn::gaussian_cutoff(2.0, 1e-14);
  CHECK(std::exp(-2.0 * y * y) <= 1e-14 * (1 + 1e-12));
  CHECK(std::exp(-2.0 * y * y) > 1e-15);
}

TEST_CASE("cumulative integral is fourth order") {
  auto max_err = [](std::size_t n) {
    const pn::Grid1D g(0.0, 3.0, n);
    std::vector<double> f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = std::cos(g.point(i));
    const auto c = pn::cumulative_integral(f, g.spacing());
    double e = 0.0;
    for (std::size_t i = 0; i < n; ++i) e = std::max(e, std::abs(c[i] - std::sin(g.point(i))));
    return e;
  };
  const double coarse = max_err(101), fine = max_err(201);
  CHECK(coarse < 1e-7);
  CHECK(coarse / fine > 12.0);  // 16 for a clean fourth-order rule
  const std::vector<double> cubic = {0.0, 1.0, 8.0, 27.0, 64.0};
  CHECK(pn::cumulative_integral(cubic, 1.0).back() == doctest::Approx(64.0).epsilon(1e-14));
  const std::vector<double> two = {1.0, 3.0};
  CHECK(pn::cumulative_integral(two, 0.5).back() == doctest::Approx(1.0));
}

TEST_CASE("erfcx against high-precision reference values") {
  // Reference: exp(x^2) erfc(x) at 40 digits, rounded to 20.
  const std::pair<double, double> ref[] = {
      {-3.0, 16205.988853999586625},   {-1.0, 5.0089800807622834663},
      {-0.5, 1.9523604891825570933},   {0.0, 1.0},
      {1e-8, 0.99999998871620842904},  {0.3, 0.73459933456765514229},
      {1.0, 0.42758357615580700441},   {2.5, 0.21080636406114358065},
      {2.999, 0.17905553933024893754}, {3.0, 0.17900115118138995042},
      {3.001, 0.17894679480127572912}, {5.0, 0.11070463773306862637},
      {10.0, 0.056140992743822585858}, {30.0, 0.018795888861416751497},
      {1e5, 5.6418958351954680777e-6},
  };
  for (const auto& [x, want] : ref) {
    CAPTURE(x);
    CHECK(std::abs(pn::erfcx(x) - want) <= 4e-15 * want);
  }
}

TEST_CASE("erfcx agrees with the long double product form on [0, 3)") {
  for (double x = 0.0; x < 3.0; x += 0.0371) {
    const long double want = std::exp(static_cast<long double>(x) * x) * std::erfc(static_cast<long double>(x));
    CAPTURE(x);
    CHECK(std::abs(pn::erfcx(x) - static_cast<double>(want)) <= 5e-15 * static_cast<double>(want));
  }
}

TEST_CASE("erfcx edge cases") {
  CHECK(pn::erfcx(INFINITY) == 0.0);
  CHECK(std::isnan(pn::erfcx(NAN)));
  CHECK(pn::erfcx(-30.0) == INFINITY);
  // Asymptote 1 / (x sqrt(pi)) for large x.
  CHECK(pn::erfcx(1e300) == doctest::Approx(1.0 / (1e300 * std::sqrt(std::numbers::pi))));
}

TEST_CASE("complex matrix basics") {
  const Complex i(0.0, 1.0);
  const ComplexMatrix a = ComplexMatrix::from_rows({{1.0, i}, {2.0, -1.0}});
  CHECK(a.adjoint()(0, 1) == Complex(2.0));
  CHECK(a.adjoint()(1, 0) == -i);
  CHECK(a.trace() == Complex(0.0));
  CHECK_FALSE(a.is_hermitian(1e-14));
  CHECK((a + a.adjoint()).is_hermitian(1e-14));
  CHECK(pn::max_abs_diff(a * ComplexMatrix::identity(2), a) == 0.0);
  CHECK_THROWS_AS(ComplexMatrix(3), pishape::Error);
  CHECK_THROWS_AS(ComplexMatrix::from_rows({{1.0, 2.0}, {3.0}}), pishape::Error);

  const ComplexMatrix k = pn::kron(a, ComplexMatrix::identity(2));
  CHECK(k.dim() == 4);
  CHECK(k(0, 2) == i);
  CHECK(k(1, 3) == i);
  CHECK(k(0, 1) == Complex(0.0));

  const pn::ComplexVector u = {1.0, i};
  CHECK(pn::inner(u, u) == Complex(2.0));
  CHECK(pn::norm2(u) == doctest::Approx(std::sqrt(2.0)));
  const ComplexMatrix o = ComplexMatrix::outer(u, u);
  CHECK(o(0, 1) == -i);
}

TEST_CASE("expm matches the Eigen matrix exponential") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    pt::CMat m = pt::random_matrix(rng, trial % 2 ? 4 : 2, false) * (0.5 + trial * 0.25);
    const pt::CMat want = m.exp();
    const pt::CMat got = pt::to_eigen(pn::expm(pt::from_eigen(m)));
    CAPTURE(trial);
    CHECK(pt::max_abs_diff(got, want) <= 1e-12 * std::max(1.0, want.cwiseAbs().maxCoeff()));
  }
}

TEST_CASE("eigen_small agrees with Eigen on random matrices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = trial % 2 ? 4 : 2;
    const bool herm = trial % 3 == 0;
    const pt::CMat m = pt::random_matrix(rng, dim, herm) * 3.0;
    const pn::EigenSystem es = pn::eigen_small(pt::from_eigen(m));
    const auto want = pt::sorted_eigenvalues(m);
    CAPTURE(trial);
    CHECK(es.hermitian == herm);
    CHECK_FALSE(es.flagged);
    for (int j = 0; j < dim; ++j) {
      CHECK(std::abs(es.eigenvalues[j] - want[j]) <= 1e-11);
      CHECK(es.residuals[j] <= 1e-11);
      CHECK(pn::norm2(es.eigenvectors[j]) == doctest::Approx(1.0).epsilon(1e-13));
    }
  }
}

TEST_CASE("eigen_small handles degenerate and defective cases") {
  const pn::EigenSystem id = pn::eigen_small(ComplexMatrix::identity(4));
  for (const Complex& l : id.eigenvalues) CHECK(std::abs(l - 1.0) < 1e-15);
  CHECK_FALSE(id.flagged);

  // A Jordan block cannot be diagonalized; the result must be flagged or
  // still satisfy the residual bound.
  const ComplexMatrix jordan = ComplexMatrix::from_rows({{2.0, 1.0}, {0.0, 2.0}});
  const pn::EigenSystem j = pn::eigen_small(jordan);
  CHECK(std::abs(j.eigenvalues[0] - 2.0) < 1e-7);
  CHECK(std::abs(j.eigenvalues[1] - 2.0) < 1e-7);

  ComplexMatrix bad = ComplexMatrix::identity(2);
  bad(0, 1) = NAN;
  CHECK_THROWS_AS(pn::eigen_small(bad), pishape::Error);
}

TEST_CASE("characteristic polynomial and roots") {
  const ComplexMatrix m = ComplexMatrix::from_rows({{2.0, 1.0}, {1.0, 2.0}});
  const auto c = pn::characteristic_polynomial(m);
  REQUIRE(c.size() == 3);
  CHECK(std::abs(c[0] - std::complex<long double>(3.0L)) < 1e-15L);
  CHECK(std::abs(c[1] + std::complex<long double>(4.0L)) < 1e-15L);
  // (x - 1)(x - 2)(x - 3)(x - 4) = x^4 - 10x^3 + 35x^2 - 50x + 24
  const auto roots = pn::polynomial_roots({24.0L, -50.0L, 35.0L, -10.0L, 1.0L});
  REQUIRE(roots.size() == 4);
  for (long double want : {1.0L, 2.0L, 3.0L, 4.0L}) {
    long double best = 1.0L;
    for (const auto& r : roots) best = std::min(best, std::abs(r - want));
    CHECK(best < 1e-12L);
  }
}

TEST_CASE("tridiagonal bisection matches Eigen") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  const std::size_t n = 40;
  std::vector<double> diag(n), off(n - 1);
  for (double& d : diag) d = u(rng);
  for (double& o : off) o = u(rng);
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i < n; ++i) t(i, i) = diag[i];
  for (std::size_t i = 0; i + 1 < n; ++i) t(i, i + 1) = t(i + 1, i) = off[i];
  const Eigen::VectorXd want = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(t).eigenvalues();
  const auto got = pn::tridiagonal_lowest(diag, off, 5);
  for (int j = 0; j < 5; ++j) CHECK(std::abs(got[j] - want[j]) < 1e-12);
}

TEST_CASE("finite-difference levels of the harmonic oscillator") {
  const auto e = pn::fd_schrodinger_levels([](double y) { return 0.5 * y * y; },
                                           pn::Grid1D(-10.0, 10.0, 4001), 1.0, 3);
  CHECK(std::abs(e[0] - 0.5) < 1e-5);
  CHECK(std::abs(e[1] - 1.5) < 1e-5);
  CHECK(std::abs(e[2] - 2.5) < 2e-5);
  CHECK_THROWS_AS(pn::fd_schrodinger_levels([](double) { return 0.0; }, pn::Grid1D(0, 1, 10), 1.0, 5),
                  pishape::Error);
}

TEST_CASE("finite-difference quartic fixture is reproduced and self-converged") {
  auto v = [](double y) { return (y * y - 1.0) * (y * y - 1.0) / 8.0; };
  const auto coarse = pn::fd_schrodinger_levels(v, pn::Grid1D(-10.0, 10.0, 4001), 1.0, 2);
  const auto fine = pn::fd_schrodinger_levels(v, pn::Grid1D(-10.0, 10.0, 8001), 1.0, 2);
  CHECK(coarse[0] == doctest::Approx(pt::kQuarticFdE0).epsilon(1e-12));
  CHECK(coarse[1] == doctest::Approx(pt::kQuarticFdE1).epsilon(1e-12));
  CHECK(fine[0] == doctest::Approx(pt::kQuarticFdE0Fine).epsilon(1e-12));
  CHECK(std::abs(coarse[0] - fine[0]) < 1e-5);
}
