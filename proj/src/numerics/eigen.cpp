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

#include "numerics/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "common/error.hpp"

namespace pishape::numerics {

namespace {

using LComplex = std::complex<long double>;
using LMatrix = std::vector<LComplex>;  // row-major n x n

constexpr long double kLEps = std::numeric_limits<long double>::epsilon();

LMatrix to_long(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  LMatrix out(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      out[r * n + c] = LComplex(m(r, c).real(), m(r, c).imag());
  return out;
}

LComplex horner(const std::vector<LComplex>& c, LComplex x) {
  LComplex p = 0.0L;
  for (std::size_t k = c.size(); k-- > 0;) p = p * x + c[k];
  return p;
}

LComplex horner_derivative(const std::vector<LComplex>& c, LComplex x) {
  LComplex p = 0.0L;
  for (std::size_t k = c.size(); k-- > 1;) {
    p = p * x + c[k] * static_cast<long double>(k);
  }
  return p;
}

// Newton steps that are kept only while they shrink |p|.
LComplex polish(const std::vector<LComplex>& c, LComplex x) {
  long double px = std::abs(horner(c, x));
  for (int it = 0; it < 60 && px > 0.0L; ++it) {
    const LComplex d = horner_derivative(c, x);
    if (d == LComplex(0.0L)) break;
    const LComplex next = x - horner(c, x) / d;
    const long double pn = std::abs(horner(c, next));
    if (!(pn < px)) break;
    x = next;
    px = pn;
  }
  return x;
}

// Principal cube root.
LComplex cbrt_principal(LComplex z) {
  if (z == LComplex(0.0L)) return 0.0L;
  return std::polar(std::cbrt(std::abs(z)), std::arg(z) / 3.0L);
}

std::vector<LComplex> quadratic_roots(LComplex c0, LComplex c1) {
  // x^2 + c1 x + c0
  LComplex sq = std::sqrt(c1 * c1 - 4.0L * c0);
  if ((std::conj(c1) * sq).real() < 0.0L) sq = -sq;
  const LComplex q = -0.5L * (c1 + sq);
  if (q == LComplex(0.0L)) return {0.0L, 0.0L};
  return {q, c0 / q};
}

std::vector<LComplex> cubic_roots(LComplex a, LComplex b, LComplex c) {
  // z^3 + a z^2 + b z + c, depressed with z = w - a/3.
  const LComplex p = b - a * a / 3.0L;
  const LComplex q = 2.0L * a * a * a / 27.0L - a * b / 3.0L + c;
  LComplex sq = std::sqrt(q * q / 4.0L + p * p * p / 27.0L);
  LComplex u3 = -q / 2.0L + sq;
  const LComplex alt = -q / 2.0L - sq;
  if (std::abs(alt) > std::abs(u3)) u3 = alt;
  const LComplex omega(-0.5L, std::sqrt(3.0L) / 2.0L);
  std::vector<LComplex> w(3);
  const LComplex u = cbrt_principal(u3);
  if (u == LComplex(0.0L)) {
    w = {0.0L, 0.0L, 0.0L};
  } else {
    LComplex uk = u;
    for (int k = 0; k < 3; ++k) {
      w[k] = uk - p / (3.0L * uk);
      uk *= omega;
    }
  }
  const std::vector<LComplex> coeffs{c, b, a, 1.0L};
  std::vector<LComplex> z(3);
  for (int k = 0; k < 3; ++k) z[k] = polish(coeffs, w[k] - a / 3.0L);
  return z;
}

std::vector<LComplex> quartic_roots(const std::vector<LComplex>& c) {
  // x^4 + a x^3 + b x^2 + cc x + d, depressed with x = t - a/4.
  const LComplex a = c[3], b = c[2], cc = c[1], d = c[0];
  const LComplex a2 = a * a;
  const LComplex p = b - 3.0L * a2 / 8.0L;
  const LComplex q = cc - a * b / 2.0L + a2 * a / 8.0L;
  const LComplex r = d - a * cc / 4.0L + a2 * b / 16.0L - 3.0L * a2 * a2 / 256.0L;

  std::vector<LComplex> t;
  const long double scale = 1.0L + std::abs(p) + std::sqrt(std::abs(r));
  if (std::abs(q) <= 64.0L * kLEps * scale * scale * std::sqrt(scale)) {
    // Biquadratic: t^4 + p t^2 + r.
    for (const LComplex& s : quadratic_roots(r, p)) {
      const LComplex root = std::sqrt(s);
      t.push_back(root);
      t.push_back(-root);
    }
  } else {
    // Ferrari: resolvent m^3 + p m^2 + (p^2/4 - r) m - q^2/8 = 0.
    const std::vector<LComplex> ms = cubic_roots(p, p * p / 4.0L - r, -q * q / 8.0L);
    LComplex m = ms[0];
    for (const LComplex& cand : ms)
      if (std::abs(cand) > std::abs(m)) m = cand;
    const LComplex s = std::sqrt(2.0L * m);
    const LComplex base = p / 2.0L + m;
    const LComplex shift = q / (2.0L * s);
    for (const LComplex& root : quadratic_roots(base + shift, -s)) t.push_back(root);
    for (const LComplex& root : quadratic_roots(base - shift, s)) t.push_back(root);
  }
  std::vector<LComplex> x(4);
  for (int k = 0; k < 4; ++k) x[k] = polish(c, t[k] - a / 4.0L);
  return x;
}

bool less_complex(const Complex& a, const Complex& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

void fix_phase(ComplexVector& v) {
  double best = 0.0;
  for (const Complex& x : v) best = std::max(best, std::abs(x));
  if (best == 0.0) return;
  for (const Complex& x : v) {
    if (std::abs(x) >= best * (1.0 - 1e-12)) {
      const Complex phase = std::conj(x) / std::abs(x);
      for (Complex& y : v) y *= phase;
      return;
    }
  }
}

void normalize(ComplexVector& v) {
  const double n = norm2(v);
  if (n > 0.0)
    for (Complex& x : v) x /= n;
}

double residual(const ComplexMatrix& m, const ComplexVector& v, Complex lambda) {
  ComplexVector mv = m.apply(v);
  for (std::size_t i = 0; i < v.size(); ++i) mv[i] -= lambda * v[i];
  return norm2(mv);
}

// Solves (A - mu I) x = b by Gaussian elimination with partial pivoting.
// Zero pivots are nudged so an exact eigenvalue shift still yields the
// dominant direction.
std::vector<LComplex> shifted_solve(const LMatrix& a, std::size_t n, LComplex mu,
                                    std::vector<LComplex> b, long double scale) {
  LMatrix m = a;
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] -= mu;
  const long double floor = kLEps * std::max(scale, 1e-300L);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(m[r * n + col]) > std::abs(m[piv * n + col])) piv = r;
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m[col * n + c], m[piv * n + c]);
      std::swap(b[col], b[piv]);
    }
    if (std::abs(m[col * n + col]) < floor) m[col * n + col] = floor;
    for (std::size_t r = col + 1; r < n; ++r) {
      const LComplex f = m[r * n + col] / m[col * n + col];
      if (f == LComplex(0.0L)) continue;
      for (std::size_t c = col; c < n; ++c) m[r * n + c] -= f * m[col * n + c];
      b[r] -= f * b[col];
    }
  }
  std::vector<LComplex> x(n);
  for (std::size_t i = n; i-- > 0;) {
    LComplex s = b[i];
    for (std::size_t c = i + 1; c < n; ++c) s -= m[i * n + c] * x[c];
    x[i] = s / m[i * n + i];
  }
  return x;
}

EigenSystem jacobi_hermitian(const ComplexMatrix& input) {
  const std::size_t n = input.dim();
  ComplexMatrix a = input;
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = std::max(1.0, a.frobenius_norm());

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (std::sqrt(off) <= 1e-17 * scale) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const Complex phase = apq / mag;
        const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // G = diag(1, conj(phase)) * [[c, s], [-s, c]]
        const Complex gpp = c, gpq = s;
        const Complex gqp = -s * std::conj(phase), gqq = c * std::conj(phase);
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * gpp + akq * gqp;
          a(k, q) = akp * gpq + akq * gqq;
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * gpp + vkq * gqp;
          v(k, q) = vkp * gpq + vkq * gqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
          a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  EigenSystem es;
  es.hermitian = true;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });
  for (std::size_t idx : order) {
    es.eigenvalues.emplace_back(a(idx, idx).real(), 0.0);
    ComplexVector vec(n);
    for (std::size_t k = 0; k < n; ++k) vec[k] = v(k, idx);
    normalize(vec);
    fix_phase(vec);
    es.eigenvectors.push_back(std::move(vec));
  }
  return es;
}

EigenSystem polynomial_path(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  const auto coeffs = characteristic_polynomial(m);
  std::vector<LComplex> roots = polynomial_roots(coeffs);

  std::vector<Complex> lambdas;
  for (const LComplex& r : roots)
    lambdas.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
  std::stable_sort(lambdas.begin(), lambdas.end(), less_complex);

  const LMatrix a = to_long(m);
  const long double scale = std::max(1.0L, static_cast<long double>(m.frobenius_norm()));
  const double cluster_tol = 1e-7 * static_cast<double>(scale);

  EigenSystem es;
  for (std::size_t j = 0; j < n; ++j) {
    const Complex lambda = lambdas[j];
    // Vectors already found for (numerically) the same eigenvalue.
    std::vector<const ComplexVector*> cluster;
    for (std::size_t i = 0; i < j; ++i)
      if (std::abs(lambdas[i] - lambda) <= cluster_tol) cluster.push_back(&es.eigenvectors[i]);

    std::vector<LComplex> x(n);
    for (std::size_t k = 0; k < n; ++k)
      x[k] = LComplex(1.0L + 0.1L * k, 0.05L * static_cast<long double>((k + j) % n));
    x[cluster.size() % n] += 1.0L;

    ComplexVector vec(n);
    for (int iter = 0; iter < 3; ++iter) {
      x = shifted_solve(a, n, LComplex(lambda.real(), lambda.imag()), x, scale);
      // Rescale before converting back so the next solve stays in range.
      long double big = 0.0L;
      for (const LComplex& xi : x) big = std::max(big, std::abs(xi));
      if (!(big > 0.0L) || !std::isfinite(static_cast<double>(big))) break;
      for (LComplex& xi : x) xi /= big;
      for (std::size_t k = 0; k < n; ++k)
        vec[k] = Complex(static_cast<double>(x[k].real()), static_cast<double>(x[k].imag()));
      for (const ComplexVector* prev : cluster) {
        const Complex proj = inner(*prev, vec);
        for (std::size_t k = 0; k < n; ++k) vec[k] -= proj * (*prev)[k];
      }
      normalize(vec);
      for (std::size_t k = 0; k < n; ++k) x[k] = LComplex(vec[k].real(), vec[k].imag());
    }
    fix_phase(vec);
    es.eigenvalues.push_back(lambda);
    es.eigenvectors.push_back(std::move(vec));
  }
  return es;
}

}  // namespace

std::vector<std::complex<long double>> characteristic_polynomial(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  const LMatrix a = to_long(m);
  std::vector<LComplex> c(n + 1);
  c[n] = 1.0L;
  LMatrix mk(n * n, 0.0L);
  for (std::size_t k = 1; k <= n; ++k) {
    LMatrix next(n * n, 0.0L);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t col = 0; col < n; ++col) {
        LComplex s = 0.0L;
        for (std::size_t i = 0; i < n; ++i) s += a[r * n + i] * mk[i * n + col];
        next[r * n + col] = s;
      }
    for (std::size_t i = 0; i < n; ++i) next[i * n + i] += c[n - k + 1];
    mk = std::move(next);
    LComplex tr = 0.0L;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t i = 0; i < n; ++i) tr += a[r * n + i] * mk[i * n + r];
    c[n - k] = -tr / static_cast<long double>(k);
  }
  return c;
}

std::vector<std::complex<long double>> polynomial_roots(
    const std::vector<std::complex<long double>>& coeffs) {
  if (coeffs.size() == 3) {
    auto r = quadratic_roots(coeffs[0], coeffs[1]);
    for (auto& x : r) x = polish(coeffs, x);
    return r;
  }
  if (coeffs.size() == 5) return quartic_roots(coeffs);
  throw_invalid("polynomial_roots: only degree 2 and 4 are supported");
}

EigenSystem eigen_small(const ComplexMatrix& m) {
  if (m.dim() != 2 && m.dim() != 4) throw_invalid("eigen_small: dimension must be 2 or 4");
  if (!m.all_finite()) throw_invalid("eigen_small: non-finite matrix entry");

  const double scale = std::max(1.0, m.frobenius_norm());
  const bool hermitian = m.is_hermitian(1e-14 * scale);
  EigenSystem es = hermitian ? jacobi_hermitian(m) : polynomial_path(m);

  es.residual_tolerance = 1e-10 * scale;
  for (std::size_t j = 0; j < es.eigenvalues.size(); ++j) {
    const double res = residual(m, es.eigenvectors[j], es.eigenvalues[j]);
    es.residuals.push_back(res);
    if (!(res <= es.residual_tolerance)) es.flagged = true;
  }
  return es;
}

}  // namespace pishape::numerics
