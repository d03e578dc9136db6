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

#include "numerics/schrodinger_fd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "common/error.hpp"

namespace pishape::numerics {

namespace {

// Number of eigenvalues strictly below x.
std::size_t sturm_count(std::span<const double> d, std::span<const double> e, double x) {
  std::size_t count = 0;
  double q = d[0] - x;
  if (q < 0.0) ++count;
  for (std::size_t i = 1; i < d.size(); ++i) {
    if (q == 0.0) q = std::numeric_limits<double>::epsilon() * (std::abs(e[i - 1]) + 1e-300);
    q = d[i] - x - e[i - 1] * e[i - 1] / q;
    if (q < 0.0) ++count;
  }
  return count;
}

}  // namespace

std::vector<double> tridiagonal_lowest(std::span<const double> diag,
                                       std::span<const double> off, std::size_t n) {
  if (diag.empty() || off.size() + 1 != diag.size()) {
    throw_invalid("tridiagonal_lowest: inconsistent sizes");
  }
  if (n > diag.size()) throw_invalid("tridiagonal_lowest: too many levels requested");

  // Gershgorin bounds.
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(off[i - 1]);
    if (i < off.size()) r += std::abs(off[i]);
    lo = std::min(lo, diag[i] - r);
    hi = std::max(hi, diag[i] + r);
  }

  std::vector<double> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    double a = lo, b = hi;
    // Invariant: count(a) <= k < count(b).
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      if (sturm_count(diag, off, mid) > k) {
        b = mid;
      } else {
        a = mid;
      }
      if (b - a <= 2.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(a), std::abs(b)))
        break;
    }
    out.push_back(0.5 * (a + b));
  }
  return out;
}

std::vector<double> fd_schrodinger_levels(const std::function<double(double)>& potential,
                                          const Grid1D& grid, double m_eff,
                                          std::size_t n_levels) {
  if (!(m_eff > 0.0)) throw_invalid("fd_schrodinger: m_eff must be positive");
  if (n_levels == 0) return {};
  if (n_levels > grid.size() - 2) {
    throw_invalid("fd_schrodinger: n_levels exceeds interior point count");
  }
  if (grid.size() < 3 * n_levels) {
    throw_invalid("fd_schrodinger: grid too coarse, need n_points >= 3*n_levels (" +
                  std::to_string(grid.size()) + " < " + std::to_string(3 * n_levels) + ")");
  }
  const double h = grid.spacing();
  const double kinetic = 1.0 / (2.0 * m_eff * h * h);
  const std::size_t interior = grid.size() - 2;
  std::vector<double> diag(interior);
  std::vector<double> off(interior - 1, -kinetic);
  for (std::size_t i = 0; i < interior; ++i) {
    const double v = potential(grid.point(i + 1));
    if (!std::isfinite(v)) {
      throw_invalid("fd_schrodinger: potential not finite at y = " +
                    std::to_string(grid.point(i + 1)));
    }
    diag[i] = 2.0 * kinetic + v;
  }
  return tridiagonal_lowest(diag, off, n_levels);
}

}  // namespace pishape::numerics
