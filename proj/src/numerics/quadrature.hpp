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

#ifndef PISHAPE_NUMERICS_QUADRATURE_HPP
#define PISHAPE_NUMERICS_QUADRATURE_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace pishape::numerics {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // sum of |K15 - G7| over accepted panels
  std::size_t panels = 0;
};

/// Globally adaptive Gauss-Kronrod (7/15) quadrature of f over [a, b]. The
/// panel with the largest |K15 - G7| is bisected until the summed estimate
/// falls below tol. Throws Error(computation) naming the offending panel when
/// the depth or panel limit is hit.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double tol);

inline double integrate(const std::function<double(double)>& f, double a,
                        double b, double tol) {
  return integrate_adaptive(f, a, b, tol).value;
}

/// Upper limit Y beyond which exp(-g*Y^2) < weight_floor.
double gaussian_cutoff(double g, double weight_floor = 1e-14);

/// Running integral of samples f on a uniform grid with spacing h.
/// out[0] = 0, out[i] = integral from node 0 to node i. Each panel uses the
/// cubic through the four surrounding nodes (quadratic at the ends), so the
/// result is fourth-order accurate. Two samples fall back to the trapezoid.
std::vector<double> cumulative_integral(std::span<const double> f, double h);

/// Integral over a single panel [x_i, x_{i+1}] with the same local rule as
/// cumulative_integral.
double panel_integral(std::span<const double> f, std::size_t i, double h);

}  // namespace pishape::numerics

#endif  // PISHAPE_NUMERICS_QUADRATURE_HPP
