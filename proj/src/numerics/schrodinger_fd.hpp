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

#ifndef PISHAPE_NUMERICS_SCHRODINGER_FD_HPP
#define PISHAPE_NUMERICS_SCHRODINGER_FD_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "numerics/grid.hpp"

namespace pishape::numerics {

/// Lowest n_levels eigenvalues of -(1/2m) d^2/dy^2 + V(y) on the grid with
/// Dirichlet ends, using the three-point Laplacian on the interior nodes.
/// Second-order accurate in the spacing. Requires n_points >= 3 * n_levels.
std::vector<double> fd_schrodinger_levels(const std::function<double(double)>& potential,
                                          const Grid1D& grid, double m_eff,
                                          std::size_t n_levels);

/// Lowest n eigenvalues of a symmetric tridiagonal matrix by Sturm-sequence
/// bisection. off.size() must be diag.size() - 1.
std::vector<double> tridiagonal_lowest(std::span<const double> diag,
                                       std::span<const double> off, std::size_t n);

}  // namespace pishape::numerics

#endif  // PISHAPE_NUMERICS_SCHRODINGER_FD_HPP
