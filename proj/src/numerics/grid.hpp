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

#ifndef PISHAPE_NUMERICS_GRID_HPP
#define PISHAPE_NUMERICS_GRID_HPP

#include <cstddef>
#include <vector>

namespace pishape::numerics {

/// Uniform grid of n_points nodes on [lo, hi], both ends included.
class Grid1D {
 public:
  Grid1D(double lo, double hi, std::size_t n_points);

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  std::size_t size() const noexcept { return n_; }
  double spacing() const noexcept { return h_; }

  // The last node is pinned to hi exactly.
  double point(std::size_t i) const noexcept {
    return i + 1 == n_ ? hi_ : lo_ + static_cast<double>(i) * h_;
  }

  std::vector<double> points() const;

 private:
  double lo_;
  double hi_;
  std::size_t n_;
  double h_;
};

}  // namespace pishape::numerics

#endif  // PISHAPE_NUMERICS_GRID_HPP
