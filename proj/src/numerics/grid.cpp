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

#include "numerics/grid.hpp"

#include <cmath>
#include <string>

#include "common/error.hpp"

namespace pishape::numerics {

Grid1D::Grid1D(double lo, double hi, std::size_t n_points)
    : lo_(lo), hi_(hi), n_(n_points), h_(0.0) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw_invalid("Grid1D: need finite lo < hi, got [" + std::to_string(lo) +
                  ", " + std::to_string(hi) + "]");
  }
  if (n_points < 3) {
    throw_invalid("Grid1D: need at least 3 points, got " +
                  std::to_string(n_points));
  }
  h_ = (hi - lo) / static_cast<double>(n_points - 1);
  if (!(h_ > 0.0)) throw_invalid("Grid1D: spacing underflows");
}

std::vector<double> Grid1D::points() const {
  std::vector<double> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = point(i);
  return out;
}

}  // namespace pishape::numerics
