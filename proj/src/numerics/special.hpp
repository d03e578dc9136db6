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

#ifndef PISHAPE_NUMERICS_SPECIAL_HPP
#define PISHAPE_NUMERICS_SPECIAL_HPP

namespace pishape::numerics {

/// Scaled complementary error function exp(x^2) * erfc(x).
/// Finite for all x above about -26.6; +inf below that.
double erfcx(double x);

}  // namespace pishape::numerics

#endif  // PISHAPE_NUMERICS_SPECIAL_HPP
