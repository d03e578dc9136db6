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


// Frozen reference values shared by unit and acceptance tests.

#ifndef PISHAPE_TESTS_SUPPORT_FIXTURES_HPP
#define PISHAPE_TESTS_SUPPORT_FIXTURES_HPP

namespace pishape::testing {

// Finite-difference levels of -(1/2) d^2/dy^2 + (1/8)(y^2 - 1)^2 on [-10, 10]
// with Dirichlet ends.
inline constexpr double kQuarticFdE0 = 0.29398020956068649;  // 4001 nodes
inline constexpr double kQuarticFdE1 = 0.93136530212723301;  // 4001 nodes
inline constexpr double kQuarticFdE0Fine = 0.29398051799216768;  // 8001 nodes
inline constexpr double kQuarticFdJ = 0.63738509256654652;  // E1 - E0, 4001 nodes

// Zero-iterate energy of the same well with l_0 = -y: 11/32 exactly.
inline constexpr double kQuarticFirstEnergy = 0.34375;

}  // namespace pishape::testing

#endif  // PISHAPE_TESTS_SUPPORT_FIXTURES_HPP
