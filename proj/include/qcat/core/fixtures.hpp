// Copyright 2026 The qcat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qcat/core/quantaloid.hpp"

namespace qcat {

/// Two-element Boolean algebra, composition = meet, unit 1.
Quantaloid fixture_q2();
/// Chain 0 < 1 < 2, composition = min, unit 2.
Quantaloid fixture_c3();
/// Four-element Boolean algebra {0, a, b, 1}, composition = meet.
Quantaloid fixture_diamond();
/// Truncated addition on {0, ..., n-1} with the reversed numeric order:
/// a o b = min(a + b, n - 1), unit 0.
Quantaloid fixture_truncated_chain(int n);
/// Subsets of the cyclic group of order n under complex product, unit {e}.
/// Group elements are named e, g, g2, ...
Quantaloid fixture_cyclic_powerset(int n);

/// Every fixture carries the identity involution.
/// Names: q2, c3, diamond, l2, l3, l4, pz2, pz3, dl3 (diagonals of l3).
bool is_quantaloid_fixture(std::string_view name);
Quantaloid quantaloid_fixture(std::string_view name);
const std::vector<std::string>& quantaloid_fixture_names();

}  // namespace qcat
