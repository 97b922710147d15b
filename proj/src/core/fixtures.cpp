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

#include "qcat/core/fixtures.hpp"

#include <algorithm>

#include "qcat/core/diagonals.hpp"
#include "qcat/core/errors.hpp"

namespace qcat {

Quantaloid fixture_q2() {
  return make_quantale({"0", "1"}, [](int a, int b) { return a <= b; }, [](int a, int b) { return std::min(a, b); }, 1,
                       true);
}

Quantaloid fixture_c3() {
  return make_quantale({"0", "1", "2"}, [](int a, int b) { return a <= b; },
                       [](int a, int b) { return std::min(a, b); }, 2, true);
}

Quantaloid fixture_diamond() {
  // bit patterns: 0 = 00, a = 01, b = 10, 1 = 11
  return make_quantale({"0", "a", "b", "1"}, [](int x, int y) { return (x & y) == x; },
                       [](int x, int y) { return x & y; }, 3, true);
}

Quantaloid fixture_truncated_chain(int n) {
  if (n < 1) throw StructuralError("truncated chain needs at least one element");
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return make_quantale(std::move(names), [](int a, int b) { return a >= b; },
                       [n](int a, int b) { return std::min(a + b, n - 1); }, 0, true);
}

Quantaloid fixture_cyclic_powerset(int n) {
  if (n < 1 || n > 8) throw StructuralError("cyclic powerset fixture supports group orders 1..8");
  auto member = [](int k) { return k == 0 ? std::string("e") : k == 1 ? std::string("g") : "g" + std::to_string(k); };
  const int size = 1 << n;
  std::vector<std::string> names;
  for (int mask = 0; mask < size; ++mask) {
    std::string s = "{";
    bool first = true;
    for (int k = 0; k < n; ++k) {
      if (mask & (1 << k)) {
        s += (first ? "" : ",") + member(k);
        first = false;
      }
    }
    names.push_back(s + "}");
  }
  auto product = [n](int x, int y) {
    int out = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if ((x & (1 << i)) && (y & (1 << j))) out |= 1 << ((i + j) % n);
    return out;
  };
  return make_quantale(std::move(names), [](int x, int y) { return (x & y) == x; }, product, 1, true);
}

const std::vector<std::string>& quantaloid_fixture_names() {
  static const std::vector<std::string> names{"q2", "c3", "diamond", "l2", "l3", "l4", "pz2", "pz3", "dl3"};
  return names;
}

bool is_quantaloid_fixture(std::string_view name) {
  const auto& names = quantaloid_fixture_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

Quantaloid quantaloid_fixture(std::string_view name) {
  if (name == "q2") return fixture_q2();
  if (name == "c3") return fixture_c3();
  if (name == "diamond") return fixture_diamond();
  if (name == "l2") return fixture_truncated_chain(2);
  if (name == "l3") return fixture_truncated_chain(3);
  if (name == "l4") return fixture_truncated_chain(4);
  if (name == "pz2") return fixture_cyclic_powerset(2);
  if (name == "pz3") return fixture_cyclic_powerset(3);
  if (name == "dl3") return diagonal_quantaloid(fixture_truncated_chain(3));
  throw StructuralError("unknown quantaloid fixture \"" + std::string(name) + "\"");
}

}  // namespace qcat
