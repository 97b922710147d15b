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

#include "qcat/core/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcat {

void PropertyReport::pass(std::string name, std::string note) {
  verdicts_.push_back(Verdict{std::move(name), true, {}, std::move(note)});
}

void PropertyReport::fail(std::string name, Witness witness, std::string note) {
  verdicts_.push_back(Verdict{std::move(name), false, std::move(witness), std::move(note)});
}

void PropertyReport::append(const PropertyReport& other, const std::string& prefix) {
  for (Verdict v : other.verdicts_) {
    v.name = prefix + v.name;
    verdicts_.push_back(std::move(v));
  }
}

bool PropertyReport::ok() const {
  return std::all_of(verdicts_.begin(), verdicts_.end(), [](const Verdict& v) { return v.ok; });
}

bool PropertyReport::has(const std::string& name) const {
  return std::any_of(verdicts_.begin(), verdicts_.end(), [&](const Verdict& v) { return v.name == name; });
}

const Verdict& PropertyReport::get(const std::string& name) const {
  for (const auto& v : verdicts_) {
    if (v.name == name) return v;
  }
  throw std::out_of_range("no verdict named " + name);
}

const std::string& witness_value(const Witness& w, const std::string& role) {
  for (const auto& [k, v] : w) {
    if (k == role) return v;
  }
  throw std::out_of_range("witness has no component " + role);
}

}  // namespace qcat
