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
#include <utility>
#include <vector>

namespace qcat {

/// Named components of a counterexample, e.g. {"g","1"},{"x","2"}.
using Witness = std::vector<std::pair<std::string, std::string>>;

struct Verdict {
  std::string name;
  bool ok = true;
  Witness witness;
  std::string note;
};

/// Ordered list of named verdicts. Every failed verdict carries a witness.
class PropertyReport {
 public:
  void pass(std::string name, std::string note = {});
  void fail(std::string name, Witness witness, std::string note = {});
  void add(Verdict v) { verdicts_.push_back(std::move(v)); }
  void append(const PropertyReport& other, const std::string& prefix = {});

  bool ok() const;
  bool has(const std::string& name) const;
  /// Throws std::out_of_range when no verdict has this name.
  const Verdict& get(const std::string& name) const;
  bool flag(const std::string& name) const { return get(name).ok; }
  const std::vector<Verdict>& verdicts() const { return verdicts_; }

 private:
  std::vector<Verdict> verdicts_;
};

/// Value of a witness component by role; throws std::out_of_range.
const std::string& witness_value(const Witness& w, const std::string& role);

}  // namespace qcat
