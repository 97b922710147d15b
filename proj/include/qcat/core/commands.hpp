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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "qcat/core/document.hpp"
#include "qcat/core/report.hpp"

namespace qcat {

struct RunOptions {
  std::vector<std::string> sets;  // each entry a comma-separated list of names
  std::optional<Rational> step;
  std::optional<Rational> cap;
  std::optional<Rational> eps;
  std::optional<std::uint64_t> bound;
  std::optional<std::size_t> horizon;
};

struct NamedDocument {
  std::string source;  // file path or fixture name, echoed in the report
  Document doc;
};

struct RunReport {
  std::string command;
  std::vector<std::string> inputs;
  PropertyReport verdicts;
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  double timing_ms = 0;

  /// 0 when every verdict passed, 1 otherwise.
  int exit_code() const { return verdicts.ok() ? 0 : 1; }
};

const std::vector<std::string>& command_names();

/// Dispatches to the core checks. Throws UsageError for unknown commands or
/// missing inputs, StructuralError/PreconditionError/BoundExceeded from the
/// checks themselves, std::invalid_argument for bad flag values.
RunReport run_command(const std::string& command, const std::vector<NamedDocument>& inputs, const RunOptions& options);

/// Stable field order: command, inputs, verdicts, results, exit_code, timing_ms.
std::string report_json(const RunReport& r);
std::string report_text(const RunReport& r);

}  // namespace qcat
