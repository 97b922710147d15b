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

// qcat: command-line front end over the C interface.
//
// Exit codes: 0 all verdicts positive, 1 a negative verdict, 2 structural
// or usage error.

#include <cstdio>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qcat/qcat.h"

namespace {

struct DocumentDeleter {
  void operator()(qcat_document* d) const { qcat_document_free(d); }
};
struct ReportDeleter {
  void operator()(qcat_report* r) const { qcat_report_free(r); }
};
using DocumentPtr = std::unique_ptr<qcat_document, DocumentDeleter>;
using ReportPtr = std::unique_ptr<qcat_report, ReportDeleter>;

std::string take(char* s) {
  std::string out = s ? s : "";
  qcat_string_free(s);
  return out;
}

int error_exit(qcat_status s) {
  std::cerr << "qcat: " << qcat_status_name(s) << ": " << qcat_last_error() << "\n";
  return 2;
}

int print_fixtures(const std::vector<std::string>& names) {
  if (names.empty()) {
    for (size_t i = 0; i < qcat_fixture_count(); ++i) std::cout << qcat_fixture_name(i) << "\n";
    return 0;
  }
  for (const auto& n : names) {
    qcat_document* raw = nullptr;
    if (qcat_status s = qcat_fixture(n.c_str(), &raw); s != QCAT_OK) return error_exit(s);
    DocumentPtr doc(raw);
    char* text = nullptr;
    if (qcat_status s = qcat_document_emit(doc.get(), &text); s != QCAT_OK) return error_exit(s);
    std::cout << take(text);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks finite quantaloids, enriched categories and partial metric spaces"};
  std::vector<std::string> commands;
  for (size_t i = 0; i < qcat_command_count(); ++i) commands.emplace_back(qcat_command_name(i));

  std::string command;
  std::vector<std::string> inputs, sets;
  std::string step, cap, eps;
  uint64_t bound = 0, horizon = 0;
  bool json = false;
  app.add_option("command", command, "validate, analyze, diagonals, closure, symcompare, complete, hausdorff, "
                                     "exponentiable, converge or fixtures")
      ->required()
      ->check(CLI::IsMember(commands));
  app.add_option("--in", inputs, "input document (file path or fixture name); repeatable");
  app.add_flag("--json", json, "print the report as JSON");
  app.add_option("--bound", bound, "enumeration bound");
  app.add_option("--step", step, "grid step, e.g. 1/2");
  app.add_option("--cap", cap, "grid cap, e.g. 3");
  app.add_option("--horizon", horizon, "sequence horizon");
  app.add_option("--eps", eps, "sequence tolerance, e.g. 1/1000");
  app.add_option("--set", sets, "comma-separated names; repeatable");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (command == "fixtures" && !json) {
    std::vector<std::string> names;
    for (const auto& s : sets) {
      std::stringstream in(s);
      std::string item;
      while (std::getline(in, item, ','))
        if (!item.empty()) names.push_back(item);
    }
    return print_fixtures(names);
  }

  std::vector<DocumentPtr> docs;
  for (const auto& path : inputs) {
    qcat_document* raw = nullptr;
    if (qcat_status s = qcat_document_load(path.c_str(), &raw); s != QCAT_OK) return error_exit(s);
    docs.emplace_back(raw);
  }
  std::vector<const qcat_document*> handles;
  for (const auto& d : docs) handles.push_back(d.get());
  std::vector<const char*> set_ptrs;
  for (const auto& s : sets) set_ptrs.push_back(s.c_str());

  qcat_options options;
  qcat_options_init(&options);
  options.sets = set_ptrs.data();
  options.set_count = set_ptrs.size();
  if (!step.empty()) options.step = step.c_str();
  if (!cap.empty()) options.cap = cap.c_str();
  if (!eps.empty()) options.eps = eps.c_str();
  options.bound = bound;
  options.horizon = horizon;

  qcat_report* raw = nullptr;
  const qcat_status s = qcat_run(command.c_str(), handles.data(), handles.size(), &options, &raw);
  if (s != QCAT_OK && s != QCAT_NEGATIVE) return error_exit(s);
  ReportPtr report(raw);
  char* text = nullptr;
  const qcat_status t = json ? qcat_report_json(report.get(), &text) : qcat_report_text(report.get(), &text);
  if (t != QCAT_OK) return error_exit(t);
  std::cout << take(text);
  return qcat_report_exit_code(report.get());
}
