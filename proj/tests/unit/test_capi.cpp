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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>

#include "doctest.h"
#include "qcat/qcat.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  qcat_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("documents through the C interface") {
  qcat_document* doc = nullptr;
  REQUIRE(qcat_fixture("l3", &doc) == QCAT_OK);
  CHECK(std::string(qcat_document_kind(doc)) == "quantaloid");
  CHECK(std::string(qcat_document_name(doc)) == "l3");
  char* text = nullptr;
  REQUIRE(qcat_document_emit(doc, &text) == QCAT_OK);
  const std::string emitted = take(text);
  qcat_document* back = nullptr;
  REQUIRE(qcat_document_parse(emitted.data(), emitted.size(), &back) == QCAT_OK);
  REQUIRE(qcat_document_emit(back, &text) == QCAT_OK);
  CHECK(take(text) == emitted);
  qcat_document_free(back);

  qcat_report* report = nullptr;
  const qcat_document* inputs[] = {doc};
  REQUIRE(qcat_run("analyze", inputs, 1, nullptr, &report) == QCAT_OK);
  CHECK(qcat_report_positive(report));
  CHECK(qcat_report_exit_code(report) == 0);
  REQUIRE(qcat_report_text(report, &text) == QCAT_OK);
  CHECK(take(text).find("PASS divisible-3") != std::string::npos);
  qcat_report_free(report);
  qcat_document_free(doc);
}

TEST_CASE("errors map to status codes") {
  qcat_document* doc = nullptr;
  const std::string bad = "{\"kind\":\"pms\"}";
  CHECK(qcat_document_parse(bad.data(), bad.size(), &doc) == QCAT_ERR_STRUCTURE);
  CHECK(doc == nullptr);
  CHECK(std::string(qcat_last_error()).size() > 0);
  CHECK(qcat_document_load("/nonexistent/file.json", &doc) == QCAT_ERR_USAGE);
  CHECK(qcat_fixture(nullptr, &doc) == QCAT_ERR_ARGUMENT);

  REQUIRE(qcat_fixture("twopoint", &doc) == QCAT_OK);
  qcat_options o;
  qcat_options_init(&o);
  o.step = "half";
  qcat_report* report = nullptr;
  const qcat_document* inputs[] = {doc};
  CHECK(qcat_run("exponentiable", inputs, 1, &o, &report) == QCAT_ERR_ARGUMENT);
  CHECK(report == nullptr);
  o.step = "1/2";
  o.cap = "3";
  CHECK(qcat_run("exponentiable", inputs, 1, &o, &report) == QCAT_NEGATIVE);
  CHECK(qcat_report_exit_code(report) == 1);
  qcat_report_free(report);
  CHECK(qcat_run("nope", inputs, 1, nullptr, &report) == QCAT_ERR_USAGE);
  qcat_document_free(doc);
  CHECK(std::string(qcat_status_name(QCAT_ERR_BOUND)) == "bound exceeded");
}

TEST_CASE("listings") {
  CHECK(qcat_fixture_count() > 10);
  CHECK(std::string(qcat_fixture_name(0)) == "q2");
  CHECK(qcat_fixture_name(qcat_fixture_count()) == nullptr);
  CHECK(qcat_command_count() == 10);
  CHECK(std::string(qcat_version()) == "0.1.0");
}
