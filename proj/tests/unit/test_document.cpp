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

#include <string>

#include "doctest.h"
#include "json.hpp"
#include "qcat/core/commands.hpp"
#include "qcat/core/document.hpp"
#include "qcat/core/errors.hpp"
#include "qcat/core/fixtures.hpp"

using namespace qcat;

namespace {

const char* kTwoPoint = R"({"kind":"pms","meta":{"name":"t"},"body":{"points":["a","b"],"distances":[["0","1/3"],["1/3","1/3"]]}})";

}  // namespace

TEST_CASE("every fixture document round-trips") {
  for (const auto& name : fixture_document_names()) {
    CAPTURE(name);
    const Document d = fixture_document(name);
    const std::string text = emit_document(d);
    CHECK(text.back() == '\n');
    const Document back = parse_document(text);
    CHECK(back == d);
    CHECK(emit_document(back) == text);
  }
}

TEST_CASE("pms documents parse exact rationals") {
  const Document d = parse_document(kTwoPoint);
  REQUIRE(d.kind() == DocumentKind::Pms);
  const auto& x = std::get<PartialMetricSpace>(d.body);
  CHECK(x(0, 1) == ExtValue(Rational(1, 3)));
  CHECK(d.name == "t");
}

TEST_CASE("schema errors name the offending field") {
  const char* missing = R"({"kind":"pms","body":{"points":["a","b"],"distances":[["0","1"],["1"]]}})";
  try {
    parse_document(missing);
    FAIL("expected a schema error");
  } catch (const SchemaError& e) {
    CHECK(e.where() == "document.body.distances[1]");
    CHECK(std::string(e.what()).find("(b,b)") != std::string::npos);
  }
  try {
    parse_document("{\"kind\": \"pms\",\n  \"body\": [}");
    FAIL("expected a schema error");
  } catch (const SchemaError& e) {
    CHECK(e.where().starts_with("line 2"));
  }
  CHECK_THROWS_AS(parse_document(R"({"kind":"banana","body":{}})"), SchemaError);
  CHECK_THROWS_AS(parse_document(R"({"kind":"category","body":{"base":"nope","objects":[],"homs":[]}})"),
                  StructuralError);
}

TEST_CASE("category, functor, distributor and sequence documents") {
  const char* cat = R"({"kind":"category","body":{"base":"l3",
    "objects":[{"name":"x","type":"*"},{"name":"y","type":"*"}],
    "homs":[["0","0"],["2","0"]]}})";
  const Document c = parse_document(cat);
  REQUIRE(c.kind() == DocumentKind::Category);
  const auto& body = std::get<CategoryBody>(c.body);
  CHECK(body.base_ref == "l3");
  CHECK(validate_category(body.category).ok());
  CHECK(parse_document(emit_document(c)) == c);

  const nlohmann::json base = nlohmann::json::parse(cat)["body"];
  nlohmann::json f{{"kind", "functor"}, {"body", {{"dom", base}, {"cod", base}, {"map", {{"x", "x"}, {"y", "y"}}}}}};
  const Document fd = parse_document(f.dump());
  CHECK(validate_functor(fd.functor()).ok());
  CHECK(parse_document(emit_document(fd)) == fd);

  nlohmann::json dist{{"kind", "distributor"},
                      {"body", {{"dom", base}, {"cod", base}, {"matrix", nlohmann::json::array({nlohmann::json::array({"0", "0"}), nlohmann::json::array({"2", "0"})})}}}};
  const Document dd = parse_document(dist.dump());
  CHECK(validate_distributor(dd.distributor()).ok());
  CHECK(parse_document(emit_document(dd)) == dd);

  const Document s = parse_document(
      R"({"kind":"sequence","body":{"space":"wordspace:ab","pattern":{"prefix":"a","repeat":"b"},"horizon":32,"eps":"1/100"}})");
  const auto& spec = std::get<SequenceSpec>(s.body);
  const SampledSequence sampled = to_sampled(spec);
  CHECK(sampled.horizon == 32);
  CHECK(sampled.eps == Rational(1, 100));
  CHECK_FALSE(sampled.exact());
  CHECK(sampled.term(2) == "abb");
  CHECK(parse_document(emit_document(s)) == s);
  CHECK_THROWS_AS(
      parse_document(R"({"kind":"sequence","body":{"terms":["a"],"horizon":1}})"), SchemaError);
}

TEST_CASE("fixture documents") {
  CHECK(is_fixture_name("wordspace-3"));
  CHECK_FALSE(is_fixture_name("wordspace-0"));
  CHECK_THROWS_AS(fixture_document("nothing"), UsageError);
  const Document q2 = fixture_document("q2");
  CHECK(std::get<Quantaloid>(q2.body) == quantaloid_fixture("q2"));
  const Document w = fixture_document("wordspace-2");
  CHECK(std::get<PartialMetricSpace>(w.body) == word_space("ab", 2));
}

TEST_CASE("commands produce reports with stable exit codes") {
  auto run = [](const std::string& command, std::vector<std::string> names, RunOptions o = {}) {
    std::vector<NamedDocument> docs;
    for (const auto& n : names) docs.push_back({n, fixture_document(n)});
    return run_command(command, docs, o);
  };
  const RunReport l3 = run("analyze", {"l3"});
  CHECK(l3.exit_code() == 0);
  for (int c = 1; c <= 5; ++c) CHECK(l3.verdicts.flag("divisible-" + std::to_string(c)));
  CHECK(l3.verdicts.flag("integral"));

  RunOptions sym;
  sym.sets = {"i"};
  const RunReport s = run("symcompare", {"pz3cat"}, sym);
  CHECK(s.exit_code() == 1);
  CHECK(witness_value(s.verdicts.get("closure-equals-symmetric-closure").witness, "x") == "x");

  RunOptions grid;
  grid.step = Rational(1, 2);
  grid.cap = Rational(3);
  const RunReport e = run("exponentiable", {"twopoint"}, grid);
  CHECK(e.exit_code() == 1);
  const Verdict& ev = e.verdicts.get("exponentiable");
  CHECK(witness_value(ev.witness, "u") == "1");
  CHECK(witness_value(ev.witness, "v") == "1");
  CHECK(witness_value(ev.witness, "w") == "1");

  const nlohmann::ordered_json j = nlohmann::ordered_json::parse(report_json(e));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"command", "inputs", "verdicts", "results", "exit_code", "timing_ms"});
  CHECK(j["exit_code"] == 1);
  CHECK(report_text(e).find("FAIL exponentiable") != std::string::npos);

  CHECK_THROWS_AS(run("frobnicate", {"l3"}), UsageError);
  CHECK_THROWS_AS(run("analyze", {}), UsageError);

  for (const auto& cmd : {"validate", "analyze", "diagonals"}) CHECK(run(cmd, {"q2"}).exit_code() == 0);
  CHECK(run("closure", {"pz3cat"}).verdicts.verdicts().size() > 0);
  CHECK(run("complete", {"all1"}).exit_code() == 0);
  CHECK(run("hausdorff", {"twopoint"}).exit_code() == 0);
  CHECK(run("analyze", {"terminal-3"}).exit_code() == 0);
}
