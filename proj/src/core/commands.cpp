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

#include "qcat/core/commands.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>

#include "qcat/core/errors.hpp"
#include "qcat/core/presheaf.hpp"

namespace qcat {

using Json = nlohmann::ordered_json;

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"validate",  "analyze",   "diagonals",     "closure",  "symcompare",
                                                 "complete",  "hausdorff", "exponentiable", "converge", "fixtures"};
  return names;
}

namespace {

const NamedDocument* find_kind(const std::vector<NamedDocument>& inputs, DocumentKind kind) {
  for (const auto& in : inputs)
    if (in.doc.kind() == kind) return &in;
  return nullptr;
}

const NamedDocument& need_input(const std::vector<NamedDocument>& inputs, const std::string& command) {
  if (inputs.empty()) throw UsageError(command + " needs an --in document");
  return inputs.front();
}

[[noreturn]] void wrong_kind(const std::string& command, const Document& d) {
  throw UsageError(command + " does not accept a " + to_string(d.kind()) + " document");
}

std::vector<std::string> split_names(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<std::string> all_set_names(const RunOptions& o) {
  std::vector<std::string> out;
  for (const auto& s : o.sets)
    for (auto& n : split_names(s)) out.push_back(std::move(n));
  return out;
}

template <class Lookup>
std::vector<int> resolve(const std::vector<std::string>& names, Lookup find) {
  std::vector<int> out;
  for (const auto& n : names) {
    const auto i = find(n);
    if (!i) throw UsageError("unknown name \"" + n + "\" in --set");
    if (std::find(out.begin(), out.end(), *i) == out.end()) out.push_back(*i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Json name_list(const std::vector<int>& idx, const std::vector<std::string>& names) {
  Json out = Json::array();
  for (int i : idx) out.push_back(names[i]);
  return out;
}

Json pms_json(const PartialMetricSpace& x) {
  Json rows = Json::array();
  for (int y = 0; y < x.size(); ++y) {
    Json row = Json::array();
    for (int w = 0; w < x.size(); ++w) row.push_back(x(y, w).to_string());
    rows.push_back(row);
  }
  return Json{{"points", x.points()}, {"distances", rows}};
}

Json category_json(const EnrichedCategory& c) {
  Json objs = Json::array();
  for (int x = 0; x < c.size(); ++x) objs.push_back(Json{{"name", c.name(x)}, {"type", c.base().object_name(c.type(x))}});
  Json homs = Json::array();
  for (int x = 0; x < c.size(); ++x) {
    Json row = Json::array();
    for (int y = 0; y < c.size(); ++y) row.push_back(c.hom_lattice(x, y).name(c.hom(x, y)));
    homs.push_back(row);
  }
  return Json{{"objects", objs}, {"homs", homs}};
}

void put(PropertyReport& r, const std::string& name, const std::optional<Witness>& w, std::string note = {}) {
  if (w) r.fail(name, *w, std::move(note));
  else r.pass(name, std::move(note));
}

// ---- analyze helpers ----

std::optional<Witness> skeletal_violation(const EnrichedCategory& c) {
  const auto order = underlying_order(c);
  const int n = c.size();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (order[x * n + y] && order[y * n + x]) return Witness{{"x", c.name(x)}, {"y", c.name(y)}};
  return std::nullopt;
}

std::optional<Witness> symmetry_violation(const EnrichedCategory& c) {
  const EnrichedCategory s = symmetrize(c);
  for (int x = 0; x < c.size(); ++x)
    for (int y = 0; y < c.size(); ++y)
      if (s.hom(x, y) != c.hom(x, y))
        return Witness{{"x", c.name(x)}, {"y", c.name(y)}, {"C(x,y)", c.hom_label(x, y)}, {"Cs(x,y)", s.hom_label(x, y)}};
  return std::nullopt;
}

std::optional<Witness> completeness_violation(const EnrichedCategory& c, std::uint64_t bound) {
  for (const auto& p : cauchy_presheaves(c, bound)) {
    bool represented = false;
    for (int x = 0; x < c.size() && !represented; ++x) represented = representable(c, x) == p;
    if (!represented) return Witness{{"presheaf", presheaf_name(c, p)}};
  }
  return std::nullopt;
}

// ---- closure helpers ----

int law_bound(const RunOptions& o) { return static_cast<int>(std::min<std::uint64_t>(o.bound.value_or(10), 16)); }

std::vector<int> members_of(const Subset& s) { return members(s); }

// Discretizes x when its distances share a small denominator; nullopt otherwise.
std::optional<EnrichedCategory> try_discretize(const PartialMetricSpace& x) {
  boost::multiprecision::cpp_int den = 1;
  Rational top = 0;
  for (const auto& v : x.distances()) {
    if (v.is_infinite()) continue;
    const auto d = boost::multiprecision::denominator(v.finite());
    den = den / boost::multiprecision::gcd(den, d) * d;
    top = std::max(top, v.finite());
  }
  const Rational cap_r = top + 1;
  const auto cap = boost::multiprecision::numerator(cap_r) / boost::multiprecision::denominator(cap_r);
  if (den * cap > 64) return std::nullopt;
  return discretize_to_category(x, static_cast<int>(den), static_cast<int>(cap));
}

// ---- commands ----

void cmd_validate(RunReport& r, const std::vector<NamedDocument>& inputs, const RunOptions& o) {
  const Document& d = need_input(inputs, r.command).doc;
  switch (d.kind()) {
    case DocumentKind::Quantaloid: {
      const auto& q = std::get<Quantaloid>(d.body);
      r.verdicts = validate_quantaloid(q);
      r.results["objects"] = q.object_count();
      break;
    }
    case DocumentKind::Category: {
      const auto& c = std::get<CategoryBody>(d.body).category;
      r.verdicts = validate_category(c);
      r.results["objects"] = c.size();
      break;
    }
    case DocumentKind::Functor:
      r.verdicts = validate_functor(d.functor());
      break;
    case DocumentKind::Distributor:
      r.verdicts = validate_distributor(d.distributor());
      break;
    case DocumentKind::Pms: {
      const auto& x = std::get<PartialMetricSpace>(d.body);
      r.verdicts = validate_pms(x);
      r.results["points"] = x.size();
      break;
    }
    case DocumentKind::Sequence:
      throw UsageError("validate a sequence with the converge command");
  }
  (void)o;
}

void cmd_analyze(RunReport& r, const std::vector<NamedDocument>& inputs, const RunOptions& o) {
  const Document& d = need_input(inputs, r.command).doc;
  switch (d.kind()) {
    case DocumentKind::Quantaloid: {
      const auto& q = std::get<Quantaloid>(d.body);
      const PropertyReport laws = validate_quantaloid(q);
      if (!laws.ok()) {
        r.verdicts = laws;
        return;
      }
      r.verdicts = analyze_properties(q);
      const CauchyBilateralResult cb = check_strong_cauchy_bilateral(q);
      put(r.verdicts, "strong-cauchy-bilateral",
          cb.holds ? std::nullopt : std::optional<Witness>(family_witness(q, cb.object, cb.family)));
      Json zeros = Json::array();
      for (ObjectId a : zero_objects(q)) zeros.push_back(q.object_name(a));
      r.results["zero_objects"] = zeros;
      r.results["commutative_quantale"] = is_commutative_quantale(q);
      break;
    }
    case DocumentKind::Category: {
      const auto& c = std::get<CategoryBody>(d.body).category;
      r.verdicts = validate_category(c);
      if (!r.verdicts.ok()) return;
      put(r.verdicts, "skeletal", skeletal_violation(c));
      if (c.base().has_involution()) put(r.verdicts, "symmetric", symmetry_violation(c));
      put(r.verdicts, "cauchy-complete", completeness_violation(c, o.bound.value_or(kDefaultPresheafBound)));
      break;
    }
    case DocumentKind::Pms: {
      const auto& x = std::get<PartialMetricSpace>(d.body);
      r.verdicts = validate_pms(x);
      if (!r.verdicts.ok()) return;
      std::optional<Witness> untyped;
      for (int i = 0; i < x.size() && !untyped; ++i)
        if (x(i, i).is_infinite()) untyped = Witness{{"x", x.point(i)}, {"p(x,x)", "inf"}};
      put(r.verdicts, "finitely-typed", untyped);
      const DerivedMetrics m = derived_metrics(x);
      r.verdicts.append(validate_metric(m.p0), "p0.");
      r.verdicts.append(validate_metric(m.p1), "p1.");
      r.verdicts.append(validate_metric(m.pk), "pK.");
      r.verdicts.append(validate_metric(m.psym, true), "psym.");
      r.results["p0"] = pms_json(m.p0)["distances"];
      r.results["p1"] = pms_json(m.p1)["distances"];
      r.results["pK"] = pms_json(m.pk)["distances"];
      r.results["psym"] = pms_json(m.psym)["distances"];
      break;
    }
    default:
      wrong_kind(r.command, d);
  }
}

void cmd_diagonals(RunReport& r, const std::vector<NamedDocument>& inputs, const RunOptions&) {
  const Document& d = need_input(inputs, r.command).doc;
  if (d.kind() != DocumentKind::Quantaloid) wrong_kind(r.command, d);
  const auto& q = std::get<Quantaloid>(d.body);
  const Quantaloid dq = diagonal_quantaloid(q);
  r.verdicts.append(validate_quantaloid(dq), "D(Q).");
  auto laws = [&](const std::string& prefix, const LaxFunctor& f) {
    const PropertyReport rep = check_lax_functor(f);
    for (const char* name : {"monotone", "lax-composition", "lax-identity"}) {
      Verdict v = rep.get(name);
      v.name = prefix + v.name;
      r.verdicts.add(std::move(v));
    }
    r.results[prefix + "normal"] = rep.flag("is-normal");
    r.results[prefix + "homomorphism"] = rep.flag("is-homomorphism");
  };
  laws("I.", embed_I(q));
  laws("J0.", project_J0(q));
  laws("J1.", project_J1(q));
  if (is_commutative_quantale(q)) laws("K.", project_K(q));
  Json objects = Json::array();
  for (int a = 0; a < dq.object_count(); ++a) objects.push_back(dq.object_name(a));
  r.results["objects"] = objects;
  Document out;
  out.name = d.name.empty() ? "diagonals" : "diagonals of " + d.name;
  out.provenance = "diagonal construction";
  out.body = dq;
  r.results["document"] = Json::parse(emit_document(out));
}

void cmd_closure(RunReport& r, const std::vector<NamedDocument>& inputs, const RunOptions& o) {
  const Document& d = need_input(inputs, r.command).doc;
  const auto names = all_set_names(o);
  if (d.kind() == DocumentKind::Category) {
    const auto& c = std::get<CategoryBody>(d.body).category;
    const auto s = resolve(names, [&](const std::string& n) { return c.find(n); });
    const Subset cl = closure(c, subset_of(c.size(), s));
    r.results["set"] = name_list(s, c.names());
    r.results["closure"] = name_list(members_of(cl), c.names());
    if (c.size() <= law_bound(o)) r.verdicts = closure_report(c, law_bound(o));
    else r.results["laws"] = "not checked: more objects than --bound";
  } else if (d.kind() == DocumentKind::Pms) {
    const auto& x = std::get<PartialMetricSpace>(d.body);
    const auto s = resolve(names, [&](const std::string& n) { return x.find(n); });
    const auto cl = closure_set(x, s);
    r.results["set"] = name_list(s, x.points());
    r.results["closure"] = name_list(cl, x.points());
    const auto sym = symmetric_metric_closure(x, s);
    std::optional<Witness> w;
    if (sym != cl) w = Witness{{"closure", name_list(cl, x.points()).dump()}, {"psym-closure", name_list(sym, x.points()).dump()}};
    put(r.verdicts, "agrees-with-psym-closure", w);
    if (auto cat = try_discretize(x)) {
      const auto via = members(closure(*cat, subset_of(cat->size(), s)));
      std::optional<Witness> wc;
      if (via != cl)
        wc = Witness{{"closure", name_list(cl, x.points()).dump()}, {"category-closure", name_list(via, x.points()).dump()}};
      put(r.verdicts, "agrees-with-category-closure", wc);
    }
  } else {
    wrong_kind(r.command, d);
  }
}

void cmd_symcompare(RunReport& r, const std::vector<NamedDocument>& inputs, const RunOptions& o) {
  const Document& d = need_input(inputs, r.command).doc;
  const auto names = all_set_names(o);
  std::vector<int> cl, cls;
  std::vector<std::string> labels;
  if (d.kind() == DocumentKind::Category) {
    const auto& c = std::get<CategoryBody>(d.body).category;
    const auto s = resolve(names, [&](const std::string& n) { return c.find(n); });
    cl = members(closure(c, subset_of(c.size(), s)));
    const EnrichedCategory sym = symmetrize(c);
    cls = members(closure(sym, subset_of(c.size(), s)));
    labels = c.names();
    r.results["set"] = name_list(s, labels);
  } else if (d.kind() == DocumentKind::Pms) {
    const auto& x = std::get<PartialMetricSpace>(d.body);
    const auto s = resolve(names, [&](const std::string& n) { return x.find(n); });
    cl = closure_set(x, s);
    cls = symmetric_metric_closure(x, s);
    labels = x.points();
    r.results["set"] = name_list(s, labels);
  } else {
    wrong_kind(r.command, d);
  }
  r.results["closure"] = name_list(cl, labels);
  r.results["symmetric_closure"] = name_list(cls, labels);
  std::optional<Witness> w;
  for (int x = 0; x < static_cast<int>(labels.size()) && !w; ++x) {
    const bool in = std::find(cl.begin(), cl.end(), x) != cl.end();
    const bool in_s = std::find(cls.begin(), cls.end(), x) != cls.end();
    if (in != in_s)
      w = Witness{{"x", labels[x]}, {"in cl(S)", in ? "true" : "false"}, {"in cl_s(S)", in_s ? "true" : "false"}};
  }
  put(r.verdicts, "closure-equals-symmetric-closure", w);
}

void cmd_complete(RunReport& r, const std::vector<NamedDocument>& inputs, const RunOptions& o) {
  const Document& d = need_input(inputs, r.command).doc;
  if (d.kind() == DocumentKind::Category) {
    const auto& c = std::get<CategoryBody>(d.body).category;
    const std::uint64_t bound = o.bound.value_or(kDefaultPresheafBound);
    const auto cauchy = cauchy_presheaves(c, bound);
    const EnrichedCategory cc = presheaf_category_on(c, cauchy);
    r.verdicts.append(validate_category(cc), "completion.");
    std::optional<Witness> missing;
    for (int x = 0; x < c.size() && !missing; ++x)
      if (std::find(cauchy.begin(), cauchy.end(), representable(c, x)) == cauchy.end())
        missing = Witness{{"x", c.name(x)}};
    put(r.verdicts, "representables-are-cauchy", missing);
    r.results["completion"] = category_json(cc);
  } else if (d.kind() == DocumentKind::Pms) {
    const auto& x = std::get<PartialMetricSpace>(d.body);
    const Completion comp = complete_finite(x);
    r.verdicts.append(validate_pms(comp.space), "completion.");
    std::optional<Witness> w;
    for (int a = 0; a < x.size() && !w; ++a)
      for (int b = 0; b < x.size() && !w; ++b)
        if (comp.space(comp.embedding[a], comp.embedding[b]) != x(a, b))
          w = Witness{{"y", x.point(a)},
                      {"x", x.point(b)},
                      {"p(y,x)", x(a, b).to_string()},
                      {"completion", comp.space(comp.embedding[a], comp.embedding[b]).to_string()}};
    put(r.verdicts, "embedding-isometric", w);
    r.results["completion"] = pms_json(comp.space);
    Json emb = Json::object();
    for (int a = 0; a < x.size(); ++a) emb[x.point(a)] = comp.space.point(comp.embedding[a]);
    r.results["embedding"] = emb;
  } else {
    wrong_kind(r.command, d);
  }
}

void cmd_hausdorff(RunReport& r, const std::vector<NamedDocument>& inputs, const RunOptions& o) {
  const Document& d = need_input(inputs, r.command).doc;
  if (d.kind() != DocumentKind::Pms) wrong_kind(r.command, d);
  const auto& x = std::get<PartialMetricSpace>(d.body);
  const PartialMetricSpace h = hausdorff(x);
  r.verdicts.append(validate_pms(h), "hausdorff.");
  r.results["hausdorff"] = pms_json(h);
  if (!o.sets.empty()) {
    std::vector<std::vector<int>> subsets;
    for (const auto& s : o.sets) {
      const auto idx = resolve(split_names(s), [&](const std::string& n) { return x.find(n); });
      if (idx.empty()) throw StructuralError("the Hausdorff construction excludes the empty subset");
      subsets.push_back(idx);
    }
    r.verdicts.append(hausdorff_violations(x, subsets), "subsets.");
  }
}

void cmd_exponentiable(RunReport& r, const std::vector<NamedDocument>& inputs, const RunOptions& o) {
  const Document& d = need_input(inputs, r.command).doc;
  if (d.kind() != DocumentKind::Pms) wrong_kind(r.command, d);
  const auto& x = std::get<PartialMetricSpace>(d.body);
  const Rational step = o.step.value_or(Rational(1, 2));
  const Rational cap = o.cap.value_or(Rational(3));
  const ExponentiabilityResult e = exponentiable(x, step, cap);
  if (e.verdict == Exponentiability::NotExponentiable) r.verdicts.fail("exponentiable", e.witness, e.note);
  else r.verdicts.pass("exponentiable", e.note);
  r.results["verdict"] = to_string(e.verdict);
  Json w = Json::object();
  for (const auto& [role, value] : e.witness) w[role] = value;
  r.results["witness"] = w;
  r.results["step"] = format_rational(step);
  r.results["cap"] = format_rational(cap);
}

Json limits_json(const SequenceVerdict& v) {
  Json out = Json::object();
  for (const auto& [name, l] : v.limits)
    out[name] = Json{{"exists", l.exists}, {"value", l.value.to_string()}, {"stable_from", l.stable_from}};
  return out;
}

void add_sequence_verdict(RunReport& r, const std::string& name, const SequenceVerdict& v) {
  if (v.ok) r.verdicts.pass(name, v.note);
  else r.verdicts.fail(name, v.witness, v.note);
  r.results[name] = limits_json(v);
}

void cmd_converge(RunReport& r, const std::vector<NamedDocument>& inputs, const RunOptions& o) {
  const NamedDocument* seq = find_kind(inputs, DocumentKind::Sequence);
  if (!seq) throw UsageError("converge needs a sequence document");
  const auto& spec = std::get<SequenceSpec>(seq->doc.body);
  SampledSequence s = to_sampled(spec);
  if (o.horizon) s.horizon = *o.horizon;
  if (o.eps) s.eps = *o.eps;

  std::optional<WordMetric> words;
  const PartialMetricSpace* finite = nullptr;
  const PointMetric* metric = nullptr;
  if (!spec.space.empty()) {
    words.emplace(spec.space.substr(std::string("wordspace:").size()));
    metric = &*words;
  } else if (const NamedDocument* p = find_kind(inputs, DocumentKind::Pms)) {
    finite = &std::get<PartialMetricSpace>(p->doc.body);
    metric = finite;
  } else {
    throw UsageError("converge needs a pms document or a sequence with a word space");
  }

  const SequenceVerdict typed = seq_type(*metric, s);
  add_sequence_verdict(r, "typed", typed);
  const SequenceVerdict cauchy = seq_cauchy(*metric, s);
  add_sequence_verdict(r, "cauchy", cauchy);
  r.results["exactness"] = typed.note;
  for (const auto& point : all_set_names(o)) add_sequence_verdict(r, "converges-to-" + point, converges_to(*metric, s, point));
  if (finite && cauchy.ok) {
    const CauchyPair c = seq_to_cauchy_pair(*finite, s);
    Json phi = Json::object(), psi = Json::object();
    for (int y = 0; y < finite->size(); ++y) {
      phi[finite->point(y)] = c.phi[y].to_string();
      psi[finite->point(y)] = c.psi[y].to_string();
    }
    r.results["cauchy_pair"] = Json{{"q", format_rational(c.q)}, {"phi", phi}, {"psi", psi}};
    r.verdicts.append(validate_cauchy_pair(*finite, c), "cauchy-pair.");
  }
}

void cmd_fixtures(RunReport& r, const std::vector<NamedDocument>&, const RunOptions& o) {
  const auto names = all_set_names(o);
  if (names.empty()) {
    r.results["fixtures"] = fixture_document_names();
    return;
  }
  Json docs = Json::object();
  for (const auto& n : names) docs[n] = Json::parse(emit_document(fixture_document(n)));
  r.results["documents"] = docs;
}

}  // namespace

RunReport run_command(const std::string& command, const std::vector<NamedDocument>& inputs, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  RunReport r;
  r.command = command;
  for (const auto& in : inputs) r.inputs.push_back(in.source);
  if (command == "validate") cmd_validate(r, inputs, options);
  else if (command == "analyze") cmd_analyze(r, inputs, options);
  else if (command == "diagonals") cmd_diagonals(r, inputs, options);
  else if (command == "closure") cmd_closure(r, inputs, options);
  else if (command == "symcompare") cmd_symcompare(r, inputs, options);
  else if (command == "complete") cmd_complete(r, inputs, options);
  else if (command == "hausdorff") cmd_hausdorff(r, inputs, options);
  else if (command == "exponentiable") cmd_exponentiable(r, inputs, options);
  else if (command == "converge") cmd_converge(r, inputs, options);
  else if (command == "fixtures") cmd_fixtures(r, inputs, options);
  else throw UsageError("unknown command \"" + command + "\"");
  r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string report_json(const RunReport& r) {
  Json j;
  j["command"] = r.command;
  j["inputs"] = r.inputs;
  Json verdicts = Json::array();
  for (const auto& v : r.verdicts.verdicts()) {
    Json w = Json::object();
    for (const auto& [role, value] : v.witness) w[role] = value;
    Json item{{"name", v.name}, {"ok", v.ok}, {"witness", w}};
    if (!v.note.empty()) item["note"] = v.note;
    verdicts.push_back(item);
  }
  j["verdicts"] = verdicts;
  j["results"] = r.results;
  j["exit_code"] = r.exit_code();
  j["timing_ms"] = r.timing_ms;
  return j.dump(2) + "\n";
}

std::string report_text(const RunReport& r) {
  std::ostringstream out;
  out << "command: " << r.command << "\n";
  if (!r.inputs.empty()) {
    out << "inputs:";
    for (const auto& in : r.inputs) out << " " << in;
    out << "\n";
  }
  for (const auto& v : r.verdicts.verdicts()) {
    out << (v.ok ? "PASS " : "FAIL ") << v.name;
    for (const auto& [role, value] : v.witness) out << "  " << role << "=" << value;
    if (!v.note.empty()) out << "  (" << v.note << ")";
    out << "\n";
  }
  if (!r.results.empty()) out << "results: " << r.results.dump() << "\n";
  out << "exit: " << r.exit_code() << "\n";
  return out.str();
}

}  // namespace qcat
