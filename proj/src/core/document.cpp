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

#include "qcat/core/document.hpp"

#include <charconv>

#include "json.hpp"

#include "qcat/core/errors.hpp"
#include "qcat/core/fixtures.hpp"

namespace qcat {

using Json = nlohmann::ordered_json;

std::string to_string(DocumentKind k) {
  switch (k) {
    case DocumentKind::Quantaloid:
      return "quantaloid";
    case DocumentKind::Category:
      return "category";
    case DocumentKind::Functor:
      return "functor";
    case DocumentKind::Distributor:
      return "distributor";
    case DocumentKind::Pms:
      return "pms";
    case DocumentKind::Sequence:
      return "sequence";
  }
  return "?";
}

SampledSequence to_sampled(const SequenceSpec& spec) {
  SampledSequence s;
  if (spec.pattern) {
    s = word_pattern(spec.pattern->first, spec.pattern->second);
  } else if (spec.tail == "constant") {
    s = eventually_constant(spec.terms);
  } else if (spec.tail == "cycle") {
    s = cyclic(spec.terms);
  } else {
    if (spec.terms.empty()) throw StructuralError("sequence needs at least one term");
    s.term = [terms = spec.terms](std::size_t n) {
      if (n >= terms.size())
        throw StructuralError("sequence has no term " + std::to_string(n) + "; only " + std::to_string(terms.size()) +
                              " given");
      return terms[n];
    };
    s.horizon = spec.terms.size() - 1;
  }
  if (spec.horizon) s.horizon = *spec.horizon;
  if (spec.eps) s.eps = *spec.eps;
  return s;
}

EnrichedFunctor Document::functor() const {
  const auto& f = std::get<FunctorBody>(body);
  return EnrichedFunctor{f.dom.category, f.cod.category, f.map};
}

EnrichedDistributor Document::distributor() const {
  const auto& d = std::get<DistributorBody>(body);
  return EnrichedDistributor{d.dom.category, d.cod.category, d.mat};
}

bool operator==(const CategoryBody& a, const CategoryBody& b) {
  return a.base_ref == b.base_ref && a.category == b.category;
}
bool operator==(const FunctorBody& a, const FunctorBody& b) {
  return a.dom == b.dom && a.cod == b.cod && a.map == b.map;
}
bool operator==(const DistributorBody& a, const DistributorBody& b) {
  return a.dom == b.dom && a.cod == b.cod && a.mat == b.mat;
}
bool operator==(const Document& a, const Document& b) {
  return a.name == b.name && a.provenance == b.provenance && a.body == b.body;
}

namespace {

// A JSON value together with its path for diagnostics.
class Node {
 public:
  Node(const Json& j, std::string path) : j_(j), path_(std::move(path)) {}

  const std::string& path() const { return path_; }
  const Json& json() const { return j_; }
  [[noreturn]] void fail(const std::string& what) const { throw SchemaError(path_, what); }

  bool has(const char* key) const { return j_.is_object() && j_.contains(key); }
  Node at(const char* key) const {
    if (!j_.is_object()) fail("expected an object");
    if (!j_.contains(key)) fail(std::string("missing field \"") + key + "\"");
    return Node(j_.at(key), path_ + "." + key);
  }
  Node at(size_t i) const { return Node(j_.at(i), path_ + "[" + std::to_string(i) + "]"); }
  size_t array_size() const {
    if (!j_.is_array()) fail("expected an array");
    return j_.size();
  }
  std::string str() const {
    if (!j_.is_string()) fail("expected a string");
    return j_.get<std::string>();
  }
  std::vector<std::string> strings() const {
    std::vector<std::string> out;
    for (size_t i = 0; i < array_size(); ++i) out.push_back(at(i).str());
    return out;
  }
  std::size_t count() const {
    if (!j_.is_number_unsigned()) fail("expected a nonnegative integer");
    return j_.get<std::size_t>();
  }

 private:
  const Json& j_;
  std::string path_;
};

ObjectId object_ref(const Node& n, const std::vector<std::string>& objects) {
  const std::string s = n.str();
  for (size_t i = 0; i < objects.size(); ++i)
    if (objects[i] == s) return static_cast<ObjectId>(i);
  n.fail("unknown object \"" + s + "\"");
}

ElemId elem_ref(const Node& n, const HomLattice& h) {
  const std::string s = n.str();
  if (auto e = h.find(s)) return *e;
  n.fail("\"" + s + "\" is not an element of this hom-lattice");
}

Quantaloid parse_quantaloid(const Node& body) {
  QuantaloidData data;
  data.objects = body.at("objects").strings();
  const size_t n = data.objects.size();
  if (n == 0) body.at("objects").fail("needs at least one object");
  std::vector<std::optional<HomLattice>> homs(n * n);
  const Node hs = body.at("homs");
  for (size_t i = 0; i < hs.array_size(); ++i) {
    const Node h = hs.at(i);
    const ObjectId a = object_ref(h.at("src"), data.objects);
    const ObjectId b = object_ref(h.at("tgt"), data.objects);
    if (homs[a * n + b]) h.fail("duplicate hom entry");
    std::vector<std::string> names = h.at("elements").strings();
    const Node leq = h.at("leq");
    if (leq.array_size() != names.size()) leq.fail("needs one row per element");
    std::vector<std::vector<bool>> rows;
    for (size_t r = 0; r < names.size(); ++r) {
      const std::string row = leq.at(r).str();
      if (row.size() != names.size()) leq.at(r).fail("row length differs from the element count");
      std::vector<bool> bits;
      for (char c : row) {
        if (c != '0' && c != '1') leq.at(r).fail("rows are strings of 0 and 1");
        bits.push_back(c == '1');
      }
      rows.push_back(std::move(bits));
    }
    try {
      homs[a * n + b] = HomLattice(std::move(names), std::move(rows));
    } catch (const StructuralError& e) {
      h.fail(e.what());
    }
  }
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      if (!homs[a * n + b]) hs.fail("no entry for (" + data.objects[a] + "," + data.objects[b] + ")");
      data.homs.push_back(*homs[a * n + b]);
    }

  data.comp.assign(n * n * n, {});
  std::vector<bool> seen(n * n * n, false);
  const Node cs = body.at("composition");
  for (size_t i = 0; i < cs.array_size(); ++i) {
    const Node c = cs.at(i);
    const ObjectId a = object_ref(c.at("a"), data.objects);
    const ObjectId b = object_ref(c.at("b"), data.objects);
    const ObjectId cc = object_ref(c.at("c"), data.objects);
    const size_t slot = (a * n + b) * n + cc;
    if (seen[slot]) c.fail("duplicate composition entry");
    seen[slot] = true;
    const HomLattice& ab = data.homs[a * n + b];
    const HomLattice& bc = data.homs[b * n + cc];
    const HomLattice& ac = data.homs[a * n + cc];
    const Node table = c.at("table");
    if (table.array_size() != static_cast<size_t>(bc.size())) table.fail("needs one row per element of hom(b,c)");
    std::vector<ElemId> flat;
    for (int g = 0; g < bc.size(); ++g) {
      const Node row = table.at(g);
      if (row.array_size() != static_cast<size_t>(ab.size())) row.fail("needs one column per element of hom(a,b)");
      for (int f = 0; f < ab.size(); ++f) flat.push_back(elem_ref(row.at(f), ac));
    }
    data.comp[slot] = std::move(flat);
  }
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      for (size_t c = 0; c < n; ++c)
        if (!seen[(a * n + b) * n + c])
          cs.fail("no table for (" + data.objects[a] + "," + data.objects[b] + "," + data.objects[c] + ")");

  const Node ids = body.at("identities");
  for (size_t a = 0; a < n; ++a) {
    if (!ids.has(data.objects[a].c_str())) ids.fail("missing identity of \"" + data.objects[a] + "\"");
    data.ids.push_back(elem_ref(ids.at(data.objects[a].c_str()), data.homs[a * n + a]));
  }

  if (body.has("involution")) {
    const Node inv = body.at("involution");
    if (inv.json().is_string()) {
      if (inv.str() != "identity") inv.fail("expected \"identity\" or a list of maps");
      Quantaloid plain(std::move(data));
      try {
        return with_identity_involution(plain);
      } catch (const StructuralError& e) {
        inv.fail(e.what());
      }
    }
    std::vector<std::vector<ElemId>> maps(n * n);
    std::vector<bool> given(n * n, false);
    for (size_t i = 0; i < inv.array_size(); ++i) {
      const Node m = inv.at(i);
      const ObjectId a = object_ref(m.at("src"), data.objects);
      const ObjectId b = object_ref(m.at("tgt"), data.objects);
      const Node values = m.at("map");
      const HomLattice& from = data.homs[a * n + b];
      if (values.array_size() != static_cast<size_t>(from.size())) values.fail("needs one entry per element");
      for (int e = 0; e < from.size(); ++e) maps[a * n + b].push_back(elem_ref(values.at(e), data.homs[b * n + a]));
      given[a * n + b] = true;
    }
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b)
        if (!given[a * n + b]) inv.fail("no map for (" + data.objects[a] + "," + data.objects[b] + ")");
    data.inv = std::move(maps);
  }
  return Quantaloid(std::move(data));
}

Json emit_quantaloid(const Quantaloid& q) {
  const int n = q.object_count();
  Json body;
  body["objects"] = q.data().objects;
  Json homs = Json::array();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const HomLattice& h = q.hom(a, b);
      Json leq = Json::array();
      for (int i = 0; i < h.size(); ++i) {
        std::string row;
        for (int j = 0; j < h.size(); ++j) row += h.le(i, j) ? '1' : '0';
        leq.push_back(row);
      }
      homs.push_back(Json{{"src", q.object_name(a)}, {"tgt", q.object_name(b)}, {"elements", h.names()}, {"leq", leq}});
    }
  body["homs"] = homs;
  Json comp = Json::array();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        Json table = Json::array();
        for (int g = 0; g < q.hom(b, c).size(); ++g) {
          Json row = Json::array();
          for (int f = 0; f < q.hom(a, b).size(); ++f) row.push_back(q.hom(a, c).name(q.compose(a, b, c, g, f)));
          table.push_back(row);
        }
        comp.push_back(Json{{"a", q.object_name(a)}, {"b", q.object_name(b)}, {"c", q.object_name(c)}, {"table", table}});
      }
  body["composition"] = comp;
  Json ids = Json::object();
  for (int a = 0; a < n; ++a) ids[q.object_name(a)] = q.hom(a, a).name(q.identity(a));
  body["identities"] = ids;
  if (q.has_identity_involution()) {
    body["involution"] = "identity";
  } else if (q.has_involution()) {
    Json inv = Json::array();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        Json map = Json::array();
        for (int e = 0; e < q.hom(a, b).size(); ++e) map.push_back(q.hom(b, a).name(q.involute(a, b, e)));
        inv.push_back(Json{{"src", q.object_name(a)}, {"tgt", q.object_name(b)}, {"map", map}});
      }
    body["involution"] = inv;
  }
  return body;
}

CategoryBody parse_category(const Node& body) {
  CategoryBody out;
  const Node base = body.at("base");
  BasePtr q;
  if (base.json().is_string()) {
    out.base_ref = base.str();
    if (!is_quantaloid_fixture(out.base_ref)) base.fail("unknown base fixture \"" + out.base_ref + "\"");
    q = share(quantaloid_fixture(out.base_ref));
  } else {
    q = share(parse_quantaloid(base));
  }
  std::vector<std::string> names;
  std::vector<ObjectId> types;
  const Node objs = body.at("objects");
  for (size_t i = 0; i < objs.array_size(); ++i) {
    names.push_back(objs.at(i).at("name").str());
    types.push_back(object_ref(objs.at(i).at("type"), q->data().objects));
  }
  const size_t n = names.size();
  const Node homs = body.at("homs");
  if (homs.array_size() != n) homs.fail("needs one row per object");
  std::vector<ElemId> flat;
  for (size_t x = 0; x < n; ++x) {
    const Node row = homs.at(x);
    if (row.array_size() != n) row.fail("needs one entry per object");
    for (size_t y = 0; y < n; ++y) flat.push_back(elem_ref(row.at(y), q->hom(types[y], types[x])));
  }
  try {
    out.category = EnrichedCategory(q, std::move(names), std::move(types), std::move(flat));
  } catch (const StructuralError& e) {
    body.fail(e.what());
  }
  return out;
}

Json emit_category(const CategoryBody& c) {
  const EnrichedCategory& cat = c.category;
  Json body;
  body["base"] = c.base_ref.empty() ? emit_quantaloid(cat.base()) : Json(c.base_ref);
  Json objs = Json::array();
  for (int x = 0; x < cat.size(); ++x)
    objs.push_back(Json{{"name", cat.name(x)}, {"type", cat.base().object_name(cat.type(x))}});
  body["objects"] = objs;
  Json homs = Json::array();
  for (int x = 0; x < cat.size(); ++x) {
    Json row = Json::array();
    for (int y = 0; y < cat.size(); ++y) row.push_back(cat.hom_lattice(x, y).name(cat.hom(x, y)));
    homs.push_back(row);
  }
  body["homs"] = homs;
  return body;
}

FunctorBody parse_functor(const Node& body) {
  FunctorBody out{parse_category(body.at("dom")), parse_category(body.at("cod")), {}};
  const Node map = body.at("map");
  for (int x = 0; x < out.dom.category.size(); ++x) {
    const std::string& name = out.dom.category.name(x);
    if (!map.has(name.c_str())) map.fail("no image for \"" + name + "\"");
    const Node img = map.at(name.c_str());
    const auto y = out.cod.category.find(img.str());
    if (!y) img.fail("unknown object \"" + img.str() + "\" of the codomain");
    out.map.push_back(*y);
  }
  return out;
}

DistributorBody parse_distributor(const Node& body) {
  DistributorBody out{parse_category(body.at("dom")), parse_category(body.at("cod")), {}};
  const EnrichedCategory& dom = out.dom.category;
  const EnrichedCategory& cod = out.cod.category;
  if (!same_base(dom, cod)) body.fail("domain and codomain have different bases");
  const Node mat = body.at("matrix");
  if (mat.array_size() != static_cast<size_t>(cod.size())) mat.fail("needs one row per codomain object");
  for (int y = 0; y < cod.size(); ++y) {
    const Node row = mat.at(y);
    if (row.array_size() != static_cast<size_t>(dom.size())) row.fail("needs one entry per domain object");
    for (int x = 0; x < dom.size(); ++x)
      out.mat.push_back(elem_ref(row.at(x), dom.base().hom(dom.type(x), cod.type(y))));
  }
  return out;
}

ExtValue parse_distance(const Node& n) {
  try {
    return ExtValue::parse(n.str());
  } catch (const StructuralError& e) {
    n.fail(e.what());
  }
}

PartialMetricSpace parse_pms(const Node& body) {
  std::vector<std::string> points = body.at("points").strings();
  const size_t n = points.size();
  const Node d = body.at("distances");
  if (d.array_size() != n) d.fail("needs one row per point");
  std::vector<ExtValue> dist;
  for (size_t y = 0; y < n; ++y) {
    const Node row = d.at(y);
    const size_t len = row.array_size();
    for (size_t x = 0; x < n; ++x) {
      if (x >= len || row.at(x).json().is_null())
        row.fail("missing entry for pair (" + points[y] + "," + points[x] + ")");
      dist.push_back(parse_distance(row.at(x)));
    }
    if (len > n) row.fail("more entries than points");
  }
  try {
    return PartialMetricSpace(std::move(points), std::move(dist));
  } catch (const StructuralError& e) {
    body.fail(e.what());
  }
}

Json emit_pms(const PartialMetricSpace& x) {
  Json body;
  body["points"] = x.points();
  Json rows = Json::array();
  for (int y = 0; y < x.size(); ++y) {
    Json row = Json::array();
    for (int w = 0; w < x.size(); ++w) row.push_back(x(y, w).to_string());
    rows.push_back(row);
  }
  body["distances"] = rows;
  return body;
}

SequenceSpec parse_sequence(const Node& body) {
  SequenceSpec s;
  if (body.has("space")) {
    s.space = body.at("space").str();
    if (s.space.rfind("wordspace:", 0) != 0 || s.space.size() == 10)
      body.at("space").fail("expected \"wordspace:<alphabet>\"");
  }
  if (body.has("pattern")) {
    const Node p = body.at("pattern");
    s.pattern = std::make_pair(p.at("prefix").str(), p.at("repeat").str());
    if (s.space.empty()) p.fail("a pattern needs a word space");
    s.tail = "none";
  } else {
    s.terms = body.at("terms").strings();
    if (s.terms.empty()) body.at("terms").fail("needs at least one term");
    s.tail = body.has("tail") ? body.at("tail").str() : "constant";
    if (s.tail != "constant" && s.tail != "cycle" && s.tail != "none")
      body.at("tail").fail("expected constant, cycle or none");
  }
  if (body.has("horizon")) {
    s.horizon = body.at("horizon").count();
    if (*s.horizon < 2) body.at("horizon").fail("horizon must be at least 2");
  }
  if (body.has("eps")) {
    const Node e = body.at("eps");
    try {
      s.eps = parse_rational(e.str());
    } catch (const StructuralError& err) {
      e.fail(err.what());
    }
    if (*s.eps <= 0) e.fail("eps must be positive");
  }
  return s;
}

Json emit_sequence(const SequenceSpec& s) {
  Json body = Json::object();
  if (!s.space.empty()) body["space"] = s.space;
  if (s.pattern) {
    body["pattern"] = Json{{"prefix", s.pattern->first}, {"repeat", s.pattern->second}};
  } else {
    body["terms"] = s.terms;
    body["tail"] = s.tail;
  }
  if (s.horizon) body["horizon"] = *s.horizon;
  if (s.eps) body["eps"] = format_rational(*s.eps);
  return body;
}

}  // namespace

Document parse_document(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    size_t line = 1, col = 1;
    for (size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw SchemaError("line " + std::to_string(line) + ", column " + std::to_string(col), "invalid JSON");
  }
  const Node root(j, "document");
  if (!j.is_object()) root.fail("expected an object");
  Document d;
  if (root.has("meta")) {
    const Node meta = root.at("meta");
    if (meta.has("name")) d.name = meta.at("name").str();
    if (meta.has("provenance")) d.provenance = meta.at("provenance").str();
  }
  const Node kind = root.at("kind");
  const std::string k = kind.str();
  const Node body = root.at("body");
  try {
    if (k == "quantaloid") d.body = parse_quantaloid(body);
    else if (k == "category") d.body = parse_category(body);
    else if (k == "functor") d.body = parse_functor(body);
    else if (k == "distributor") d.body = parse_distributor(body);
    else if (k == "pms") d.body = parse_pms(body);
    else if (k == "sequence") d.body = parse_sequence(body);
    else kind.fail("unknown kind \"" + k + "\"");
  } catch (const SchemaError&) {
    throw;
  } catch (const StructuralError& e) {
    body.fail(e.what());
  }
  return d;
}

std::string emit_document(const Document& d) {
  Json j;
  j["kind"] = to_string(d.kind());
  j["meta"] = Json{{"name", d.name}, {"provenance", d.provenance}};
  std::visit(
      [&](const auto& b) {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, Quantaloid>) {
          j["body"] = emit_quantaloid(b);
        } else if constexpr (std::is_same_v<T, CategoryBody>) {
          j["body"] = emit_category(b);
        } else if constexpr (std::is_same_v<T, FunctorBody>) {
          Json map = Json::object();
          for (int x = 0; x < b.dom.category.size(); ++x) map[b.dom.category.name(x)] = b.cod.category.name(b.map[x]);
          j["body"] = Json{{"dom", emit_category(b.dom)}, {"cod", emit_category(b.cod)}, {"map", map}};
        } else if constexpr (std::is_same_v<T, DistributorBody>) {
          const EnrichedCategory& dom = b.dom.category;
          const EnrichedCategory& cod = b.cod.category;
          Json mat = Json::array();
          for (int y = 0; y < cod.size(); ++y) {
            Json row = Json::array();
            for (int x = 0; x < dom.size(); ++x)
              row.push_back(dom.base().hom(dom.type(x), cod.type(y)).name(b.mat[y * dom.size() + x]));
            mat.push_back(row);
          }
          j["body"] = Json{{"dom", emit_category(b.dom)}, {"cod", emit_category(b.cod)}, {"matrix", mat}};
        } else if constexpr (std::is_same_v<T, PartialMetricSpace>) {
          j["body"] = emit_pms(b);
        } else {
          j["body"] = emit_sequence(b);
        }
      },
      d.body);
  return j.dump(2) + "\n";
}

// ---- fixtures ----

namespace {

std::optional<int> numeric_suffix(std::string_view name, std::string_view prefix) {
  if (name.substr(0, prefix.size()) != prefix) return std::nullopt;
  const std::string_view digits = name.substr(prefix.size());
  int k = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) return std::nullopt;
  return k;
}

std::string quantaloid_provenance(std::string_view name) {
  if (name == "q2") return "two-element Boolean algebra, composition = meet";
  if (name == "c3") return "three-element chain, composition = min";
  if (name == "diamond") return "four-element Boolean algebra, composition = meet";
  if (name == "l2" || name == "l3" || name == "l4")
    return "truncated addition on {0,...," + std::to_string(name[1] - '0' - 1) + "}, reversed order";
  if (name == "pz2" || name == "pz3")
    return "subsets of the cyclic group of order " + std::string(1, name[2]) + " under complex product";
  if (name == "dl3") return "diagonals of l3";
  return "";
}

PartialMetricSpace two_point(const std::string& ab, const std::string& aa_bb) {
  const ExtValue d = ExtValue::parse(ab);
  const ExtValue s = ExtValue::parse(aa_bb);
  return PartialMetricSpace({"a", "b"}, {s, d, d, s});
}

}  // namespace

bool is_fixture_name(std::string_view name) {
  if (is_quantaloid_fixture(name)) return true;
  if (name == "twopoint" || name == "all1" || name == "pz3cat") return true;
  if (auto k = numeric_suffix(name, "wordspace-")) return *k >= 1 && *k <= 8;
  if (auto k = numeric_suffix(name, "terminal-")) return *k >= 1 && *k <= 64;
  return false;
}

Document fixture_document(std::string_view name) {
  if (!is_fixture_name(name)) throw UsageError("unknown fixture \"" + std::string(name) + "\"");
  Document d;
  d.name = std::string(name);
  if (is_quantaloid_fixture(name)) {
    d.provenance = quantaloid_provenance(name);
    d.body = quantaloid_fixture(name);
  } else if (name == "twopoint") {
    d.provenance = "two-point metric space, self-distances 0, distance 1";
    d.body = two_point("1", "0");
  } else if (name == "all1") {
    d.provenance = "two-point space with every distance 1";
    d.body = two_point("1", "1");
  } else if (name == "pz3cat") {
    d.provenance = "failing strong bilateral family of pz3 as a category";
    const BasePtr base = share(quantaloid_fixture("pz3"));
    const CauchyBilateralResult r = check_strong_cauchy_bilateral(*base);
    if (r.holds) throw StructuralError("pz3 unexpectedly satisfies the strong bilateral condition");
    d.body = CategoryBody{family_category(base, r.object, r.family), "pz3"};
  } else if (auto k = numeric_suffix(name, "wordspace-")) {
    d.provenance = "nonempty words over {a,b} up to length " + std::to_string(*k) +
                   ", p = (1/2)^(first 1-based disagreement position)";
    d.body = word_space("ab", *k);
  } else {
    const int n = *numeric_suffix(name, "terminal-");
    std::vector<Rational> values;
    for (int i = 0; i < n; ++i) values.emplace_back(i);
    d.provenance = "self-distances 0.." + std::to_string(n - 1) + ", p(a,b) = max(a,b)";
    d.body = terminal_sample(values);
  }
  return d;
}

std::vector<std::string> fixture_document_names() {
  std::vector<std::string> out = quantaloid_fixture_names();
  for (const char* n : {"wordspace-2", "wordspace-3", "terminal-3", "twopoint", "all1", "pz3cat"}) out.emplace_back(n);
  return out;
}

}  // namespace qcat
