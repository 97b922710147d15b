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

#include "qcat/core/parmet.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "qcat/core/errors.hpp"
#include "qcat/core/fixtures.hpp"

namespace qcat {

PartialMetricSpace::PartialMetricSpace(std::vector<std::string> points, std::vector<ExtValue> distances)
    : points_(std::move(points)), dist_(std::move(distances)) {
  if (dist_.size() != points_.size() * points_.size()) {
    throw StructuralError("distance matrix has " + std::to_string(dist_.size()) + " entries, expected " +
                          std::to_string(points_.size() * points_.size()));
  }
  std::set<std::string> seen;
  for (const auto& p : points_)
    if (!seen.insert(p).second) throw StructuralError("duplicate point name \"" + p + "\"");
}

std::optional<int> PartialMetricSpace::find(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (points_[i] == name) return i;
  return std::nullopt;
}

int PartialMetricSpace::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw StructuralError("unknown point \"" + std::string(name) + "\"");
}

ExtValue PartialMetricSpace::distance(std::string_view y, std::string_view x) const {
  return (*this)(index_of(y), index_of(x));
}

bool PartialMetricSpace::finitely_typed() const {
  for (int x = 0; x < size(); ++x)
    if ((*this)(x, x).is_infinite()) return false;
  return true;
}

std::vector<ExtValue> PartialMetricSpace::occurring_values() const {
  std::vector<ExtValue> out(dist_);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PropertyReport validate_pms(const PartialMetricSpace& x) {
  PropertyReport r;
  const int n = x.size();
  std::optional<Witness> bad;
  for (int y = 0; y < n && !bad; ++y)
    for (int z = 0; z < n && !bad; ++z) {
      const ExtValue need = max(x(z, z), x(y, y));
      if (x(y, z) < need) {
        bad = Witness{{"y", x.point(y)},
                      {"x", x.point(z)},
                      {"p(y,x)", x(y, z).to_string()},
                      {"p(x,x) v p(y,y)", need.to_string()}};
      }
    }
  if (bad) r.fail("self-distance", *bad);
  else r.pass("self-distance");

  bad.reset();
  for (int z = 0; z < n && !bad; ++z)
    for (int y = 0; y < n && !bad; ++y)
      for (int w = 0; w < n && !bad; ++w) {
        const auto t = tri_signed(x(z, y), x(y, y), x(y, w));
        if (!tri_geq(t, x(z, w))) {
          bad = Witness{{"z", x.point(z)},
                        {"y", x.point(y)},
                        {"x", x.point(w)},
                        {"p(z,y)-p(y,y)+p(y,x)",
                         x(z, y).to_string() + "-" + x(y, y).to_string() + "+" + x(y, w).to_string() + " = " +
                             format_signed(t)},
                        {"p(z,x)", x(z, w).to_string()}};
        }
      }
  if (bad) r.fail("triangle", *bad);
  else r.pass("triangle");
  return r;
}

PropertyReport validate_metric(const PartialMetricSpace& d, bool require_symmetric) {
  PropertyReport r;
  const int n = d.size();
  std::optional<Witness> bad;
  for (int x = 0; x < n && !bad; ++x)
    if (d(x, x) != ExtValue(0)) bad = Witness{{"x", d.point(x)}, {"d(x,x)", d(x, x).to_string()}};
  if (bad) r.fail("zero-self-distance", *bad);
  else r.pass("zero-self-distance");

  bad.reset();
  for (int z = 0; z < n && !bad; ++z)
    for (int y = 0; y < n && !bad; ++y)
      for (int x = 0; x < n && !bad; ++x) {
        if (d(z, y) + d(y, x) < d(z, x)) {
          bad = Witness{{"z", d.point(z)},
                        {"y", d.point(y)},
                        {"x", d.point(x)},
                        {"d(z,y)+d(y,x)", (d(z, y) + d(y, x)).to_string()},
                        {"d(z,x)", d(z, x).to_string()}};
        }
      }
  if (bad) r.fail("triangle", *bad);
  else r.pass("triangle");

  if (require_symmetric) {
    bad.reset();
    for (int y = 0; y < n && !bad; ++y)
      for (int x = 0; x < n && !bad; ++x)
        if (d(y, x) != d(x, y))
          bad = Witness{{"y", d.point(y)}, {"x", d.point(x)}, {"d(y,x)", d(y, x).to_string()},
                        {"d(x,y)", d(x, y).to_string()}};
    if (bad) r.fail("symmetric", *bad);
    else r.pass("symmetric");
  }
  return r;
}

DerivedMetrics derived_metrics(const PartialMetricSpace& x) {
  const int n = x.size();
  std::vector<ExtValue> p0, p1, pk, ps;
  for (int y = 0; y < n; ++y)
    for (int w = 0; w < n; ++w) {
      const ExtValue a = x(y, w).monus(x(y, y));
      const ExtValue b = x(y, w).monus(x(w, w));
      p0.push_back(a);
      p1.push_back(b);
      pk.push_back(a + b);
      ps.push_back(max(b, x(w, y).monus(x(y, y))));
    }
  return {PartialMetricSpace(x.points(), std::move(p0)), PartialMetricSpace(x.points(), std::move(p1)),
          PartialMetricSpace(x.points(), std::move(pk)), PartialMetricSpace(x.points(), std::move(ps))};
}

namespace {

void require_finitely_typed(const PartialMetricSpace& x, const char* op) {
  for (int i = 0; i < x.size(); ++i)
    if (x(i, i).is_infinite())
      throw PreconditionError(std::string(op) + " needs a finitely typed space; p(" + x.point(i) + "," +
                              x.point(i) + ") = inf");
}

}  // namespace

std::optional<Rational> closure_defect(const PartialMetricSpace& x, const std::vector<int>& s, int point) {
  require_finitely_typed(x, "closure");
  std::optional<Rational> best;
  for (int t : s) {
    if (x(point, t).is_infinite() || x(t, point).is_infinite()) continue;
    const Rational v = x(point, t).finite() - x(t, t).finite() + x(t, point).finite() - x(point, point).finite();
    if (!best || v < *best) best = v;
  }
  return best;
}

bool closure_membership(const PartialMetricSpace& x, const std::vector<int>& s, int point) {
  const auto d = closure_defect(x, s, point);
  return d && *d <= 0;
}

std::vector<int> closure_set(const PartialMetricSpace& x, const std::vector<int>& s) {
  std::vector<int> out;
  for (int p = 0; p < x.size(); ++p)
    if (closure_membership(x, s, p)) out.push_back(p);
  return out;
}

std::vector<int> symmetric_metric_closure(const PartialMetricSpace& x, const std::vector<int>& s) {
  const PartialMetricSpace ps = derived_metrics(x).psym;
  std::vector<int> out;
  for (int p = 0; p < x.size(); ++p)
    for (int t : s)
      if (ps(p, t) == ExtValue(0)) {
        out.push_back(p);
        break;
      }
  return out;
}

// ---- generators ----

WordMetric::WordMetric(std::string alphabet) : alphabet_(std::move(alphabet)) {
  if (alphabet_.empty()) throw StructuralError("empty alphabet");
  for (size_t i = 0; i < alphabet_.size(); ++i)
    if (alphabet_.find(alphabet_[i]) != i) throw StructuralError("repeated letter in alphabet");
}

bool WordMetric::is_word(std::string_view w) const {
  return !w.empty() && std::all_of(w.begin(), w.end(), [&](char c) { return alphabet_.find(c) != std::string::npos; });
}

ExtValue WordMetric::distance(std::string_view y, std::string_view x) const {
  if (!is_word(y)) throw StructuralError("not a word over \"" + alphabet_ + "\": \"" + std::string(y) + "\"");
  if (!is_word(x)) throw StructuralError("not a word over \"" + alphabet_ + "\": \"" + std::string(x) + "\"");
  const size_t shorter = std::min(y.size(), x.size());
  size_t k = shorter + 1;
  for (size_t i = 0; i < shorter; ++i)
    if (y[i] != x[i]) {
      k = i + 1;
      break;
    }
  return ExtValue(Rational(1, boost::multiprecision::cpp_int(1) << k));
}

PartialMetricSpace word_space(const std::string& alphabet, int max_len) {
  if (max_len < 1) throw StructuralError("word_space needs max_len >= 1");
  const WordMetric metric(alphabet);
  std::vector<std::string> words;
  std::vector<std::string> layer{""};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::string> next;
    for (const auto& w : layer)
      for (char c : alphabet) next.push_back(w + c);
    words.insert(words.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  std::vector<ExtValue> dist;
  dist.reserve(words.size() * words.size());
  for (const auto& y : words)
    for (const auto& x : words) dist.push_back(metric.distance(y, x));
  return PartialMetricSpace(std::move(words), std::move(dist));
}

PartialMetricSpace terminal_sample(const std::vector<Rational>& values) {
  std::vector<std::string> names;
  std::vector<ExtValue> dist;
  for (const auto& v : values) names.push_back(format_rational(v));
  for (const auto& a : values)
    for (const auto& b : values) dist.push_back(ExtValue(std::max(a, b)));
  return PartialMetricSpace(std::move(names), std::move(dist));
}

namespace {

// D(L_n) is costly to build and shared by every space discretized at n.
BasePtr chain_diagonals(int n) {
  static std::mutex lock;
  static std::map<int, BasePtr> cache;
  const std::lock_guard<std::mutex> guard(lock);
  auto& slot = cache[n];
  if (!slot) slot = share(diagonal_quantaloid(fixture_truncated_chain(n)));
  return slot;
}

}  // namespace

EnrichedCategory discretize_to_category(const PartialMetricSpace& x, int denominator, int cap) {
  if (denominator < 1 || cap < 1) throw StructuralError("discretize needs denominator >= 1 and cap >= 1");
  const long long top = static_cast<long long>(cap) * denominator;
  auto scaled = [&](int y, int w) -> ElemId {
    const ExtValue& v = x(y, w);
    if (v.is_infinite()) return static_cast<ElemId>(top);
    const Rational s = v.finite() * denominator;
    if (boost::multiprecision::denominator(s) != 1 || s >= top) {
      throw StructuralError("distance p(" + x.point(y) + "," + x.point(w) + ") = " + v.to_string() +
                            " is not a multiple of 1/" + std::to_string(denominator) + " below " +
                            std::to_string(cap));
    }
    return static_cast<ElemId>(boost::multiprecision::numerator(s));
  };
  const BasePtr base = chain_diagonals(static_cast<int>(top) + 1);
  std::vector<ObjectId> types;
  for (int i = 0; i < x.size(); ++i) {
    const ElemId self = scaled(i, i);
    types.push_back(base->object_index(std::to_string(self)));
  }
  std::vector<ElemId> homs;
  for (int a = 0; a < x.size(); ++a)
    for (int b = 0; b < x.size(); ++b) {
      // hom(a,b) lives in base hom(type b, type a), whose elements are named
      // by the chain values they stand for
      const HomLattice& h = base->hom(types[b], types[a]);
      const std::string name = std::to_string(scaled(a, b));
      const auto e = h.find(name);
      if (!e) {
        throw StructuralError("distance p(" + x.point(a) + "," + x.point(b) +
                              ") is below a self-distance; not a diagonal");
      }
      homs.push_back(*e);
    }
  return EnrichedCategory(base, x.points(), std::move(types), std::move(homs));
}

}  // namespace qcat
