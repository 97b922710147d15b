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

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "qcat/core/errors.hpp"
#include "qcat/core/parmet.hpp"

namespace qcat {

// ---- completion ----

PropertyReport validate_cauchy_pair(const PartialMetricSpace& x, const CauchyPair& c) {
  PropertyReport r;
  const int n = x.size();
  if (static_cast<int>(c.phi.size()) != n || static_cast<int>(c.psi.size()) != n)
    throw StructuralError("Cauchy pair does not match the space size");
  const ExtValue q(c.q);

  std::optional<Witness> bad;
  for (int y = 0; y < n && !bad; ++y) {
    if (c.phi[y] < max(q, x(y, y)))
      bad = Witness{{"y", x.point(y)}, {"phi(y)", c.phi[y].to_string()}, {"q v p(y,y)", max(q, x(y, y)).to_string()}};
    for (int w = 0; w < n && !bad; ++w)
      if (tri(x(y, w), x(w, w), c.phi[w]) < c.phi[y])
        bad = Witness{{"y", x.point(y)}, {"x", x.point(w)}, {"phi(y)", c.phi[y].to_string()},
                      {"p(y,x)-p(x,x)+phi(x)", tri(x(y, w), x(w, w), c.phi[w]).to_string()}};
  }
  if (bad) r.fail("presheaf", *bad);
  else r.pass("presheaf");

  bad.reset();
  for (int y = 0; y < n && !bad; ++y) {
    if (c.psi[y] < max(q, x(y, y)))
      bad = Witness{{"y", x.point(y)}, {"psi(y)", c.psi[y].to_string()}, {"q v p(y,y)", max(q, x(y, y)).to_string()}};
    for (int w = 0; w < n && !bad; ++w)
      if (tri(c.psi[w], x(w, w), x(w, y)) < c.psi[y])
        bad = Witness{{"y", x.point(y)}, {"x", x.point(w)}, {"psi(y)", c.psi[y].to_string()},
                      {"psi(x)-p(x,x)+p(x,y)", tri(c.psi[w], x(w, w), x(w, y)).to_string()}};
  }
  if (bad) r.fail("copresheaf", *bad);
  else r.pass("copresheaf");

  bad.reset();
  ExtValue inf = ExtValue::infinity();
  for (int z = 0; z < n; ++z) inf = min(inf, tri(c.psi[z], x(z, z), c.phi[z]));
  if (q < inf) bad = Witness{{"inf_z psi(z)-p(z,z)+phi(z)", inf.to_string()}, {"q", q.to_string()}};
  for (int y = 0; y < n && !bad; ++y)
    for (int w = 0; w < n && !bad; ++w)
      if (tri(c.phi[y], q, c.psi[w]) < x(y, w))
        bad = Witness{{"y", x.point(y)}, {"x", x.point(w)}, {"p(y,x)", x(y, w).to_string()},
                      {"phi(y)-q+psi(x)", tri(c.phi[y], q, c.psi[w]).to_string()}};
  if (bad) r.fail("adjunction", *bad);
  else r.pass("adjunction");
  return r;
}

CauchyPair representable_pair(const PartialMetricSpace& x, int point) {
  CauchyPair c;
  c.q = x(point, point).finite();
  for (int y = 0; y < x.size(); ++y) {
    c.phi.push_back(x(y, point));
    c.psi.push_back(x(point, y));
  }
  return c;
}

namespace {

// All vectors v over `values` with v(y) >= floor(y) and the pairwise
// constraint ok(v, y, w) for every assigned y, w.
std::vector<std::vector<ExtValue>> enumerate_vectors(int n, const std::vector<ExtValue>& values,
                                                     const std::function<ExtValue(int)>& floor,
                                                     const std::function<bool(const std::vector<ExtValue>&, int, int)>& ok) {
  std::vector<std::vector<ExtValue>> out;
  std::vector<ExtValue> v(n);
  std::function<void(int)> fill = [&](int k) {
    if (k == n) {
      out.push_back(v);
      return;
    }
    for (const auto& val : values) {
      if (val < floor(k)) continue;
      v[k] = val;
      bool fits = true;
      for (int j = 0; j <= k && fits; ++j) fits = ok(v, k, j) && ok(v, j, k);
      if (fits) fill(k + 1);
    }
  };
  fill(0);
  return out;
}

}  // namespace

std::vector<CauchyPair> enumerate_cauchy_pairs(const PartialMetricSpace& x) {
  const int n = x.size();
  const std::vector<ExtValue> values = x.occurring_values();
  std::vector<CauchyPair> out;
  for (const auto& qv : values) {
    if (qv.is_infinite()) continue;
    auto floor = [&](int y) { return max(qv, x(y, y)); };
    const auto phis = enumerate_vectors(n, values, floor, [&](const std::vector<ExtValue>& phi, int y, int w) {
      return phi[y] <= tri(x(y, w), x(w, w), phi[w]);
    });
    const auto psis = enumerate_vectors(n, values, floor, [&](const std::vector<ExtValue>& psi, int y, int w) {
      return psi[y] <= tri(psi[w], x(w, w), x(w, y));
    });
    for (const auto& phi : phis)
      for (const auto& psi : psis) {
        ExtValue inf = ExtValue::infinity();
        for (int z = 0; z < n; ++z) inf = min(inf, tri(psi[z], x(z, z), phi[z]));
        if (qv < inf) continue;
        bool adjoint = true;
        for (int y = 0; y < n && adjoint; ++y)
          for (int w = 0; w < n && adjoint; ++w) adjoint = x(y, w) <= tri(phi[y], qv, psi[w]);
        if (adjoint) out.push_back(CauchyPair{qv.finite(), phi, psi});
      }
  }
  return out;
}

ExtValue cauchy_pair_distance(const PartialMetricSpace& x, const CauchyPair& a, const CauchyPair& b) {
  ExtValue inf = ExtValue::infinity();
  for (int z = 0; z < x.size(); ++z) inf = min(inf, tri(a.psi[z], x(z, z), b.phi[z]));
  return inf;
}

Completion complete_finite(const PartialMetricSpace& x) {
  if (!x.finitely_typed()) throw PreconditionError("completion needs a finitely typed space");
  const std::vector<CauchyPair> pairs = enumerate_cauchy_pairs(x);
  const int m = static_cast<int>(pairs.size());
  std::vector<ExtValue> d(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) d[a * m + b] = cauchy_pair_distance(x, pairs[a], pairs[b]);

  // quotient: pairs with identical rows and columns become one point
  std::vector<int> rep(m, -1);
  std::vector<int> classes;
  for (int a = 0; a < m; ++a) {
    for (int c : classes) {
      bool same = true;
      for (int k = 0; k < m && same; ++k) same = d[a * m + k] == d[c * m + k] && d[k * m + a] == d[k * m + c];
      if (same) {
        rep[a] = c;
        break;
      }
    }
    if (rep[a] < 0) {
      rep[a] = a;
      classes.push_back(a);
    }
  }

  Completion out;
  std::vector<std::string> names;
  int anonymous = 0;
  for (int c : classes) {
    std::string label;
    for (int p = 0; p < x.size() && label.empty(); ++p) {
      const CauchyPair r = representable_pair(x, p);
      for (int a = 0; a < m && label.empty(); ++a)
        if (rep[a] == c && pairs[a] == r) label = "[" + x.point(p) + "]";
    }
    if (label.empty()) label = "limit" + std::to_string(++anonymous);
    names.push_back(label);
    out.classes.push_back(pairs[c]);
  }
  std::string inf_name = "inf";
  while (std::find(names.begin(), names.end(), inf_name) != names.end()) inf_name += "'";
  names.push_back(inf_name);

  const int k = static_cast<int>(classes.size());
  std::vector<ExtValue> dist;
  for (int a = 0; a <= k; ++a)
    for (int b = 0; b <= k; ++b)
      dist.push_back(a == k || b == k ? ExtValue::infinity() : d[classes[a] * m + classes[b]]);
  out.space = PartialMetricSpace(std::move(names), std::move(dist));

  for (int p = 0; p < x.size(); ++p) {
    const CauchyPair r = representable_pair(x, p);
    int found = -1;
    for (int a = 0; a < m && found < 0; ++a)
      if (pairs[a] == r) found = static_cast<int>(std::find(classes.begin(), classes.end(), rep[a]) - classes.begin());
    if (found < 0) throw StructuralError("representable pair of " + x.point(p) + " missing; is the space valid?");
    out.embedding.push_back(found);
  }
  return out;
}

// ---- Hausdorff ----

std::string subset_name(const PartialMetricSpace& x, const std::vector<int>& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += x.point(s[i]);
  }
  return out + "}";
}

ExtValue hausdorff_distance(const PartialMetricSpace& x, const std::vector<int>& t, const std::vector<int>& s) {
  if (t.empty() || s.empty()) throw StructuralError("the Hausdorff construction excludes the empty subset");
  ExtValue sup;
  for (int a : t) {
    ExtValue inf = ExtValue::infinity();
    for (int b : s) inf = min(inf, x(a, b));
    sup = max(sup, inf);
  }
  return sup;
}

namespace {

PartialMetricSpace hausdorff_on(const PartialMetricSpace& x, const std::vector<std::vector<int>>& subsets) {
  std::vector<std::string> names;
  std::vector<ExtValue> dist;
  for (const auto& s : subsets) names.push_back(subset_name(x, s));
  for (const auto& t : subsets)
    for (const auto& s : subsets) dist.push_back(hausdorff_distance(x, t, s));
  return PartialMetricSpace(std::move(names), std::move(dist));
}

}  // namespace

PartialMetricSpace hausdorff(const PartialMetricSpace& x) {
  const int n = x.size();
  if (n > 16) throw BoundExceeded("hausdorff enumerates subsets of at most 16 points");
  std::vector<std::vector<int>> subsets;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    const bool typed = std::all_of(s.begin(), s.end(), [&](int i) { return x(i, i) == x(s[0], s[0]); });
    if (typed) subsets.push_back(std::move(s));
  }
  return hausdorff_on(x, subsets);
}

PropertyReport hausdorff_violations(const PartialMetricSpace& x, const std::vector<std::vector<int>>& subsets) {
  std::vector<std::vector<int>> unique;
  for (auto s : subsets) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int i : s)
      if (i < 0 || i >= x.size()) throw StructuralError("subset member out of range");
    if (std::find(unique.begin(), unique.end(), s) == unique.end()) unique.push_back(std::move(s));
  }
  return validate_pms(hausdorff_on(x, unique));
}

// ---- exponentiability ----

std::string to_string(Exponentiability e) {
  switch (e) {
    case Exponentiability::ExponentiableExact:
      return "EXPONENTIABLE_EXACT";
    case Exponentiability::NotExponentiable:
      return "NOT_EXPONENTIABLE";
    case Exponentiability::NoViolationOnGrid:
      return "NO_VIOLATION_ON_GRID";
  }
  return "?";
}

bool exponentiability_violated(const PartialMetricSpace& x, int x0, int x2, const Rational& u, const Rational& v,
                               const Rational& w) {
  const ExtValue eu(u), ev(v), ew(w);
  if (x(x0, x2).is_infinite() || x(x0, x2).finite() > u - v + w) return false;
  if (eu < max(x(x0, x0), ev) || ew < max(x(x2, x2), ev)) return false;
  for (int x1 = 0; x1 < x.size(); ++x1)
    if (x(x1, x1) == ev && x(x0, x1) <= eu && x(x1, x2) <= ew) return false;
  return true;
}

ExponentiabilityResult exponentiable(const PartialMetricSpace& x, const Rational& step, const Rational& cap) {
  if (step <= 0) throw std::invalid_argument("grid step must be positive");
  if (cap < 0) throw std::invalid_argument("grid cap must be nonnegative");
  ExponentiabilityResult out;
  if (x.size() == 0) {
    out.verdict = Exponentiability::ExponentiableExact;
    out.note = "empty space";
    return out;
  }
  const auto& all = x.distances();
  if (std::all_of(all.begin(), all.end(), [](const ExtValue& v) { return v.is_infinite(); })) {
    out.verdict = Exponentiability::ExponentiableExact;
    out.note = "all distances infinite";
    return out;
  }
  std::vector<Rational> grid;
  for (Rational g = 0; g <= cap; g += step) grid.push_back(g);

  using boost::multiprecision::denominator;
  struct Key {
    boost::multiprecision::cpp_int den;
    Rational sum, v, u, w;
    int x0, x2;
    auto tie() const { return std::tie(den, sum, v, u, w, x0, x2); }
  };
  std::optional<Key> best;
  for (int x0 = 0; x0 < x.size(); ++x0)
    for (int x2 = 0; x2 < x.size(); ++x2)
      for (const auto& u : grid)
        for (const auto& v : grid)
          for (const auto& w : grid) {
            if (!exponentiability_violated(x, x0, x2, u, v, w)) continue;
            Key k{std::max({denominator(u), denominator(v), denominator(w)}), u + v + w, v, u, w, x0, x2};
            if (!best || k.tie() < best->tie()) best = k;
          }
  const std::string exactness = "finite space: the infimum over x1 is attained, so the epsilon clause is exact";
  if (best) {
    out.verdict = Exponentiability::NotExponentiable;
    out.witness = {{"x0", x.point(best->x0)}, {"x2", x.point(best->x2)}, {"u", format_rational(best->u)},
                   {"v", format_rational(best->v)}, {"w", format_rational(best->w)}};
    out.note = exactness;
  } else {
    out.verdict = Exponentiability::NoViolationOnGrid;
    out.note = exactness + "; grid step " + format_rational(step) + ", cap " + format_rational(cap);
  }
  return out;
}

}  // namespace qcat
