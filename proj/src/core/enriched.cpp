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

#include "qcat/core/enriched.hpp"

#include <functional>
#include <numeric>
#include <set>

#include "qcat/core/errors.hpp"

namespace qcat {

// ---------------------------------------------------------------- category

EnrichedCategory::EnrichedCategory(BasePtr base, std::vector<std::string> names, std::vector<ObjectId> types,
                                   std::vector<ElemId> homs)
    : base_(std::move(base)), names_(std::move(names)), types_(std::move(types)), homs_(std::move(homs)) {
  if (!base_) throw StructuralError("category without a base quantaloid");
  const int n = size();
  if (static_cast<int>(types_.size()) != n) throw StructuralError("type map is not total");
  if (static_cast<int>(homs_.size()) != n * n) throw StructuralError("hom matrix is not total");
  std::set<std::string> seen;
  for (int x = 0; x < n; ++x) {
    if (!seen.insert(names_[x]).second) throw StructuralError("duplicate object name \"" + names_[x] + "\"");
    if (types_[x] < 0 || types_[x] >= base_->object_count()) {
      throw StructuralError("object \"" + names_[x] + "\" has a type outside the base");
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const ElemId e = hom(x, y);
      if (e < 0 || e >= hom_lattice(x, y).size()) {
        throw StructuralError("hom(" + names_[x] + "," + names_[y] + ") lies outside base hom(" +
                              base_->object_name(types_[y]) + "," + base_->object_name(types_[x]) + ")");
      }
    }
}

std::optional<int> EnrichedCategory::find(std::string_view name) const {
  for (int x = 0; x < size(); ++x)
    if (names_[x] == name) return x;
  return std::nullopt;
}

int EnrichedCategory::index_of(std::string_view name) const {
  auto x = find(name);
  if (!x) throw StructuralError("unknown object \"" + std::string(name) + "\"");
  return *x;
}

bool operator==(const EnrichedCategory& a, const EnrichedCategory& b) {
  return same_base(a, b) && a.names_ == b.names_ && a.types_ == b.types_ && a.homs_ == b.homs_;
}

bool same_base(const EnrichedCategory& a, const EnrichedCategory& b) {
  if (!a.base_ptr() || !b.base_ptr()) return false;
  return a.base_ptr() == b.base_ptr() || a.base() == b.base();
}

namespace {

void require_same_base(const EnrichedCategory& a, const EnrichedCategory& b) {
  if (!same_base(a, b)) throw StructuralError("categories are enriched in different bases");
}

void require_equal(const EnrichedCategory& a, const EnrichedCategory& b, const char* what) {
  if (!(a == b)) throw StructuralError(std::string("endpoint mismatch: ") + what);
}

std::string subset_label(const EnrichedCategory& c, unsigned long mask) {
  std::string out = "{";
  bool first = true;
  for (int x = 0; x < c.size(); ++x) {
    if (mask & (1UL << x)) {
      out += (first ? "" : ",") + c.name(x);
      first = false;
    }
  }
  return out + "}";
}

}  // namespace

PropertyReport validate_category(const EnrichedCategory& c) {
  const Quantaloid& q = c.base();
  const int n = c.size();
  std::optional<Witness> c1, c2;
  for (int x = 0; x < n && !c2; ++x) {
    if (!c.hom_lattice(x, x).le(q.identity(c.type(x)), c.hom(x, x))) {
      c2 = Witness{{"x", c.name(x)}, {"C(x,x)", c.hom_label(x, x)}};
    }
  }
  for (int x = 0; x < n && !c1; ++x)
    for (int y = 0; y < n && !c1; ++y)
      for (int z = 0; z < n && !c1; ++z) {
        const ElemId comp = q.compose(c.type(z), c.type(y), c.type(x), c.hom(x, y), c.hom(y, z));
        if (!c.hom_lattice(x, z).le(comp, c.hom(x, z))) {
          c1 = Witness{{"x", c.name(x)},
                       {"y", c.name(y)},
                       {"z", c.name(z)},
                       {"C(x,y)C(y,z)", q.arrow_label(c.type(z), c.type(x), comp)},
                       {"C(x,z)", c.hom_label(x, z)}};
        }
      }
  PropertyReport r;
  if (c1) r.fail("C1", *c1);
  else r.pass("C1");
  if (c2) r.fail("C2", *c2);
  else r.pass("C2");
  return r;
}

PropertyReport validate_functor(const EnrichedFunctor& f) {
  require_same_base(f.dom, f.cod);
  if (static_cast<int>(f.map.size()) != f.dom.size()) throw StructuralError("functor map is not total");
  for (int m : f.map)
    if (m < 0 || m >= f.cod.size()) throw StructuralError("functor map lands outside the codomain");
  std::optional<Witness> f0, f1;
  for (int x = 0; x < f.dom.size() && !f0; ++x) {
    if (f.dom.type(x) != f.cod.type(f.map[x])) f0 = Witness{{"x", f.dom.name(x)}, {"Fx", f.cod.name(f.map[x])}};
  }
  for (int x = 0; x < f.dom.size() && !f1; ++x)
    for (int y = 0; y < f.dom.size() && !f1; ++y) {
      if (f.dom.type(x) != f.cod.type(f.map[x]) || f.dom.type(y) != f.cod.type(f.map[y])) continue;
      if (!f.dom.hom_lattice(x, y).le(f.dom.hom(x, y), f.cod.hom(f.map[x], f.map[y]))) {
        f1 = Witness{{"x", f.dom.name(x)},
                     {"y", f.dom.name(y)},
                     {"dom(x,y)", f.dom.hom_label(x, y)},
                     {"cod(Fx,Fy)", f.cod.hom_label(f.map[x], f.map[y])}};
      }
    }
  PropertyReport r;
  if (f0) r.fail("F0", *f0);
  else r.pass("F0");
  if (f1) r.fail("F1", *f1);
  else r.pass("F1");
  return r;
}

PropertyReport validate_distributor(const EnrichedDistributor& d) {
  require_same_base(d.dom, d.cod);
  const Quantaloid& q = d.dom.base();
  if (static_cast<int>(d.mat.size()) != d.dom.size() * d.cod.size()) throw StructuralError("matrix is not total");
  for (int y = 0; y < d.cod.size(); ++y)
    for (int x = 0; x < d.dom.size(); ++x) {
      if (d.at(y, x) < 0 || d.at(y, x) >= d.lattice(y, x).size()) {
        throw StructuralError("matrix entry (" + d.cod.name(y) + "," + d.dom.name(x) + ") lies outside its hom-lattice");
      }
    }
  std::optional<Witness> d1, d2;
  for (int y2 = 0; y2 < d.cod.size() && !d1; ++y2)
    for (int y = 0; y < d.cod.size() && !d1; ++y)
      for (int x = 0; x < d.dom.size() && !d1; ++x) {
        const ElemId comp = q.compose(d.dom.type(x), d.cod.type(y), d.cod.type(y2), d.cod.hom(y2, y), d.at(y, x));
        if (!d.lattice(y2, x).le(comp, d.at(y2, x))) {
          d1 = Witness{{"y'", d.cod.name(y2)}, {"y", d.cod.name(y)}, {"x", d.dom.name(x)}};
        }
      }
  for (int y = 0; y < d.cod.size() && !d2; ++y)
    for (int x = 0; x < d.dom.size() && !d2; ++x)
      for (int x2 = 0; x2 < d.dom.size() && !d2; ++x2) {
        const ElemId comp = q.compose(d.dom.type(x2), d.dom.type(x), d.cod.type(y), d.at(y, x), d.dom.hom(x, x2));
        if (!d.lattice(y, x2).le(comp, d.at(y, x2))) {
          d2 = Witness{{"y", d.cod.name(y)}, {"x", d.dom.name(x)}, {"x'", d.dom.name(x2)}};
        }
      }
  PropertyReport r;
  if (d1) r.fail("D1", *d1);
  else r.pass("D1");
  if (d2) r.fail("D2", *d2);
  else r.pass("D2");
  return r;
}

EnrichedCategory unit_category(BasePtr base, ObjectId type, std::string name) {
  const ElemId one = base->identity(type);
  return EnrichedCategory(std::move(base), {std::move(name)}, {type}, {one});
}

EnrichedCategory full_subcategory(const EnrichedCategory& c, const std::vector<int>& objects) {
  std::vector<std::string> names;
  std::vector<ObjectId> types;
  std::vector<ElemId> homs;
  for (int x : objects) {
    names.push_back(c.name(x));
    types.push_back(c.type(x));
  }
  for (int x : objects)
    for (int y : objects) homs.push_back(c.hom(x, y));
  return EnrichedCategory(c.base_ptr(), std::move(names), std::move(types), std::move(homs));
}

std::vector<int> members(const Subset& s) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(s.size()); ++i)
    if (s[i]) out.push_back(i);
  return out;
}

Subset subset_of(int n, const std::vector<int>& elements) {
  Subset s(n, false);
  for (int e : elements) s.at(e) = true;
  return s;
}

// ---------------------------------------------------------------- distributors

EnrichedDistributor dist_id(const EnrichedCategory& c) { return EnrichedDistributor{c, c, c.homs()}; }

EnrichedDistributor dist_compose(const EnrichedDistributor& psi, const EnrichedDistributor& phi) {
  require_equal(phi.cod, psi.dom, "composite needs cod(phi) = dom(psi)");
  const Quantaloid& q = phi.dom.base();
  EnrichedDistributor out{phi.dom, psi.cod, {}};
  out.mat.resize(static_cast<size_t>(psi.cod.size()) * phi.dom.size());
  for (int z = 0; z < psi.cod.size(); ++z)
    for (int x = 0; x < phi.dom.size(); ++x) {
      const HomLattice& h = out.lattice(z, x);
      ElemId acc = h.bottom();
      for (int y = 0; y < phi.cod.size(); ++y) {
        acc = h.join(acc, q.compose(phi.dom.type(x), phi.cod.type(y), psi.cod.type(z), psi.at(z, y), phi.at(y, x)));
      }
      out.mat[z * phi.dom.size() + x] = acc;
    }
  return out;
}

EnrichedDistributor dist_lift(const EnrichedDistributor& psi, const EnrichedDistributor& phi) {
  require_equal(psi.cod, phi.cod, "lifting needs cod(psi) = cod(phi)");
  const Quantaloid& q = phi.dom.base();
  EnrichedDistributor out{phi.dom, psi.dom, {}};
  out.mat.resize(static_cast<size_t>(psi.dom.size()) * phi.dom.size());
  for (int y = 0; y < psi.dom.size(); ++y)
    for (int x = 0; x < phi.dom.size(); ++x) {
      const HomLattice& h = out.lattice(y, x);
      ElemId acc = h.top();
      for (int z = 0; z < phi.cod.size(); ++z) {
        acc = h.meet(acc, q.lift(phi.dom.type(x), psi.dom.type(y), phi.cod.type(z), psi.at(z, y), phi.at(z, x)));
      }
      out.mat[y * phi.dom.size() + x] = acc;
    }
  return out;
}

EnrichedDistributor dist_ext(const EnrichedDistributor& psi, const EnrichedDistributor& phi) {
  require_equal(psi.dom, phi.dom, "extension needs dom(psi) = dom(phi)");
  const Quantaloid& q = phi.dom.base();
  EnrichedDistributor out{phi.cod, psi.cod, {}};
  out.mat.resize(static_cast<size_t>(psi.cod.size()) * phi.cod.size());
  for (int y = 0; y < psi.cod.size(); ++y)
    for (int x = 0; x < phi.cod.size(); ++x) {
      const HomLattice& h = out.lattice(y, x);
      ElemId acc = h.top();
      for (int z = 0; z < phi.dom.size(); ++z) {
        acc = h.meet(acc, q.extend(phi.dom.type(z), phi.cod.type(x), psi.cod.type(y), psi.at(y, z), phi.at(x, z)));
      }
      out.mat[y * phi.cod.size() + x] = acc;
    }
  return out;
}

std::optional<Witness> dist_le_violation(const EnrichedDistributor& a, const EnrichedDistributor& b) {
  require_equal(a.dom, b.dom, "comparison needs equal domains");
  require_equal(a.cod, b.cod, "comparison needs equal codomains");
  const Quantaloid& q = a.dom.base();
  for (int y = 0; y < a.cod.size(); ++y)
    for (int x = 0; x < a.dom.size(); ++x)
      if (!a.lattice(y, x).le(a.at(y, x), b.at(y, x))) {
        return Witness{{"y", a.cod.name(y)},
                       {"x", a.dom.name(x)},
                       {"left", q.arrow_label(a.dom.type(x), a.cod.type(y), a.at(y, x))},
                       {"right", q.arrow_label(a.dom.type(x), a.cod.type(y), b.at(y, x))}};
      }
  return std::nullopt;
}

bool dist_le(const EnrichedDistributor& a, const EnrichedDistributor& b) { return !dist_le_violation(a, b); }

EnrichedDistributor graph(const EnrichedFunctor& f) {
  EnrichedDistributor out{f.dom, f.cod, {}};
  for (int b = 0; b < f.cod.size(); ++b)
    for (int a = 0; a < f.dom.size(); ++a) out.mat.push_back(f.cod.hom(b, f.map[a]));
  return out;
}

EnrichedDistributor cograph(const EnrichedFunctor& f) {
  EnrichedDistributor out{f.cod, f.dom, {}};
  for (int a = 0; a < f.dom.size(); ++a)
    for (int b = 0; b < f.cod.size(); ++b) out.mat.push_back(f.cod.hom(f.map[a], b));
  return out;
}

std::optional<Witness> adjoint_violation(const EnrichedDistributor& phi, const EnrichedDistributor& psi) {
  require_equal(phi.cod, psi.dom, "adjunction needs phi: C -> D and psi: D -> C");
  require_equal(phi.dom, psi.cod, "adjunction needs phi: C -> D and psi: D -> C");
  if (auto w = dist_le_violation(dist_id(phi.dom), dist_compose(psi, phi))) {
    Witness out{{"inequality", "id <= psi.phi"}};
    out.insert(out.end(), w->begin(), w->end());
    return out;
  }
  if (auto w = dist_le_violation(dist_compose(phi, psi), dist_id(phi.cod))) {
    Witness out{{"inequality", "phi.psi <= id"}};
    out.insert(out.end(), w->begin(), w->end());
    return out;
  }
  return std::nullopt;
}

bool check_adjoint(const EnrichedDistributor& phi, const EnrichedDistributor& psi) {
  return !adjoint_violation(phi, psi);
}

bool functor_le(const EnrichedFunctor& f, const EnrichedFunctor& g) { return dist_le(graph(f), graph(g)); }

bool functor_iso(const EnrichedFunctor& f, const EnrichedFunctor& g) { return functor_le(f, g) && functor_le(g, f); }

EnrichedFunctor compose_functors(const EnrichedFunctor& g, const EnrichedFunctor& f) {
  require_equal(f.cod, g.dom, "functors are not composable");
  EnrichedFunctor out{f.dom, g.cod, {}};
  for (int m : f.map) out.map.push_back(g.map[m]);
  return out;
}

EnrichedFunctor identity_functor(const EnrichedCategory& c) {
  std::vector<int> map(c.size());
  std::iota(map.begin(), map.end(), 0);
  return EnrichedFunctor{c, c, std::move(map)};
}

std::vector<bool> underlying_order(const EnrichedCategory& c) {
  const int n = c.size();
  std::vector<bool> out(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      out[x * n + y] = c.type(x) == c.type(y) && c.hom_lattice(x, y).le(c.base().identity(c.type(x)), c.hom(x, y));
  return out;
}

bool is_skeletal(const EnrichedCategory& c) {
  const auto order = underlying_order(c);
  const int n = c.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && order[x * n + y] && order[y * n + x]) return false;
  return true;
}

EnrichedCategory symmetrize(const EnrichedCategory& c) {
  const Quantaloid& q = c.base();
  if (!q.has_involution()) throw PreconditionError("symmetrisation needs a base involution");
  std::vector<ElemId> homs;
  for (int y = 0; y < c.size(); ++y)
    for (int x = 0; x < c.size(); ++x) {
      const ElemId back = q.involute(c.type(y), c.type(x), c.hom(x, y));
      homs.push_back(c.hom_lattice(y, x).meet(c.hom(y, x), back));
    }
  return EnrichedCategory(c.base_ptr(), c.names(), c.types(), std::move(homs));
}

bool is_symmetric_category(const EnrichedCategory& c) { return symmetrize(c) == c; }

bool is_fully_faithful(const EnrichedFunctor& f) {
  for (int x = 0; x < f.dom.size(); ++x)
    for (int y = 0; y < f.dom.size(); ++y)
      if (f.dom.hom(y, x) != f.cod.hom(f.map[y], f.map[x]) || f.dom.type(x) != f.cod.type(f.map[x])) return false;
  return true;
}

bool is_fully_dense(const EnrichedFunctor& f) {
  const EnrichedCategory& d = f.cod;
  const Quantaloid& q = d.base();
  for (int y = 0; y < d.size(); ++y)
    for (int x = 0; x < d.size(); ++x) {
      const HomLattice& h = d.hom_lattice(y, x);
      ElemId acc = h.bottom();
      for (int c = 0; c < f.dom.size(); ++c) {
        const int fc = f.map[c];
        acc = h.join(acc, q.compose(d.type(x), d.type(fc), d.type(y), d.hom(y, fc), d.hom(fc, x)));
      }
      if (acc != d.hom(y, x)) return false;
    }
  return true;
}

// ---------------------------------------------------------------- closure

namespace {

/// join over s in S of C(x,s) o C(s,x), in hom(tx, tx).
ElemId closure_join(const EnrichedCategory& c, const Subset& s, int x) {
  const Quantaloid& q = c.base();
  const HomLattice& h = c.hom_lattice(x, x);
  ElemId acc = h.bottom();
  for (int t = 0; t < c.size(); ++t) {
    if (!s[t]) continue;
    acc = h.join(acc, q.compose(c.type(x), c.type(t), c.type(x), c.hom(x, t), c.hom(t, x)));
  }
  return acc;
}

Subset from_mask(int n, unsigned long mask) {
  Subset s(n);
  for (int i = 0; i < n; ++i) s[i] = (mask >> i) & 1UL;
  return s;
}

unsigned long to_mask(const Subset& s) {
  unsigned long m = 0;
  for (size_t i = 0; i < s.size(); ++i)
    if (s[i]) m |= 1UL << i;
  return m;
}

}  // namespace

bool in_closure(const EnrichedCategory& c, const Subset& s, int x) {
  if (static_cast<int>(s.size()) != c.size()) throw StructuralError("subset does not match the object set");
  return c.hom_lattice(x, x).le(c.base().identity(c.type(x)), closure_join(c, s, x));
}

Subset closure(const EnrichedCategory& c, const Subset& s) {
  Subset out(c.size());
  for (int x = 0; x < c.size(); ++x) out[x] = in_closure(c, s, x);
  return out;
}

PropertyReport closure_report(const EnrichedCategory& c, int bound) {
  const int n = c.size();
  if (n > bound || n > 20) {
    throw BoundExceeded("closure report over " + std::to_string(n) + " objects exceeds bound " + std::to_string(bound));
  }
  const unsigned long count = 1UL << n;
  std::vector<unsigned long> cl(count);
  for (unsigned long m = 0; m < count; ++m) cl[m] = to_mask(closure(c, from_mask(n, m)));

  std::optional<Witness> increasing, monotone, idempotent, grounded, additive, equality;
  for (unsigned long m = 0; m < count; ++m) {
    if (!increasing && (m & ~cl[m])) {
      increasing = Witness{{"S", subset_label(c, m)}, {"cl(S)", subset_label(c, cl[m])}};
    }
    if (!idempotent && cl[cl[m]] != cl[m]) {
      idempotent = Witness{{"S", subset_label(c, m)}, {"cl(S)", subset_label(c, cl[m])}, {"cl(cl(S))", subset_label(c, cl[cl[m]])}};
    }
    // submasks t of m: t <= m must give cl t <= cl m
    for (unsigned long t = m;; t = (t - 1) & m) {
      if (!monotone && (cl[t] & ~cl[m])) monotone = Witness{{"S", subset_label(c, t)}, {"T", subset_label(c, m)}};
      if (t == 0) break;
    }
    if (!equality) {
      const Subset s = from_mask(n, m);
      for (int x = 0; x < n; ++x) {
        const bool member = (cl[m] >> x) & 1UL;
        const bool equal = closure_join(c, s, x) == c.hom(x, x);
        if (member != equal) {
          equality = Witness{{"S", subset_label(c, m)}, {"x", c.name(x)}};
          break;
        }
      }
    }
    for (unsigned long t = 0; t < count && !additive; ++t) {
      if (cl[m | t] != (cl[m] | cl[t])) {
        additive = Witness{{"S", subset_label(c, m)},
                           {"T", subset_label(c, t)},
                           {"cl(S+T)", subset_label(c, cl[m | t])},
                           {"cl(S)+cl(T)", subset_label(c, cl[m] | cl[t])}};
      }
    }
  }
  if (cl[0] != 0) grounded = Witness{{"cl({})", subset_label(c, cl[0])}};

  PropertyReport r;
  auto put = [&](const std::string& name, const std::optional<Witness>& w) {
    if (w) r.fail(name, *w);
    else r.pass(name);
  };
  put("increasing", increasing);
  put("monotone", monotone);
  put("idempotent", idempotent);
  put("grounded", grounded);
  put("additive", additive);
  put("closure-equality", equality);
  return r;
}

// ---------------------------------------------------------------- change of base

EnrichedCategory change_of_base(const LaxFunctor& f, const EnrichedCategory& c) {
  if (!(f.source == c.base())) throw StructuralError("change of base: category is not over the functor's source");
  std::vector<ObjectId> types;
  for (int x = 0; x < c.size(); ++x) types.push_back(f.on_object(c.type(x)));
  std::vector<ElemId> homs;
  for (int x = 0; x < c.size(); ++x)
    for (int y = 0; y < c.size(); ++y) homs.push_back(f.on_arrow(c.type(y), c.type(x), c.hom(x, y)));
  return EnrichedCategory(share(f.target), c.names(), std::move(types), std::move(homs));
}

EnrichedCategory category_sum(const EnrichedCategory& a, const EnrichedCategory& b) {
  require_same_base(a, b);
  std::vector<std::string> names = a.names();
  names.insert(names.end(), b.names().begin(), b.names().end());
  std::vector<ObjectId> types = a.types();
  types.insert(types.end(), b.types().begin(), b.types().end());
  const int n = a.size() + b.size();
  std::vector<ElemId> homs(static_cast<size_t>(n) * n);
  const Quantaloid& q = a.base();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const bool xa = x < a.size();
      const bool ya = y < a.size();
      ElemId e;
      if (xa && ya) e = a.hom(x, y);
      else if (!xa && !ya) e = b.hom(x - a.size(), y - a.size());
      else e = q.hom(types[y], types[x]).bottom();
      homs[x * n + y] = e;
    }
  return EnrichedCategory(a.base_ptr(), std::move(names), std::move(types), std::move(homs));
}

EnrichedCategory nz_part(const EnrichedCategory& c) {
  std::vector<int> keep;
  for (int x = 0; x < c.size(); ++x)
    if (!c.base().is_zero_object(c.type(x))) keep.push_back(x);
  return full_subcategory(c, keep);
}

EnrichedCategory rebase(const EnrichedCategory& c, BasePtr base) {
  std::vector<ObjectId> types;
  for (int x = 0; x < c.size(); ++x) types.push_back(base->object_index(c.base().object_name(c.type(x))));
  std::vector<ElemId> homs;
  for (int x = 0; x < c.size(); ++x)
    for (int y = 0; y < c.size(); ++y) {
      homs.push_back(base->hom(types[y], types[x]).index_of(c.hom_lattice(x, y).name(c.hom(x, y))));
    }
  return EnrichedCategory(std::move(base), c.names(), std::move(types), std::move(homs));
}

std::optional<std::vector<int>> find_isomorphism(const EnrichedCategory& a, const EnrichedCategory& b) {
  if (a.size() != b.size() || !same_base(a, b)) return std::nullopt;
  const int n = a.size();
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> extend = [&](int x) {
    if (x == n) return true;
    for (int y = 0; y < n; ++y) {
      if (used[y] || a.type(x) != b.type(y)) continue;
      bool fits = a.hom(x, x) == b.hom(y, y);
      for (int z = 0; z < x && fits; ++z) fits = a.hom(x, z) == b.hom(y, map[z]) && a.hom(z, x) == b.hom(map[z], y);
      if (!fits) continue;
      map[x] = y;
      used[y] = true;
      if (extend(x + 1)) return true;
      used[y] = false;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return map;
}

// ---------------------------------------------------------------- proof categories

EnrichedCategory family_category(BasePtr base, ObjectId x, const std::vector<FamilyMember>& family) {
  const int m = static_cast<int>(family.size());
  const int n = m + 1;
  std::vector<std::string> names;
  std::vector<ObjectId> types;
  for (int i = 0; i < m; ++i) {
    names.push_back(m == 1 ? "i" : "i" + std::to_string(i + 1));
    types.push_back(family[i].y);
  }
  names.push_back("x");
  types.push_back(x);
  std::vector<ElemId> homs(static_cast<size_t>(n) * n);
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s) {
      ElemId e;
      if (r == m && s == m) e = base->identity(x);
      else if (r < m && s == m) e = family[r].f;   // C(i,x) = f_i
      else if (r == m && s < m) e = family[s].g;   // C(x,i) = g_i
      else if (r == s) e = base->identity(types[r]);
      else e = base->hom(types[s], types[r]).bottom();
      homs[r * n + s] = e;
    }
  return EnrichedCategory(std::move(base), std::move(names), std::move(types), std::move(homs));
}

EnrichedCategory join_test_category(BasePtr base, ObjectId x, ElemId f, ElemId g) {
  const ElemId one = base->identity(x);
  const ElemId fg = base->compose(x, x, x, f, g);
  // rows/cols x, y, z
  std::vector<ElemId> homs{one, f, fg, one, one, g, one, one, one};
  return EnrichedCategory(std::move(base), {"x", "y", "z"}, {x, x, x}, std::move(homs));
}

}  // namespace qcat
