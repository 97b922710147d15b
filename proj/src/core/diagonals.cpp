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

#include "qcat/core/diagonals.hpp"

#include "qcat/core/errors.hpp"
#include "qcat/core/fixtures.hpp"

namespace qcat {

bool is_diagonal(const Quantaloid& q, const Arrow& f, const Arrow& g, const Arrow& d) {
  if (d.src != f.src || d.tgt != g.tgt) {
    throw StructuralError("diagonal must run from the source of f to the target of g");
  }
  const ElemId x = q.lift(f.src, g.src, g.tgt, g.elem, d.elem);
  const ElemId y = q.extend(f.src, f.tgt, g.tgt, d.elem, f.elem);
  return q.compose(f.src, g.src, g.tgt, g.elem, x) == d.elem && q.compose(f.src, f.tgt, g.tgt, y, f.elem) == d.elem;
}

std::vector<Arrow> arrows_of(const Quantaloid& q) {
  std::vector<Arrow> out;
  for (int a = 0; a < q.object_count(); ++a)
    for (int b = 0; b < q.object_count(); ++b)
      for (ElemId e = 0; e < q.hom(a, b).size(); ++e) out.push_back(Arrow{a, b, e});
  return out;
}

Quantaloid diagonal_quantaloid(const Quantaloid& q) {
  const std::vector<Arrow> objs = arrows_of(q);
  const int n = static_cast<int>(objs.size());
  QuantaloidData data;
  // elems[i*n+j]: q-elements of hom(src i, tgt j) that are diagonals i -> j
  std::vector<std::vector<ElemId>> elems(static_cast<size_t>(n) * n);
  data.homs.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    data.objects.push_back(q.arrow_label(objs[i]));
    for (int j = 0; j < n; ++j) {
      const HomLattice& ambient = q.hom(objs[i].src, objs[j].tgt);
      auto& list = elems[i * n + j];
      for (ElemId d = 0; d < ambient.size(); ++d) {
        if (is_diagonal(q, objs[i], objs[j], Arrow{objs[i].src, objs[j].tgt, d})) list.push_back(d);
      }
      std::vector<std::string> names;
      for (ElemId d : list) names.push_back(ambient.name(d));
      data.homs[i * n + j] =
          HomLattice::from_predicate(std::move(names), [&](int x, int y) { return ambient.le(list[x], list[y]); });
    }
  }
  auto local_index = [&](int i, int j, ElemId d) -> ElemId {
    const auto& list = elems[i * n + j];
    for (size_t k = 0; k < list.size(); ++k)
      if (list[k] == d) return static_cast<ElemId>(k);
    throw StructuralError("diagonal composite is not a diagonal");
  };
  data.comp.resize(static_cast<size_t>(n) * n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Arrow& f = objs[i];
        const Arrow& g = objs[j];
        const Arrow& h = objs[k];
        const auto& ds = elems[i * n + j];
        const auto& es = elems[j * n + k];
        auto& table = data.comp[(i * n + j) * n + k];
        table.resize(es.size() * ds.size());
        for (size_t ei = 0; ei < es.size(); ++ei)
          for (size_t di = 0; di < ds.size(); ++di) {
            // (e / g) o g o (g \ d)
            const ElemId x = q.lift(f.src, g.src, g.tgt, g.elem, ds[di]);
            const ElemId gx = q.compose(f.src, g.src, g.tgt, g.elem, x);
            const ElemId y = q.extend(g.src, g.tgt, h.tgt, es[ei], g.elem);
            const ElemId r = q.compose(f.src, g.tgt, h.tgt, y, gx);
            table[ei * ds.size() + di] = local_index(i, k, r);
          }
      }
  for (int i = 0; i < n; ++i) data.ids.push_back(local_index(i, i, objs[i].elem));
  Quantaloid out(std::move(data));
  if (q.has_identity_involution()) {
    try {
      return with_identity_involution(out);
    } catch (const StructuralError&) {
      // q's involution is not a valid symmetry; nothing to transport
    }
  }
  return out;
}

// ---------------------------------------------------------------- lax functors

namespace {

void check_shape(const LaxFunctor& F) {
  const int n = F.source.object_count();
  if (static_cast<int>(F.object_map.size()) != n) throw StructuralError("object map is not total");
  if (static_cast<int>(F.arrow_map.size()) != n * n) throw StructuralError("arrow map is not total");
  for (int a = 0; a < n; ++a) {
    const ObjectId fa = F.object_map[a];
    if (fa < 0 || fa >= F.target.object_count()) throw StructuralError("object map lands outside the target");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const auto& map = F.arrow_map[a * n + b];
      if (static_cast<int>(map.size()) != F.source.hom(a, b).size()) {
        throw StructuralError("arrow map on hom(" + F.source.object_name(a) + "," + F.source.object_name(b) +
                              ") is not total");
      }
      const int bound = F.target.hom(F.object_map[a], F.object_map[b]).size();
      for (ElemId e : map) {
        if (e < 0 || e >= bound) {
          throw StructuralError("arrow map on hom(" + F.source.object_name(a) + "," + F.source.object_name(b) +
                                ") lands outside the declared hom-lattice");
        }
      }
    }
}

}  // namespace

PropertyReport check_lax_functor(const LaxFunctor& F) {
  check_shape(F);
  const Quantaloid& S = F.source;
  const Quantaloid& T = F.target;
  const int n = S.object_count();
  auto src = [&](ObjectId a, ObjectId b, ElemId e) { return S.arrow_label(a, b, e); };
  auto tgt = [&](ObjectId a, ObjectId b, ElemId e) {
    return T.arrow_label(F.on_object(a), F.on_object(b), e);
  };

  std::optional<Witness> mono, lax_comp, lax_id, normal, exact_comp, joins;
  for (int a = 0; a < n; ++a) {
    const ObjectId fa = F.on_object(a);
    const ElemId image = F.on_arrow(a, a, S.identity(a));
    if (!lax_id && !T.hom(fa, fa).le(T.identity(fa), image)) {
      lax_id = Witness{{"A", S.object_name(a)}, {"F(1_A)", tgt(a, a, image)}};
    }
    if (!normal && image != T.identity(fa)) normal = Witness{{"A", S.object_name(a)}, {"F(1_A)", tgt(a, a, image)}};
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const HomLattice& h = S.hom(a, b);
      const HomLattice& th = T.hom(F.on_object(a), F.on_object(b));
      if (!joins && F.on_arrow(a, b, h.bottom()) != th.bottom()) {
        joins = Witness{{"bottom", src(a, b, h.bottom())}, {"image", tgt(a, b, F.on_arrow(a, b, h.bottom()))}};
      }
      for (ElemId x = 0; x < h.size(); ++x)
        for (ElemId y = 0; y < h.size(); ++y) {
          if (!mono && h.le(x, y) && !th.le(F.on_arrow(a, b, x), F.on_arrow(a, b, y))) {
            mono = Witness{{"x", src(a, b, x)}, {"y", src(a, b, y)}};
          }
          if (!joins && F.on_arrow(a, b, h.join(x, y)) != th.join(F.on_arrow(a, b, x), F.on_arrow(a, b, y))) {
            joins = Witness{{"x", src(a, b, x)}, {"y", src(a, b, y)}};
          }
        }
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const ObjectId fa = F.on_object(a), fb = F.on_object(b), fc = F.on_object(c);
        for (ElemId f = 0; f < S.hom(a, b).size(); ++f)
          for (ElemId g = 0; g < S.hom(b, c).size(); ++g) {
            const ElemId composed_then_mapped = F.on_arrow(a, c, S.compose(a, b, c, g, f));
            const ElemId mapped_then_composed = T.compose(fa, fb, fc, F.on_arrow(b, c, g), F.on_arrow(a, b, f));
            if (!lax_comp && !T.hom(fa, fc).le(mapped_then_composed, composed_then_mapped)) {
              lax_comp = Witness{{"f", src(a, b, f)},
                                 {"g", src(b, c, g)},
                                 {"Fg.Ff", tgt(a, c, mapped_then_composed)},
                                 {"F(g.f)", tgt(a, c, composed_then_mapped)}};
            }
            if (!exact_comp && mapped_then_composed != composed_then_mapped) {
              exact_comp = Witness{{"f", src(a, b, f)},
                                   {"g", src(b, c, g)},
                                   {"Fg.Ff", tgt(a, c, mapped_then_composed)},
                                   {"F(g.f)", tgt(a, c, composed_then_mapped)}};
            }
          }
      }

  PropertyReport report;
  auto put = [&](const std::string& name, const std::optional<Witness>& w) {
    if (w) report.fail(name, *w);
    else report.pass(name);
  };
  put("monotone", mono);
  put("lax-composition", lax_comp);
  put("lax-identity", lax_id);
  const std::optional<Witness> lax = mono ? mono : lax_comp ? lax_comp : lax_id;
  put("is-lax", lax);
  put("is-normal", lax ? lax : normal);
  put("is-homomorphism", lax ? lax : normal ? normal : exact_comp ? exact_comp : joins);
  return report;
}

std::optional<Witness> full_and_faithful_violation(const LaxFunctor& F) {
  check_shape(F);
  const int n = F.source.object_count();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const HomLattice& h = F.source.hom(a, b);
      const HomLattice& th = F.target.hom(F.on_object(a), F.on_object(b));
      if (h.size() != th.size()) {
        return Witness{{"hom", "hom(" + F.source.object_name(a) + "," + F.source.object_name(b) + ")"},
                       {"size", std::to_string(h.size())},
                       {"image-hom-size", std::to_string(th.size())}};
      }
      for (ElemId x = 0; x < h.size(); ++x)
        for (ElemId y = 0; y < h.size(); ++y) {
          if (h.le(x, y) != th.le(F.on_arrow(a, b, x), F.on_arrow(a, b, y))) {
            return Witness{{"x", F.source.arrow_label(a, b, x)}, {"y", F.source.arrow_label(a, b, y)}};
          }
        }
    }
  return std::nullopt;
}

LaxFunctor identity_lax_functor(const Quantaloid& q) { return identity_on_names(q, q); }

LaxFunctor compose_lax(const LaxFunctor& G, const LaxFunctor& F) {
  if (!(F.target == G.source)) throw StructuralError("lax functors are not composable");
  LaxFunctor out{F.source, G.target, {}, {}};
  const int n = F.source.object_count();
  for (int a = 0; a < n; ++a) out.object_map.push_back(G.on_object(F.on_object(a)));
  out.arrow_map.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (ElemId f = 0; f < F.source.hom(a, b).size(); ++f) {
        out.arrow_map[a * n + b].push_back(G.on_arrow(F.on_object(a), F.on_object(b), F.on_arrow(a, b, f)));
      }
  return out;
}

LaxFunctor identity_on_names(const Quantaloid& source, const Quantaloid& target) {
  LaxFunctor out{source, target, {}, {}};
  const int n = source.object_count();
  for (int a = 0; a < n; ++a) out.object_map.push_back(target.object_index(source.object_name(a)));
  out.arrow_map.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const HomLattice& th = target.hom(out.object_map[a], out.object_map[b]);
      for (const auto& name : source.hom(a, b).names()) out.arrow_map[a * n + b].push_back(th.index_of(name));
    }
  return out;
}

LaxFunctor order_collapse(const Quantaloid& q) {
  const Quantaloid two = fixture_q2();
  const ElemId zero = two.hom(0, 0).index_of("0");
  const ElemId one = two.hom(0, 0).index_of("1");
  const int n = q.object_count();
  LaxFunctor out{q, two, std::vector<ObjectId>(n, 0), {}};
  out.arrow_map.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (ElemId f = 0; f < q.hom(a, b).size(); ++f) {
        const bool above = a == b && q.hom(a, a).le(q.identity(a), f);
        out.arrow_map[a * n + b].push_back(above ? one : zero);
      }
  return out;
}

LaxFunctor embed_I(const Quantaloid& q) {
  const Quantaloid dq = diagonal_quantaloid(q);
  const int n = q.object_count();
  LaxFunctor out{q, dq, {}, {}};
  for (int a = 0; a < n; ++a) out.object_map.push_back(dq.object_index(q.arrow_label(a, a, q.identity(a))));
  out.arrow_map.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const HomLattice& th = dq.hom(out.object_map[a], out.object_map[b]);
      for (const auto& name : q.hom(a, b).names()) out.arrow_map[a * n + b].push_back(th.index_of(name));
    }
  return out;
}

namespace {

enum class Projection { Source, Target };

LaxFunctor project(const Quantaloid& q, Projection side) {
  const Quantaloid dq = diagonal_quantaloid(q);
  const std::vector<Arrow> objs = arrows_of(q);
  const int n = static_cast<int>(objs.size());
  LaxFunctor out{dq, q, {}, {}};
  for (const Arrow& f : objs) out.object_map.push_back(side == Projection::Source ? f.src : f.tgt);
  out.arrow_map.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Arrow& f = objs[i];
      const Arrow& g = objs[j];
      const HomLattice& ambient = q.hom(f.src, g.tgt);
      for (const auto& name : dq.hom(i, j).names()) {
        const ElemId d = ambient.index_of(name);
        out.arrow_map[i * n + j].push_back(side == Projection::Source ? q.lift(f.src, g.src, g.tgt, g.elem, d)
                                                                      : q.extend(f.src, f.tgt, g.tgt, d, f.elem));
      }
    }
  return out;
}

}  // namespace

LaxFunctor project_J0(const Quantaloid& q) { return project(q, Projection::Source); }
LaxFunctor project_J1(const Quantaloid& q) { return project(q, Projection::Target); }

LaxFunctor project_K(const Quantaloid& q) {
  if (!is_commutative_quantale(q)) throw PreconditionError("K needs a commutative one-object quantale");
  const Quantaloid dq = diagonal_quantaloid(q);
  const std::vector<Arrow> objs = arrows_of(q);
  const int n = static_cast<int>(objs.size());
  const HomLattice& h = q.hom(0, 0);
  LaxFunctor out{dq, q, std::vector<ObjectId>(n, 0), {}};
  out.arrow_map.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& name : dq.hom(i, j).names()) {
        const ElemId d = h.index_of(name);
        const ElemId via_g = q.lift(0, 0, 0, objs[j].elem, d);
        const ElemId via_f = q.lift(0, 0, 0, objs[i].elem, d);
        out.arrow_map[i * n + j].push_back(q.compose(0, 0, 0, via_g, via_f));
      }
  return out;
}

}  // namespace qcat
