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

#include "qcat/core/quantaloid.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "qcat/core/diagonals.hpp"
#include "qcat/core/errors.hpp"

namespace qcat {

// ---------------------------------------------------------------- HomLattice

HomLattice::HomLattice(std::vector<std::string> names, std::vector<std::vector<bool>> leq)
    : names_(std::move(names)) {
  const int n = size();
  if (static_cast<int>(leq.size()) != n) throw StructuralError("order table has wrong number of rows");
  for (int i = 0; i < n; ++i) {
    if (!index_.emplace(names_[i], i).second) throw StructuralError("duplicate element name \"" + names_[i] + "\"");
  }
  leq_.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(leq[i].size()) != n) {
      throw StructuralError("order row for \"" + names_[i] + "\" has wrong length");
    }
    for (int j = 0; j < n; ++j) leq_[i * n + j] = leq[i][j] ? 1 : 0;
  }

  poset_ = true;
  for (int i = 0; i < n && poset_; ++i) {
    if (!le(i, i)) poset_ = false;
    for (int j = 0; j < n && poset_; ++j) {
      if (i != j && le(i, j) && le(j, i)) poset_ = false;
      for (int k = 0; k < n && poset_; ++k) {
        if (le(i, j) && le(j, k) && !le(i, k)) poset_ = false;
      }
    }
  }
  if (!poset_ || n == 0) return;

  for (int i = 0; i < n; ++i) {
    bool below_all = true;
    for (int j = 0; j < n; ++j) below_all = below_all && le(i, j);
    if (below_all) bottom_ = i;
  }
  if (bottom_ < 0) return;

  join_.assign(static_cast<size_t>(n) * n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int u = 0; u < n; ++u) {
        if (!le(i, u) || !le(j, u)) continue;
        bool least = true;
        for (int w = 0; w < n && least; ++w) {
          if (le(i, w) && le(j, w) && !le(u, w)) least = false;
        }
        if (least) {
          join_[i * n + j] = u;
          break;
        }
      }
      if (join_[i * n + j] < 0) return;
    }
  }
  lattice_ = true;
  top_ = bottom_;
  for (int i = 0; i < n; ++i) top_ = join_[top_ * n + i];
  meet_.assign(static_cast<size_t>(n) * n, bottom_);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      ElemId acc = bottom_;
      for (int w = 0; w < n; ++w) {
        if (le(w, i) && le(w, j)) acc = join_[acc * n + w];
      }
      meet_[i * n + j] = acc;
    }
  }
}

HomLattice HomLattice::from_predicate(std::vector<std::string> names, const std::function<bool(int, int)>& leq) {
  const int n = static_cast<int>(names.size());
  std::vector<std::vector<bool>> table(n, std::vector<bool>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) table[i][j] = leq(i, j);
  }
  return HomLattice(std::move(names), std::move(table));
}

std::optional<ElemId> HomLattice::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElemId HomLattice::index_of(std::string_view name) const {
  auto e = find(name);
  if (!e) throw StructuralError("unknown element \"" + std::string(name) + "\"");
  return *e;
}

void HomLattice::require_lattice() const {
  if (!lattice_) throw PreconditionError("hom-set is not a lattice");
}

ElemId HomLattice::bottom() const {
  require_lattice();
  return bottom_;
}

ElemId HomLattice::top() const {
  require_lattice();
  return top_;
}

ElemId HomLattice::join(ElemId a, ElemId b) const {
  require_lattice();
  return join_[a * size() + b];
}

ElemId HomLattice::meet(ElemId a, ElemId b) const {
  require_lattice();
  return meet_[a * size() + b];
}

ElemId HomLattice::join(std::span<const ElemId> s) const {
  require_lattice();
  ElemId acc = bottom_;
  for (ElemId e : s) acc = join_[acc * size() + e];
  return acc;
}

ElemId HomLattice::meet(std::span<const ElemId> s) const {
  require_lattice();
  ElemId acc = top_;
  for (ElemId e : s) acc = meet_[acc * size() + e];
  return acc;
}

// ---------------------------------------------------------------- Quantaloid

Quantaloid::Quantaloid(QuantaloidData data) : data_(std::move(data)) {
  const int n = object_count();
  for (int a = 0; a < n; ++a) {
    if (!object_index_.emplace(data_.objects[a], a).second) {
      throw StructuralError("duplicate object name \"" + data_.objects[a] + "\"");
    }
  }
  if (static_cast<int>(data_.homs.size()) != n * n) throw StructuralError("hom table is not total");
  if (static_cast<int>(data_.comp.size()) != n * n * n) throw StructuralError("composition table is not total");
  if (static_cast<int>(data_.ids.size()) != n) throw StructuralError("identity table is not total");
  for (int a = 0; a < n; ++a) {
    if (data_.ids[a] < 0 || data_.ids[a] >= hom(a, a).size()) {
      throw StructuralError("identity on " + data_.objects[a] + " lies outside its hom-lattice");
    }
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        const auto& table = data_.comp[(a * n + b) * n + c];
        const size_t expect = static_cast<size_t>(hom(b, c).size()) * hom(a, b).size();
        const std::string where = data_.objects[a] + "," + data_.objects[b] + "," + data_.objects[c];
        if (table.size() != expect) throw StructuralError("composition table (" + where + ") has missing entries");
        for (ElemId e : table) {
          if (e < 0 || e >= hom(a, c).size()) {
            throw StructuralError("composition table (" + where + ") has an entry outside hom(" + data_.objects[a] +
                                  "," + data_.objects[c] + ")");
          }
        }
      }
    }
  }
  if (data_.inv) {
    if (static_cast<int>(data_.inv->size()) != n * n) throw StructuralError("involution table is not total");
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        const auto& map = (*data_.inv)[a * n + b];
        if (static_cast<int>(map.size()) != hom(a, b).size()) {
          throw StructuralError("involution on hom(" + data_.objects[a] + "," + data_.objects[b] + ") is not total");
        }
        for (ElemId e : map) {
          if (e < 0 || e >= hom(b, a).size()) throw StructuralError("involution entry outside its hom-lattice");
        }
      }
    }
  }
}

std::optional<ObjectId> Quantaloid::find_object(std::string_view name) const {
  auto it = object_index_.find(std::string(name));
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

ObjectId Quantaloid::object_index(std::string_view name) const {
  auto a = find_object(name);
  if (!a) throw StructuralError("unknown object \"" + std::string(name) + "\"");
  return *a;
}

ElemId Quantaloid::involute(ObjectId a, ObjectId b, ElemId f) const {
  if (!data_.inv) throw PreconditionError("quantaloid has no involution");
  return (*data_.inv)[a * object_count() + b][f];
}

bool Quantaloid::has_identity_involution() const {
  if (!data_.inv) return false;
  const int n = object_count();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (ElemId f = 0; f < hom(a, b).size(); ++f) {
        if (hom(b, a).name(involute(a, b, f)) != hom(a, b).name(f)) return false;
      }
    }
  }
  return true;
}

ElemId Quantaloid::lift(ObjectId a, ObjectId b, ObjectId c, ElemId g, ElemId d) const {
  const HomLattice& target = hom(a, b);
  const HomLattice& bound = hom(a, c);
  ElemId acc = target.bottom();
  for (ElemId x = 0; x < target.size(); ++x) {
    if (bound.le(compose(a, b, c, g, x), d)) acc = target.join(acc, x);
  }
  return acc;
}

ElemId Quantaloid::extend(ObjectId a, ObjectId b, ObjectId c, ElemId d, ElemId f) const {
  const HomLattice& target = hom(b, c);
  const HomLattice& bound = hom(a, c);
  ElemId acc = target.bottom();
  for (ElemId y = 0; y < target.size(); ++y) {
    if (bound.le(compose(a, b, c, y, f), d)) acc = target.join(acc, y);
  }
  return acc;
}

Arrow Quantaloid::compose(const Arrow& g, const Arrow& f) const {
  if (f.tgt != g.src) throw StructuralError("composite of non-composable arrows");
  return Arrow{f.src, g.tgt, compose(f.src, f.tgt, g.tgt, g.elem, f.elem)};
}

Arrow Quantaloid::lifting(const Arrow& g, const Arrow& d) const {
  if (g.tgt != d.tgt) throw StructuralError("lifting needs arrows with a common target");
  return Arrow{d.src, g.src, lift(d.src, g.src, g.tgt, g.elem, d.elem)};
}

Arrow Quantaloid::extension(const Arrow& f, const Arrow& d) const {
  if (f.src != d.src) throw StructuralError("extension needs arrows with a common source");
  return Arrow{f.tgt, d.tgt, extend(f.src, f.tgt, d.tgt, d.elem, f.elem)};
}

Arrow Quantaloid::arrow(std::string_view src, std::string_view tgt, std::string_view elem) const {
  ObjectId a = object_index(src);
  ObjectId b = object_index(tgt);
  return Arrow{a, b, hom(a, b).index_of(elem)};
}

bool Quantaloid::is_zero_object(ObjectId a) const { return identity(a) == hom(a, a).bottom(); }

std::string Quantaloid::arrow_label(ObjectId a, ObjectId b, ElemId e) const {
  if (object_count() == 1) return hom(a, b).name(e);
  return hom(a, b).name(e) + ":" + object_name(a) + "->" + object_name(b);
}

bool operator==(const Quantaloid& a, const Quantaloid& b) {
  const auto& x = a.data_;
  const auto& y = b.data_;
  return x.objects == y.objects && x.homs == y.homs && x.comp == y.comp && x.ids == y.ids && x.inv == y.inv;
}

// ---------------------------------------------------------------- builders

Quantaloid make_quantale(std::vector<std::string> names, const std::function<bool(int, int)>& leq,
                         const std::function<int(int, int)>& mult, int unit, bool identity_involution) {
  const int n = static_cast<int>(names.size());
  QuantaloidData data;
  data.objects = {"*"};
  data.homs = {HomLattice::from_predicate(std::move(names), leq)};
  std::vector<ElemId> table(static_cast<size_t>(n) * n);
  for (int g = 0; g < n; ++g) {
    for (int f = 0; f < n; ++f) table[g * n + f] = mult(g, f);
  }
  data.comp = {std::move(table)};
  data.ids = {unit};
  if (identity_involution) {
    std::vector<ElemId> id(n);
    std::iota(id.begin(), id.end(), 0);
    data.inv = std::vector<std::vector<ElemId>>{id};
  }
  return Quantaloid(std::move(data));
}

Quantaloid with_identity_involution(const Quantaloid& q) {
  QuantaloidData data = q.data();
  const int n = q.object_count();
  std::vector<std::vector<ElemId>> inv(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (ElemId f = 0; f < q.hom(a, b).size(); ++f) {
        auto partner = q.hom(b, a).find(q.hom(a, b).name(f));
        if (!partner) {
          throw StructuralError("identity involution: \"" + q.hom(a, b).name(f) + "\" has no partner in hom(" +
                                q.object_name(b) + "," + q.object_name(a) + ")");
        }
        inv[a * n + b].push_back(*partner);
      }
    }
  }
  data.inv = std::move(inv);
  return Quantaloid(std::move(data));
}

Quantaloid without_involution(const Quantaloid& q) {
  QuantaloidData data = q.data();
  data.inv.reset();
  return Quantaloid(std::move(data));
}

Quantaloid full_subquantaloid(const Quantaloid& q, const std::vector<ObjectId>& objects) {
  const int m = static_cast<int>(objects.size());
  const int n = q.object_count();
  QuantaloidData data;
  for (ObjectId a : objects) data.objects.push_back(q.object_name(a));
  data.homs.resize(static_cast<size_t>(m) * m);
  data.comp.resize(static_cast<size_t>(m) * m * m);
  if (q.has_involution()) data.inv.emplace(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    data.ids.push_back(q.identity(objects[i]));
    for (int j = 0; j < m; ++j) {
      data.homs[i * m + j] = q.hom(objects[i], objects[j]);
      if (q.has_involution()) (*data.inv)[i * m + j] = (*q.data().inv)[objects[i] * n + objects[j]];
      for (int k = 0; k < m; ++k) {
        data.comp[(i * m + j) * m + k] = q.data().comp[(objects[i] * n + objects[j]) * n + objects[k]];
      }
    }
  }
  return Quantaloid(std::move(data));
}

// ---------------------------------------------------------------- validation

namespace {

std::string hom_label(const Quantaloid& q, ObjectId a, ObjectId b) {
  return "hom(" + q.object_name(a) + "," + q.object_name(b) + ")";
}

std::optional<Witness> poset_violation(const Quantaloid& q) {
  const int n = q.object_count();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const HomLattice& h = q.hom(a, b);
      if (h.is_poset()) continue;
      const int m = h.size();
      for (int i = 0; i < m; ++i) {
        if (!h.le(i, i)) return Witness{{"hom", hom_label(q, a, b)}, {"reflexivity", h.name(i)}};
        for (int j = 0; j < m; ++j) {
          if (i != j && h.le(i, j) && h.le(j, i)) {
            return Witness{{"hom", hom_label(q, a, b)}, {"antisymmetry", h.name(i)}, {"and", h.name(j)}};
          }
          for (int k = 0; k < m; ++k) {
            if (h.le(i, j) && h.le(j, k) && !h.le(i, k)) {
              return Witness{{"hom", hom_label(q, a, b)},
                             {"transitivity", h.name(i)},
                             {"via", h.name(j)},
                             {"to", h.name(k)}};
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Witness> lattice_violation(const Quantaloid& q) {
  const int n = q.object_count();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const HomLattice& h = q.hom(a, b);
      if (h.is_lattice()) continue;
      const int m = h.size();
      if (m == 0) return Witness{{"hom", hom_label(q, a, b)}, {"missing", "bottom (empty hom)"}};
      bool has_bottom = false;
      for (int i = 0; i < m && !has_bottom; ++i) {
        bool below = true;
        for (int j = 0; j < m; ++j) below = below && h.le(i, j);
        has_bottom = below;
      }
      if (!has_bottom) return Witness{{"hom", hom_label(q, a, b)}, {"missing", "bottom"}};
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
          bool found = false;
          for (int u = 0; u < m && !found; ++u) {
            if (!h.le(i, u) || !h.le(j, u)) continue;
            bool least = true;
            for (int w = 0; w < m; ++w) {
              if (h.le(i, w) && h.le(j, w) && !h.le(u, w)) least = false;
            }
            found = least;
          }
          if (!found) return Witness{{"hom", hom_label(q, a, b)}, {"no-join-of", h.name(i)}, {"and", h.name(j)}};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

PropertyReport validate_quantaloid(const Quantaloid& q) {
  PropertyReport report;
  const int n = q.object_count();

  if (auto w = poset_violation(q)) {
    report.fail("hom-poset", *w);
    return report;
  }
  report.pass("hom-poset");
  if (auto w = lattice_violation(q)) {
    report.fail("hom-lattice", *w, "composition laws not checked");
    return report;
  }
  report.pass("hom-lattice");

  auto lbl = [&](ObjectId a, ObjectId b, ElemId e) { return q.arrow_label(a, b, e); };

  // associativity
  {
    std::optional<Witness> bad;
    for (int a = 0; a < n && !bad; ++a)
      for (int b = 0; b < n && !bad; ++b)
        for (int c = 0; c < n && !bad; ++c)
          for (int d = 0; d < n && !bad; ++d)
            for (ElemId f = 0; f < q.hom(a, b).size() && !bad; ++f)
              for (ElemId g = 0; g < q.hom(b, c).size() && !bad; ++g)
                for (ElemId h = 0; h < q.hom(c, d).size() && !bad; ++h) {
                  ElemId left = q.compose(a, c, d, h, q.compose(a, b, c, g, f));
                  ElemId right = q.compose(a, b, d, q.compose(b, c, d, h, g), f);
                  if (left != right) {
                    bad = Witness{{"f", lbl(a, b, f)},
                                  {"g", lbl(b, c, g)},
                                  {"h", lbl(c, d, h)},
                                  {"h(gf)", lbl(a, d, left)},
                                  {"(hg)f", lbl(a, d, right)}};
                  }
                }
    if (bad) report.fail("associativity", *bad);
    else report.pass("associativity");
  }

  // unit laws
  {
    std::optional<Witness> bad;
    for (int a = 0; a < n && !bad; ++a)
      for (int b = 0; b < n && !bad; ++b)
        for (ElemId f = 0; f < q.hom(a, b).size() && !bad; ++f) {
          ElemId left = q.compose(a, b, b, q.identity(b), f);
          ElemId right = q.compose(a, a, b, f, q.identity(a));
          if (left != f) bad = Witness{{"f", lbl(a, b, f)}, {"side", "left"}, {"1f", lbl(a, b, left)}};
          else if (right != f) bad = Witness{{"f", lbl(a, b, f)}, {"side", "right"}, {"f1", lbl(a, b, right)}};
        }
    if (bad) report.fail("unit-laws", *bad);
    else report.pass("unit-laws");
  }

  // order preservation, binary joins and bottom, in each variable
  {
    std::optional<Witness> mono, joins, bottom;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          const HomLattice& hf = q.hom(a, b);
          const HomLattice& hg = q.hom(b, c);
          const HomLattice& hr = q.hom(a, c);
          for (ElemId g = 0; g < hg.size(); ++g) {
            if (!bottom && q.compose(a, b, c, g, hf.bottom()) != hr.bottom()) {
              bottom = Witness{{"g", lbl(b, c, g)}, {"side", "right argument"}, {"g0", lbl(a, c, q.compose(a, b, c, g, hf.bottom()))}};
            }
            for (ElemId f1 = 0; f1 < hf.size(); ++f1)
              for (ElemId f2 = 0; f2 < hf.size(); ++f2) {
                ElemId gf1 = q.compose(a, b, c, g, f1);
                ElemId gf2 = q.compose(a, b, c, g, f2);
                if (!mono && hf.le(f1, f2) && !hr.le(gf1, gf2)) {
                  mono = Witness{{"g", lbl(b, c, g)}, {"f1", lbl(a, b, f1)}, {"f2", lbl(a, b, f2)}};
                }
                if (!joins && q.compose(a, b, c, g, hf.join(f1, f2)) != hr.join(gf1, gf2)) {
                  joins = Witness{{"g", lbl(b, c, g)}, {"f1", lbl(a, b, f1)}, {"f2", lbl(a, b, f2)}};
                }
              }
          }
          for (ElemId f = 0; f < hf.size(); ++f) {
            if (!bottom && q.compose(a, b, c, hg.bottom(), f) != hr.bottom()) {
              bottom = Witness{{"f", lbl(a, b, f)}, {"side", "left argument"}, {"0f", lbl(a, c, q.compose(a, b, c, hg.bottom(), f))}};
            }
            for (ElemId g1 = 0; g1 < hg.size(); ++g1)
              for (ElemId g2 = 0; g2 < hg.size(); ++g2) {
                ElemId g1f = q.compose(a, b, c, g1, f);
                ElemId g2f = q.compose(a, b, c, g2, f);
                if (!mono && hg.le(g1, g2) && !hr.le(g1f, g2f)) {
                  mono = Witness{{"f", lbl(a, b, f)}, {"g1", lbl(b, c, g1)}, {"g2", lbl(b, c, g2)}};
                }
                if (!joins && q.compose(a, b, c, hg.join(g1, g2), f) != hr.join(g1f, g2f)) {
                  joins = Witness{{"f", lbl(a, b, f)}, {"g1", lbl(b, c, g1)}, {"g2", lbl(b, c, g2)}};
                }
              }
          }
        }
    if (mono) report.fail("composition-monotone", *mono);
    else report.pass("composition-monotone");
    if (joins) report.fail("composition-preserves-joins", *joins);
    else report.pass("composition-preserves-joins");
    if (bottom) report.fail("composition-preserves-bottom", *bottom);
    else report.pass("composition-preserves-bottom");
  }

  if (q.has_involution()) {
    std::optional<Witness> order, twice, anti;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const HomLattice& h = q.hom(a, b);
        for (ElemId f = 0; f < h.size(); ++f) {
          if (!twice && q.involute(b, a, q.involute(a, b, f)) != f) twice = Witness{{"f", lbl(a, b, f)}};
          for (ElemId f2 = 0; f2 < h.size(); ++f2) {
            if (!order && h.le(f, f2) && !q.hom(b, a).le(q.involute(a, b, f), q.involute(a, b, f2))) {
              order = Witness{{"f1", lbl(a, b, f)}, {"f2", lbl(a, b, f2)}};
            }
          }
        }
      }
    for (int a = 0; a < n && !anti; ++a)
      for (int b = 0; b < n && !anti; ++b)
        for (int c = 0; c < n && !anti; ++c)
          for (ElemId f = 0; f < q.hom(a, b).size() && !anti; ++f)
            for (ElemId g = 0; g < q.hom(b, c).size() && !anti; ++g) {
              ElemId left = q.involute(a, c, q.compose(a, b, c, g, f));
              ElemId right = q.compose(c, b, a, q.involute(a, b, f), q.involute(b, c, g));
              if (left != right) anti = Witness{{"f", lbl(a, b, f)}, {"g", lbl(b, c, g)}};
            }
    if (order) report.fail("involution-monotone", *order);
    else report.pass("involution-monotone");
    if (twice) report.fail("involution-involutive", *twice);
    else report.pass("involution-involutive");
    if (anti) report.fail("involution-reverses-composition", *anti);
    else report.pass("involution-reverses-composition");
  }
  return report;
}

// ---------------------------------------------------------------- properties

namespace {

/// Pairs (d,e) of a hom-lattice: first those with d <= e (e ascending, d
/// descending), then the rest in index order. Failures on comparable pairs
/// are the more readable witnesses.
std::vector<std::pair<ElemId, ElemId>> ordered_pairs(const HomLattice& h) {
  std::vector<std::pair<ElemId, ElemId>> out;
  for (ElemId e = 0; e < h.size(); ++e)
    for (ElemId d = h.size() - 1; d >= 0; --d)
      if (h.le(d, e)) out.emplace_back(d, e);
  for (ElemId d = 0; d < h.size(); ++d)
    for (ElemId e = 0; e < h.size(); ++e)
      if (!h.le(d, e)) out.emplace_back(d, e);
  return out;
}

}  // namespace

std::optional<Witness> divisibility_violation(const Quantaloid& q, int condition) {
  const int n = q.object_count();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const HomLattice& h = q.hom(a, b);
      auto base = [&](ElemId d, ElemId e) {
        return Witness{{"A", q.object_name(a)}, {"B", q.object_name(b)}, {"d", h.name(d)}, {"e", h.name(e)}};
      };
      for (auto [d, e] : ordered_pairs(h)) {
        const bool below = h.le(d, e);
        const ElemId x = q.lift(a, a, b, e, d);     // e \ d in hom(a,a)
        const ElemId y = q.extend(a, b, b, d, e);   // d / e in hom(b,b)
        const ElemId ex = q.compose(a, a, b, e, x);
        const ElemId ye = q.compose(a, b, b, y, e);
        switch (condition) {
          case 1: {
            bool left = false, right = false;
            for (ElemId u = 0; u < q.hom(a, a).size() && !left; ++u) left = q.compose(a, a, b, e, u) == d;
            for (ElemId v = 0; v < q.hom(b, b).size() && !right; ++v) right = q.compose(a, b, b, v, e) == d;
            if (below != (left && right)) {
              Witness w = base(d, e);
              w.emplace_back("d<=e", below ? "true" : "false");
              w.emplace_back("factorizations", (left && right) ? "exist" : "missing");
              return w;
            }
            break;
          }
          case 2: {
            const bool both = ex == d && ye == d;
            if (below != both) {
              Witness w = base(d, e);
              w.emplace_back("e(e\\d)", h.name(ex));
              w.emplace_back("(d/e)e", h.name(ye));
              return w;
            }
            break;
          }
          case 3: {
            const ElemId de = h.meet(d, e);
            if (ex != de || ye != de) {
              Witness w = base(d, e);
              w.emplace_back("e(e\\d)", h.name(ex));
              w.emplace_back("d^e", h.name(de));
              w.emplace_back("(d/e)e", h.name(ye));
              return w;
            }
            break;
          }
          default:
            break;
        }
      }
      if (condition == 4) {
        for (ElemId e = 0; e < h.size(); ++e)
          for (ElemId f = h.size() - 1; f >= 0; --f) {
            const bool diag = is_diagonal(q, Arrow{a, b, e}, Arrow{a, b, e}, Arrow{a, b, f});
            if (diag != h.le(f, e)) {
              return Witness{{"A", q.object_name(a)},
                             {"B", q.object_name(b)},
                             {"e", h.name(e)},
                             {"f", h.name(f)},
                             {"diagonal", diag ? "true" : "false"}};
            }
          }
      }
      if (condition == 5) {
        for (auto [d, e] : ordered_pairs(h))
          for (ElemId f = h.size() - 1; f >= 0; --f) {
            const bool diag = is_diagonal(q, Arrow{a, b, d}, Arrow{a, b, e}, Arrow{a, b, f});
            if (diag != h.le(f, h.meet(d, e))) {
              Witness w = base(d, e);
              w.emplace_back("f", h.name(f));
              w.emplace_back("diagonal", diag ? "true" : "false");
              return w;
            }
          }
      }
    }
  if (condition < 1 || condition > 5) throw std::invalid_argument("divisibility condition must be 1..5");
  return std::nullopt;
}

bool is_divisible(const Quantaloid& q) { return !divisibility_violation(q, 3); }

bool is_integral(const Quantaloid& q) {
  for (int a = 0; a < q.object_count(); ++a) {
    if (q.identity(a) != q.hom(a, a).top()) return false;
  }
  return true;
}

bool is_commutative_quantale(const Quantaloid& q) {
  if (q.object_count() != 1) return false;
  const int m = q.hom(0, 0).size();
  for (ElemId f = 0; f < m; ++f)
    for (ElemId g = 0; g < m; ++g)
      if (q.compose(0, 0, 0, g, f) != q.compose(0, 0, 0, f, g)) return false;
  return true;
}

bool is_symmetric(const Quantaloid& q) {
  const int n = q.object_count();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!(q.hom(a, b) == q.hom(b, a))) return false;
  Quantaloid sym = with_identity_involution(q);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (ElemId f = 0; f < q.hom(a, b).size(); ++f)
          for (ElemId g = 0; g < q.hom(b, c).size(); ++g) {
            ElemId left = sym.involute(a, c, q.compose(a, b, c, g, f));
            ElemId right = q.compose(c, b, a, sym.involute(a, b, f), sym.involute(b, c, g));
            if (left != right) return false;
          }
  return true;
}

std::vector<ObjectId> zero_objects(const Quantaloid& q) {
  std::vector<ObjectId> out;
  for (int a = 0; a < q.object_count(); ++a) {
    if (q.is_zero_object(a)) out.push_back(a);
  }
  return out;
}

PropertyReport analyze_properties(const Quantaloid& q) {
  PropertyReport report;
  const int n = q.object_count();

  {
    std::optional<Witness> bad;
    for (int a = 0; a < n && !bad; ++a) {
      if (q.identity(a) != q.hom(a, a).top()) {
        bad = Witness{{"A", q.object_name(a)}, {"1_A", q.hom(a, a).name(q.identity(a))}, {"top", q.hom(a, a).name(q.hom(a, a).top())}};
      }
    }
    if (bad) report.fail("integral", *bad);
    else report.pass("integral");
  }

  for (int c = 1; c <= 5; ++c) {
    const std::string name = "divisible-" + std::to_string(c);
    if (auto w = divisibility_violation(q, c)) report.fail(name, *w);
    else report.pass(name);
  }

  {
    std::optional<Witness> bad;
    for (int a = 0; a < n && !bad; ++a)
      for (int b = 0; b < n && !bad; ++b) {
        const HomLattice& h = q.hom(a, b);
        for (ElemId x = 0; x < h.size() && !bad; ++x)
          for (ElemId y = 0; y < h.size() && !bad; ++y)
            for (ElemId z = 0; z < h.size() && !bad; ++z) {
              if (h.meet(x, h.join(y, z)) != h.join(h.meet(x, y), h.meet(x, z))) {
                bad = Witness{{"hom", hom_label(q, a, b)}, {"x", h.name(x)}, {"y", h.name(y)}, {"z", h.name(z)}};
              }
            }
      }
    if (bad) report.fail("locally-localic", *bad);
    else report.pass("locally-localic");
  }

  {
    std::optional<Witness> bad;
    for (int a = 0; a < n && !bad; ++a) {
      const HomLattice& h = q.hom(a, a);
      const ElemId one = q.identity(a);
      if (one == h.bottom()) {
        bad = Witness{{"A", q.object_name(a)}, {"1_A", "bottom"}};
        break;
      }
      for (ElemId f = 0; f < h.size() && !bad; ++f)
        for (ElemId g = 0; g < h.size() && !bad; ++g)
          if (h.le(one, h.join(f, g)) && !h.le(one, f) && !h.le(one, g)) {
            bad = Witness{{"A", q.object_name(a)}, {"f", h.name(f)}, {"g", h.name(g)}};
          }
    }
    if (bad) report.fail("identities-join-irreducible", *bad);
    else report.pass("identities-join-irreducible");
  }

  {
    std::optional<Witness> bad;
    for (int a = 0; a < n && !bad; ++a)
      for (int b = 0; b < n && !bad; ++b)
        if (!(q.hom(a, b) == q.hom(b, a))) bad = Witness{{"hom", hom_label(q, a, b)}, {"differs-from", hom_label(q, b, a)}};
    if (!bad) {
      Quantaloid sym = with_identity_involution(q);
      for (int a = 0; a < n && !bad; ++a)
        for (int b = 0; b < n && !bad; ++b)
          for (int c = 0; c < n && !bad; ++c)
            for (ElemId f = 0; f < q.hom(a, b).size() && !bad; ++f)
              for (ElemId g = 0; g < q.hom(b, c).size() && !bad; ++g) {
                ElemId left = sym.involute(a, c, q.compose(a, b, c, g, f));
                ElemId right = q.compose(c, b, a, sym.involute(a, b, f), sym.involute(b, c, g));
                if (left != right) {
                  bad = Witness{{"f", q.arrow_label(a, b, f)},
                                {"g", q.arrow_label(b, c, g)},
                                {"gf", q.arrow_label(a, c, q.compose(a, b, c, g, f))},
                                {"fg", q.arrow_label(c, a, right)}};
                }
              }
    }
    if (bad) report.fail("symmetric", *bad);
    else report.pass("symmetric");
  }

  {
    std::string list;
    for (ObjectId a : zero_objects(q)) list += (list.empty() ? "" : ",") + q.object_name(a);
    report.pass("zero-objects", "[" + list + "]");
  }
  return report;
}

// ---------------------------------------------------------------- Cauchy-bilaterality

namespace {

struct PairData {
  FamilyMember m;
  ElemId hyp;   // g o f in hom(x,x)
  ElemId conc;  // (g ^ f*) o (g* ^ f) in hom(x,x)
};

std::vector<PairData> composable_pairs(const Quantaloid& q, ObjectId x) {
  std::vector<PairData> out;
  for (int y = 0; y < q.object_count(); ++y) {
    const HomLattice& hxy = q.hom(x, y);
    const HomLattice& hyx = q.hom(y, x);
    for (ElemId f = 0; f < hxy.size(); ++f)
      for (ElemId g = 0; g < hyx.size(); ++g) {
        ElemId left = hyx.meet(g, q.involute(x, y, f));
        ElemId right = hxy.meet(q.involute(y, x, g), f);
        out.push_back(PairData{FamilyMember{y, f, g}, q.compose(x, y, x, g, f), q.compose(x, y, x, left, right)});
      }
  }
  return out;
}

void require_involution(const Quantaloid& q) {
  if (!q.has_involution()) throw PreconditionError("Cauchy-bilaterality needs an involution");
}

}  // namespace

bool family_violates_strong(const Quantaloid& q, ObjectId x, const std::vector<FamilyMember>& family) {
  const HomLattice& h = q.hom(x, x);
  ElemId hyp = h.bottom();
  ElemId conc = h.bottom();
  for (const auto& m : family) {
    hyp = h.join(hyp, q.compose(x, m.y, x, m.g, m.f));
    ElemId left = q.hom(m.y, x).meet(m.g, q.involute(x, m.y, m.f));
    ElemId right = q.hom(x, m.y).meet(q.involute(m.y, x, m.g), m.f);
    conc = h.join(conc, q.compose(x, m.y, x, left, right));
  }
  const ElemId one = q.identity(x);
  return h.le(one, hyp) && !h.le(one, conc);
}

Witness family_witness(const Quantaloid& q, ObjectId x, const std::vector<FamilyMember>& family) {
  Witness w{{"X", q.object_name(x)}};
  for (size_t i = 0; i < family.size(); ++i) {
    const auto& m = family[i];
    const std::string k = std::to_string(i + 1);
    w.emplace_back("f" + k, q.arrow_label(x, m.y, m.f));
    w.emplace_back("g" + k, q.arrow_label(m.y, x, m.g));
  }
  return w;
}

CauchyBilateralResult check_strong_cauchy_bilateral(const Quantaloid& q) {
  require_involution(q);
  const int n = q.object_count();
  // singleton families first: they make the most readable witnesses
  for (int x = 0; x < n; ++x) {
    const HomLattice& h = q.hom(x, x);
    for (const auto& p : composable_pairs(q, x)) {
      if (h.le(q.identity(x), p.hyp) && !h.le(q.identity(x), p.conc)) {
        return CauchyBilateralResult{false, true, x, {p.m}};
      }
    }
  }
  for (int x = 0; x < n; ++x) {
    const HomLattice& h = q.hom(x, x);
    const ElemId one = q.identity(x);
    const auto pairs = composable_pairs(q, x);
    for (ElemId v = 0; v < h.size(); ++v) {
      if (h.le(one, v)) continue;
      std::vector<FamilyMember> family;
      ElemId hyp = h.bottom();
      for (const auto& p : pairs) {
        if (h.le(p.conc, v)) {
          family.push_back(p.m);
          hyp = h.join(hyp, p.hyp);
        }
      }
      if (!h.le(one, hyp)) continue;
      for (size_t i = 0; i < family.size();) {
        auto trial = family;
        trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
        if (family_violates_strong(q, x, trial)) family = std::move(trial);
        else ++i;
      }
      return CauchyBilateralResult{false, true, x, family};
    }
  }
  return {};
}

CauchyBilateralResult check_strong_cauchy_bilateral_exhaustive(const Quantaloid& q, int max_pairs) {
  require_involution(q);
  for (int x = 0; x < q.object_count(); ++x) {
    const HomLattice& h = q.hom(x, x);
    const ElemId one = q.identity(x);
    const auto pairs = composable_pairs(q, x);
    const int m = static_cast<int>(pairs.size());
    if (m > max_pairs) {
      throw BoundExceeded("object " + q.object_name(x) + " has " + std::to_string(m) + " composable pairs (bound " +
                          std::to_string(max_pairs) + ")");
    }
    for (unsigned long mask = 1; mask < (1UL << m); ++mask) {
      ElemId hyp = h.bottom();
      ElemId conc = h.bottom();
      for (int i = 0; i < m; ++i) {
        if (mask & (1UL << i)) {
          hyp = h.join(hyp, pairs[i].hyp);
          conc = h.join(conc, pairs[i].conc);
        }
      }
      if (h.le(one, hyp) && !h.le(one, conc)) {
        CauchyBilateralResult r{false, true, x, {}};
        for (int i = 0; i < m; ++i)
          if (mask & (1UL << i)) r.family.push_back(pairs[i].m);
        return r;
      }
    }
  }
  return {};
}

CauchyBilateralResult check_cauchy_bilateral(const Quantaloid& q, int cap) {
  require_involution(q);
  if (cap < 1) throw std::invalid_argument("family-size cap must be at least 1");
  CauchyBilateralResult result;
  for (int x = 0; x < q.object_count(); ++x) {
    const HomLattice& h = q.hom(x, x);
    const ElemId one = q.identity(x);
    const auto pairs = composable_pairs(q, x);
    const int m = static_cast<int>(pairs.size());
    // the first two hypotheses are pairwise conditions, so admissible
    // families are exactly the cliques of this compatibility relation
    std::vector<char> compat(static_cast<size_t>(m) * m);
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        const auto& pj = pairs[j];
        const auto& pk = pairs[k];
        const bool first = q.hom(x, pk.m.y).le(q.compose(x, x, pk.m.y, pk.m.f, pj.hyp), pk.m.f);
        const bool second = q.hom(pk.m.y, x).le(q.compose(pk.m.y, x, x, pj.hyp, pk.m.g), pk.m.g);
        compat[j * m + k] = first && second;
      }
    auto ok_pair = [&](int j, int k) { return compat[j * m + k] && compat[k * m + j]; };

    std::vector<int> chosen;
    std::optional<std::vector<int>> failing;
    bool truncated = false;
    // depth-limited search, by increasing family size
    std::function<void(int, int, ElemId, ElemId)> grow = [&](int start, int size, ElemId hyp, ElemId conc) {
      if (failing) return;
      if (static_cast<int>(chosen.size()) == size) {
        if (h.le(one, hyp) && !h.le(one, conc)) failing = chosen;
        return;
      }
      for (int i = start; i < m && !failing; ++i) {
        if (!compat[i * m + i]) continue;
        bool fits = true;
        for (int c : chosen) fits = fits && ok_pair(c, i);
        if (!fits) continue;
        chosen.push_back(i);
        grow(i + 1, size, h.join(hyp, pairs[i].hyp), h.join(conc, pairs[i].conc));
        chosen.pop_back();
      }
    };
    for (int size = 1; size <= std::min(cap, m) && !failing; ++size) grow(0, size, h.bottom(), h.bottom());
    if (failing) {
      CauchyBilateralResult r{false, true, x, {}};
      for (int i : *failing) r.family.push_back(pairs[i].m);
      return r;
    }
    if (cap < m) {
      // exact anyway when no admissible family of size cap extends further
      std::function<void(int)> probe = [&](int start) {
        if (truncated) return;
        if (static_cast<int>(chosen.size()) == cap) {
          for (int i = 0; i < m && !truncated; ++i) {
            if (!compat[i * m + i] || std::find(chosen.begin(), chosen.end(), i) != chosen.end()) continue;
            bool fits = true;
            for (int c : chosen) fits = fits && ok_pair(c, i);
            truncated = fits;
          }
          return;
        }
        for (int i = start; i < m && !truncated; ++i) {
          if (!compat[i * m + i]) continue;
          bool fits = true;
          for (int c : chosen) fits = fits && ok_pair(c, i);
          if (!fits) continue;
          chosen.push_back(i);
          probe(i + 1);
          chosen.pop_back();
        }
      };
      probe(0);
      if (truncated) result.exact = false;
    }
  }
  return result;
}

Quantaloid non_zero_part(const Quantaloid& q) {
  std::vector<ObjectId> keep;
  for (int a = 0; a < q.object_count(); ++a) {
    if (!q.is_zero_object(a)) keep.push_back(a);
  }
  return full_subquantaloid(q, keep);
}

Quantaloid underlying_locale(const Quantaloid& q) {
  if (q.object_count() != 1) throw PreconditionError("underlying locale needs a one-object quantale");
  if (!is_commutative_quantale(q)) throw PreconditionError("underlying locale needs a commutative quantale");
  for (int c = 1; c <= 5; ++c) {
    if (auto w = divisibility_violation(q, c)) {
      std::string detail;
      for (const auto& [k, v] : *w) detail += " " + k + "=" + v;
      throw PreconditionError("underlying locale needs a divisible quantale; condition " + std::to_string(c) +
                              " fails at" + detail);
    }
  }
  const HomLattice& h = q.hom(0, 0);
  QuantaloidData data = q.data();
  auto& table = data.comp[0];
  for (ElemId g = 0; g < h.size(); ++g)
    for (ElemId f = 0; f < h.size(); ++f) table[g * h.size() + f] = h.meet(g, f);
  return Quantaloid(std::move(data));
}

}  // namespace qcat
