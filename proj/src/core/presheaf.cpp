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

#include "qcat/core/presheaf.hpp"

#include <functional>

#include "qcat/core/errors.hpp"

namespace qcat {

EnrichedDistributor as_distributor(const EnrichedCategory& c, const Presheaf& p) {
  return EnrichedDistributor{unit_category(c.base_ptr(), p.type), c, p.values};
}

Presheaf representable(const EnrichedCategory& c, int x) {
  Presheaf p{c.type(x), {}};
  for (int z = 0; z < c.size(); ++z) p.values.push_back(c.hom(z, x));
  return p;
}

bool is_presheaf(const EnrichedCategory& c, const Presheaf& p) {
  if (static_cast<int>(p.values.size()) != c.size()) return false;
  const Quantaloid& q = c.base();
  for (int x = 0; x < c.size(); ++x)
    if (p.values[x] < 0 || p.values[x] >= q.hom(p.type, c.type(x)).size()) return false;
  for (int y = 0; y < c.size(); ++y)
    for (int x = 0; x < c.size(); ++x) {
      const ElemId comp = q.compose(p.type, c.type(x), c.type(y), c.hom(y, x), p.values[x]);
      if (!q.hom(p.type, c.type(y)).le(comp, p.values[y])) return false;
    }
  return true;
}

std::vector<Presheaf> enumerate_presheaves(const EnrichedCategory& c, std::uint64_t bound) {
  const Quantaloid& q = c.base();
  const int n = c.size();
  std::vector<Presheaf> out;
  for (ObjectId t = 0; t < q.object_count(); ++t) {
    std::uint64_t candidates = 1;
    for (int x = 0; x < n; ++x) {
      candidates *= static_cast<std::uint64_t>(q.hom(t, c.type(x)).size());
      if (candidates > bound) {
        throw BoundExceeded("presheaf enumeration of type " + q.object_name(t) + " exceeds bound " +
                            std::to_string(bound));
      }
    }
    Presheaf p{t, std::vector<ElemId>(n, 0)};
    std::function<void(int)> fill = [&](int k) {
      if (k == n) {
        out.push_back(p);
        return;
      }
      for (ElemId v = 0; v < q.hom(t, c.type(k)).size(); ++v) {
        p.values[k] = v;
        bool fits = true;
        for (int j = 0; j <= k && fits; ++j) {
          // C(k,j) o p(j) <= p(k) and C(j,k) o p(k) <= p(j)
          fits = q.hom(t, c.type(k)).le(q.compose(t, c.type(j), c.type(k), c.hom(k, j), p.values[j]), p.values[k]) &&
                 q.hom(t, c.type(j)).le(q.compose(t, c.type(k), c.type(j), c.hom(j, k), p.values[k]), p.values[j]);
        }
        if (fits) fill(k + 1);
      }
    };
    fill(0);
  }
  return out;
}

ElemId presheaf_hom(const EnrichedCategory& c, const Presheaf& psi, const Presheaf& phi) {
  const Quantaloid& q = c.base();
  const HomLattice& h = q.hom(phi.type, psi.type);
  ElemId acc = h.top();
  for (int z = 0; z < c.size(); ++z) {
    acc = h.meet(acc, q.lift(phi.type, psi.type, c.type(z), psi.values[z], phi.values[z]));
  }
  return acc;
}

std::string presheaf_name(const EnrichedCategory& c, const Presheaf& p) {
  const Quantaloid& q = c.base();
  std::string out = "[";
  for (int x = 0; x < c.size(); ++x) {
    if (x) out += ",";
    out += q.hom(p.type, c.type(x)).name(p.values[x]);
  }
  out += "]";
  if (q.object_count() != 1) out += "@" + q.object_name(p.type);
  return out;
}

EnrichedCategory presheaf_category_on(const EnrichedCategory& c, const std::vector<Presheaf>& objects) {
  std::vector<std::string> names;
  std::vector<ObjectId> types;
  std::vector<ElemId> homs;
  for (const auto& p : objects) {
    names.push_back(presheaf_name(c, p));
    types.push_back(p.type);
  }
  for (const auto& psi : objects)
    for (const auto& phi : objects) homs.push_back(presheaf_hom(c, psi, phi));
  return EnrichedCategory(c.base_ptr(), std::move(names), std::move(types), std::move(homs));
}

EnrichedCategory presheaf_category(const EnrichedCategory& c, std::uint64_t bound) {
  return presheaf_category_on(c, enumerate_presheaves(c, bound));
}

EnrichedFunctor yoneda(const EnrichedCategory& c, std::uint64_t bound) {
  const auto all = enumerate_presheaves(c, bound);
  EnrichedFunctor f{c, presheaf_category_on(c, all), {}};
  for (int x = 0; x < c.size(); ++x) {
    const Presheaf r = representable(c, x);
    int found = -1;
    for (size_t k = 0; k < all.size() && found < 0; ++k)
      if (all[k] == r) found = static_cast<int>(k);
    if (found < 0) throw StructuralError("representable presheaf missing; is the category valid?");
    f.map.push_back(found);
  }
  return f;
}

bool is_cauchy_presheaf(const EnrichedCategory& c, const Presheaf& p) {
  const EnrichedDistributor phi = as_distributor(c, p);
  const EnrichedDistributor candidate = dist_lift(phi, dist_id(c));
  return check_adjoint(phi, candidate);
}

std::vector<Presheaf> cauchy_presheaves(const EnrichedCategory& c, std::uint64_t bound) {
  std::vector<Presheaf> out;
  for (auto& p : enumerate_presheaves(c, bound))
    if (is_cauchy_presheaf(c, p)) out.push_back(std::move(p));
  return out;
}

EnrichedCategory cauchy_completion(const EnrichedCategory& c, std::uint64_t bound) {
  return presheaf_category_on(c, cauchy_presheaves(c, bound));
}

bool is_cauchy_complete(const EnrichedCategory& c, std::uint64_t bound) {
  for (const auto& p : cauchy_presheaves(c, bound)) {
    bool represented = false;
    for (int x = 0; x < c.size() && !represented; ++x) represented = representable(c, x) == p;
    if (!represented) return false;
  }
  return true;
}

}  // namespace qcat
