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

#include "support.hpp"

#include <algorithm>
#include <stdexcept>

namespace qcat::test {

std::vector<CorpusEntry> quantaloid_corpus() {
  std::vector<CorpusEntry> out;
  for (const auto& name : quantaloid_fixture_names()) {
    if (name == "dl3") continue;
    out.push_back({name, quantaloid_fixture(name)});
  }
  const std::size_t base_count = out.size();
  for (std::size_t i = 0; i < base_count; ++i)
    out.push_back({"D(" + out[i].name + ")", diagonal_quantaloid(out[i].q)});
  return out;
}

void saturate(const Quantaloid& base, const std::vector<ObjectId>& types, std::vector<ElemId>& homs) {
  const int n = static_cast<int>(types.size());
  for (int x = 0; x < n; ++x) {
    const ObjectId t = types[x];
    homs[x * n + x] = base.hom(t, t).join(homs[x * n + x], base.identity(t));
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          const ElemId c = base.compose(types[z], types[y], types[x], homs[x * n + y], homs[y * n + z]);
          const HomLattice& lat = base.hom(types[z], types[x]);
          const ElemId j = lat.join(homs[x * n + z], c);
          if (j != homs[x * n + z]) {
            homs[x * n + z] = j;
            changed = true;
          }
        }
  }
}

EnrichedCategory random_category(const BasePtr& base, int size, std::mt19937& rng) {
  std::uniform_int_distribution<int> pick_type(0, base->object_count() - 1);
  std::vector<ObjectId> types(size);
  for (auto& t : types) t = pick_type(rng);
  std::vector<ElemId> homs(size * size);
  for (int x = 0; x < size; ++x)
    for (int y = 0; y < size; ++y) {
      const int m = base->hom(types[y], types[x]).size();
      // bias towards the bottom so saturation does not always reach the top
      std::uniform_int_distribution<int> pick(0, 2 * m - 1);
      const int r = pick(rng);
      homs[x * size + y] = r < m ? r : base->hom(types[y], types[x]).bottom();
    }
  saturate(*base, types, homs);
  std::vector<std::string> names;
  for (int i = 0; i < size; ++i) names.push_back("o" + std::to_string(i));
  return EnrichedCategory(base, std::move(names), std::move(types), std::move(homs));
}

std::vector<EnrichedCategory> all_categories(const BasePtr& base, int size) {
  if (base->object_count() != 1) throw std::invalid_argument("all_categories needs a one-object base");
  const int m = base->hom(0, 0).size();
  const int cells = size * size;
  std::vector<ElemId> homs(cells, 0);
  std::vector<std::string> names;
  for (int i = 0; i < size; ++i) names.push_back("o" + std::to_string(i));
  const std::vector<ObjectId> types(size, 0);
  std::vector<EnrichedCategory> out;
  while (true) {
    EnrichedCategory c(base, names, types, homs);
    if (validate_category(c).ok()) out.push_back(std::move(c));
    int i = cells - 1;
    while (i >= 0 && homs[i] == m - 1) homs[i--] = 0;
    if (i < 0) break;
    ++homs[i];
  }
  return out;
}

std::vector<EnrichedFunctor> all_functors(const EnrichedCategory& dom, const EnrichedCategory& cod) {
  std::vector<EnrichedFunctor> out;
  if (cod.size() == 0) return out;
  std::vector<int> map(dom.size(), 0);
  while (true) {
    EnrichedFunctor f{dom, cod, map};
    if (validate_functor(f).ok()) out.push_back(std::move(f));
    int i = dom.size() - 1;
    while (i >= 0 && map[i] == cod.size() - 1) map[i--] = 0;
    if (i < 0) break;
    ++map[i];
  }
  return out;
}

void triangle_close(std::vector<ExtValue>& dist, int size) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int z = 0; z < size; ++z)
      for (int y = 0; y < size; ++y)
        for (int x = 0; x < size; ++x) {
          const ExtValue t = tri(dist[z * size + y], dist[y * size + y], dist[y * size + x]);
          if (t < dist[z * size + x]) {
            dist[z * size + x] = t;
            changed = true;
          }
        }
  }
}

PartialMetricSpace random_pms(int size, int den, int cap, std::mt19937& rng, int infinite_points) {
  const int total = size + infinite_points;
  std::uniform_int_distribution<int> pick(0, cap * den - 1);
  std::vector<ExtValue> dist(total * total, ExtValue::infinity());
  for (int i = 0; i < size; ++i) dist[i * total + i] = ExtValue(Rational(pick(rng), den));
  for (int y = 0; y < size; ++y)
    for (int x = 0; x < size; ++x) {
      if (x == y) continue;
      const ExtValue floor = max(dist[y * total + y], dist[x * total + x]);
      const Rational v(pick(rng), den);
      dist[y * total + x] = max(floor, ExtValue(v));
    }
  triangle_close(dist, total);
  std::vector<std::string> names;
  for (int i = 0; i < total; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  return PartialMetricSpace(std::move(names), std::move(dist));
}

PartialMetricSpace ab_space() { return PartialMetricSpace({"a", "b"}, {0, 1, 1, 1}); }

PartialMetricSpace all_ones() { return PartialMetricSpace({"a", "b"}, {1, 1, 1, 1}); }

BasePtr dl3_base() {
  static const BasePtr base = share(diagonal_quantaloid(quantaloid_fixture("l3")));
  return base;
}

std::vector<EnrichedCategory> dl3_categories() {
  const BasePtr base = dl3_base();
  const ObjectId t0 = base->object_index("0");
  const ObjectId t1 = base->object_index("1");
  const ObjectId t2 = base->object_index("2");
  std::vector<EnrichedCategory> out;
  out.push_back(unit_category(base, t0, "u"));

  {
    std::vector<ObjectId> types{t0, t1};
    std::vector<ElemId> homs(4);
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y) homs[x * 2 + y] = base->hom(types[y], types[x]).bottom();
    // C(x,y): 1 -> 0 at the element named "1"
    homs[0 * 2 + 1] = base->hom(t1, t0).index_of("1");
    saturate(*base, types, homs);
    out.emplace_back(base, std::vector<std::string>{"x", "y"}, types, homs);
  }
  {
    std::vector<ObjectId> types{t0, t1, t2};
    std::vector<ElemId> homs(9);
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) homs[x * 3 + y] = base->hom(types[y], types[x]).bottom();
    homs[1 * 3 + 0] = base->hom(t0, t1).index_of("1");
    homs[0 * 3 + 1] = base->hom(t1, t0).index_of("1");
    saturate(*base, types, homs);
    out.emplace_back(base, std::vector<std::string>{"x", "y", "z"}, types, homs);
  }
  return out;
}

Subset subset_from_mask(int n, std::uint32_t mask) {
  Subset s(n, false);
  for (int i = 0; i < n; ++i) s[i] = (mask >> i) & 1U;
  return s;
}

}  // namespace qcat::test
