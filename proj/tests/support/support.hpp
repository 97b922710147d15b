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

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qcat/core/diagonals.hpp"
#include "qcat/core/enriched.hpp"
#include "qcat/core/fixtures.hpp"
#include "qcat/core/parmet.hpp"
#include "qcat/core/presheaf.hpp"
#include "qcat/core/quantaloid.hpp"

namespace qcat::test {

/// Quantaloid fixtures plus the diagonal quantaloid of each.
struct CorpusEntry {
  std::string name;
  Quantaloid q;
};
std::vector<CorpusEntry> quantaloid_corpus();

/// Joins identities and composites into the homs until the category laws hold.
void saturate(const Quantaloid& base, const std::vector<ObjectId>& types, std::vector<ElemId>& homs);

/// A valid category with random types and saturated random homs.
EnrichedCategory random_category(const BasePtr& base, int size, std::mt19937& rng);

/// Every valid category on `size` objects over a one-object base (the
/// single type), in lexicographic order of the hom vector.
std::vector<EnrichedCategory> all_categories(const BasePtr& base, int size);

/// Every valid functor between two categories on the same base.
std::vector<EnrichedFunctor> all_functors(const EnrichedCategory& dom, const EnrichedCategory& cod);

/// Self-distances and distances multiples of 1/den below cap, closed under
/// the triangle inequality. With infinite_points > 0 that many extra points
/// at distance infinity are appended.
PartialMetricSpace random_pms(int size, int den, int cap, std::mt19937& rng, int infinite_points = 0);

/// Shortest-path style closure: lowers p(z,x) to p(z,y) - p(y,y) + p(y,x).
void triangle_close(std::vector<ExtValue>& dist, int size);

/// p(a,a) = 0, p(b,b) = 1, p(a,b) = p(b,a) = 1.
PartialMetricSpace ab_space();
/// Every distance 1 on two points.
PartialMetricSpace all_ones();

/// Categories over the diagonals of L3: 1 on the object "0", a two-object
/// category of types 0 and 1, and a three-object category with a type-2 object.
BasePtr dl3_base();
std::vector<EnrichedCategory> dl3_categories();

Subset subset_from_mask(int n, std::uint32_t mask);

}  // namespace qcat::test
