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
#include <vector>

#include "qcat/core/enriched.hpp"

namespace qcat {

/// A distributor from the one-object category of type `type` into C:
/// values[x] lies in base hom(type, type of x).
struct Presheaf {
  ObjectId type = 0;
  std::vector<ElemId> values;
  friend bool operator==(const Presheaf&, const Presheaf&) = default;
};

inline constexpr std::uint64_t kDefaultPresheafBound = 1'000'000;

EnrichedDistributor as_distributor(const EnrichedCategory& c, const Presheaf& p);
Presheaf representable(const EnrichedCategory& c, int x);
bool is_presheaf(const EnrichedCategory& c, const Presheaf& p);
/// All presheaves of every type, ordered by type then lexicographically.
/// Throws BoundExceeded when the candidate count for some type exceeds bound.
std::vector<Presheaf> enumerate_presheaves(const EnrichedCategory& c, std::uint64_t bound = kDefaultPresheafBound);
/// psi \ phi as a single element of base hom(type phi, type psi).
ElemId presheaf_hom(const EnrichedCategory& c, const Presheaf& psi, const Presheaf& phi);
/// The category with the given presheaves as objects.
EnrichedCategory presheaf_category_on(const EnrichedCategory& c, const std::vector<Presheaf>& objects);
EnrichedCategory presheaf_category(const EnrichedCategory& c, std::uint64_t bound = kDefaultPresheafBound);
std::string presheaf_name(const EnrichedCategory& c, const Presheaf& p);

/// Yoneda into presheaf_category(c, bound).
EnrichedFunctor yoneda(const EnrichedCategory& c, std::uint64_t bound = kDefaultPresheafBound);

/// phi is left adjoint to its canonical candidate phi \ id_C.
bool is_cauchy_presheaf(const EnrichedCategory& c, const Presheaf& p);
std::vector<Presheaf> cauchy_presheaves(const EnrichedCategory& c, std::uint64_t bound = kDefaultPresheafBound);
EnrichedCategory cauchy_completion(const EnrichedCategory& c, std::uint64_t bound = kDefaultPresheafBound);
bool is_cauchy_complete(const EnrichedCategory& c, std::uint64_t bound = kDefaultPresheafBound);

}  // namespace qcat
