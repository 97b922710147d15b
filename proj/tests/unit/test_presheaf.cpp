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

#include <random>

#include "doctest.h"
#include "qcat/core/errors.hpp"
#include "qcat/core/fixtures.hpp"
#include "qcat/core/presheaf.hpp"
#include "support.hpp"

using namespace qcat;

TEST_CASE("presheaves on a one-object category over Q2") {
  const BasePtr q2 = share(quantaloid_fixture("q2"));
  const EnrichedCategory c = unit_category(q2, 0);
  const auto all = enumerate_presheaves(c);
  REQUIRE(all.size() == 2);
  const EnrichedCategory pc = presheaf_category(c);
  CHECK(validate_category(pc).ok());
  const HomLattice& h = q2->hom(0, 0);
  for (const auto& psi : all)
    for (const auto& phi : all) {
      const bool subset = h.le(psi.values[0], phi.values[0]);
      CHECK((presheaf_hom(c, psi, phi) == h.index_of("1")) == subset);
    }
  CHECK(is_skeletal(pc));
}

TEST_CASE("Yoneda on random categories") {
  std::mt19937 rng(5);
  for (const char* name : {"q2", "c3", "l3", "dl3"}) {
    const BasePtr base = share(quantaloid_fixture(name));
    for (int round = 0; round < 6; ++round) {
      const EnrichedCategory c = test::random_category(base, 2, rng);
      CAPTURE(name);
      const auto all = enumerate_presheaves(c);
      for (int x = 0; x < c.size(); ++x) {
        const Presheaf y = representable(c, x);
        CHECK(is_presheaf(c, y));
        CHECK(is_cauchy_presheaf(c, y));
        for (const auto& phi : all) {
          CHECK(presheaf_hom(c, y, phi) == phi.values[x]);
        }
      }
      const EnrichedFunctor yon = yoneda(c);
      CHECK(validate_functor(yon).ok());
      CHECK(is_fully_faithful(yon));
      CHECK(is_skeletal(yon.cod));
    }
  }
}

TEST_CASE("Cauchy completion over the diagonals of L3") {
  const BasePtr d = test::dl3_base();
  const EnrichedCategory c = unit_category(d, d->object_index("0"));
  const EnrichedCategory cc = cauchy_completion(c);
  REQUIRE(cc.size() == 2);
  CHECK(d->object_name(cc.type(0)) == "0");
  CHECK(d->object_name(cc.type(1)) == "2");
  CHECK(validate_category(cc).ok());
  CHECK(is_cauchy_complete(cc));
  CHECK_FALSE(is_cauchy_complete(c));
}

TEST_CASE("presheaf enumeration respects its bound") {
  const BasePtr base = share(quantaloid_fixture("pz3"));
  std::mt19937 rng(1);
  const EnrichedCategory c = test::random_category(base, 3, rng);
  CHECK_THROWS_AS(enumerate_presheaves(c, 10), BoundExceeded);
}
