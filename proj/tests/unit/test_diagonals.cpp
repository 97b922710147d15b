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

#include "doctest.h"
#include "qcat/core/diagonals.hpp"
#include "qcat/core/errors.hpp"
#include "qcat/core/fixtures.hpp"
#include "support.hpp"

using namespace qcat;

namespace {

Arrow l3_arrow(const Quantaloid& l3, const char* e) { return l3.arrow("*", "*", e); }

ElemId elem_in(const Quantaloid& q, const char* src, const char* tgt, const char* e) {
  return q.hom(q.object_index(src), q.object_index(tgt)).index_of(e);
}

}  // namespace

TEST_CASE("diagonal predicate") {
  const Quantaloid l3 = quantaloid_fixture("l3");
  CHECK(is_diagonal(l3, l3_arrow(l3, "1"), l3_arrow(l3, "1"), l3_arrow(l3, "2")));
  CHECK_FALSE(is_diagonal(l3, l3_arrow(l3, "1"), l3_arrow(l3, "0"), l3_arrow(l3, "0")));
  const Quantaloid d = quantaloid_fixture("dl3");
  for (const auto& corpus : {l3, d}) {
    const int n = corpus.object_count();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (ElemId e = 0; e < corpus.hom(a, b).size(); ++e) {
          const Arrow one_a{a, a, corpus.identity(a)};
          const Arrow one_b{b, b, corpus.identity(b)};
          CHECK(is_diagonal(corpus, one_a, one_b, Arrow{a, b, e}));
        }
  }
  CHECK_THROWS_AS(is_diagonal(d, Arrow{0, 1, 0}, Arrow{0, 0, 0}, Arrow{1, 1, 0}), StructuralError);
}

TEST_CASE("diagonals of the Boolean quantale") {
  const Quantaloid d = diagonal_quantaloid(quantaloid_fixture("q2"));
  REQUIRE(d.object_count() == 2);
  const ObjectId zero = d.object_index("0");
  const ObjectId one = d.object_index("1");
  CHECK(d.hom(one, one).names() == std::vector<std::string>{"0", "1"});
  CHECK(d.hom(zero, zero).names() == std::vector<std::string>{"0"});
  CHECK(d.hom(zero, one).names() == std::vector<std::string>{"0"});
  CHECK(d.hom(one, zero).names() == std::vector<std::string>{"0"});
  CHECK(validate_quantaloid(d).ok());
  CHECK(d.has_identity_involution());
}

TEST_CASE("diagonals of L3") {
  const Quantaloid d = diagonal_quantaloid(quantaloid_fixture("l3"));
  const ObjectId o0 = d.object_index("0");
  const ObjectId o1 = d.object_index("1");
  const ElemId dd = elem_in(d, "0", "1", "1");
  const ElemId ee = elem_in(d, "1", "0", "1");
  const ElemId composite = d.compose(o0, o1, o0, ee, dd);
  CHECK(d.hom(o0, o0).name(composite) == "1");
  CHECK(zero_objects(d) == std::vector<ObjectId>{d.object_index("2")});
  CHECK(d == quantaloid_fixture("dl3"));
}

TEST_CASE("embedding I") {
  const Quantaloid q2 = quantaloid_fixture("q2");
  const LaxFunctor i2 = embed_I(q2);
  const ObjectId image = i2.on_object(0);
  CHECK(i2.target.object_name(image) == "1");
  const ElemId one = q2.identity(0);
  CHECK(i2.on_arrow(0, 0, one) == i2.target.identity(image));

  const LaxFunctor i3 = embed_I(quantaloid_fixture("l3"));
  CHECK(check_lax_functor(i3).flag("is-homomorphism"));
  CHECK_FALSE(full_and_faithful_violation(i3));
}

TEST_CASE("projections J0, J1 and K") {
  const Quantaloid l3 = quantaloid_fixture("l3");
  const LaxFunctor j0 = project_J0(l3);
  const Quantaloid& d = j0.source;
  const ObjectId o0 = d.object_index("0");
  const ObjectId o1 = d.object_index("1");
  CHECK(l3.hom(0, 0).name(j0.on_arrow(o1, o1, elem_in(d, "1", "1", "2"))) == "1");
  CHECK(check_lax_functor(j0).flag("is-normal"));
  CHECK(check_lax_functor(project_J1(l3)).flag("is-lax"));

  for (const LaxFunctor& back : {j0, project_J1(l3)}) {
    const LaxFunctor round = compose_lax(back, embed_I(l3));
    for (ElemId e = 0; e < l3.hom(0, 0).size(); ++e) CHECK(round.on_arrow(0, 0, e) == e);
  }

  const LaxFunctor k = project_K(l3);
  CHECK(l3.hom(0, 0).name(k.on_arrow(o1, o0, elem_in(d, "1", "0", "2"))) == "2");
  for (ObjectId f = 0; f < d.object_count(); ++f) CHECK(k.on_arrow(f, f, d.identity(f)) == l3.identity(0));
  CHECK(check_lax_functor(k).flag("is-normal"));

  const Quantaloid q2 = quantaloid_fixture("q2");
  const LaxFunctor k2 = project_K(q2);
  const ObjectId one = k2.source.object_index("1");
  CHECK(q2.hom(0, 0).name(k2.on_arrow(one, one, elem_in(k2.source, "1", "1", "1"))) == "1");
  CHECK_THROWS_AS(project_K(quantaloid_fixture("dl3")), PreconditionError);
}

TEST_CASE("laxity classification") {
  const Quantaloid l3 = quantaloid_fixture("l3");
  CHECK(check_lax_functor(identity_lax_functor(l3)).flag("is-homomorphism"));

  const Quantaloid loc_d = diagonal_quantaloid(underlying_locale(l3));
  const PropertyReport r = check_lax_functor(identity_on_names(loc_d, diagonal_quantaloid(l3)));
  CHECK(r.flag("is-lax"));
  CHECK(r.flag("is-normal"));
  CHECK_FALSE(r.flag("is-homomorphism"));
  CHECK_FALSE(r.get("is-homomorphism").witness.empty());

  CHECK(check_lax_functor(order_collapse(l3)).flag("is-lax"));
}

TEST_CASE("symmetry transfers to the diagonals") {
  for (const auto& entry : test::quantaloid_corpus()) {
    if (entry.name.starts_with("D(")) continue;
    CAPTURE(entry.name);
    CHECK(is_symmetric(entry.q) == is_symmetric(diagonal_quantaloid(entry.q)));
  }
}
