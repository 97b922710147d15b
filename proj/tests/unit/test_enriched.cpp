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
#include "qcat/core/diagonals.hpp"
#include "qcat/core/enriched.hpp"
#include "qcat/core/errors.hpp"
#include "qcat/core/fixtures.hpp"
#include "support.hpp"

using namespace qcat;

namespace {

EnrichedCategory l3_pair(const char* xx) {
  const BasePtr base = share(quantaloid_fixture("l3"));
  const HomLattice& h = base->hom(0, 0);
  return EnrichedCategory(base, {"x", "y"}, {0, 0},
                          {h.index_of(xx), h.index_of("0"), h.index_of("2"), h.index_of("0")});
}

EnrichedCategory pz3_category() {
  const BasePtr base = share(quantaloid_fixture("pz3"));
  const HomLattice& h = base->hom(0, 0);
  return family_category(base, 0, {FamilyMember{0, h.index_of("{g}"), h.index_of("{g2}")}});
}

}  // namespace

TEST_CASE("category validation") {
  const BasePtr l3 = share(quantaloid_fixture("l3"));
  CHECK(validate_category(unit_category(l3, 0)).ok());
  CHECK(validate_category(l3_pair("0")).ok());
  const PropertyReport bad = validate_category(l3_pair("1"));
  CHECK_FALSE(bad.flag("C2"));
  CHECK(witness_value(bad.get("C2").witness, "x") == "x");
  CHECK_THROWS_AS(EnrichedCategory(l3, {"x"}, {0}, {9}), StructuralError);
}

TEST_CASE("underlying order and skeletality") {
  const EnrichedCategory c = l3_pair("0");
  const auto order = underlying_order(c);
  CHECK(order[0 * 2 + 1]);
  CHECK_FALSE(order[1 * 2 + 0]);
  CHECK(is_skeletal(c));
  const BasePtr l3 = c.base_ptr();
  const EnrichedCategory iso(l3, {"x", "y"}, {0, 0}, {0, 0, 0, 0});
  CHECK(validate_category(iso).ok());
  CHECK_FALSE(is_skeletal(iso));
}

TEST_CASE("symmetrization") {
  const EnrichedCategory c = l3_pair("0");
  const EnrichedCategory s = symmetrize(c);
  CHECK(validate_category(s).ok());
  CHECK(symmetrize(s) == s);
  CHECK(is_symmetric_category(s));
  CHECK(validate_functor(EnrichedFunctor{s, c, {0, 1}}).ok());

  const EnrichedCategory p = pz3_category();
  const EnrichedCategory ps = symmetrize(p);
  const int i = p.index_of("i"), x = p.index_of("x");
  CHECK(ps.base().hom(0, 0).name(ps.hom(x, i)) == "{}");
}

TEST_CASE("fully faithful and fully dense") {
  const EnrichedCategory p = pz3_category();
  CHECK(is_fully_faithful(identity_functor(p)));
  CHECK(is_fully_dense(identity_functor(p)));
  const EnrichedCategory sub = full_subcategory(p, {p.index_of("i")});
  const EnrichedFunctor incl{sub, p, {p.index_of("i")}};
  CHECK(validate_functor(incl).ok());
  CHECK(is_fully_faithful(incl));
  CHECK(is_fully_dense(incl));
  const EnrichedCategory ps = symmetrize(p);
  const EnrichedFunctor incl_s{full_subcategory(ps, {0}), ps, {0}};
  CHECK_FALSE(is_fully_dense(incl_s));
}

TEST_CASE("distributor algebra") {
  std::mt19937 rng(11);
  const BasePtr base = share(quantaloid_fixture("l3"));
  for (int round = 0; round < 20; ++round) {
    const EnrichedCategory a = test::random_category(base, 2, rng);
    const EnrichedCategory b = test::random_category(base, 2, rng);
    const EnrichedDistributor ida = dist_id(a);
    CHECK(validate_distributor(ida).ok());
    for (const auto& f : test::all_functors(a, b)) {
      const EnrichedDistributor g = graph(f);
      const EnrichedDistributor cg = cograph(f);
      CHECK(validate_distributor(g).ok());
      CHECK(validate_distributor(cg).ok());
      CHECK(check_adjoint(g, cg));
      CHECK(dist_compose(g, ida).mat == g.mat);
      CHECK(dist_compose(dist_id(b), g).mat == g.mat);
      const EnrichedDistributor assoc1 = dist_compose(cg, dist_compose(g, ida));
      const EnrichedDistributor assoc2 = dist_compose(dist_compose(cg, g), ida);
      CHECK(assoc1.mat == assoc2.mat);
      // residuation: g (x) (g \ id_b) <= id_b and it is the largest such
      const EnrichedDistributor lifted = dist_lift(g, dist_id(b));
      CHECK(dist_le(dist_compose(g, lifted), dist_id(b)));
      const EnrichedDistributor extended = dist_ext(ida, g);
      CHECK(dist_le(dist_compose(extended, g), ida));
    }
  }
  const EnrichedCategory c = l3_pair("0");
  EnrichedDistributor bottom = dist_id(c);
  for (int y = 0; y < 2; ++y)
    for (int x = 0; x < 2; ++x) bottom.mat[y * 2 + x] = bottom.lattice(y, x).bottom();
  CHECK_FALSE(check_adjoint(dist_id(c), bottom));
  CHECK(adjoint_violation(dist_id(c), bottom));
}

TEST_CASE("residuation of distributors against brute force") {
  const BasePtr base = share(quantaloid_fixture("l3"));
  const EnrichedCategory c = l3_pair("0");
  const EnrichedCategory one = unit_category(base, 0);
  // all distributors 1 -> C (columns) and C -> C
  auto all_into = [&](const EnrichedCategory& dom, const EnrichedCategory& cod) {
    std::vector<EnrichedDistributor> out;
    const int cells = dom.size() * cod.size();
    std::vector<ElemId> mat(cells, 0);
    while (true) {
      EnrichedDistributor d{dom, cod, mat};
      if (validate_distributor(d).ok()) out.push_back(d);
      int i = cells - 1;
      while (i >= 0 && mat[i] == 2) mat[i--] = 0;
      if (i < 0) break;
      ++mat[i];
    }
    return out;
  };
  const auto phis = all_into(one, c);
  const auto endos = all_into(c, c);
  for (const auto& psi : endos)
    for (const auto& phi : phis) {
      const EnrichedDistributor l = dist_lift(psi, phi);
      for (const auto& xi : phis) CHECK(dist_le(dist_compose(psi, xi), phi) == dist_le(xi, l));
    }
}

TEST_CASE("closure examples") {
  const EnrichedCategory p = pz3_category();
  const int i = p.index_of("i"), x = p.index_of("x");
  const Subset cl = closure(p, subset_of(2, {i}));
  CHECK(cl == Subset{true, true});
  CHECK(closure(symmetrize(p), subset_of(2, {i})) == subset_of(2, {i}));
  CHECK(in_closure(p, subset_of(2, {i}), x));

  const auto cats = test::dl3_categories();
  const EnrichedCategory& three = cats[2];
  CHECK(closure(three, Subset(3, false)) == subset_of(3, {three.index_of("z")}));
  const PropertyReport r = closure_report(three, 5);
  CHECK(r.flag("increasing"));
  CHECK(r.flag("idempotent"));
  CHECK_FALSE(r.flag("grounded"));
  CHECK_THROWS_AS(closure_report(three, 2), BoundExceeded);
}

TEST_CASE("change of base, sums and zero parts") {
  std::mt19937 rng(3);
  const BasePtr l3 = share(quantaloid_fixture("l3"));
  const LaxFunctor collapse = order_collapse(*l3);
  for (int round = 0; round < 10; ++round) {
    const EnrichedCategory c = test::random_category(l3, 3, rng);
    const EnrichedCategory ordered = change_of_base(collapse, c);
    CHECK(validate_category(ordered).ok());
    const auto order = underlying_order(c);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) CHECK(order[a * 3 + b] == (ordered.hom_label(a, b) == "1"));
  }

  const BasePtr d = test::dl3_base();
  const EnrichedCategory sum = category_sum(unit_category(d, d->object_index("0"), "p"),
                                            unit_category(d, d->object_index("2"), "q"));
  CHECK(validate_category(sum).ok());
  CHECK(sum.hom(0, 1) == sum.hom_lattice(0, 1).bottom());
  CHECK(sum.hom(1, 0) == sum.hom_lattice(1, 0).bottom());
  const EnrichedCategory nz = nz_part(test::dl3_categories()[2]);
  CHECK(nz.size() == 2);
  CHECK_FALSE(nz.find("z"));
  CHECK_THROWS_AS(category_sum(unit_category(d, 0, "p"), unit_category(l3, 0, "p")), StructuralError);
}

TEST_CASE("join-test category over the diamond") {
  const BasePtr diamond = share(quantaloid_fixture("diamond"));
  const HomLattice& h = diamond->hom(0, 0);
  const EnrichedCategory c = join_test_category(diamond, 0, h.index_of("a"), h.index_of("b"));
  CHECK(validate_category(c).ok());
  const int x = c.index_of("x"), y = c.index_of("y"), z = c.index_of("z");
  CHECK(closure(c, subset_of(3, {x, z}))[y]);
  CHECK_FALSE(closure(c, subset_of(3, {x}))[y]);
  CHECK_FALSE(closure(c, subset_of(3, {z}))[y]);
}
