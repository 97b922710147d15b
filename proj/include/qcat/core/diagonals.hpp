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

#include <optional>
#include <vector>

#include "qcat/core/quantaloid.hpp"
#include "qcat/core/report.hpp"

namespace qcat {

/// True iff g o (g \ d) = d = (d / f) o f, for f: A->B, g: C->D, d: A->D.
/// Throws StructuralError on mismatched endpoints.
bool is_diagonal(const Quantaloid& q, const Arrow& f, const Arrow& g, const Arrow& d);

/// Arrows of q in the order used for the objects of D(q): by source, then
/// target, then element index.
std::vector<Arrow> arrows_of(const Quantaloid& q);

/// The quantaloid of diagonals. Its objects are the arrows of q, named by
/// Quantaloid::arrow_label; hom(f,g) holds the diagonals from f to g, named
/// and ordered as in q. Carries the identity involution when q does.
Quantaloid diagonal_quantaloid(const Quantaloid& q);

/// A map between quantaloids that is meant to be (at least) lax.
struct LaxFunctor {
  Quantaloid source;
  Quantaloid target;
  std::vector<ObjectId> object_map;
  /// At a*n+b (n = source objects): hom(a,b) -> hom(F a, F b).
  std::vector<std::vector<ElemId>> arrow_map;

  ObjectId on_object(ObjectId a) const { return object_map[a]; }
  ElemId on_arrow(ObjectId a, ObjectId b, ElemId f) const {
    return arrow_map[a * source.object_count() + b][f];
  }
};

/// Verdicts: monotone, lax-composition, lax-identity, is-lax, is-normal,
/// is-homomorphism. Throws StructuralError when the maps are not total or
/// land outside the target hom-lattices.
PropertyReport check_lax_functor(const LaxFunctor& F);
/// Each hom restriction is an order isomorphism onto its target hom.
std::optional<Witness> full_and_faithful_violation(const LaxFunctor& F);

LaxFunctor identity_lax_functor(const Quantaloid& q);
/// G after F.
LaxFunctor compose_lax(const LaxFunctor& G, const LaxFunctor& F);
/// Matches objects and elements by name; StructuralError when a name is
/// missing on the target side.
LaxFunctor identity_on_names(const Quantaloid& source, const Quantaloid& target);
/// Q -> 2 sending endo-arrows above the identity to 1 and everything else to 0.
LaxFunctor order_collapse(const Quantaloid& q);

LaxFunctor embed_I(const Quantaloid& q);
LaxFunctor project_J0(const Quantaloid& q);
LaxFunctor project_J1(const Quantaloid& q);
/// d: f -> g goes to (g \ d) o (f \ d). Requires a commutative one-object
/// quantale (PreconditionError otherwise).
LaxFunctor project_K(const Quantaloid& q);

}  // namespace qcat
