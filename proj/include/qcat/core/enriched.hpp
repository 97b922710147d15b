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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qcat/core/diagonals.hpp"
#include "qcat/core/quantaloid.hpp"
#include "qcat/core/report.hpp"

namespace qcat {

using BasePtr = std::shared_ptr<const Quantaloid>;
using Subset = std::vector<bool>;

inline BasePtr share(Quantaloid q) { return std::make_shared<const Quantaloid>(std::move(q)); }

/// A category enriched in a finite quantaloid. hom(x,y) is an element of
/// base hom(type y, type x). The constructor checks totality and ranges;
/// the category laws are checked by validate_category.
class EnrichedCategory {
 public:
  EnrichedCategory() = default;
  EnrichedCategory(BasePtr base, std::vector<std::string> names, std::vector<ObjectId> types,
                   std::vector<ElemId> homs);

  const Quantaloid& base() const { return *base_; }
  const BasePtr& base_ptr() const { return base_; }
  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int x) const { return names_.at(x); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> find(std::string_view name) const;
  int index_of(std::string_view name) const;
  ObjectId type(int x) const { return types_[x]; }
  const std::vector<ObjectId>& types() const { return types_; }
  ElemId hom(int x, int y) const { return homs_[x * size() + y]; }
  const std::vector<ElemId>& homs() const { return homs_; }
  /// The hom-lattice hom(x,y) lives in.
  const HomLattice& hom_lattice(int x, int y) const { return base_->hom(types_[y], types_[x]); }
  std::string hom_label(int x, int y) const { return base_->arrow_label(types_[y], types_[x], hom(x, y)); }

  friend bool operator==(const EnrichedCategory& a, const EnrichedCategory& b);

 private:
  BasePtr base_;
  std::vector<std::string> names_;
  std::vector<ObjectId> types_;
  std::vector<ElemId> homs_;
};

/// Same base, by identity or by value.
bool same_base(const EnrichedCategory& a, const EnrichedCategory& b);

struct EnrichedFunctor {
  EnrichedCategory dom;
  EnrichedCategory cod;
  std::vector<int> map;
};

/// mat(y,x) in base hom(type x, type y), stored at y*|dom|+x, with y in cod.
struct EnrichedDistributor {
  EnrichedCategory dom;
  EnrichedCategory cod;
  std::vector<ElemId> mat;

  ElemId at(int y, int x) const { return mat[y * dom.size() + x]; }
  const HomLattice& lattice(int y, int x) const { return dom.base().hom(dom.type(x), cod.type(y)); }
};

/// Verdicts C1 (composition) and C2 (identities).
PropertyReport validate_category(const EnrichedCategory& c);
/// Verdicts F0 (types) and F1 (homs). StructuralError on base mismatch or a
/// map that is not total.
PropertyReport validate_functor(const EnrichedFunctor& f);
/// Verdicts D1 (left action) and D2 (right action).
PropertyReport validate_distributor(const EnrichedDistributor& d);

/// One object "*" of the given type with hom = identity.
EnrichedCategory unit_category(BasePtr base, ObjectId type, std::string name = "*");
EnrichedCategory full_subcategory(const EnrichedCategory& c, const std::vector<int>& objects);
std::vector<int> members(const Subset& s);
Subset subset_of(int n, const std::vector<int>& elements);

// ---- distributor algebra ----

EnrichedDistributor dist_id(const EnrichedCategory& c);
/// psi (x) phi, with cod(phi) = dom(psi).
EnrichedDistributor dist_compose(const EnrichedDistributor& psi, const EnrichedDistributor& phi);
/// psi \ phi: the largest xi with psi (x) xi <= phi; needs cod(psi) = cod(phi).
EnrichedDistributor dist_lift(const EnrichedDistributor& psi, const EnrichedDistributor& phi);
/// psi / phi: the largest xi with xi (x) phi <= psi; needs dom(psi) = dom(phi).
EnrichedDistributor dist_ext(const EnrichedDistributor& psi, const EnrichedDistributor& phi);
/// Elementwise order; endpoints must agree.
bool dist_le(const EnrichedDistributor& a, const EnrichedDistributor& b);
std::optional<Witness> dist_le_violation(const EnrichedDistributor& a, const EnrichedDistributor& b);

/// F_*(b,a) = cod(b, F a): dom -> cod.
EnrichedDistributor graph(const EnrichedFunctor& f);
/// F^*(a,b) = cod(F a, b): cod -> dom.
EnrichedDistributor cograph(const EnrichedFunctor& f);
/// phi: C -> D left adjoint to psi: D -> C, i.e. id_C <= psi (x) phi and
/// phi (x) psi <= id_D. Returns the failing inequality on failure.
std::optional<Witness> adjoint_violation(const EnrichedDistributor& phi, const EnrichedDistributor& psi);
bool check_adjoint(const EnrichedDistributor& phi, const EnrichedDistributor& psi);

bool functor_le(const EnrichedFunctor& f, const EnrichedFunctor& g);
bool functor_iso(const EnrichedFunctor& f, const EnrichedFunctor& g);
EnrichedFunctor compose_functors(const EnrichedFunctor& g, const EnrichedFunctor& f);
EnrichedFunctor identity_functor(const EnrichedCategory& c);
/// x <= y iff type x = type y and 1 <= hom(x,y). Row-major n*n.
std::vector<bool> underlying_order(const EnrichedCategory& c);
bool is_skeletal(const EnrichedCategory& c);
/// C_s(y,x) = C(y,x) ^ C(x,y)*; needs a base involution.
EnrichedCategory symmetrize(const EnrichedCategory& c);
bool is_symmetric_category(const EnrichedCategory& c);
bool is_fully_faithful(const EnrichedFunctor& f);
bool is_fully_dense(const EnrichedFunctor& f);

// ---- closure ----

/// x in cl(S) iff 1 <= join over s in S of C(x,s) o C(s,x).
bool in_closure(const EnrichedCategory& c, const Subset& s, int x);
Subset closure(const EnrichedCategory& c, const Subset& s);
/// Law checks over all subsets (additivity over all subset pairs) when
/// size() <= bound; BoundExceeded otherwise. Verdicts: increasing,
/// monotone, idempotent, grounded, additive, closure-equality.
PropertyReport closure_report(const EnrichedCategory& c, int bound = 5);

// ---- change of base and sums ----

EnrichedCategory change_of_base(const LaxFunctor& f, const EnrichedCategory& c);
/// Disjoint union with bottom cross-homs; names must be distinct.
EnrichedCategory category_sum(const EnrichedCategory& a, const EnrichedCategory& b);
/// Objects whose type is not a zero object of the base.
EnrichedCategory nz_part(const EnrichedCategory& c);
/// Moves c onto another base by matching object and element names.
EnrichedCategory rebase(const EnrichedCategory& c, BasePtr base);
/// An isomorphism (object bijection preserving types and homs), if any.
std::optional<std::vector<int>> find_isomorphism(const EnrichedCategory& a, const EnrichedCategory& b);

// ---- categories from the closure proofs ----

/// Objects x (type X) and i1..in (types Y_i) with C(i,x) = f_i,
/// C(x,i) = g_i, identities on the diagonal and bottom between distinct i.
EnrichedCategory family_category(BasePtr base, ObjectId x, const std::vector<FamilyMember>& family);
/// Objects x, y, z of type X with C(x,y) = f, C(y,z) = g, C(x,z) = f o g
/// and identities elsewhere. Valid when the base is integral.
EnrichedCategory join_test_category(BasePtr base, ObjectId x, ElemId f, ElemId g);

}  // namespace qcat
