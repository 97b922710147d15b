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

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "qcat/core/report.hpp"

namespace qcat {

using ObjectId = int;
using ElemId = int;

/// A finite poset given by an explicit order table. Lattice operations are
/// tabulated at construction when the table describes a lattice.
class HomLattice {
 public:
  HomLattice() = default;
  /// leq[i][j] is true iff element i is below element j.
  HomLattice(std::vector<std::string> names, std::vector<std::vector<bool>> leq);
  /// Convenience for chains and other orders given by a predicate.
  static HomLattice from_predicate(std::vector<std::string> names, const std::function<bool(int, int)>& leq);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(ElemId e) const { return names_.at(e); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<ElemId> find(std::string_view name) const;
  /// Throws StructuralError for unknown names.
  ElemId index_of(std::string_view name) const;

  bool le(ElemId a, ElemId b) const { return leq_[a * size() + b] != 0; }
  bool is_poset() const { return poset_; }
  bool is_lattice() const { return lattice_; }

  // The following require is_lattice(); they throw PreconditionError otherwise.
  ElemId bottom() const;
  ElemId top() const;
  ElemId join(ElemId a, ElemId b) const;
  ElemId meet(ElemId a, ElemId b) const;
  ElemId join(std::span<const ElemId> s) const;
  ElemId meet(std::span<const ElemId> s) const;

  friend bool operator==(const HomLattice& a, const HomLattice& b) {
    return a.names_ == b.names_ && a.leq_ == b.leq_;
  }

 private:
  void require_lattice() const;

  std::vector<std::string> names_;
  std::unordered_map<std::string, ElemId> index_;
  std::vector<char> leq_;
  std::vector<ElemId> join_;
  std::vector<ElemId> meet_;
  ElemId bottom_ = -1;
  ElemId top_ = -1;
  bool poset_ = false;
  bool lattice_ = false;
};

/// Raw tables of a finite quantaloid on n objects.
///  homs[a*n+b] is hom(a,b).
///  comp[(a*n+b)*n+c] tabulates g o f for g in hom(b,c), f in hom(a,b), at
///  index g*|hom(a,b)| + f.
///  inv, when present, holds at a*n+b the map hom(a,b) -> hom(b,a).
struct QuantaloidData {
  std::vector<std::string> objects;
  std::vector<HomLattice> homs;
  std::vector<std::vector<ElemId>> comp;
  std::vector<ElemId> ids;
  std::optional<std::vector<std::vector<ElemId>>> inv;
};

struct Arrow {
  ObjectId src = 0;
  ObjectId tgt = 0;
  ElemId elem = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Immutable finite quantaloid. Construction checks only that the tables
/// are total and in range (StructuralError otherwise); algebraic laws are
/// checked by validate_quantaloid.
class Quantaloid {
 public:
  Quantaloid() = default;
  explicit Quantaloid(QuantaloidData data);

  const QuantaloidData& data() const { return data_; }
  int object_count() const { return static_cast<int>(data_.objects.size()); }
  const std::string& object_name(ObjectId a) const { return data_.objects.at(a); }
  std::optional<ObjectId> find_object(std::string_view name) const;
  ObjectId object_index(std::string_view name) const;

  const HomLattice& hom(ObjectId a, ObjectId b) const { return data_.homs[a * object_count() + b]; }
  /// g o f for f in hom(a,b), g in hom(b,c).
  ElemId compose(ObjectId a, ObjectId b, ObjectId c, ElemId g, ElemId f) const {
    return data_.comp[(a * object_count() + b) * object_count() + c][g * hom(a, b).size() + f];
  }
  ElemId identity(ObjectId a) const { return data_.ids[a]; }

  bool has_involution() const { return data_.inv.has_value(); }
  /// f in hom(a,b) to its involute in hom(b,a). Requires has_involution().
  ElemId involute(ObjectId a, ObjectId b, ElemId f) const;
  /// True when an involution is present and maps every element to the
  /// same-named element of the opposite hom.
  bool has_identity_involution() const;

  /// g \ d: the largest x in hom(a,b) with g o x <= d, for g in hom(b,c),
  /// d in hom(a,c).
  ElemId lift(ObjectId a, ObjectId b, ObjectId c, ElemId g, ElemId d) const;
  /// d / f: the largest y in hom(b,c) with y o f <= d, for f in hom(a,b),
  /// d in hom(a,c).
  ElemId extend(ObjectId a, ObjectId b, ObjectId c, ElemId d, ElemId f) const;

  Arrow compose(const Arrow& g, const Arrow& f) const;
  Arrow lifting(const Arrow& g, const Arrow& d) const;
  Arrow extension(const Arrow& f, const Arrow& d) const;
  Arrow arrow(std::string_view src, std::string_view tgt, std::string_view elem) const;

  bool is_zero_object(ObjectId a) const;
  /// "elem" for one-object quantales, "elem:A->B" otherwise.
  std::string arrow_label(ObjectId a, ObjectId b, ElemId e) const;
  std::string arrow_label(const Arrow& x) const { return arrow_label(x.src, x.tgt, x.elem); }

  friend bool operator==(const Quantaloid& a, const Quantaloid& b);

 private:
  QuantaloidData data_;
  std::unordered_map<std::string, ObjectId> object_index_;
};

/// One-object quantale from element names, order, multiplication and unit.
/// `identity_involution` equips it with x -> x.
Quantaloid make_quantale(std::vector<std::string> names, const std::function<bool(int, int)>& leq,
                         const std::function<int(int, int)>& mult, int unit, bool identity_involution);

/// Copy of q with the involution replaced by the name-identity map; throws
/// StructuralError when hom(a,b) and hom(b,a) carry different names.
Quantaloid with_identity_involution(const Quantaloid& q);
Quantaloid without_involution(const Quantaloid& q);

/// Full sub-quantaloid on the given objects, in the given order.
Quantaloid full_subquantaloid(const Quantaloid& q, const std::vector<ObjectId>& objects);

// ---- law checks and property analysis ----

PropertyReport validate_quantaloid(const Quantaloid& q);

/// Flags: integral, divisible-1..divisible-5, locally-localic,
/// identities-join-irreducible, symmetric; and zero-objects (always passes,
/// lists the zero objects in its note).
PropertyReport analyze_properties(const Quantaloid& q);

/// Checks one of the five equivalent divisibility conditions (1-based).
/// Returns the first violating pair (roles A, B, d, e) or nullopt.
std::optional<Witness> divisibility_violation(const Quantaloid& q, int condition);

bool is_divisible(const Quantaloid& q);
bool is_integral(const Quantaloid& q);
bool is_commutative_quantale(const Quantaloid& q);
bool is_symmetric(const Quantaloid& q);
std::vector<ObjectId> zero_objects(const Quantaloid& q);

struct FamilyMember {
  ObjectId y = 0;
  ElemId f = 0;  // in hom(x, y)
  ElemId g = 0;  // in hom(y, x)
};

struct CauchyBilateralResult {
  bool holds = true;
  bool exact = true;
  ObjectId object = -1;
  std::vector<FamilyMember> family;  // failing family at `object` when !holds
};

/// Polynomial decision via the maximal family below a non-unit bound.
CauchyBilateralResult check_strong_cauchy_bilateral(const Quantaloid& q);
/// Enumerates every family of distinct pairs; throws BoundExceeded when an
/// object has more than max_pairs composable pairs.
CauchyBilateralResult check_strong_cauchy_bilateral_exhaustive(const Quantaloid& q, int max_pairs = 16);
/// Three-hypothesis form over families of size <= cap; exact when cap covers
/// all pairs at every object.
CauchyBilateralResult check_cauchy_bilateral(const Quantaloid& q, int cap);
/// Re-evaluates a family: true iff it violates the strong implication.
bool family_violates_strong(const Quantaloid& q, ObjectId x, const std::vector<FamilyMember>& family);
Witness family_witness(const Quantaloid& q, ObjectId x, const std::vector<FamilyMember>& family);

Quantaloid non_zero_part(const Quantaloid& q);
/// Same carrier, composition replaced by meet. Requires a one-object,
/// commutative, divisible quantale (PreconditionError otherwise).
Quantaloid underlying_locale(const Quantaloid& q);

}  // namespace qcat
