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
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "qcat/core/enriched.hpp"
#include "qcat/core/parmet.hpp"
#include "qcat/core/quantaloid.hpp"
#include "qcat/core/sequence.hpp"

namespace qcat {

enum class DocumentKind { Quantaloid, Category, Functor, Distributor, Pms, Sequence };
std::string to_string(DocumentKind k);

/// Serializable description of a sampled sequence.
struct SequenceSpec {
  std::string space;                // "" (use a pms input) or "wordspace:<alphabet>"
  std::vector<std::string> terms;   // explicit terms, unless pattern is set
  std::string tail = "constant";    // constant | cycle | none
  std::optional<std::pair<std::string, std::string>> pattern;  // prefix, repeat
  std::optional<std::size_t> horizon;
  std::optional<Rational> eps;

  friend bool operator==(const SequenceSpec&, const SequenceSpec&) = default;
};

SampledSequence to_sampled(const SequenceSpec& spec);

/// A category body remembers whether its base was given by fixture name.
struct CategoryBody {
  EnrichedCategory category;
  std::string base_ref;  // fixture name, or "" for an inline base
};

struct FunctorBody {
  CategoryBody dom;
  CategoryBody cod;
  std::vector<int> map;
};

struct DistributorBody {
  CategoryBody dom;
  CategoryBody cod;
  std::vector<ElemId> mat;  // row y in cod, column x in dom
};

struct Document {
  std::string name;
  std::string provenance;
  std::variant<Quantaloid, CategoryBody, FunctorBody, DistributorBody, PartialMetricSpace, SequenceSpec> body;

  DocumentKind kind() const { return static_cast<DocumentKind>(body.index()); }
  EnrichedFunctor functor() const;
  EnrichedDistributor distributor() const;
};

bool operator==(const CategoryBody& a, const CategoryBody& b);
bool operator==(const FunctorBody& a, const FunctorBody& b);
bool operator==(const DistributorBody& a, const DistributorBody& b);
bool operator==(const Document& a, const Document& b);

/// Throws SchemaError (a StructuralError) naming the offending field, or
/// the line and column of a JSON syntax error.
Document parse_document(std::string_view text);
/// Two-space indented JSON with a trailing newline; parse(emit(d)) == d.
std::string emit_document(const Document& d);

/// Quantaloid fixtures, wordspace-K, terminal-K, twopoint, all1, pz3cat.
bool is_fixture_name(std::string_view name);
Document fixture_document(std::string_view name);
/// Names with a committed golden file, in listing order.
std::vector<std::string> fixture_document_names();

}  // namespace qcat
