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
#include <vector>

#include "qcat/core/enriched.hpp"
#include "qcat/core/ext_value.hpp"
#include "qcat/core/report.hpp"

namespace qcat {

/// Distances between named points. Finite spaces and lazily evaluated
/// spaces (words) both implement it.
class PointMetric {
 public:
  virtual ~PointMetric() = default;
  /// Throws StructuralError for names outside the space.
  virtual ExtValue distance(std::string_view y, std::string_view x) const = 0;
};

/// Finite set of points with an explicit distance matrix; p(y,x) at y*n+x.
class PartialMetricSpace : public PointMetric {
 public:
  PartialMetricSpace() = default;
  PartialMetricSpace(std::vector<std::string> points, std::vector<ExtValue> distances);

  int size() const { return static_cast<int>(points_.size()); }
  const std::string& point(int i) const { return points_.at(i); }
  const std::vector<std::string>& points() const { return points_; }
  std::optional<int> find(std::string_view name) const;
  int index_of(std::string_view name) const;
  const ExtValue& operator()(int y, int x) const { return dist_[y * size() + x]; }
  const std::vector<ExtValue>& distances() const { return dist_; }
  ExtValue distance(std::string_view y, std::string_view x) const override;

  bool finitely_typed() const;
  /// The set of values occurring in the matrix, ascending.
  std::vector<ExtValue> occurring_values() const;

  friend bool operator==(const PartialMetricSpace& a, const PartialMetricSpace& b) {
    return a.points_ == b.points_ && a.dist_ == b.dist_;
  }

 private:
  std::vector<std::string> points_;
  std::vector<ExtValue> dist_;
};

/// Verdicts: self-distance (p(y,x) >= p(x,x) v p(y,y)) and triangle
/// (p(z,y) - p(y,y) + p(y,x) >= p(z,x), infinite when an outer term is).
PropertyReport validate_pms(const PartialMetricSpace& x);
/// Verdicts: zero-self-distance, triangle; plus symmetric when requested.
PropertyReport validate_metric(const PartialMetricSpace& d, bool require_symmetric = false);

struct DerivedMetrics {
  PartialMetricSpace p0;    // p(y,x) - p(y,y)
  PartialMetricSpace p1;    // p(y,x) - p(x,x)
  PartialMetricSpace pk;    // (p(y,x) - p(y,y)) + (p(y,x) - p(x,x))
  PartialMetricSpace psym;  // (p(y,x) - p(x,x)) v (p(x,y) - p(y,y))
};
DerivedMetrics derived_metrics(const PartialMetricSpace& x);

/// inf over s in S of p(x,s) - p(s,s) + p(s,x) - p(x,x) (nullopt = infinity;
/// the empty infimum is infinite). Requires a finitely typed space.
std::optional<Rational> closure_defect(const PartialMetricSpace& x, const std::vector<int>& s, int point);
bool closure_membership(const PartialMetricSpace& x, const std::vector<int>& s, int point);
std::vector<int> closure_set(const PartialMetricSpace& x, const std::vector<int>& s);
/// Metric closure under psym: points at psym-distance 0 from some s.
std::vector<int> symmetric_metric_closure(const PartialMetricSpace& x, const std::vector<int>& s);

// ---- generators ----

/// p(w,v) = (1/2)^k with k the first 1-based position where the words
/// differ; a word differs from itself (and a proper prefix from its
/// extension) at position len(shorter) + 1.
class WordMetric : public PointMetric {
 public:
  explicit WordMetric(std::string alphabet);
  const std::string& alphabet() const { return alphabet_; }
  bool is_word(std::string_view w) const;
  ExtValue distance(std::string_view y, std::string_view x) const override;

 private:
  std::string alphabet_;
};

/// All nonempty words up to max_len, by length then lexicographically in
/// alphabet order.
PartialMetricSpace word_space(const std::string& alphabet, int max_len);
/// Points named by the given self-distances, p(a,b) = a v b.
PartialMetricSpace terminal_sample(const std::vector<Rational>& values);
/// The category over D(L) with L = {0, ..., cap*denominator} (truncated
/// addition), homs the scaled distances and infinity sent to the top value.
/// Every finite distance must be a multiple of 1/denominator below cap.
EnrichedCategory discretize_to_category(const PartialMetricSpace& x, int denominator, int cap);

// ---- completion ----

struct CauchyPair {
  Rational q;
  std::vector<ExtValue> phi;
  std::vector<ExtValue> psi;
  friend bool operator==(const CauchyPair&, const CauchyPair&) = default;
};

/// Checks the presheaf, copresheaf and adjunction inequalities exactly.
PropertyReport validate_cauchy_pair(const PartialMetricSpace& x, const CauchyPair& c);
CauchyPair representable_pair(const PartialMetricSpace& x, int point);
/// Every pair with q, phi, psi drawn from the occurring finite values
/// (phi, psi may also take occurring infinite values).
std::vector<CauchyPair> enumerate_cauchy_pairs(const PartialMetricSpace& x);
/// inf over z of psi_a(z) - p(z,z) + phi_b(z).
ExtValue cauchy_pair_distance(const PartialMetricSpace& x, const CauchyPair& a, const CauchyPair& b);

struct Completion {
  PartialMetricSpace space;              // classes then the point "inf"
  std::vector<CauchyPair> classes;       // one per finite point of space
  std::vector<int> embedding;            // point of x -> index in space
};
/// Requires a finitely typed space.
Completion complete_finite(const PartialMetricSpace& x);

// ---- Hausdorff and exponentiability ----

/// Points: nonempty typed subsets, named "{a,b}", in bitmask order.
PartialMetricSpace hausdorff(const PartialMetricSpace& x);
/// The sup-inf formula on the given subsets (any, typed or not), then the
/// partial-metric laws on the result. Subsets are lists of point indices.
PropertyReport hausdorff_violations(const PartialMetricSpace& x, const std::vector<std::vector<int>>& subsets);
ExtValue hausdorff_distance(const PartialMetricSpace& x, const std::vector<int>& t, const std::vector<int>& s);
std::string subset_name(const PartialMetricSpace& x, const std::vector<int>& s);

enum class Exponentiability { ExponentiableExact, NotExponentiable, NoViolationOnGrid };
std::string to_string(Exponentiability e);

struct ExponentiabilityResult {
  Exponentiability verdict = Exponentiability::NoViolationOnGrid;
  Witness witness;  // x0, x2, u, v, w when NotExponentiable
  std::string note;
};

/// Grid check of the exponentiability condition on [0, cap] with the
/// given step. Throws std::invalid_argument for step <= 0.
ExponentiabilityResult exponentiable(const PartialMetricSpace& x, const Rational& step, const Rational& cap);
/// True iff (u, v, w) at (x0, x2) satisfies the hypotheses and no x1 of
/// self-distance v has p(x0,x1) <= u and p(x1,x2) <= w.
bool exponentiability_violated(const PartialMetricSpace& x, int x0, int x2, const Rational& u, const Rational& v,
                               const Rational& w);

}  // namespace qcat
