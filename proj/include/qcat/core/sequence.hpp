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

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcat/core/parmet.hpp"

namespace qcat {

/// A sequence of points given by a generator, sampled up to a horizon.
/// When tail_from is set the terms are periodic from that index with the
/// given period (period 1: eventually constant) and limits are exact;
/// otherwise limits are estimated on the window [N/2, N] within eps.
struct SampledSequence {
  std::function<std::string(std::size_t)> term;
  std::size_t horizon = 64;
  Rational eps{1, 1000};
  std::optional<std::size_t> tail_from;
  std::size_t period = 1;

  bool exact() const { return tail_from.has_value(); }
};

/// terms[0], terms[1], ..., then the last term forever.
SampledSequence eventually_constant(std::vector<std::string> terms);
/// terms repeated cyclically from index 0.
SampledSequence cyclic(std::vector<std::string> terms);
SampledSequence constant_sequence(std::string point);
/// prefix + repeat^n; never eventually periodic, so limits are estimated.
SampledSequence word_pattern(std::string prefix, std::string repeat);

struct LimitEstimate {
  bool exists = false;
  bool exact = false;
  ExtValue value;               // the limit, or the value at the horizon
  std::size_t stable_from = 0;  // first index from which the terms stay within eps of value
};

struct SequenceVerdict {
  bool ok = false;
  bool exact = false;
  std::vector<std::pair<std::string, LimitEstimate>> limits;
  Witness witness;
  std::string note;  // "exact" or "approximate: N=.., eps=.."

  const LimitEstimate& limit(const std::string& name) const;
};

/// Throws std::invalid_argument when the horizon is below 2 and
/// PreconditionError when a sampled term has infinite self-distance.
SequenceVerdict seq_type(const PointMetric& x, const SampledSequence& s);
SequenceVerdict seq_cauchy(const PointMetric& x, const SampledSequence& s);
/// The four limits p(x_n,y_n), p(x_n,x_n), p(y_n,y_n), p(y_n,x_n) exist and agree.
SequenceVerdict seq_equivalent(const PointMetric& x, const SampledSequence& s, const SampledSequence& t);
/// p(x,x_n), p(x_n,x_n) and p(x_n,x) all tend to p(x,x). stable_from of each
/// limit is measured against p(x,x).
SequenceVerdict converges_to(const PointMetric& x, const SampledSequence& s, const std::string& point);

/// q = lim p(x_n,x_m), phi(y) = lim p(y,x_n), psi(y) = lim p(x_n,y).
/// Throws PreconditionError for a sequence that is not Cauchy.
CauchyPair seq_to_cauchy_pair(const PartialMetricSpace& x, const SampledSequence& s);
/// x_n = the first point with phi(x_n) - p(x_n,x_n) + psi(x_n) <= q + 1/n
/// (x_0 = x_1), flagged eventually constant from where the choice settles.
/// Throws PreconditionError when some n has no such point.
SampledSequence select_points(const PartialMetricSpace& x, const CauchyPair& c);

}  // namespace qcat
