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

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace qcat {

using Rational = boost::multiprecision::cpp_rational;

/// Parses "a/b", "a", or "-a/b" into an exact rational. Throws
/// StructuralError on anything else.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& r);

/// A nonnegative rational or +infinity: the carrier of all partial-metric
/// distances. Ordering is the natural numeric one (infinity is largest);
/// callers working in the Lawvere quantale flip it themselves.
class ExtValue {
 public:
  ExtValue() = default;  // zero
  ExtValue(long long v);  // NOLINT(google-explicit-constructor)
  explicit ExtValue(Rational v);

  static ExtValue infinity();
  static ExtValue parse(std::string_view text);

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }
  const Rational& finite() const;

  std::string to_string() const;

  friend ExtValue operator+(const ExtValue& a, const ExtValue& b);
  friend bool operator==(const ExtValue& a, const ExtValue& b);
  friend std::strong_ordering operator<=>(const ExtValue& a, const ExtValue& b);

  /// Truncated subtraction max(a - b, 0) with inf - q = inf (q finite),
  /// q - inf = 0 and inf - inf = 0.
  ExtValue monus(const ExtValue& b) const;

 private:
  std::optional<Rational> value_{Rational(0)};
};

inline ExtValue max(const ExtValue& a, const ExtValue& b) { return a < b ? b : a; }
inline ExtValue min(const ExtValue& a, const ExtValue& b) { return a < b ? a : b; }

/// a - q + c with the partial-metric conventions: infinite when a or c is
/// infinite. Returns nullopt for infinity; the finite result may be
/// negative when the inputs violate p(y,x) >= p(x,x) v p(y,y). An infinite
/// q with finite a, c is ill-formed and also yields nullopt.
std::optional<Rational> tri_signed(const ExtValue& a, const ExtValue& q, const ExtValue& c);

/// tri_signed clamped into ExtValue (negative results become 0).
ExtValue tri(const ExtValue& a, const ExtValue& q, const ExtValue& c);

/// Exact comparison of a signed tri result (nullopt = infinity) with a value.
bool tri_geq(const std::optional<Rational>& t, const ExtValue& v);
std::string format_signed(const std::optional<Rational>& t);

std::ostream& operator<<(std::ostream& os, const ExtValue& v);

}  // namespace qcat
