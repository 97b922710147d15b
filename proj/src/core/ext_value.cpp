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

#include "qcat/core/ext_value.hpp"

#include <cctype>

#include "qcat/core/errors.hpp"

namespace qcat {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw StructuralError("not a rational: \"" + std::string(text) + "\"");
  }
  boost::multiprecision::cpp_int n{std::string(num)};
  boost::multiprecision::cpp_int d{std::string(den)};
  if (d == 0) throw StructuralError("zero denominator: \"" + std::string(text) + "\"");
  Rational r(n, d);
  return negative ? Rational(-r) : r;
}

std::string format_rational(const Rational& r) {
  auto num = boost::multiprecision::numerator(r);
  auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

ExtValue::ExtValue(long long v) : value_(Rational(v)) {
  if (v < 0) throw StructuralError("negative distance " + std::to_string(v));
}

ExtValue::ExtValue(Rational v) : value_(std::move(v)) {
  if (*value_ < 0) throw StructuralError("negative distance " + format_rational(*value_));
}

ExtValue ExtValue::infinity() {
  ExtValue v;
  v.value_.reset();
  return v;
}

ExtValue ExtValue::parse(std::string_view text) {
  if (text == "inf") return infinity();
  return ExtValue(parse_rational(text));
}

const Rational& ExtValue::finite() const {
  if (!value_) throw PreconditionError("finite() on infinite value");
  return *value_;
}

std::string ExtValue::to_string() const { return value_ ? format_rational(*value_) : "inf"; }

ExtValue operator+(const ExtValue& a, const ExtValue& b) {
  if (a.is_infinite() || b.is_infinite()) return ExtValue::infinity();
  return ExtValue(Rational(*a.value_ + *b.value_));
}

bool operator==(const ExtValue& a, const ExtValue& b) { return a.value_ == b.value_; }

std::strong_ordering operator<=>(const ExtValue& a, const ExtValue& b) {
  if (a.is_infinite()) return b.is_infinite() ? std::strong_ordering::equal : std::strong_ordering::greater;
  if (b.is_infinite()) return std::strong_ordering::less;
  if (*a.value_ < *b.value_) return std::strong_ordering::less;
  if (*a.value_ > *b.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

ExtValue ExtValue::monus(const ExtValue& b) const {
  if (b.is_infinite()) return ExtValue();
  if (is_infinite()) return infinity();
  if (*value_ <= *b.value_) return ExtValue();
  return ExtValue(Rational(*value_ - *b.value_));
}

std::optional<Rational> tri_signed(const ExtValue& a, const ExtValue& q, const ExtValue& c) {
  if (a.is_infinite() || c.is_infinite() || q.is_infinite()) return std::nullopt;
  return Rational(a.finite() - q.finite() + c.finite());
}

ExtValue tri(const ExtValue& a, const ExtValue& q, const ExtValue& c) {
  auto t = tri_signed(a, q, c);
  if (!t) return ExtValue::infinity();
  if (*t < 0) return ExtValue();
  return ExtValue(*t);
}

bool tri_geq(const std::optional<Rational>& t, const ExtValue& v) {
  if (!t) return true;
  if (v.is_infinite()) return false;
  return *t >= v.finite();
}

std::string format_signed(const std::optional<Rational>& t) { return t ? format_rational(*t) : "inf"; }

std::ostream& operator<<(std::ostream& os, const ExtValue& v) { return os << v.to_string(); }

}  // namespace qcat
