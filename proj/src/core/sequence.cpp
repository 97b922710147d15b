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

#include "qcat/core/sequence.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "qcat/core/errors.hpp"

namespace qcat {

SampledSequence eventually_constant(std::vector<std::string> terms) {
  if (terms.empty()) throw StructuralError("sequence needs at least one term");
  const std::size_t last = terms.size() - 1;
  SampledSequence s;
  s.term = [terms = std::move(terms), last](std::size_t n) { return terms[std::min(n, last)]; };
  s.tail_from = last;
  return s;
}

SampledSequence cyclic(std::vector<std::string> terms) {
  if (terms.empty()) throw StructuralError("sequence needs at least one term");
  SampledSequence s;
  s.period = terms.size();
  s.term = [terms = std::move(terms)](std::size_t n) { return terms[n % terms.size()]; };
  s.tail_from = 0;
  return s;
}

SampledSequence constant_sequence(std::string point) { return eventually_constant({std::move(point)}); }

SampledSequence word_pattern(std::string prefix, std::string repeat) {
  SampledSequence s;
  s.term = [prefix = std::move(prefix), repeat = std::move(repeat)](std::size_t n) {
    std::string w = prefix;
    for (std::size_t i = 0; i < n; ++i) w += repeat;
    return w;
  };
  return s;
}

const LimitEstimate& SequenceVerdict::limit(const std::string& name) const {
  for (const auto& [n, l] : limits)
    if (n == name) return l;
  throw std::out_of_range("no limit named " + name);
}

namespace {

bool within(const ExtValue& a, const ExtValue& b, const Rational& eps) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() && b.is_infinite();
  const Rational d = a.finite() - b.finite();
  return (d < 0 ? Rational(-d) : d) <= eps;
}

// Sampling plan shared by all limits of one verdict.
struct Plan {
  bool exact = false;
  std::size_t tail = 0;
  std::size_t period = 1;
  std::size_t horizon = 0;
  Rational eps;

  std::size_t lo() const { return exact ? tail : horizon / 2; }
  std::size_t hi() const { return exact ? tail + period - 1 : horizon; }
  std::string note() const {
    if (exact) return "exact";
    return "approximate: N=" + std::to_string(horizon) + ", eps=" + format_rational(eps);
  }
};

Plan plan_for(const SampledSequence& s) {
  if (!s.term) throw std::invalid_argument("sequence has no generator");
  if (s.horizon < 2) throw std::invalid_argument("horizon must be at least 2");
  if (s.eps <= 0) throw std::invalid_argument("eps must be positive");
  if (s.period == 0) throw std::invalid_argument("period must be positive");
  Plan p;
  p.exact = s.exact();
  p.tail = s.tail_from.value_or(0);
  p.period = s.period;
  p.horizon = s.horizon;
  p.eps = s.eps;
  return p;
}

Plan plan_for(const SampledSequence& s, const SampledSequence& t) {
  Plan a = plan_for(s);
  const Plan b = plan_for(t);
  if (a.exact && b.exact) {
    a.tail = std::max(a.tail, b.tail);
    a.period = std::lcm(a.period, b.period);
  } else {
    a.exact = false;
  }
  a.horizon = std::min(a.horizon, b.horizon);
  a.eps = std::min(a.eps, b.eps);
  return a;
}

// First index from which value(n) stays within eps of target, scanning
// back from the top of the sampled range. Exact plans compare for equality.
std::size_t settle_index(const std::function<ExtValue(std::size_t)>& value, const ExtValue& target, const Plan& p) {
  std::size_t n = p.hi() + 1;
  while (n > 0) {
    const ExtValue v = value(n - 1);
    const bool close = p.exact ? v == target : within(v, target, p.eps);
    if (!close) break;
    --n;
  }
  return n;
}

LimitEstimate single_limit(const std::function<ExtValue(std::size_t)>& value, const Plan& p) {
  LimitEstimate l;
  l.exact = p.exact;
  l.value = value(p.hi());
  l.exists = true;
  for (std::size_t n = p.lo(); n <= p.hi() && l.exists; ++n) {
    const ExtValue v = value(n);
    l.exists = p.exact ? v == l.value : within(v, l.value, p.eps);
  }
  l.stable_from = settle_index(value, l.value, p);
  return l;
}

LimitEstimate net_limit(const std::function<ExtValue(std::size_t, std::size_t)>& value, const Plan& p) {
  LimitEstimate l;
  l.exact = p.exact;
  l.value = value(p.hi(), p.hi());
  l.exists = true;
  for (std::size_t n = p.lo(); n <= p.hi() && l.exists; ++n)
    for (std::size_t m = p.lo(); m <= p.hi() && l.exists; ++m) {
      const ExtValue v = value(n, m);
      l.exists = p.exact ? v == l.value : within(v, l.value, p.eps);
    }
  // the net settles from the first n0 with value(n,m) close for n,m >= n0
  std::size_t n0 = p.hi() + 1;
  while (n0 > 0) {
    bool close = true;
    for (std::size_t m = n0 - 1; m <= p.hi() && close; ++m) {
      for (const ExtValue& v : {value(n0 - 1, m), value(m, n0 - 1)})
        close = close && (p.exact ? v == l.value : within(v, l.value, p.eps));
    }
    if (!close) break;
    --n0;
  }
  l.stable_from = n0;
  return l;
}

void require_typed_terms(const PointMetric& x, const SampledSequence& s, const Plan& p) {
  for (std::size_t n = 0; n <= p.hi(); ++n) {
    const std::string t = s.term(n);
    if (x.distance(t, t).is_infinite())
      throw PreconditionError("term " + std::to_string(n) + " (" + t + ") has infinite self-distance");
  }
}

SequenceVerdict finish(SequenceVerdict v, const Plan& p) {
  v.exact = p.exact;
  v.note = p.note();
  return v;
}

Witness limit_witness(const std::string& name, const LimitEstimate& l, const Plan& p) {
  Witness w{{"limit", name}};
  if (l.exists) {
    w.emplace_back("value", l.value.to_string());
  } else {
    w.emplace_back("from", std::to_string(p.lo()));
    w.emplace_back("to", std::to_string(p.hi()));
    w.emplace_back("value at horizon", l.value.to_string());
  }
  return w;
}

}  // namespace

SequenceVerdict seq_type(const PointMetric& x, const SampledSequence& s) {
  const Plan p = plan_for(s);
  require_typed_terms(x, s, p);
  SequenceVerdict v;
  const LimitEstimate l = single_limit(
      [&](std::size_t n) {
        const std::string t = s.term(n);
        return x.distance(t, t);
      },
      p);
  v.limits.emplace_back("p(x_n,x_n)", l);
  v.ok = l.exists;
  if (!v.ok) v.witness = limit_witness("p(x_n,x_n)", l, p);
  return finish(std::move(v), p);
}

SequenceVerdict seq_cauchy(const PointMetric& x, const SampledSequence& s) {
  const Plan p = plan_for(s);
  require_typed_terms(x, s, p);
  SequenceVerdict v;
  const LimitEstimate l =
      net_limit([&](std::size_t n, std::size_t m) { return x.distance(s.term(n), s.term(m)); }, p);
  v.limits.emplace_back("p(x_n,x_m)", l);
  v.ok = l.exists && l.value.is_finite();
  if (!v.ok) v.witness = limit_witness("p(x_n,x_m)", l, p);
  return finish(std::move(v), p);
}

SequenceVerdict seq_equivalent(const PointMetric& x, const SampledSequence& s, const SampledSequence& t) {
  const Plan p = plan_for(s, t);
  require_typed_terms(x, s, p);
  require_typed_terms(x, t, p);
  SequenceVerdict v;
  auto limit_of = [&](const SampledSequence& a, const SampledSequence& b) {
    return single_limit([&](std::size_t n) { return x.distance(a.term(n), b.term(n)); }, p);
  };
  v.limits.emplace_back("p(x_n,y_n)", limit_of(s, t));
  v.limits.emplace_back("p(x_n,x_n)", limit_of(s, s));
  v.limits.emplace_back("p(y_n,y_n)", limit_of(t, t));
  v.limits.emplace_back("p(y_n,x_n)", limit_of(t, s));
  v.ok = true;
  for (const auto& [name, l] : v.limits) {
    if (!l.exists) {
      v.ok = false;
      v.witness = limit_witness(name, l, p);
      return finish(std::move(v), p);
    }
  }
  const ExtValue& first = v.limits.front().second.value;
  for (const auto& [name, l] : v.limits) {
    const bool agree = p.exact ? l.value == first : within(l.value, first, p.eps);
    if (!agree) {
      v.ok = false;
      v.witness = {{"limit", name}, {"value", l.value.to_string()}, {"p(x_n,y_n)", first.to_string()}};
      break;
    }
  }
  return finish(std::move(v), p);
}

SequenceVerdict converges_to(const PointMetric& x, const SampledSequence& s, const std::string& point) {
  const Plan p = plan_for(s);
  require_typed_terms(x, s, p);
  const ExtValue target = x.distance(point, point);
  if (target.is_infinite()) throw PreconditionError("point " + point + " has infinite self-distance");
  SequenceVerdict v;
  v.ok = true;
  const std::vector<std::pair<std::string, std::function<ExtValue(std::size_t)>>> parts = {
      {"p(x,x_n)", [&](std::size_t n) { return x.distance(point, s.term(n)); }},
      {"p(x_n,x_n)",
       [&](std::size_t n) {
         const std::string t = s.term(n);
         return x.distance(t, t);
       }},
      {"p(x_n,x)", [&](std::size_t n) { return x.distance(s.term(n), point); }},
  };
  for (const auto& [name, value] : parts) {
    LimitEstimate l = single_limit(value, p);
    const bool hits = l.exists && (p.exact ? l.value == target : within(l.value, target, p.eps));
    if (hits) l.stable_from = settle_index(value, target, p);
    if (!hits && v.ok) {
      v.ok = false;
      v.witness = limit_witness(name, l, p);
      v.witness.emplace_back("p(x,x)", target.to_string());
    }
    v.limits.emplace_back(name, l);
  }
  return finish(std::move(v), p);
}

CauchyPair seq_to_cauchy_pair(const PartialMetricSpace& x, const SampledSequence& s) {
  const SequenceVerdict c = seq_cauchy(x, s);
  if (!c.ok) {
    std::string detail;
    for (const auto& [role, value] : c.witness) detail += " " + role + "=" + value;
    throw PreconditionError("sequence is not Cauchy:" + detail);
  }
  const Plan p = plan_for(s);
  CauchyPair out;
  out.q = c.limits.front().second.value.finite();
  for (int y = 0; y < x.size(); ++y) {
    const LimitEstimate phi =
        single_limit([&](std::size_t n) { return x(y, x.index_of(s.term(n))); }, p);
    const LimitEstimate psi =
        single_limit([&](std::size_t n) { return x(x.index_of(s.term(n)), y); }, p);
    if (!phi.exists || !psi.exists)
      throw PreconditionError("distances to " + x.point(y) + " do not settle along the sequence");
    out.phi.push_back(phi.value);
    out.psi.push_back(psi.value);
  }
  return out;
}

SampledSequence select_points(const PartialMetricSpace& x, const CauchyPair& c) {
  // expr(z) = phi(z) - p(z,z) + psi(z); nullopt when infinite
  std::vector<std::optional<Rational>> expr;
  for (int z = 0; z < x.size(); ++z) expr.push_back(tri_signed(c.phi[z], x(z, z), c.psi[z]));
  std::optional<Rational> gap;
  bool attained = false;
  for (const auto& e : expr) {
    if (!e) continue;
    if (*e <= c.q) attained = true;
    else if (!gap || *e - c.q < *gap) gap = *e - c.q;
  }
  if (!attained) throw PreconditionError("no point has phi - p + psi <= q");
  // once 1/n < gap, exactly the points with expr <= q qualify
  std::size_t settle = 1;
  if (gap) {
    const Rational inv = 1 / *gap;
    settle = static_cast<std::size_t>(boost::multiprecision::numerator(inv) / boost::multiprecision::denominator(inv)) + 1;
  }
  std::vector<std::string> terms;
  for (std::size_t n = 1; n <= settle; ++n) {
    const Rational bound = c.q + Rational(1, static_cast<long long>(n));
    for (int z = 0; z < x.size(); ++z)
      if (expr[z] && *expr[z] <= bound) {
        terms.push_back(x.point(z));
        break;
      }
  }
  terms.insert(terms.begin(), terms.front());
  return eventually_constant(std::move(terms));
}

}  // namespace qcat
