// Copyright 2026 The numsg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "numsg/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "numsg/classify.hpp"

namespace numsg {

namespace {

constexpr Int kMaxParameter = Int{1} << 31;

void check(const NumericalSemigroup& t, bool ok, const std::string& what) {
  if (!ok) {
    fail(Errc::kInternalInconsistency, what + " fails for <" + t.literal() + ">");
  }
}

NumericalSemigroup recanonicalize(const std::vector<std::uint8_t>& window) {
  const NumericalSemigroup built = NumericalSemigroup::from_member_window(window);
  return NumericalSemigroup::from_generators(built.minimal_generators());
}

// 2S u (2I + b) without any integrality requirement on I; the caller has
// checked I + I + b inside S.
NumericalSemigroup duplicate_relative(const NumericalSemigroup& s,
                                      const RelativeIdeal& i, Int b) {
  const Int hi = std::max(2 * s.frobenius(), 2 * i.frobenius() + b) + 1;
  if (hi < 0) return NumericalSemigroup();
  std::vector<std::uint8_t> window(static_cast<std::size_t>(hi + 1));
  for (Int y = 0; y <= hi; ++y) {
    const bool member =
        y % 2 == 0 ? s.contains(y / 2) : i.contains((y - b) / 2);
    window[static_cast<std::size_t>(y)] = member ? 1 : 0;
  }
  return recanonicalize(window);
}

std::vector<Int> sorted_unique(std::vector<Int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

NumericalSemigroup gluing(const GluingSpec& spec) {
  const NumericalSemigroup& s1 = spec.s1;
  const NumericalSemigroup& s2 = spec.s2;
  const Int a = spec.a;
  const Int b = spec.b;
  if (a > kMaxParameter || b > kMaxParameter) {
    fail(Errc::kTooLarge, "gluing parameters must be at most 2^31");
  }
  if (a <= 0 || !s2.contains(a)) {
    fail(Errc::kNotMember, std::to_string(a) + " is not a positive member of <" +
                               s2.literal() + ">");
  }
  if (b <= 0 || !s1.contains(b)) {
    fail(Errc::kNotMember, std::to_string(b) + " is not a positive member of <" +
                               s1.literal() + ">");
  }
  if (s2.is_minimal_generator(a)) {
    fail(Errc::kMinimalGenerator, "a = " + std::to_string(a) +
                                      " is a minimal generator of <" +
                                      s2.literal() + ">");
  }
  if (s1.is_minimal_generator(b)) {
    fail(Errc::kMinimalGenerator, "b = " + std::to_string(b) +
                                      " is a minimal generator of <" +
                                      s1.literal() + ">");
  }
  if (std::gcd(a, b) != 1) {
    fail(Errc::kNotCoprime, "gcd(" + std::to_string(a) + ", " +
                                std::to_string(b) + ") != 1");
  }

  std::vector<Int> gens;
  for (Int g : s1.minimal_generators()) gens.push_back(a * g);
  for (Int g : s2.minimal_generators()) gens.push_back(b * g);
  const NumericalSemigroup t = NumericalSemigroup::from_generators(gens);

  check(t, t.embedding_dimension() == static_cast<Int>(gens.size()),
        "minimality of the glued generators");
  check(t, t.frobenius() == a * s1.frobenius() + b * s2.frobenius() + a * b,
        "F(T) = a F(S1) + b F(S2) + ab");
  std::vector<Int> pf;
  for (Int f1 : s1.pseudo_frobenius_numbers()) {
    for (Int f2 : s2.pseudo_frobenius_numbers()) pf.push_back(a * f1 + b * f2 + a * b);
  }
  check(t, sorted_unique(pf) == t.pseudo_frobenius_numbers(),
        "PF(T) = {a f1 + b f2 + ab}");
  check(t, t.type() == s1.type() * s2.type(), "t(T) = t(S1) t(S2)");

  const RelativeIdeal k1 = detail::standard_canonical(s1);
  const RelativeIdeal k2 = detail::standard_canonical(s2);
  const RelativeIdeal kt = detail::standard_canonical(t);
  const Int limit = t.frobenius() + a * b + 1;
  for (Int y = 0; y <= limit; ++y) {
    bool hit = false;
    for (Int k = 0; a * k <= y && !hit; ++k) {
      const Int rest = y - a * k;
      hit = rest % b == 0 && k1.contains(k) && k2.contains(rest / b);
    }
    check(t, hit == kt.contains(y), "K(T) = {a k1 + b k2}");
  }
  return t;
}

NumericalSemigroup duplication(const DuplicationSpec& spec) {
  const NumericalSemigroup& s = spec.s;
  const RelativeIdeal& i = spec.ideal;
  const Int b = spec.b;
  if (!(i.ambient() == s)) {
    fail(Errc::kAmbientMismatch, "the ideal belongs to a different semigroup");
  }
  if (b > kMaxParameter) fail(Errc::kTooLarge, "b must be at most 2^31");
  if (b % 2 == 0) fail(Errc::kEvenB, "b = " + std::to_string(b) + " is even");
  if (!s.contains(b)) {
    fail(Errc::kBNotMember, "b = " + std::to_string(b) + " is not in <" +
                                s.literal() + ">");
  }
  for (Int x = i.min(); x <= std::max(i.frobenius(), s.frobenius()); ++x) {
    if (i.contains(x) && !s.contains(x)) {
      fail(Errc::kIdealNotIntegral,
           i.to_string() + " is not contained in <" + s.literal() + ">");
    }
  }

  const NumericalSemigroup t = duplicate_relative(s, i, b);

  check(t, t.frobenius() == 2 * i.frobenius() + b, "F(T) = 2F(I) + b");
  std::vector<Int> odd;
  for (Int lambda : ideal_invariants(i).pf) odd.push_back(2 * lambda + b);
  std::vector<Int> even;
  if (!s.is_natural()) {
    const RelativeIdeal m = maximal_ideal(s);
    const RelativeIdeal common =
        ideal_intersection(difference(m, m), difference(i, i));
    for (Int x : set_minus(common, as_ideal(s))) even.push_back(2 * x);
  }
  std::vector<Int> t_odd;
  std::vector<Int> t_even;
  for (Int f : t.pseudo_frobenius_numbers()) {
    (f % 2 == 0 ? t_even : t_odd).push_back(f);
  }
  check(t, sorted_unique(odd) == t_odd, "odd PF(T) = 2 PF(I) + b");
  check(t, sorted_unique(even) == t_even,
        "even PF(T) = 2 (((M - M) n (I - I)) \\ S)");
  return t;
}

Decomposition duplication_decompose(const NumericalSemigroup& t, Int b) {
  if (b % 2 == 0) fail(Errc::kEvenB, "b = " + std::to_string(b) + " is even");
  if (b > kMaxParameter || !t.contains(2 * b)) {
    fail(Errc::kTwoBNotMember,
         "2b = " + std::to_string(2 * b) + " is not in <" + t.literal() + ">");
  }

  const Int half_bound = t.frobenius() / 2 + 1;
  std::vector<std::uint8_t> half(static_cast<std::size_t>(half_bound + 1));
  for (Int y = 0; y <= half_bound; ++y) {
    half[static_cast<std::size_t>(y)] = t.contains(2 * y) ? 1 : 0;
  }
  const NumericalSemigroup s = NumericalSemigroup::from_member_window(half);

  const Int lo = -(b + 1) / 2;
  const Int hi = std::max(lo, (t.frobenius() - b) / 2 + 1);
  const RelativeIdeal i = RelativeIdeal::from_predicate(
      s, lo, hi, [&](Int x) { return t.contains(2 * x + b); });

  check(t, is_subset(translate(sum(i, i), b), as_ideal(s)), "I + I + b in T/2");
  check(t, duplicate_relative(s, i, b) == t, "round trip of the decomposition");
  if (!t.is_natural() && !s.is_natural() && t.frobenius() % 2 != 0 &&
      is_almost_symmetric(t)) {
    check(t, is_almost_canonical(i),
          "almost canonical ideal of an almost symmetric duplication");
  }
  return {s, i};
}

NumericalSemigroup dilatation(const DilatationSpec& spec) {
  const NumericalSemigroup& s = spec.s;
  const Int a = spec.a;
  if (s.is_natural()) fail(Errc::kFullSemigroup, "dilatation of N");
  if (a > kMaxParameter) fail(Errc::kTooLarge, "a must be at most 2^31");
  const RelativeIdeal m = maximal_ideal(s);
  if (a < 1 || !difference(m, sum(m, m)).contains(a)) {
    fail(Errc::kNotInM2M, std::to_string(a) + " is not a positive element of "
                          "M - 2M for <" + s.literal() + ">");
  }

  const Int hi = s.frobenius() + a + 1;
  std::vector<std::uint8_t> window(static_cast<std::size_t>(hi + 1));
  for (Int y = 0; y <= hi; ++y) {
    window[static_cast<std::size_t>(y)] =
        (y == 0 || (y - a >= 1 && s.contains(y - a))) ? 1 : 0;
  }
  const NumericalSemigroup t = recanonicalize(window);

  check(t, t.frobenius() == s.frobenius() + a, "F(S + a) = F(S) + a");
  const RelativeIdeal ks = canonical_ideal(s);
  const RelativeIdeal kt = canonical_ideal(t);
  check(t, sum(kt, kt) == sum(ks, ks), "2K(S + a) = 2K(S)");
  return t;
}

std::vector<GluingParameters> gluing_parameters(const NumericalSemigroup& s1,
                                                const NumericalSemigroup& s2,
                                                std::size_t count) {
  std::vector<GluingParameters> out;
  if (count == 0) return out;
  const Int reach = 4 * (std::max(s1.frobenius(), s2.frobenius()) + 2) +
                    2 * (s1.multiplicity() + s2.multiplicity());
  for (Int a = 2; a <= reach && out.size() < count; ++a) {
    if (!s2.contains(a) || s2.is_minimal_generator(a)) continue;
    for (Int b = 2; b <= 4 * reach && out.size() < count; ++b) {
      if (s1.contains(b) && !s1.is_minimal_generator(b) && std::gcd(a, b) == 1) {
        out.push_back({a, b});
      }
    }
  }
  return out;
}

std::vector<Int> duplication_b_values(const NumericalSemigroup& s,
                                      std::size_t count) {
  std::vector<Int> out;
  for (Int b = 1; out.size() < count; b += 2) {
    if (s.contains(b)) out.push_back(b);
  }
  return out;
}

std::vector<Int> dilatation_a_values(const NumericalSemigroup& s,
                                     std::size_t count) {
  if (s.is_natural()) fail(Errc::kFullSemigroup, "dilatation of N");
  const RelativeIdeal m = maximal_ideal(s);
  const RelativeIdeal m_minus_2m = difference(m, sum(m, m));
  std::vector<Int> out;
  for (Int a = 1; out.size() < count; ++a) {
    if (m_minus_2m.contains(a)) out.push_back(a);
  }
  return out;
}

}  // namespace numsg
