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

#include "numsg/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>

#include "numsg/classify.hpp"

namespace numsg {

namespace {

[[noreturn]] void inconsistent(const NumericalSemigroup& s,
                               const std::string& what) {
  fail(Errc::kInternalInconsistency, what + " for <" + s.literal() + ">");
}

bool all_agree(const std::array<bool, 5>& c) {
  return std::all_of(c.begin(), c.end(), [&](bool b) { return b == c[0]; });
}

}  // namespace

IdealFamily almost_canonical_ideals(const NumericalSemigroup& s) {
  if (s.is_natural()) {
    fail(Errc::kFullSemigroup, "N has no almost canonical ideal family");
  }
  const RelativeIdeal k = canonical_ideal(s);
  const RelativeIdeal m = maximal_ideal(s);
  const RelativeIdeal base = difference(k, difference(m, m));
  std::vector<Int> free = set_minus(k, base);
  const Int t = s.type();
  if (static_cast<Int>(free.size()) != t) {
    inconsistent(s, "|K \\ (K - (M - M))| differs from the type");
  }
  if (t >= 30) fail(Errc::kTooLarge, "type too large to enumerate 2^t ideals");

  IdealFamily out{s, base, k, free, {}};
  const std::uint64_t count = std::uint64_t{1} << t;
  out.members.reserve(static_cast<std::size_t>(count));
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<Int> subset;
    for (std::size_t bit = 0; bit < free.size(); ++bit) {
      if (mask & (std::uint64_t{1} << bit)) subset.push_back(free[bit]);
    }
    const auto in_set = [&](Int x) {
      return base.contains(x) ||
             std::binary_search(subset.begin(), subset.end(), x);
    };
    RelativeIdeal ideal = [&] {
      try {
        return RelativeIdeal::from_predicate(s, std::min(base.min(), k.min()),
                                             k.frobenius(), in_set);
      } catch (const Error& e) {
        if (e.code() != Errc::kNotAnIdeal) throw;
        fail(Errc::kSubsetNotIdeal,
             "base u A is not an ideal of <" + s.literal() + ">");
      }
    }();
    const Int type = t + 1 - static_cast<Int>(subset.size());
    if (ideal_invariants(ideal).type != type) {
      inconsistent(s, "type of " + ideal.to_string() + " is not t + 1 - |A|");
    }
    out.members.push_back({std::move(subset), std::move(ideal), type});
  }
  return out;
}

ExhaustiveScan scan_for_missing_almost_canonical(const IdealFamily& family) {
  const NumericalSemigroup& s = family.ambient;
  const Int f = s.frobenius();
  ExhaustiveScan out;

  auto consider = [&](const RelativeIdeal& candidate) {
    ++out.ideals_checked;
    const auto c = routes::almost_canonical(candidate);
    if (!all_agree(c)) {
      inconsistent(s, "almost-canonical conditions disagree on " +
                          candidate.to_string());
    }
    if (!c[0]) return;
    const RelativeIdeal tilde = normalize_tilde(candidate);
    const bool listed = std::any_of(
        family.members.begin(), family.members.end(),
        [&](const IdealFamily::Member& m) { return m.ideal == tilde; });
    if (!listed) out.outside_family.push_back(tilde.to_string());
  };

  // Every subset Y of K n [0, F] with Y u [F+1, oo) closed under S.
  const std::vector<Int> small_k = family.top.small_members();
  if (small_k.size() > 24) fail(Errc::kTooLarge, "canonical ideal too large");
  const std::uint64_t count = std::uint64_t{1} << small_k.size();
  const auto& gens = s.minimal_generators();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<std::uint8_t> in(static_cast<std::size_t>(f + 1));
    for (std::size_t bit = 0; bit < small_k.size(); ++bit) {
      if (mask & (std::uint64_t{1} << bit)) {
        in[static_cast<std::size_t>(small_k[bit])] = 1;
      }
    }
    const auto member = [&](Int x) {
      return x > f || (x >= 0 && in[static_cast<std::size_t>(x)] != 0);
    };
    bool closed = true;
    for (std::size_t bit = 0; bit < small_k.size() && closed; ++bit) {
      if (!(mask & (std::uint64_t{1} << bit))) continue;
      for (Int g : gens) closed = closed && member(small_k[bit] + g);
    }
    if (!closed) continue;
    consider(RelativeIdeal::from_predicate(s, 0, f, member));
  }

  // Ideals generated by {0, a, b}.
  const Int top = f + s.multiplicity();
  for (Int a = 1; a <= top; ++a) {
    for (Int b = a + 1; b <= top; ++b) {
      consider(ideal_from_generators(s, {0, a, b}));
    }
  }
  return out;
}

std::vector<RelativeIdeal> standard_ideals(const NumericalSemigroup& s) {
  const RelativeIdeal self = as_ideal(s);
  const RelativeIdeal m = maximal_ideal(s);
  const RelativeIdeal k = canonical_ideal(s);
  const RelativeIdeal closure = canonical_closure_ideal(s);
  std::vector<RelativeIdeal> out{self,
                                 m,
                                 k,
                                 sum(m, m),
                                 difference(m, m),
                                 difference(self, k),
                                 difference(k, m),
                                 closure,
                                 difference(self, closure),
                                 translate(m, -s.multiplicity())};
  for (Int gap : s.gaps()) out.push_back(ideal_from_generators(s, {0, gap}));
  for (auto& member : almost_canonical_ideals(s).members) {
    out.push_back(std::move(member.ideal));
  }
  return out;
}

std::vector<NumericalSemigroup> genus_tree_children(
    const NumericalSemigroup& s) {
  std::vector<NumericalSemigroup> out;
  for (Int g : s.minimal_generators()) {
    if (g <= s.frobenius()) continue;
    std::vector<std::uint8_t> window(static_cast<std::size_t>(g + 1));
    for (Int x = 0; x < g; ++x) {
      window[static_cast<std::size_t>(x)] = s.contains(x) ? 1 : 0;
    }
    out.push_back(NumericalSemigroup::from_member_window(window));
  }
  return out;
}

Corpus genus_tree(int max_genus) {
  Corpus corpus;
  corpus.max_genus = max_genus;
  if (max_genus < 0) return corpus;
  std::function<void(const NumericalSemigroup&)> visit =
      [&](const NumericalSemigroup& s) {
        corpus.semigroups.push_back(s);
        if (s.genus() >= max_genus) return;
        for (const NumericalSemigroup& child : genus_tree_children(s)) {
          visit(child);
        }
      };
  visit(NumericalSemigroup());
  return corpus;
}

std::vector<Int> per_genus_counts(const Corpus& corpus) {
  std::vector<Int> counts(static_cast<std::size_t>(std::max(corpus.max_genus, 0) + 1));
  for (const NumericalSemigroup& s : corpus.semigroups) {
    ++counts[static_cast<std::size_t>(s.genus())];
  }
  return counts;
}

}  // namespace numsg
