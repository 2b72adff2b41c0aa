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

#include "numsg/ideal.hpp"

#include <algorithm>
#include <sstream>

namespace numsg {

// Normalizes a membership description into the canonical window form.
struct IdealBuilder {
  template <class Pred>
  static RelativeIdeal build(const NumericalSemigroup& ambient, Int lo, Int hi,
                             Pred&& pred) {
    if (hi - lo > 8 * kMaxFrobenius) {
      fail(Errc::kTooLarge, "ideal window too large");
    }
    Int min = hi + 1;
    for (Int x = lo; x <= hi; ++x) {
      if (pred(x)) {
        min = x;
        break;
      }
    }
    Int frobenius = min - 1;
    for (Int x = hi; x > min; --x) {
      if (!pred(x)) {
        frobenius = x;
        break;
      }
    }
    std::vector<std::uint8_t> window(static_cast<std::size_t>(frobenius - min + 1));
    for (Int x = min; x <= frobenius; ++x) {
      window[static_cast<std::size_t>(x - min)] = pred(x) ? 1 : 0;
    }
    return RelativeIdeal(ambient, min, frobenius, std::move(window));
  }

  static RelativeIdeal with_ambient(const RelativeIdeal& i,
                                    const NumericalSemigroup& ambient) {
    return RelativeIdeal(ambient, i.min_, i.frobenius_, i.window_);
  }

  static RelativeIdeal shifted(const RelativeIdeal& i, Int z) {
    return RelativeIdeal(i.ambient_, i.min_ + z, i.frobenius_ + z, i.window_);
  }
};

namespace {

void require_same_ambient(const RelativeIdeal& a, const RelativeIdeal& b) {
  if (!(a.ambient() == b.ambient())) {
    fail(Errc::kAmbientMismatch, "ideals over " + a.ambient().literal() +
                                     " and " + b.ambient().literal());
  }
}

// I + g contained in I for every generator g of `s`.
bool closed_under(const RelativeIdeal& i, const NumericalSemigroup& s) {
  for (Int x = i.min(); x <= i.frobenius(); ++x) {
    if (!i.contains(x)) continue;
    for (Int g : s.minimal_generators()) {
      if (!i.contains(x + g)) return false;
    }
  }
  return true;
}

}  // namespace

RelativeIdeal RelativeIdeal::from_predicate(
    const NumericalSemigroup& ambient, Int lo, Int hi,
    const std::function<bool(Int)>& pred) {
  RelativeIdeal out = IdealBuilder::build(ambient, lo, hi, pred);
  if (!closed_under(out, ambient)) {
    fail(Errc::kNotAnIdeal, out.to_string() + " is not closed under adding " +
                                ambient.literal());
  }
  return out;
}

std::vector<Int> RelativeIdeal::small_members() const {
  std::vector<Int> out;
  for (Int x = min_; x <= frobenius_; ++x) {
    if (contains(x)) out.push_back(x);
  }
  return out;
}

std::string RelativeIdeal::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Int x : small_members()) {
    if (!first) os << ',';
    os << x;
    first = false;
  }
  os << "} " << conductor() << '+';
  return os.str();
}

RelativeIdeal as_ideal(const NumericalSemigroup& s) {
  return IdealBuilder::build(s, 0, s.frobenius(),
                             [&](Int x) { return s.contains(x); });
}

RelativeIdeal maximal_ideal(const NumericalSemigroup& s) {
  return IdealBuilder::build(s, 1, std::max<Int>(s.frobenius(), 1),
                             [&](Int x) { return s.contains(x); });
}

RelativeIdeal ideal_from_generators(const NumericalSemigroup& s,
                                    std::initializer_list<Int> gens) {
  return ideal_from_generators(s, std::span<const Int>(gens.begin(), gens.size()));
}

RelativeIdeal ideal_from_generators(const NumericalSemigroup& s,
                                    std::span<const Int> gens) {
  if (gens.empty()) fail(Errc::kEmptyGenerators, "ideal needs a generator");
  const Int lo = *std::min_element(gens.begin(), gens.end());
  const Int hi = *std::max_element(gens.begin(), gens.end()) + s.frobenius();
  return IdealBuilder::build(s, lo, hi, [&](Int x) {
    return std::any_of(gens.begin(), gens.end(),
                       [&](Int g) { return s.contains(x - g); });
  });
}

RelativeIdeal detail::standard_canonical(const NumericalSemigroup& s) {
  const Int f = s.frobenius();
  return IdealBuilder::build(s, 0, std::max<Int>(f, 0), [&](Int x) {
    return x >= 0 && !s.contains(f - x);
  });
}

RelativeIdeal canonical_ideal(const NumericalSemigroup& s) {
  if (s.is_natural()) fail(Errc::kFullSemigroup, "K(N) is not defined");
  return detail::standard_canonical(s);
}

RelativeIdeal difference(const RelativeIdeal& i, const RelativeIdeal& j) {
  require_same_ambient(i, j);
  // Any x >= F(I) + 1 - min(J) satisfies x + J >= F(I) + 1.
  const Int lo = i.min() - j.min();
  const Int hi = i.frobenius() - j.min();
  return IdealBuilder::build(i.ambient(), lo, hi, [&](Int x) {
    for (Int y = j.min(); y <= i.frobenius() - x; ++y) {
      if (j.contains(y) && !i.contains(x + y)) return false;
    }
    return true;
  });
}

RelativeIdeal sum(const RelativeIdeal& i, const RelativeIdeal& j) {
  require_same_ambient(i, j);
  const std::vector<Int> small = i.small_members();
  const Int lo = i.min() + j.min();
  const Int hi = i.frobenius() + j.frobenius() + 1;
  return IdealBuilder::build(i.ambient(), lo, hi, [&](Int x) {
    if (x - j.min() > i.frobenius()) return true;
    return std::any_of(small.begin(), small.end(),
                       [&](Int a) { return j.contains(x - a); });
  });
}

RelativeIdeal multiple(const RelativeIdeal& i, int n) {
  if (n < 1) fail(Errc::kPreconditionFailed, "multiple needs n >= 1");
  RelativeIdeal out = i;
  for (int k = 1; k < n; ++k) out = sum(out, i);
  return out;
}

RelativeIdeal translate(const RelativeIdeal& i, Int z) {
  return IdealBuilder::shifted(i, z);
}

RelativeIdeal ideal_union(const RelativeIdeal& i, const RelativeIdeal& j) {
  require_same_ambient(i, j);
  return IdealBuilder::build(
      i.ambient(), std::min(i.min(), j.min()),
      std::max(i.frobenius(), j.frobenius()),
      [&](Int x) { return i.contains(x) || j.contains(x); });
}

RelativeIdeal ideal_intersection(const RelativeIdeal& i,
                                 const RelativeIdeal& j) {
  require_same_ambient(i, j);
  return IdealBuilder::build(
      i.ambient(), std::max(i.min(), j.min()),
      std::max(i.frobenius(), j.frobenius()),
      [&](Int x) { return i.contains(x) && j.contains(x); });
}

RelativeIdeal normalize_tilde(const RelativeIdeal& i) {
  RelativeIdeal out =
      translate(i, i.ambient().frobenius() - i.frobenius());
  RelativeIdeal k = detail::standard_canonical(i.ambient());
  if (!is_subset(out, k)) {
    fail(Errc::kInternalInconsistency,
         "normalized ideal " + out.to_string() + " not inside K");
  }
  return out;
}

RelativeIdeal dual(const RelativeIdeal& i) {
  return difference(canonical_ideal(i.ambient()), i);
}

std::vector<Int> set_minus(const RelativeIdeal& i, const RelativeIdeal& j) {
  std::vector<Int> out;
  for (Int x = i.min(); x <= j.frobenius(); ++x) {
    if (i.contains(x) && !j.contains(x)) out.push_back(x);
  }
  return out;
}

bool is_subset(const RelativeIdeal& i, const RelativeIdeal& j) {
  if (i.min() < j.min()) return false;
  for (Int x = i.min(); x <= j.frobenius(); ++x) {
    if (i.contains(x) && !j.contains(x)) return false;
  }
  return true;
}

std::vector<Int> ideal_minimal_generators(const RelativeIdeal& i) {
  return set_minus(i, sum(i, maximal_ideal(i.ambient())));
}

IdealInvariants ideal_invariants(const RelativeIdeal& i) {
  const NumericalSemigroup& s = i.ambient();
  const Int e = s.multiplicity();
  IdealInvariants inv;

  inv.pf = set_minus(difference(i, maximal_ideal(s)), i);
  inv.type = static_cast<Int>(inv.pf.size());

  for (Int x = i.min(); x <= i.conductor() + e; ++x) {
    if (i.contains(x) && !i.contains(x - e)) inv.apery.push_back(x);
  }
  std::vector<Int> from_apery;
  for (Int w : inv.apery) {
    bool maximal = std::none_of(inv.apery.begin(), inv.apery.end(),
                                [&](Int v) { return v != w && s.contains(v - w); });
    if (maximal) from_apery.push_back(w - e);
  }
  if (from_apery != inv.pf || static_cast<Int>(inv.apery.size()) != e) {
    fail(Errc::kInternalInconsistency,
         "PF of " + i.to_string() + " differs between routes");
  }

  const RelativeIdeal tilde = normalize_tilde(i);
  for (Int x = 0; x <= s.frobenius(); ++x) inv.genus += tilde.contains(x) ? 0 : 1;
  return inv;
}

std::vector<RelativeIdeal> detail::canonical_powers(const NumericalSemigroup& s) {
  const RelativeIdeal k = standard_canonical(s);
  std::vector<RelativeIdeal> powers{k};
  for (;;) {
    RelativeIdeal next = sum(powers.back(), k);
    if (next == powers.back()) break;
    powers.push_back(std::move(next));
    if (static_cast<Int>(powers.size()) > s.frobenius() + 2) {
      fail(Errc::kInternalInconsistency,
           "powers of K did not stabilize for " + s.literal());
    }
  }
  return powers;
}

std::vector<PowerGap> power_gaps(const NumericalSemigroup& s) {
  if (s.is_natural()) fail(Errc::kFullSemigroup, "K(N) is not defined");
  const std::vector<RelativeIdeal> powers = detail::canonical_powers(s);
  std::vector<PowerGap> out;
  for (std::size_t n = 1; n < powers.size(); ++n) {
    out.push_back({static_cast<int>(n + 1), set_minus(powers[n], powers[n - 1])});
  }
  return out;
}

RelativeIdeal canonical_closure_ideal(const NumericalSemigroup& s) {
  if (s.is_natural()) fail(Errc::kFullSemigroup, "K(N) is not defined");
  return detail::canonical_powers(s).back();
}

NumericalSemigroup semigroup_generated_by_K(const NumericalSemigroup& s) {
  const RelativeIdeal closure = canonical_closure_ideal(s);
  NumericalSemigroup by_powers = as_semigroup(closure);

  // Independent route: generate from the elements of K directly.
  const RelativeIdeal k = canonical_ideal(s);
  std::vector<Int> gens;
  for (Int x = 1; x <= 2 * s.frobenius() + 1; ++x) {
    if (k.contains(x)) gens.push_back(x);
  }
  NumericalSemigroup by_generators = NumericalSemigroup::from_generators(gens);
  if (!(by_powers == by_generators)) {
    fail(Errc::kInternalInconsistency,
         "<K> differs between routes for " + s.literal());
  }
  return by_powers;
}

NumericalSemigroup as_semigroup(const RelativeIdeal& i) {
  if (i.min() != 0) {
    fail(Errc::kNotASemigroup,
         i.to_string() + (i.min() > 0 ? " does not contain 0"
                                      : " has negative elements"));
  }
  std::vector<std::uint8_t> window(static_cast<std::size_t>(i.conductor() + 1));
  for (Int x = 0; x <= i.conductor(); ++x) {
    window[static_cast<std::size_t>(x)] = i.contains(x) ? 1 : 0;
  }
  return NumericalSemigroup::from_member_window(window);
}

RelativeIdeal rebase(const RelativeIdeal& i, const NumericalSemigroup& ambient) {
  RelativeIdeal out = IdealBuilder::with_ambient(i, ambient);
  if (!closed_under(out, ambient)) {
    fail(Errc::kNotAnIdeal,
         i.to_string() + " is not an ideal of " + ambient.literal());
  }
  return out;
}

}  // namespace numsg
