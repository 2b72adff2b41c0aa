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

#include "numsg/classify.hpp"

#include <algorithm>
#include <sstream>

#include "numsg/enumerate.hpp"

namespace numsg {

namespace {

void require_proper(const NumericalSemigroup& s, const char* what) {
  if (s.is_natural()) {
    fail(Errc::kFullSemigroup, std::string(what) + " is not defined for N");
  }
}

[[noreturn]] void inconsistent(const NumericalSemigroup& s,
                               const std::string& what) {
  fail(Errc::kInternalInconsistency, what + " for <" + s.literal() + ">");
}

bool has(const std::vector<Int>& sorted, Int x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

// a == b u {0} as sets of integers.
bool equals_with_zero(const RelativeIdeal& a, const RelativeIdeal& b) {
  const Int lo = std::min({a.min(), b.min(), Int{0}}) - 1;
  const Int hi = std::max(a.frobenius(), b.frobenius()) + 1;
  for (Int x = lo; x <= hi; ++x) {
    if (a.contains(x) != (x == 0 || b.contains(x))) return false;
  }
  return true;
}

std::vector<Int> two_k_gap_any(const NumericalSemigroup& s) {
  const RelativeIdeal k = detail::standard_canonical(s);
  return set_minus(sum(k, k), k);
}

// x != 0 with F - x in 2K \ K.
std::vector<Int> gap_offsets(const NumericalSemigroup& s,
                             const std::vector<Int>& gap) {
  std::vector<Int> xs;
  for (Int y : gap) {
    if (y != s.frobenius()) xs.push_back(s.frobenius() - y);
  }
  std::sort(xs.begin(), xs.end());
  return xs;
}

GasResult gas_by_definition(const NumericalSemigroup& s) {
  const std::vector<Int> gap = two_k_gap_any(s);
  GasResult out;
  if (gap.empty()) {
    out.gas = true;
    return out;
  }
  if (!has(gap, s.frobenius())) inconsistent(s, "F(S) missing from 2K \\ K");
  out.witness.generators_x = gap_offsets(s, gap);
  const auto& xs = out.witness.generators_x;
  for (Int x : xs) {
    if (!s.is_minimal_generator(x)) {
      out.witness.failure = GasFailureKind::kNotMinimalGenerator;
      out.witness.first = x;
      return out;
    }
  }
  const auto& pf = s.pseudo_frobenius_numbers();
  for (Int xi : xs) {
    for (Int xj : xs) {
      if (has(pf, xi - xj)) {
        out.witness.failure = GasFailureKind::kPairDifferenceInPF;
        out.witness.first = xi;
        out.witness.second = xj;
        return out;
      }
    }
  }
  out.gas = true;
  return out;
}

}  // namespace

std::string to_string(const GasWitness& w) {
  std::ostringstream os;
  switch (w.failure) {
    case GasFailureKind::kNone:
      os << "None";
      break;
    case GasFailureKind::kNotMinimalGenerator:
      os << "NotMinimalGenerator(" << w.first << ')';
      break;
    case GasFailureKind::kPairDifferenceInPF:
      os << "PairDifferenceInPF(" << w.first << ',' << w.second << ')';
      break;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Routes

routes::Symmetric routes::symmetric(const NumericalSemigroup& s) {
  return {as_ideal(s) == detail::standard_canonical(s), s.type() == 1,
          2 * s.genus() == s.frobenius() + 1};
}

routes::AlmostSymmetric routes::almost_symmetric(const NumericalSemigroup& s) {
  const RelativeIdeal k = detail::standard_canonical(s);
  const RelativeIdeal m = maximal_ideal(s);
  const RelativeIdeal k_and_f =
      ideal_union(k, ideal_from_generators(s, {s.frobenius()}));
  const auto& pf = s.pseudo_frobenius_numbers();
  bool l_in_pf = true;
  for (Int x : second_type_gaps(s)) l_in_pf = l_in_pf && has(pf, x);
  return {difference(as_ideal(s), m) == k_and_f,
          2 * s.genus() == s.frobenius() + s.type(), l_in_pf};
}

routes::Gas routes::gas(const NumericalSemigroup& s) {
  routes::Gas out;
  out.definition = gas_by_definition(s);

  const RelativeIdeal self = as_ideal(s);
  const RelativeIdeal k = detail::standard_canonical(s);
  const RelativeIdeal m = maximal_ideal(s);
  const RelativeIdeal s_minus_k = difference(self, k);
  const RelativeIdeal m_minus_m = difference(m, m);

  const std::vector<Int> outside = set_minus(m, s_minus_k);
  out.pair_differences = true;
  for (Int x : outside) {
    for (Int y : outside) {
      if (x != y && m_minus_m.contains(x - y)) out.pair_differences = false;
    }
  }

  out.s_minus_k = self == k ||
                  (is_subset(sum(m, m), s_minus_k) && is_subset(s_minus_k, m) &&
                   equals_with_zero(m_minus_m, difference(s_minus_k, m)));

  out.mme_almost_canonical = almost_canonical(mme_ideal(s))[0];
  return out;
}

routes::NearlyGorenstein routes::nearly_gorenstein(const NumericalSemigroup& s) {
  const RelativeIdeal k = detail::standard_canonical(s);
  const RelativeIdeal m = maximal_ideal(s);
  const RelativeIdeal s_minus_k = difference(as_ideal(s), k);
  routes::NearlyGorenstein out;
  out.trace = is_subset(m, sum(k, s_minus_k));

  const auto& pf = s.pseudo_frobenius_numbers();
  out.generator_criterion = std::all_of(
      s.minimal_generators().begin(), s.minimal_generators().end(),
      [&](Int y) {
        return std::any_of(pf.begin(), pf.end(), [&](Int g) {
          return std::all_of(pf.begin(), pf.end(), [&](Int h) {
            return h == g || s.contains(g + y - h);
          });
        });
      });

  if (s.type() == 2 && !almost_symmetric(s).definition &&
      gas_by_definition(s).gas) {
    const Int f = pf[0];
    out.type2_formula = s.contains(3 * f - 2 * s.frobenius());
  }
  return out;
}

routes::CanonicalReduction routes::canonical_reduction(
    const NumericalSemigroup& s) {
  const Int e = s.multiplicity();
  const Int f = s.frobenius();
  routes::CanonicalReduction out;
  out.gap_scan = true;
  for (Int g : s.gaps()) out.gap_scan = out.gap_scan && s.contains(e + f - g);
  out.e_in_s_minus_k =
      difference(as_ideal(s), detail::standard_canonical(s)).contains(e);
  return out;
}

routes::AglLevel routes::agl_level(const NumericalSemigroup& s) {
  routes::AglLevel out{0, 0};
  for (const PowerGap& g : power_gaps(s)) {
    out.from_powers += static_cast<Int>(g.elements.size());
  }
  out.from_closure = static_cast<Int>(
      set_minus(as_ideal(semigroup_generated_by_K(s)), canonical_ideal(s))
          .size());
  return out;
}

std::array<bool, 5> routes::almost_canonical(const RelativeIdeal& i) {
  const NumericalSemigroup& s = i.ambient();
  const Int f = s.frobenius();
  const RelativeIdeal k = detail::standard_canonical(s);
  const RelativeIdeal m = maximal_ideal(s);
  const RelativeIdeal tilde = normalize_tilde(i);
  const RelativeIdeal tilde_minus_m = difference(tilde, m);
  const IdealInvariants inv = ideal_invariants(i);
  const auto& pf = s.pseudo_frobenius_numbers();

  std::array<bool, 5> c{};
  c[0] = tilde_minus_m == ideal_union(k, ideal_from_generators(s, {f}));
  c[1] = inv.genus + s.genus() == f + inv.type;
  c[2] = tilde_minus_m == difference(k, m);
  c[3] = is_subset(difference(k, difference(m, m)), tilde);
  c[4] = std::all_of(inv.pf.begin(), inv.pf.end(), [&](Int x) {
    return x == i.frobenius() || has(pf, i.frobenius() - x);
  });
  return c;
}

bool routes::mme_canonical(const NumericalSemigroup& s) {
  const RelativeIdeal i = mme_ideal(s);
  return normalize_tilde(i) == detail::standard_canonical(i.ambient());
}

// ---------------------------------------------------------------------------
// Predicates

RelativeIdeal mme_ideal(const NumericalSemigroup& s) {
  require_proper(s, "M - e");
  const RelativeIdeal m = maximal_ideal(s);
  const NumericalSemigroup mm = as_semigroup(difference(m, m));
  return rebase(translate(m, -s.multiplicity()), mm);
}

bool is_symmetric(const NumericalSemigroup& s) {
  require_proper(s, "symmetry");
  const auto r = routes::symmetric(s);
  if (r.equals_canonical != r.type_one || r.type_one != r.genus_formula) {
    inconsistent(s, "symmetry characterizations disagree");
  }
  return r.equals_canonical;
}

bool is_almost_symmetric(const NumericalSemigroup& s) {
  require_proper(s, "almost symmetry");
  const auto r = routes::almost_symmetric(s);
  if (r.definition != r.genus_type || r.genus_type != r.second_type_gaps) {
    inconsistent(s, "almost-symmetry characterizations disagree");
  }
  return r.definition;
}

bool is_pseudo_symmetric(const NumericalSemigroup& s) {
  require_proper(s, "pseudo-symmetry");
  const Int f = s.frobenius();
  const bool by_gaps =
      f % 2 == 0 && second_type_gaps(s) == std::vector<Int>{f / 2};
  const bool by_type = f % 2 == 0 && s.type() == 2 && is_almost_symmetric(s);
  if (by_gaps != by_type) {
    inconsistent(s, "pseudo-symmetry characterizations disagree");
  }
  return by_gaps;
}

std::vector<Int> two_k_gap(const NumericalSemigroup& s) {
  require_proper(s, "2K \\ K");
  return two_k_gap_any(s);
}

Int agl_level(const NumericalSemigroup& s) {
  require_proper(s, "AGL level");
  const auto r = routes::agl_level(s);
  if (r.from_powers != r.from_closure) {
    inconsistent(s, "AGL level differs between routes");
  }
  const Int level = r.from_powers;
  const bool symmetric = is_symmetric(s);
  const bool almost = is_almost_symmetric(s);
  if ((level == 0) != symmetric || (level == 1) != (almost && !symmetric)) {
    inconsistent(s, "AGL level 0/1 does not match (almost) symmetry");
  }
  const auto powers = detail::canonical_powers(s);
  const bool two_agl_shape =
      powers.size() == 2 && set_minus(powers[1], powers[0]).size() == 2;
  if ((level == 2) != two_agl_shape) {
    inconsistent(s, "2-AGL does not match 2K = 3K with |2K \\ K| = 2");
  }
  return level;
}

GasResult is_gas(const NumericalSemigroup& s) {
  require_proper(s, "GAS");
  const auto r = routes::gas(s);
  const bool gas = r.definition.gas;
  if (gas != r.pair_differences || gas != r.s_minus_k) {
    inconsistent(s, "GAS characterizations disagree");
  }
  if (gas != r.mme_almost_canonical) {
    inconsistent(s, "GAS does not match M - e almost canonical in M - M");
  }
  return r.definition;
}

std::vector<GasStructureEntry> gas_structure(const NumericalSemigroup& s) {
  if (!is_gas(s).gas) fail(Errc::kNotGas, "<" + s.literal() + "> is not GAS");
  std::vector<GasStructureEntry> out;
  if (is_symmetric(s)) return out;

  const Int f = s.frobenius();
  for (Int y : set_minus(canonical_closure_ideal(s), canonical_ideal(s))) {
    const Int x = f - y;
    if (x != 0 && !s.is_minimal_generator(x)) {
      inconsistent(s, "element F - " + std::to_string(x) +
                          " of <K> \\ K has x not a minimal generator");
    }
    out.push_back({y, x});
  }
  const auto& pf = s.pseudo_frobenius_numbers();
  for (const auto& a : out) {
    for (const auto& b : out) {
      if (has(pf, a.x - b.x)) {
        inconsistent(s, "difference of generators in <K> \\ K lies in PF");
      }
    }
  }
  return out;
}

bool pf_pairing_check(const NumericalSemigroup& s) {
  require_proper(s, "PF pairing");
  const Int f = s.frobenius();
  const auto& pf = s.pseudo_frobenius_numbers();
  const std::vector<Int> xs = gap_offsets(s, two_k_gap_any(s));

  const bool sums = std::all_of(xs.begin(), xs.end(), [&](Int x) {
    return std::any_of(pf.begin(), pf.end(),
                       [&](Int a) { return has(pf, f + x - a); });
  });
  const bool complements = std::all_of(pf.begin(), pf.end(), [&](Int g) {
    if (g == f || has(pf, f - g)) return true;
    return std::any_of(xs.begin(), xs.end(),
                       [&](Int x) { return has(pf, f - g + x); });
  });
  const bool holds = sums && complements;
  if (!holds && is_gas(s).gas) {
    inconsistent(s, "GAS semigroup fails the PF pairing");
  }
  return holds;
}

bool is_almost_canonical(const RelativeIdeal& i) {
  require_proper(i.ambient(), "almost canonical");
  const auto c = routes::almost_canonical(i);
  if (!std::all_of(c.begin(), c.end(), [&](bool b) { return b == c[0]; })) {
    inconsistent(i.ambient(), "almost-canonical conditions disagree on " +
                                  i.to_string());
  }
  return c[0];
}

bool ideal_type_bound_check(const NumericalSemigroup& s) {
  require_proper(s, "ideal type bound");
  const IdealFamily family = almost_canonical_ideals(s);
  return std::all_of(family.members.begin(), family.members.end(),
                     [&](const IdealFamily::Member& m) {
                       return m.type >= 1 && m.type <= s.type() + 1;
                     });
}

Type2Profile gas_type2_profile(const NumericalSemigroup& s) {
  require_proper(s, "type-2 profile");
  if (s.type() != 2 || is_almost_symmetric(s)) {
    fail(Errc::kPreconditionFailed,
         "<" + s.literal() + "> must have type 2 and not be almost symmetric");
  }
  const Int f = s.pseudo_frobenius_numbers()[0];
  const Int frob = s.frobenius();
  const Int x = 2 * f - frob;
  Type2Profile out;
  out.gas = x > 0 && s.is_minimal_generator(x);
  if (out.gas != is_gas(s).gas) {
    inconsistent(s, "type-2 GAS criterion F = 2f - x disagrees with GAS");
  }
  if (!out.gas) return out;

  Int n = 1;
  while (!s.contains(n * (frob - f))) ++n;
  out.n = n;
  for (const PowerGap& g : power_gaps(s)) {
    out.power_gap_sizes.push_back(static_cast<Int>(g.elements.size()));
  }
  std::vector<Int> expected{2};
  for (Int i = 3; i < n; ++i) expected.push_back(1);
  if (out.power_gap_sizes != expected) {
    inconsistent(s, "type-2 GAS power gaps do not follow |2K\\K|=2, then 1s");
  }
  return out;
}

bool is_nearly_gorenstein(const NumericalSemigroup& s) {
  require_proper(s, "nearly Gorenstein");
  const auto r = routes::nearly_gorenstein(s);
  if (r.trace != r.generator_criterion ||
      (r.type2_formula && *r.type2_formula != r.trace)) {
    inconsistent(s, "nearly Gorenstein characterizations disagree");
  }
  return r.trace;
}

bool has_canonical_reduction(const NumericalSemigroup& s) {
  require_proper(s, "canonical reduction");
  const auto r = routes::canonical_reduction(s);
  if (r.gap_scan != r.e_in_s_minus_k) {
    inconsistent(s, "canonical reduction characterizations disagree");
  }
  return r.gap_scan;
}

GglResult is_ggl(const NumericalSemigroup& s) {
  require_proper(s, "GGL");
  if (is_symmetric(s)) return {true, std::nullopt};

  // Condition (1): f_i + f_{t-i} = F + x for i = 1 .. ceil(t/2).
  const auto& pf = s.pseudo_frobenius_numbers();
  const std::size_t t = pf.size();
  const Int x = pf[0] + pf[t - 2] - s.frobenius();
  bool paired = s.contains(x);
  for (std::size_t i = 1; i <= (t + 1) / 2; ++i) {
    paired = paired && pf[i - 1] + pf[t - i - 1] == s.frobenius() + x;
  }

  // Condition (2): ((c - M) n S) \ c = {x} with c = S - <K>.
  const RelativeIdeal c = difference(as_ideal(s), canonical_closure_ideal(s));
  const RelativeIdeal c_minus_m = difference(c, maximal_ideal(s));
  std::vector<Int> extra;
  for (Int y = 0; y <= c.frobenius(); ++y) {
    if (c_minus_m.contains(y) && s.contains(y) && !c.contains(y)) {
      extra.push_back(y);
    }
  }
  if (paired && extra == std::vector<Int>{x}) return {true, x};
  return {false, std::nullopt};
}

Int mme_type_formula(const NumericalSemigroup& s) {
  require_proper(s, "type of M - e");
  if (!is_gas(s).gas) fail(Errc::kNotGas, "<" + s.literal() + "> is not GAS");
  const Int direct = ideal_invariants(mme_ideal(s)).type;
  const Int formula = 2 * s.genus() + 1 - s.type() - s.frobenius();
  if (direct != formula) {
    inconsistent(s, "t(M - e) = " + std::to_string(direct) +
                        " but 2g + 1 - t - F = " + std::to_string(formula));
  }
  return direct;
}

bool second_type_gap_lemma_check(const NumericalSemigroup& s) {
  require_proper(s, "L(S) lemma");
  const std::vector<Int> xs = gap_offsets(s, two_k_gap_any(s));
  if (!std::all_of(xs.begin(), xs.end(),
                   [&](Int x) { return s.is_minimal_generator(x); })) {
    return true;
  }
  const Int f = s.frobenius();
  const auto& pf = s.pseudo_frobenius_numbers();
  for (Int x : second_type_gaps(s)) {
    if (has(pf, f - x)) continue;
    const bool shifted = std::any_of(xs.begin(), xs.end(),
                                     [&](Int xi) { return has(pf, f - x + xi); });
    if (!has(pf, x) || !shifted) return false;
  }
  return true;
}

bool is_double_plus_odd_gluing(const NumericalSemigroup& t) {
  if (t.is_natural()) return false;
  Int b = 1;
  while (!t.contains(b)) b += 2;
  const Int bound = t.frobenius() / 2 + 1;
  std::vector<std::uint8_t> half(static_cast<std::size_t>(bound + 1));
  for (Int y = 0; y <= bound; ++y) {
    half[static_cast<std::size_t>(y)] = t.contains(2 * y) ? 1 : 0;
  }
  const NumericalSemigroup s = NumericalSemigroup::from_member_window(half);
  if (s.is_natural() || !s.contains(b)) return false;
  std::vector<Int> gens;
  for (Int g : s.minimal_generators()) gens.push_back(2 * g);
  gens.push_back(b);
  if (!(NumericalSemigroup::from_generators(gens) == t)) return false;
  return is_almost_symmetric(s) && !is_symmetric(s);
}

}  // namespace numsg
