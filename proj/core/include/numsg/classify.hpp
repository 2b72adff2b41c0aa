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

#ifndef NUMSG_CLASSIFY_HPP_
#define NUMSG_CLASSIFY_HPP_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "numsg/ideal.hpp"
#include "numsg/semigroup.hpp"

namespace numsg {

// Classification predicates for numerical semigroups and their ideals.
//
// Each predicate is decided by every independent characterization available
// and the answers are compared; a disagreement is a failed theorem and throws
// InternalInconsistency. The individual characterizations live in
// numsg::routes so the corpus verifier can evaluate them separately.
//
// All predicates taking a semigroup throw FullSemigroup for N.

enum class GasFailureKind { kNone, kNotMinimalGenerator, kPairDifferenceInPF };

struct GasWitness {
  // The x != 0 with F(S) - x in 2K \ K, ascending.
  std::vector<Int> generators_x;
  GasFailureKind failure = GasFailureKind::kNone;
  // NotMinimalGenerator(first) or PairDifferenceInPF(first, second).
  Int first = 0;
  Int second = 0;

  friend bool operator==(const GasWitness&, const GasWitness&) = default;
};

std::string to_string(const GasWitness& w);

struct GasResult {
  bool gas = false;
  GasWitness witness;
};

struct GasStructureEntry {
  Int element;  // member of <K> \ K
  Int x;        // element = F(S) - x, with x = 0 or a minimal generator
};

struct Type2Profile {
  bool gas = false;
  std::optional<Int> n;                // least n with n(F(S) - f) in S
  std::vector<Int> power_gap_sizes;    // |iK \ (i-1)K| for i = 2 .. n-1
};

struct GglResult {
  bool ggl = false;
  std::optional<Int> x;
};

bool is_symmetric(const NumericalSemigroup& s);
bool is_almost_symmetric(const NumericalSemigroup& s);
bool is_pseudo_symmetric(const NumericalSemigroup& s);

// |<K> \ K|.
Int agl_level(const NumericalSemigroup& s);

// 2K \ K, ascending.
std::vector<Int> two_k_gap(const NumericalSemigroup& s);

GasResult is_gas(const NumericalSemigroup& s);

// <K> \ K with each element written as F(S) - x. Returns an empty list for
// symmetric input; throws NotGas when S is not GAS.
std::vector<GasStructureEntry> gas_structure(const NumericalSemigroup& s);

// For 2K \ K = {F - x_1, ..., F - x_r, F}:
//  (1) each F + x_i is a sum of two pseudo-Frobenius numbers, and
//  (2) each f in PF \ {F} has F - f or some F - f + x_i in PF.
bool pf_pairing_check(const NumericalSemigroup& s);

// Ideal I of S (S != N) with I~ - M = K u {F(S)}.
bool is_almost_canonical(const RelativeIdeal& i);

// Every almost canonical ideal with Frobenius number F(S) has
// 1 <= t(I) <= t(S) + 1.
bool ideal_type_bound_check(const NumericalSemigroup& s);

// Requires t(S) = 2 and S not almost symmetric (PreconditionFailed).
Type2Profile gas_type2_profile(const NumericalSemigroup& s);

bool is_nearly_gorenstein(const NumericalSemigroup& s);
bool has_canonical_reduction(const NumericalSemigroup& s);
GglResult is_ggl(const NumericalSemigroup& s);

// t(M - e) as an ideal of M - M, checked against 2g(S) + 1 - t(S) - F(S).
// Throws NotGas.
Int mme_type_formula(const NumericalSemigroup& s);

// M - e as a relative ideal of the semigroup M - M.
RelativeIdeal mme_ideal(const NumericalSemigroup& s);

// For S with 2K \ K made of F - x_i with x_i minimal generators: every
// x in L(S) with F - x outside PF(S) is itself in PF(S), as is F - x + x_i
// for some i. Returns true when the hypothesis does not apply.
bool second_type_gap_lemma_check(const NumericalSemigroup& s);

// True when T = <2S, b> for S = T/2 almost symmetric but not symmetric and b
// the least odd element of T.
bool is_double_plus_odd_gluing(const NumericalSemigroup& t);

namespace routes {

struct Symmetric {
  bool equals_canonical;  // S = K
  bool type_one;          // t(S) = 1
  bool genus_formula;     // 2g(S) = F(S) + 1
};

struct AlmostSymmetric {
  bool definition;        // S - M = K u {F(S)}
  bool genus_type;        // 2g(S) = F(S) + t(S)
  bool second_type_gaps;  // L(S) within PF(S)
};

struct Gas {
  GasResult definition;
  bool pair_differences;      // x - y not in M - M on M \ (S - K)
  bool s_minus_k;             // symmetric, or 2M in S-K in M with M-M = ((S-K)-M) u {0}
  bool mme_almost_canonical;  // M - e almost canonical in M - M
};

struct NearlyGorenstein {
  bool trace;                       // M inside K + (S - K)
  bool generator_criterion;         // per-minimal-generator PF test
  std::optional<bool> type2_formula;  // 3f - 2F(S) in S, GAS type 2 only
};

struct CanonicalReduction {
  bool gap_scan;        // e + F(S) - g in S for every gap g
  bool e_in_s_minus_k;  // e in S - K
};

struct AglLevel {
  Int from_powers;
  Int from_closure;
};

Symmetric symmetric(const NumericalSemigroup& s);
AlmostSymmetric almost_symmetric(const NumericalSemigroup& s);
Gas gas(const NumericalSemigroup& s);
NearlyGorenstein nearly_gorenstein(const NumericalSemigroup& s);
CanonicalReduction canonical_reduction(const NumericalSemigroup& s);
AglLevel agl_level(const NumericalSemigroup& s);

// The five equivalent almost-canonical conditions, in order:
// I~ - M = K u {F}; g(I) + g(S) = F + t(I); I~ - M = K - M;
// K - (M - M) inside I~; F(I) - x in PF(S) for x in PF(I) \ {F(I)}.
// Also defined over the ambient N, using F(N) = -1 and PF(N) = {-1}.
std::array<bool, 5> almost_canonical(const RelativeIdeal& i);

// M - e is a canonical ideal of M - M.
bool mme_canonical(const NumericalSemigroup& s);

}  // namespace routes

}  // namespace numsg

#endif  // NUMSG_CLASSIFY_HPP_
