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

#ifndef NUMSG_IDEAL_HPP_
#define NUMSG_IDEAL_HPP_

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "numsg/semigroup.hpp"

namespace numsg {

// A relative ideal I of a numerical semigroup S: a subset of Z, bounded
// below, with I + S contained in I.
//
// Stored as a membership table over [min(I), F(I)], where F(I) is the largest
// integer outside I; everything above F(I) belongs to I. When I is a translate
// of N the table is empty and F(I) = min(I) - 1.
//
// Equality is extensional: two ideals compare equal when they contain the
// same integers, whatever their ambient semigroups.
class RelativeIdeal {
 public:
  // Members are {x in [lo, hi] : pred(x)} together with every x > hi.
  // Throws NotAnIdeal when the set is not closed under adding `ambient`.
  static RelativeIdeal from_predicate(const NumericalSemigroup& ambient,
                                      Int lo, Int hi,
                                      const std::function<bool(Int)>& pred);

  const NumericalSemigroup& ambient() const noexcept { return ambient_; }

  bool contains(Int x) const noexcept {
    if (x < min_) return false;
    if (x > frobenius_) return true;
    return window_[static_cast<std::size_t>(x - min_)] != 0;
  }

  Int min() const noexcept { return min_; }
  Int frobenius() const noexcept { return frobenius_; }
  Int conductor() const noexcept { return frobenius_ + 1; }

  // Members in [min(I), F(I)], ascending.
  std::vector<Int> small_members() const;

  // "{0,4,5,6,9,10,13,14,15} 17+"
  std::string to_string() const;

  friend bool operator==(const RelativeIdeal& a,
                         const RelativeIdeal& b) noexcept {
    return a.min_ == b.min_ && a.frobenius_ == b.frobenius_ &&
           a.window_ == b.window_;
  }

 private:
  friend struct IdealBuilder;

  RelativeIdeal(NumericalSemigroup ambient, Int min, Int frobenius,
                std::vector<std::uint8_t> window)
      : ambient_(std::move(ambient)),
        min_(min),
        frobenius_(frobenius),
        window_(std::move(window)) {}

  NumericalSemigroup ambient_;
  Int min_;
  Int frobenius_;
  std::vector<std::uint8_t> window_;
};

struct IdealInvariants {
  std::vector<Int> pf;      // PF(I) = (I - M) \ I
  Int type = 0;             // t(I) = |PF(I)|
  Int genus = 0;            // g(I) = |N \ I~|
  std::vector<Int> apery;   // Ap(I) = {i in I : i - e not in I}, ascending
};

struct PowerGap {
  int n;                     // nK \ (n-1)K
  std::vector<Int> elements;
};

// S as an ideal of itself.
RelativeIdeal as_ideal(const NumericalSemigroup& s);

// M = S \ {0}.
RelativeIdeal maximal_ideal(const NumericalSemigroup& s);

// The union of g + S over the given generators.
RelativeIdeal ideal_from_generators(const NumericalSemigroup& s,
                                    std::span<const Int> gens);
RelativeIdeal ideal_from_generators(const NumericalSemigroup& s,
                                    std::initializer_list<Int> gens);

// K(S) = {x in N : F(S) - x not in S}. Throws FullSemigroup for N.
RelativeIdeal canonical_ideal(const NumericalSemigroup& s);

// I - J = {x : x + J contained in I}. Throws AmbientMismatch.
RelativeIdeal difference(const RelativeIdeal& i, const RelativeIdeal& j);

// I + J = {i + j}. Throws AmbientMismatch.
RelativeIdeal sum(const RelativeIdeal& i, const RelativeIdeal& j);

// nI = I + ... + I, n >= 1.
RelativeIdeal multiple(const RelativeIdeal& i, int n);

RelativeIdeal translate(const RelativeIdeal& i, Int z);
RelativeIdeal ideal_union(const RelativeIdeal& i, const RelativeIdeal& j);
RelativeIdeal ideal_intersection(const RelativeIdeal& i,
                                 const RelativeIdeal& j);

// I~ = I + (F(S) - F(I)); always contained in K(S).
RelativeIdeal normalize_tilde(const RelativeIdeal& i);

// K - I.
RelativeIdeal dual(const RelativeIdeal& i);

// The finite set I \ J, ascending.
std::vector<Int> set_minus(const RelativeIdeal& i, const RelativeIdeal& j);
bool is_subset(const RelativeIdeal& i, const RelativeIdeal& j);

// Elements of I not in I + M.
std::vector<Int> ideal_minimal_generators(const RelativeIdeal& i);

// PF, type, genus and Apery set of I. The pseudo-Frobenius numbers are
// computed both as (I - M) \ I and from the maximal Apery elements; a
// disagreement throws InternalInconsistency.
IdealInvariants ideal_invariants(const RelativeIdeal& i);

// Successive nK \ (n-1)K for n = 2, 3, ... until the powers stabilize.
std::vector<PowerGap> power_gaps(const NumericalSemigroup& s);

// <K>, the numerical semigroup generated by K(S).
NumericalSemigroup semigroup_generated_by_K(const NumericalSemigroup& s);

// <K> viewed as a relative ideal of S.
RelativeIdeal canonical_closure_ideal(const NumericalSemigroup& s);

// Reinterprets an ideal containing 0 and closed under addition as a
// numerical semigroup. Throws NotASemigroup otherwise.
NumericalSemigroup as_semigroup(const RelativeIdeal& i);

// The same set viewed as a relative ideal of `ambient`. Throws NotAnIdeal
// unless I + ambient is contained in I.
RelativeIdeal rebase(const RelativeIdeal& i, const NumericalSemigroup& ambient);

namespace detail {

// K(S) without the S != N guard; K(N) = N.
RelativeIdeal standard_canonical(const NumericalSemigroup& s);

// Distinct successive powers K, 2K, 3K, ... stopping before the first repeat.
std::vector<RelativeIdeal> canonical_powers(const NumericalSemigroup& s);

}  // namespace detail

}  // namespace numsg

#endif  // NUMSG_IDEAL_HPP_
