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

#ifndef NUMSG_ENUMERATE_HPP_
#define NUMSG_ENUMERATE_HPP_

#include <string>
#include <vector>

#include "numsg/ideal.hpp"
#include "numsg/semigroup.hpp"

namespace numsg {

// The almost canonical ideals I of S with F(I) = F(S). They are exactly the
// sets base u A for A a subset of the t(S) free elements K \ base.
struct IdealFamily {
  struct Member {
    std::vector<Int> subset;  // A, ascending
    RelativeIdeal ideal;      // base u A
    Int type;                 // t(S) + 1 - |A|, checked against the ideal
  };

  NumericalSemigroup ambient;
  RelativeIdeal base;  // K - (M - M)
  RelativeIdeal top;   // K
  std::vector<Int> free_elements;
  std::vector<Member> members;  // ordered by the bitmask of A over free_elements
};

// Throws FullSemigroup for N and SubsetNotIdeal if some base u A fails to be
// an ideal.
IdealFamily almost_canonical_ideals(const NumericalSemigroup& s);

struct ExhaustiveScan {
  Int ideals_checked = 0;
  // Almost canonical ideals (translated to F(S)) missing from the family.
  std::vector<std::string> outside_family;
};

// Brute-force search for almost canonical ideals not in `family`: every
// ideal J with F(J) = F(S) and J contained in K, plus every ideal generated by
// {0, a, b} with a < b <= F(S) + e, translated to F(S).
ExhaustiveScan scan_for_missing_almost_canonical(const IdealFamily& family);

// Ideals exercised by the equivalence suite: S, M, K, 2M, M - M, S - K,
// K - M, <K>, S - <K>, M - e, {0, x} + S for every gap x, and the almost
// canonical family.
std::vector<RelativeIdeal> standard_ideals(const NumericalSemigroup& s);

struct Corpus {
  int max_genus = 0;
  std::vector<NumericalSemigroup> semigroups;  // depth-first genus-tree order
};

// S \ {g} for each minimal generator g > F(S), ascending in g.
std::vector<NumericalSemigroup> genus_tree_children(const NumericalSemigroup& s);

// Every numerical semigroup of genus <= max_genus, starting from N.
Corpus genus_tree(int max_genus);

// Number of corpus members of each genus 0 .. max_genus.
std::vector<Int> per_genus_counts(const Corpus& corpus);

}  // namespace numsg

#endif  // NUMSG_ENUMERATE_HPP_
