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

#ifndef NUMSG_CONSTRUCTIONS_HPP_
#define NUMSG_CONSTRUCTIONS_HPP_

#include <vector>

#include "numsg/ideal.hpp"
#include "numsg/semigroup.hpp"

namespace numsg {

// Each construction validates its parameters, builds the result from its
// set description, re-canonicalizes it through from_generators and then
// asserts the transfer formulas against independently computed invariants.
// A failed formula throws InternalInconsistency.

// <a S1, b S2>: a in S2 and b in S1, neither a minimal generator, gcd 1.
struct GluingSpec {
  NumericalSemigroup s1;
  NumericalSemigroup s2;
  Int a;
  Int b;
};

// Checks PF(T) = {a f1 + b f2 + ab}, F(T), t(T) = t1 t2,
// K(T) = {a k1 + b k2} and that a gens(S1) u b gens(S2) is minimal.
// Errors: NotMember, MinimalGenerator, NotCoprime.
NumericalSemigroup gluing(const GluingSpec& spec);

// S joined with 2I + b: I an integral ideal of S, b an odd member of S.
struct DuplicationSpec {
  NumericalSemigroup s;
  RelativeIdeal ideal;
  Int b;
};

// Checks F(T) = 2F(I) + b, the odd pseudo-Frobenius numbers 2 PF(I) + b and
// the even ones 2 (((M - M) n (I - I)) \ S).
// Errors: EvenB, BNotMember, IdealNotIntegral, AmbientMismatch.
NumericalSemigroup duplication(const DuplicationSpec& spec);

struct Decomposition {
  NumericalSemigroup s;  // T / 2 = {y : 2y in T}
  RelativeIdeal ideal;   // {x : 2x + b in T}, a relative ideal of s
};

// Inverse of duplication for odd b with 2b in T. Checks the round trip, and
// when T is almost symmetric with F(T) odd and T / 2 != N, that the ideal is
// almost canonical. Errors: EvenB, TwoBNotMember.
Decomposition duplication_decompose(const NumericalSemigroup& t, Int b);

// {0} u (M + a) for a >= 1 in M - 2M.
struct DilatationSpec {
  NumericalSemigroup s;
  Int a;
};

// Checks F(T) = F(S) + a and 2K(T) = 2K(S). Errors: NotInM2M, FullSemigroup.
NumericalSemigroup dilatation(const DilatationSpec& spec);

// Admissible parameters in the fixed search order (smallest first).
struct GluingParameters {
  Int a;
  Int b;
};
std::vector<GluingParameters> gluing_parameters(const NumericalSemigroup& s1,
                                                const NumericalSemigroup& s2,
                                                std::size_t count);
std::vector<Int> duplication_b_values(const NumericalSemigroup& s,
                                      std::size_t count);
std::vector<Int> dilatation_a_values(const NumericalSemigroup& s,
                                     std::size_t count);

}  // namespace numsg

#endif  // NUMSG_CONSTRUCTIONS_HPP_
