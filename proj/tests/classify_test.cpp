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

#include <gtest/gtest.h>

#include "numsg/classify.hpp"
#include "numsg/enumerate.hpp"
#include "support/brute.hpp"

namespace numsg {
namespace {

using V = std::vector<Int>;

NumericalSemigroup sg(std::initializer_list<Int> g) {
  return NumericalSemigroup::from_generators(g);
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an exception";
  return Errc::kParse;
}

TEST(Symmetry, Families) {
  EXPECT_TRUE(is_symmetric(sg({2, 3})));
  EXPECT_TRUE(is_symmetric(sg({8, 10, 12, 15})));
  EXPECT_FALSE(is_symmetric(sg({3, 4, 5})));
  EXPECT_TRUE(is_pseudo_symmetric(sg({3, 4, 5})));
  EXPECT_TRUE(is_almost_symmetric(sg({3, 4, 5})));
  EXPECT_FALSE(is_pseudo_symmetric(sg({2, 3})));
  EXPECT_FALSE(is_almost_symmetric(sg({5, 6, 7})));
}

TEST(Symmetry, RejectsTheNaturals) {
  const NumericalSemigroup n;
  EXPECT_EQ(code_of([&] { is_symmetric(n); }), Errc::kFullSemigroup);
  EXPECT_EQ(code_of([&] { is_almost_symmetric(n); }), Errc::kFullSemigroup);
  EXPECT_EQ(code_of([&] { is_pseudo_symmetric(n); }), Errc::kFullSemigroup);
  EXPECT_EQ(code_of([&] { is_gas(n); }), Errc::kFullSemigroup);
  EXPECT_EQ(code_of([&] { agl_level(n); }), Errc::kFullSemigroup);
  EXPECT_EQ(code_of([&] { two_k_gap(n); }), Errc::kFullSemigroup);
  EXPECT_EQ(code_of([&] { is_nearly_gorenstein(n); }), Errc::kFullSemigroup);
  EXPECT_EQ(code_of([&] { has_canonical_reduction(n); }), Errc::kFullSemigroup);
  EXPECT_EQ(code_of([&] { is_ggl(n); }), Errc::kFullSemigroup);
  EXPECT_EQ(code_of([&] { pf_pairing_check(n); }), Errc::kFullSemigroup);
  EXPECT_EQ(code_of([&] { mme_ideal(n); }), Errc::kFullSemigroup);
}

TEST(Gas, NineTwentyFour) {
  const auto s = sg({9, 24, 39, 43, 77});
  const GasResult r = is_gas(s);
  EXPECT_TRUE(r.gas);
  EXPECT_EQ(r.witness.generators_x, (V{9, 24, 39, 43, 77}));
  EXPECT_EQ(two_k_gap(s), (V{30, 64, 68, 83, 98, 107}));
}

TEST(Gas, SevenNineFifteenFailsOnFourteen) {
  const auto s = sg({7, 9, 15});
  const GasResult r = is_gas(s);
  EXPECT_FALSE(r.gas);
  EXPECT_EQ(r.witness.failure, GasFailureKind::kNotMinimalGenerator);
  EXPECT_EQ(to_string(r.witness), "NotMinimalGenerator(14)");
  EXPECT_EQ(agl_level(s), 3);
}

TEST(Gas, PairDifferenceWitness) {
  const auto s = sg({8, 11, 14, 15, 17, 18, 20, 21});
  const GasResult r = is_gas(s);
  EXPECT_FALSE(r.gas);
  EXPECT_EQ(to_string(r.witness), "PairDifferenceInPF(11,8)");
  EXPECT_EQ(agl_level(s), 3);
}

TEST(Gas, NineTenTwelveThirteen) {
  const auto s = sg({9, 10, 12, 13});
  EXPECT_TRUE(is_gas(s).gas);
  EXPECT_EQ(s.pseudo_frobenius_numbers(), (V{11, 14, 15, 16, 17}));
  EXPECT_TRUE(pf_pairing_check(s));
}

TEST(Gas, TwoAglExamplesWithPairings) {
  const auto a = sg({28, 40, 63, 79, 88});
  EXPECT_EQ(agl_level(a), 2);
  EXPECT_EQ(two_k_gap(a), (V{281 - 28, 281}));
  EXPECT_TRUE(pf_pairing_check(a));
  const auto b = sg({67, 69, 76, 78, 86});
  EXPECT_EQ(agl_level(b), 2);
  EXPECT_EQ(two_k_gap(b), (V{485 - 86, 485}));
  EXPECT_TRUE(pf_pairing_check(b));
  EXPECT_TRUE(is_gas(b).gas);
}

TEST(Gas, PairingDoesNotImplyGas) {
  const auto s = sg({15, 16, 19, 20, 24});
  EXPECT_TRUE(pf_pairing_check(s));
  EXPECT_FALSE(is_gas(s).gas);
}

TEST(GasStructure, ElementsAreFrobeniusMinusGenerators) {
  const auto s = sg({9, 24, 39, 43, 77});
  const auto entries = gas_structure(s);
  EXPECT_EQ(static_cast<Int>(entries.size()), agl_level(s));
  for (const auto& e : entries) {
    EXPECT_EQ(e.element, s.frobenius() - e.x);
    EXPECT_TRUE(e.x == 0 || s.is_minimal_generator(e.x));
  }
  EXPECT_TRUE(gas_structure(sg({2, 3})).empty());
  EXPECT_EQ(code_of([] { gas_structure(sg({7, 9, 15})); }), Errc::kNotGas);
}

TEST(NearlyGorenstein, Examples) {
  EXPECT_TRUE(is_nearly_gorenstein(sg({5, 6, 7})));
  EXPECT_FALSE(is_nearly_gorenstein(sg({9, 17, 67})));
  EXPECT_TRUE(is_gas(sg({9, 17, 67})).gas);
  EXPECT_TRUE(is_nearly_gorenstein(sg({10, 11, 12, 25})));
  EXPECT_FALSE(is_gas(sg({10, 11, 12, 25})).gas);
  const auto r = routes::nearly_gorenstein(sg({5, 6, 7}));
  ASSERT_TRUE(r.type2_formula.has_value());
  EXPECT_TRUE(*r.type2_formula);
}

TEST(CanonicalReduction, Examples) {
  EXPECT_FALSE(has_canonical_reduction(sg({4, 7, 9, 10})));
  EXPECT_TRUE(is_gas(sg({4, 7, 9, 10})).gas);
  EXPECT_TRUE(has_canonical_reduction(sg({8, 9, 10, 22})));
  EXPECT_FALSE(is_gas(sg({8, 9, 10, 22})).gas);
  EXPECT_TRUE(has_canonical_reduction(sg({2, 3})));
}

TEST(Ggl, Examples) {
  const GglResult r = is_ggl(sg({5, 9, 12}));
  EXPECT_TRUE(r.ggl);
  EXPECT_EQ(r.x, Int{10});
  EXPECT_FALSE(is_gas(sg({5, 9, 12})).gas);
  const GglResult sym = is_ggl(sg({2, 3}));
  EXPECT_TRUE(sym.ggl);
  EXPECT_FALSE(sym.x.has_value());
  EXPECT_FALSE(is_ggl(sg({67, 69, 76, 78, 86})).ggl);
  EXPECT_FALSE(is_ggl(sg({9, 10, 12, 13})).ggl);
}

TEST(TypeTwo, FiveSixSevenProfile) {
  const Type2Profile p = gas_type2_profile(sg({5, 6, 7}));
  EXPECT_TRUE(p.gas);
  EXPECT_EQ(p.n, Int{5});
  EXPECT_EQ(p.power_gap_sizes, (V{2, 1, 1}));
  EXPECT_FALSE(gas_type2_profile(sg({10, 11, 12, 25})).gas);
  EXPECT_EQ(code_of([] { gas_type2_profile(sg({9, 24, 39, 43, 77})); }),
            Errc::kPreconditionFailed);
  EXPECT_EQ(code_of([] { gas_type2_profile(sg({3, 4, 5})); }), Errc::kPreconditionFailed);
}

TEST(MmeType, FormulaMatchesDirectType) {
  EXPECT_EQ(mme_type_formula(sg({5, 6, 7})), 2);
  EXPECT_EQ(mme_type_formula(sg({3, 4, 5})), 1);
  const auto s = sg({9, 13, 14, 15, 19});
  EXPECT_EQ(mme_type_formula(s), 2 * s.genus() + 1 - s.type() - s.frobenius());
  EXPECT_EQ(code_of([] { mme_type_formula(sg({7, 9, 15})); }), Errc::kNotGas);
}

TEST(AlmostCanonical, MinusMultiplicityInMMinusM) {
  const auto s = sg({9, 13, 14, 15, 19});
  EXPECT_TRUE(is_almost_canonical(mme_ideal(s)));
  EXPECT_FALSE(is_almost_canonical(mme_ideal(sg({7, 9, 15}))));
  EXPECT_TRUE(routes::mme_canonical(sg({3, 4, 5})));
  EXPECT_FALSE(routes::mme_canonical(sg({5, 6, 7})));
  // For <2,3>, M - M is N and the five conditions are still evaluated.
  const auto c = routes::almost_canonical(mme_ideal(sg({2, 3})));
  for (bool b : c) EXPECT_TRUE(b);
  EXPECT_EQ(code_of([] { is_almost_canonical(mme_ideal(sg({2, 3}))); }),
            Errc::kFullSemigroup);
}

TEST(AlmostCanonical, CanonicalAndMaximalIdeals) {
  const auto s = sg({9, 24, 39, 43, 77});
  EXPECT_TRUE(is_almost_canonical(canonical_ideal(s)));
  // M is almost canonical exactly when S is almost symmetric.
  EXPECT_FALSE(is_almost_canonical(maximal_ideal(s)));
  EXPECT_TRUE(is_almost_canonical(maximal_ideal(sg({3, 4, 5}))));
  EXPECT_TRUE(is_almost_canonical(translate(canonical_ideal(s), 7)));
  EXPECT_FALSE(is_almost_canonical(ideal_from_generators(s, {0, 5})));
  EXPECT_TRUE(ideal_type_bound_check(s));
}

TEST(Lemmas, SecondTypeGapsAndGluingShape) {
  EXPECT_TRUE(second_type_gap_lemma_check(sg({9, 24, 39, 43, 77})));
  EXPECT_TRUE(second_type_gap_lemma_check(sg({7, 9, 15})));
  EXPECT_TRUE(is_double_plus_odd_gluing(sg({6, 7, 8, 10})));
  EXPECT_FALSE(is_double_plus_odd_gluing(sg({8, 10, 12, 15})));
  EXPECT_FALSE(is_double_plus_odd_gluing(sg({5, 6, 7})));
  EXPECT_FALSE(is_double_plus_odd_gluing(NumericalSemigroup()));
}

TEST(Routes, AllAgreeOnExamples) {
  for (const auto& s : {sg({5, 6, 7}), sg({9, 24, 39, 43, 77}), sg({7, 9, 15}),
                        sg({3, 4, 5}), sg({2, 3})}) {
    const auto gas = routes::gas(s);
    EXPECT_EQ(gas.definition.gas, gas.pair_differences) << s;
    EXPECT_EQ(gas.definition.gas, gas.s_minus_k) << s;
    EXPECT_EQ(gas.definition.gas, gas.mme_almost_canonical) << s;
    const auto agl = routes::agl_level(s);
    EXPECT_EQ(agl.from_powers, agl.from_closure) << s;
  }
}

// Every semigroup of genus <= 8 against the std::set reference.
TEST(BruteForce, GenusEightCorpus) {
  for (const NumericalSemigroup& s : genus_tree(8).semigroups) {
    if (s.is_natural()) continue;
    const brute::Semigroup b(s.minimal_generators());
    ASSERT_EQ(s.pseudo_frobenius_numbers(), b.pf()) << s;
    ASSERT_EQ(two_k_gap(s), brute::two_k_minus_k(b)) << s;
    ASSERT_EQ(agl_level(s), brute::agl_level(b)) << s;
    ASSERT_EQ(is_gas(s).gas, brute::gas_by_definition(b)) << s;
  }
}

}  // namespace
}  // namespace numsg
