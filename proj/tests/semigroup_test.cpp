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

#include <random>

#include "numsg/semigroup.hpp"
#include "support/brute.hpp"

namespace numsg {
namespace {

using V = std::vector<Int>;

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an exception";
  return Errc::kParse;
}

TEST(FromGenerators, FiveSixSevenHasFrobeniusNine) {
  const auto s = NumericalSemigroup::from_generators({5, 6, 7});
  EXPECT_EQ(s.frobenius(), 9);
  EXPECT_EQ(s.multiplicity(), 5);
  EXPECT_EQ(s.pseudo_frobenius_numbers(), (V{8, 9}));
}

TEST(FromGenerators, OneGivesTheNaturals) {
  const auto s = NumericalSemigroup::from_generators({1});
  EXPECT_TRUE(s.is_natural());
  EXPECT_EQ(s.frobenius(), -1);
  EXPECT_EQ(s.genus(), 0);
  EXPECT_EQ(s.type(), 1);
  EXPECT_EQ(s.minimal_generators(), V{1});
  EXPECT_EQ(s, NumericalSemigroup());
  EXPECT_EQ(s.literal(), "1");
}

TEST(FromGenerators, DropsRedundantGenerator) {
  const auto s = NumericalSemigroup::from_generators({9, 24, 39, 43, 77, 48});
  EXPECT_EQ(s.minimal_generators(), (V{9, 24, 39, 43, 77}));
  EXPECT_EQ(s, NumericalSemigroup::from_generators({77, 43, 39, 24, 9}));
}

TEST(FromGenerators, RejectsBadInput) {
  EXPECT_EQ(code_of([] { NumericalSemigroup::from_generators(std::span<const Int>{}); }),
            Errc::kEmptyGenerators);
  EXPECT_EQ(code_of([] { NumericalSemigroup::from_generators({3, 0, 5}); }),
            Errc::kNonPositiveGenerator);
  EXPECT_EQ(code_of([] { NumericalSemigroup::from_generators({3, -4}); }),
            Errc::kNonPositiveGenerator);
  EXPECT_EQ(code_of([] { NumericalSemigroup::from_generators({4, 6}); }), Errc::kGcdNotOne);
  EXPECT_EQ(code_of([] { NumericalSemigroup::from_generators({Int{1} << 40, 3}); }),
            Errc::kTooLarge);
  EXPECT_EQ(code_of([] { NumericalSemigroup::from_generators({100000, 100001}); }),
            Errc::kTooLarge);
}

TEST(Contains, ReferenceAndBoundaryCases) {
  const auto s = NumericalSemigroup::from_generators({5, 6, 7});
  EXPECT_FALSE(s.contains(8));
  EXPECT_TRUE(s.contains(0));
  EXPECT_FALSE(s.contains(-1));
  EXPECT_TRUE(s.contains(10));
  EXPECT_TRUE(s.contains(1'000'000));
  EXPECT_FALSE(NumericalSemigroup::from_generators({7, 9, 11}).contains(26));
  EXPECT_TRUE(NumericalSemigroup().contains(0));
  EXPECT_FALSE(NumericalSemigroup().contains(-5));
}

TEST(Apery, MultiplicityAndOtherMembers) {
  const auto s = NumericalSemigroup::from_generators({5, 6, 7});
  EXPECT_EQ(s.apery(), (V{0, 6, 7, 13, 14}));
  EXPECT_EQ(s.apery(5), s.apery());
  EXPECT_EQ(s.apery(6), (V{0, 7, 14, 15, 10, 5}));
  EXPECT_EQ(s.apery(6).size(), 6u);
  EXPECT_EQ(code_of([&] { s.apery(8); }), Errc::kNotAMember);
  EXPECT_EQ(code_of([&] { s.apery(0); }), Errc::kNotAMember);
  EXPECT_EQ(code_of([&] { s.apery(-5); }), Errc::kNotAMember);
}

TEST(Invariants, GapsAndSmallMembersPartitionTheWindow) {
  const auto s = NumericalSemigroup::from_generators({9, 24, 39, 43, 77});
  EXPECT_EQ(s.genus() + s.small_count(), s.frobenius() + 1);
  EXPECT_EQ(static_cast<Int>(s.gaps().size()), s.genus());
  EXPECT_EQ(s.conductor(), 108);
  EXPECT_EQ(s.pseudo_frobenius_numbers(), (V{58, 73, 92, 107}));
  EXPECT_EQ(s.literal(), "9,24,39,43,77");
}

TEST(Invariants, MaximalEmbeddingDimension) {
  EXPECT_TRUE(NumericalSemigroup::from_generators({3, 4, 5}).has_maximal_embedding_dimension());
  EXPECT_FALSE(NumericalSemigroup::from_generators({5, 6, 7}).has_maximal_embedding_dimension());
}

TEST(SecondTypeGaps, PseudoSymmetricHasTheMiddleGap) {
  EXPECT_EQ(second_type_gaps(NumericalSemigroup::from_generators({3, 4, 5})), V{1});
  EXPECT_EQ(code_of([] { second_type_gaps(NumericalSemigroup()); }), Errc::kFullSemigroup);
  EXPECT_EQ(code_of([] { pseudo_frobenius(NumericalSemigroup()); }), Errc::kFullSemigroup);
}

TEST(MemberWindow, RejectsSetsThatAreNotSemigroups) {
  // {0, 3, 4, 5 ...} minus 7 is not closed: 3 + 4 = 7.
  std::vector<std::uint8_t> window{1, 0, 0, 1, 1, 1, 1, 0};
  EXPECT_EQ(code_of([&] { NumericalSemigroup::from_member_window(window); }),
            Errc::kNotASemigroup);
  std::vector<std::uint8_t> no_zero{0, 1};
  EXPECT_EQ(code_of([&] { NumericalSemigroup::from_member_window(no_zero); }),
            Errc::kNotASemigroup);
  std::vector<std::uint8_t> ok{1, 0, 0, 1, 1, 1};
  EXPECT_EQ(NumericalSemigroup::from_member_window(ok),
            NumericalSemigroup::from_generators({3, 4, 5}));
}

TEST(Parse, LiteralsAndErrors) {
  EXPECT_EQ(parse_int_list("9,24,39"), (V{9, 24, 39}));
  EXPECT_EQ(parse_int_list(" 3 , -4"), (V{3, -4}));
  EXPECT_EQ(code_of([] { parse_int_list(""); }), Errc::kParse);
  EXPECT_EQ(code_of([] { parse_int_list("1,,2"); }), Errc::kParse);
  EXPECT_EQ(code_of([] { parse_int_list("a"); }), Errc::kParse);
  EXPECT_EQ(code_of([] { parse_int_list("3x"); }), Errc::kParse);
  EXPECT_EQ(code_of([] { parse_int_list("99999999999999999999"); }), Errc::kTooLarge);
  EXPECT_EQ(parse_semigroup("9,24,39,43,77,48").literal(), "9,24,39,43,77");
  EXPECT_EQ(code_of([] { parse_semigroup("4,6"); }), Errc::kGcdNotOne);
}

// Membership, Frobenius number, genus, PF and minimal generators against the
// coin-problem dynamic program on seeded random generator lists.
TEST(DynamicProgramOracle, RandomGeneratorLists) {
  std::mt19937_64 rng(20260101);
  int checked = 0;
  while (checked < 300) {
    std::uniform_int_distribution<int> count(2, 5);
    std::uniform_int_distribution<Int> value(2, 40);
    V gens;
    for (int i = count(rng); i > 0; --i) gens.push_back(value(rng));
    Int g = 0;
    for (Int x : gens) g = std::gcd(g, x);
    if (g != 1) continue;
    ++checked;
    const auto s = NumericalSemigroup::from_generators(gens);
    const brute::Semigroup b(gens);
    ASSERT_EQ(s.frobenius(), b.frobenius) << s.literal();
    for (Int x = -3; x <= b.limit + 3; ++x) ASSERT_EQ(s.contains(x), b.contains(x)) << x;
    EXPECT_EQ(s.genus(), b.genus());
    EXPECT_EQ(s.multiplicity(), b.multiplicity());
    EXPECT_EQ(s.pseudo_frobenius_numbers(), b.pf());
    EXPECT_EQ(s.minimal_generators(), b.minimal_generators());
  }
}

}  // namespace
}  // namespace numsg
