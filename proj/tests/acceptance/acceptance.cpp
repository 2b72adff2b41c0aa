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

// Acceptance driver: prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "numsg/classify.hpp"
#include "numsg/constructions.hpp"
#include "numsg/enumerate.hpp"
#include "numsg/oracle.hpp"
#include "numsg/report.hpp"
#include "numsg/verify.hpp"

namespace {

using numsg::Int;
using numsg::NumericalSemigroup;
using numsg::RelativeIdeal;
using V = std::vector<Int>;

// Collects failed expectations for one criterion.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  void add_checks(Int n) { checks_ += n; }
  Int checks() const { return checks_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  Int checks_ = 0;
  std::vector<std::string> failures_;
};

NumericalSemigroup sg(std::initializer_list<Int> g) {
  return NumericalSemigroup::from_generators(g);
}

bool sums_to(const V& pf, Int a, Int b, Int total) {
  auto has = [&](Int x) { return std::find(pf.begin(), pf.end(), x) != pf.end(); };
  return has(a) && has(b) && a + b == total;
}

void reference_examples(Tally& t) {
  using numsg::GasFailureKind;
  {
    const auto r = numsg::classify(sg({9, 24, 39, 43, 77}));
    t.expect(r.pf == V{58, 73, 92, 107} && r.gas, "<9,24,39,43,77>: PF and GAS");
  }
  {
    const auto r = numsg::classify(sg({7, 9, 15}));
    t.expect(r.agl_level == 3 && !r.gas && r.two_k_gap == V{12, 19, 26},
             "<7,9,15>: 3-AGL, not GAS, 2K \\ K");
  }
  {
    const auto r = numsg::classify(sg({8, 11, 14, 15, 17, 18, 20, 21}));
    t.expect(!r.gas && r.gas_witness.failure == GasFailureKind::kPairDifferenceInPF &&
                 r.gas_witness.first == 11 && r.gas_witness.second == 8 &&
                 std::count(r.pf.begin(), r.pf.end(), 3) == 1,
             "<8,11,14,15,17,18,20,21>: witness 11 - 8 in PF");
  }
  {
    const auto r = numsg::classify(sg({9, 10, 12, 13}));
    t.expect(r.gas && r.pf == V{11, 14, 15, 16, 17}, "<9,10,12,13>: GAS and PF");
  }
  {
    const auto s = sg({5, 6, 7});
    const auto gaps = numsg::power_gaps(s);
    const bool shape = gaps.size() == 3 && gaps[0].n == 2 && gaps[0].elements == V{2, 9} &&
                       gaps[1].n == 3 && gaps[1].elements == V{3} && gaps[2].n == 4 &&
                       gaps[2].elements == V{4};
    t.expect(shape && numsg::is_gas(s).gas && numsg::is_nearly_gorenstein(s),
             "<5,6,7>: power gaps, GAS, nearly Gorenstein");
  }
  {
    const auto s = sg({28, 40, 63, 79, 88});
    const auto r = numsg::classify(s);
    t.expect(r.agl_level == 2 && r.two_k_gap == V{281 - 28, 281} &&
                 r.pf == V{100, 132, 177, 209, 281} && sums_to(r.pf, 100, 209, 281 + 28) &&
                 sums_to(r.pf, 132, 177, 281 + 28) && numsg::pf_pairing_check(s),
             "<28,40,63,79,88>: 2-AGL and PF pairing");
  }
  {
    const auto s = sg({67, 69, 76, 78, 86});
    const auto r = numsg::classify(s);
    t.expect(r.agl_level == 2 && r.two_k_gap == V{485 - 86, 485} &&
                 r.pf == V{218, 226, 249, 259, 267, 322, 485} &&
                 sums_to(r.pf, 218, 267, 485) && sums_to(r.pf, 226, 259, 485) &&
                 sums_to(r.pf, 249, 322, 485 + 86) && numsg::pf_pairing_check(s),
             "<67,69,76,78,86>: 2-AGL and PF pairing");
  }
  {
    const auto s = sg({15, 16, 19, 20, 24});
    t.expect(numsg::pf_pairing_check(s) && !numsg::is_gas(s).gas,
             "<15,16,19,20,24>: pairing holds, not GAS");
  }
  {
    const auto s = sg({9, 17, 67});
    t.expect(numsg::is_gas(s).gas && !numsg::is_nearly_gorenstein(s),
             "<9,17,67>: GAS, not nearly Gorenstein");
  }
  {
    const auto s = sg({10, 11, 12, 25});
    t.expect(!numsg::is_gas(s).gas && numsg::is_nearly_gorenstein(s),
             "<10,11,12,25>: nearly Gorenstein, not GAS");
  }
  {
    const auto s = sg({4, 7, 9, 10});
    t.expect(numsg::is_gas(s).gas && !numsg::has_canonical_reduction(s),
             "<4,7,9,10>: GAS without canonical reduction");
  }
  {
    const auto s = sg({8, 9, 10, 22});
    t.expect(!numsg::is_gas(s).gas && numsg::has_canonical_reduction(s),
             "<8,9,10,22>: canonical reduction without GAS");
  }
  {
    const auto s = sg({5, 9, 12});
    const auto g = numsg::is_ggl(s);
    t.expect(g.ggl && g.x == Int{10} && !numsg::is_gas(s).gas, "<5,9,12>: GGL with x = 10");
  }
  {
    const auto s = sg({9, 13, 14, 15, 19});
    const RelativeIdeal m = numsg::maximal_ideal(s);
    const RelativeIdeal mm = numsg::difference(m, m);
    const NumericalSemigroup ring = numsg::as_semigroup(mm);
    const RelativeIdeal mme = numsg::mme_ideal(s);
    t.expect(mm.to_string() == "{0,9,13,14,15} 17+" &&
                 numsg::canonical_ideal(ring).to_string() ==
                     "{0,4,5,6,8,9,10,11,12,13,14,15} 17+" &&
                 mme.to_string() == "{0,4,5,6,9,10,13,14,15} 17+" &&
                 numsg::difference(mme, numsg::maximal_ideal(ring)).to_string() ==
                     "{0,4,5,6} 8+" &&
                 numsg::is_almost_canonical(mme),
             "<9,13,14,15,19>: M - M, K(M - M), M - e, (M - e) - M(M - M)");
  }
  {
    const auto t_dil = numsg::dilatation({sg({7, 9, 11}), 7});
    t.expect(t_dil.minimal_generators() == V{14, 16, 18, 21, 23, 25, 27, 29, 38, 40},
             "dilatation of <7,9,11> by 7");
  }
  {
    const auto s = sg({6, 28, 47, 97});
    const RelativeIdeal i =
        numsg::difference(numsg::as_ideal(s), numsg::canonical_closure_ideal(s));
    const auto dup = numsg::duplication({s, i, 47});
    t.expect(dup.minimal_generators() == V{12, 56, 71, 94, 115, 153, 159, 194, 197, 241} &&
                 dup.frobenius() == 229 && numsg::two_k_gap(dup) == V{135, 173, 217, 229} &&
                 numsg::is_gas(dup).gas,
             "duplication of <6,28,47,97> with S - <K> and b = 47");
  }
  {
    // The fixture file, run through the command-line front end.
    std::ostringstream out;
    std::ostringstream err;
    const int code = numsg::cli::run_cli(
        {"classify", "--fixtures", NUMSG_FIXTURES_DIR "/reference_examples.jsonl"}, out, err);
    t.expect(code == 0 && err.str().empty(), "fixture file: " + err.str());
  }
}

// Runs one verify suite and requires zero violations over a nonempty corpus.
void suite_clean(Tally& t, numsg::Suite suite, int max_genus,
                 const std::function<void(const nlohmann::ordered_json&)>& extra) {
  numsg::VerifyOptions o;
  o.max_genus = max_genus;
  o.suites = {suite};
  const numsg::VerifyReport r = numsg::verify_corpus(o);
  const auto& sum = r.summary;
  t.expect(sum["semigroups"].get<Int>() == 1413 || max_genus != 12, "corpus size at genus 12");
  t.expect(sum["checked"].get<Int>() > 0, "nonempty corpus");
  const Int performed = sum["checks"][std::string(numsg::suite_name(suite))].get<Int>();
  t.expect(performed > 0, "suite performed checks");
  t.add_checks(performed);
  for (const auto& v : r.violations) t.expect(false, v.semigroup + ": " + v.detail);
  if (extra) extra(sum);
}

void oracle_triples(Tally& t) {
  const auto corpus = numsg::genus_tree(10).semigroups;
  std::mt19937_64 rng(20240601);
  for (int k = 0; k < 500; ++k) {
    const auto& s =
        corpus[std::uniform_int_distribution<std::size_t>(1, corpus.size() - 1)(rng)];
    auto random_ideal = [&] {
      std::uniform_int_distribution<Int> pick(0, s.frobenius() + s.multiplicity());
      V gens;
      for (int n = std::uniform_int_distribution<int>(1, 3)(rng); n > 0; --n)
        gens.push_back(pick(rng));
      const Int shift =
          std::uniform_int_distribution<Int>(-s.frobenius(), s.frobenius())(rng);
      return numsg::translate(numsg::ideal_from_generators(s, gens), shift);
    };
    const RelativeIdeal i = random_ideal();
    const RelativeIdeal j = random_ideal();
    const Int bound = numsg::oracle_default_bound(i, &j);
    using numsg::OracleOp;
    const std::string label = s.literal() + " I=" + i.to_string() + " J=" + j.to_string();
    t.expect(numsg::oracle_ideal_op(OracleOp::kSum, i, &j, bound) ==
                 numsg::members_in_range(numsg::sum(i, j), bound),
             "sum " + label);
    t.expect(numsg::oracle_ideal_op(OracleOp::kDifference, i, &j, bound) ==
                 numsg::members_in_range(numsg::difference(i, j), bound),
             "difference " + label);
    t.expect(numsg::oracle_ideal_op(OracleOp::kDual, i, nullptr, bound) ==
                 numsg::members_in_range(numsg::dual(i), bound),
             "dual " + label);
  }
}

bool report(int number, const std::string& title, const std::function<void(Tally&)>& body) {
  Tally t;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(t);
  } catch (const std::exception& e) {
    t.expect(false, std::string("exception: ") + e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool ok = t.failures().empty();
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": " << title << " ("
            << t.checks() << " checks, " << secs << " s)\n";
  const std::size_t shown = std::min<std::size_t>(t.failures().size(), 10);
  for (std::size_t k = 0; k < shown; ++k) std::cout << "    " << t.failures()[k] << "\n";
  return ok;
}

}  // namespace

int main() {
  using numsg::Suite;
  bool ok = true;
  ok &= report(1, "reference fixtures, exact match", reference_examples);
  ok &= report(2, "GAS iff M - e almost canonical in M - M, genus <= 12", [](Tally& t) {
    suite_clean(t, Suite::kGasMme, 12, nullptr);
  });
  ok &= report(3, "2^t almost canonical ideals with binomial types, genus <= 12", [](Tally& t) {
    suite_clean(t, Suite::kCounting, 12, [&](const nlohmann::ordered_json& sum) {
      t.expect(sum["exhaustive_ideals_scanned"].get<Int>() > 0, "exhaustive scan ran");
      t.expect(sum["almost_canonical_ideals"].get<Int>() > 0, "families enumerated");
    });
  });
  ok &= report(4, "characterization routes agree, genus <= 12", [](Tally& t) {
    suite_clean(t, Suite::kEquivalences, 12, nullptr);
  });
  ok &= report(5, "construction transfer theorems, genus <= 10", [](Tally& t) {
    suite_clean(t, Suite::kConstructions, 12, [&](const nlohmann::ordered_json& sum) {
      t.expect(sum["constructions"].get<Int>() > 0, "constructions ran");
    });
  });
  ok &= report(6, "windowed ideal operations match the oracle on 500 triples", oracle_triples);
  std::cout << (ok ? "all criteria passed" : "some criteria failed") << "\n";
  return ok ? 0 : 1;
}
