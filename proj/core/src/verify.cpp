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

#include "numsg/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <optional>
#include <thread>

#include "numsg/classify.hpp"
#include "numsg/constructions.hpp"
#include "numsg/enumerate.hpp"
#include "numsg/ideal.hpp"
#include "numsg/report.hpp"

namespace numsg {

namespace {

constexpr std::array<Suite, 6> kAllSuites{
    Suite::kCore,     Suite::kIdeals,       Suite::kGasMme,
    Suite::kCounting, Suite::kEquivalences, Suite::kConstructions};

std::size_t index(Suite s) { return static_cast<std::size_t>(s); }

struct Outcome {
  std::string line;
  std::vector<Violation> violations;
  std::optional<ClassificationReport> report;
  std::array<Int, kAllSuites.size()> checks{};
  Int ideals_enumerated = 0;
  Int exhaustive_ideals = 0;
  Int constructions = 0;
};

class Checker {
 public:
  Checker(const NumericalSemigroup& s, Outcome& out)
      : s_(s), literal_(s.literal()), out_(out) {}

  void expect(Suite suite, bool ok, const std::string& what) {
    ++out_.checks[index(suite)];
    if (!ok) out_.violations.push_back({literal_, std::string(suite_name(suite)), what});
  }

  // Runs a block of checks; a thrown library error becomes a violation.
  template <class F>
  void run(Suite suite, F&& body) {
    try {
      body();
    } catch (const Error& e) {
      expect(suite, false, e.what());
    }
  }

  const NumericalSemigroup& s() const { return s_; }
  Outcome& out() { return out_; }

 private:
  const NumericalSemigroup& s_;
  std::string literal_;
  Outcome& out_;
};

bool all_equal(const std::array<bool, 5>& c) {
  return std::all_of(c.begin(), c.end(), [&](bool b) { return b == c[0]; });
}

Int binomial(Int n, Int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (Int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void core_suite(Checker& c) {
  const NumericalSemigroup& s = c.s();
  const Suite k = Suite::kCore;
  c.expect(k, s.genus() + s.small_count() == s.frobenius() + 1, "g + n = F + 1");
  c.expect(k, s.embedding_dimension() <= s.multiplicity(), "embedding dimension <= e");
  c.expect(k, s.apery(s.multiplicity()) == s.apery(), "Ap(S, e) matches the cache");
  c.expect(k, ideal_invariants(as_ideal(s)).pf == s.pseudo_frobenius_numbers(),
           "PF(S) from S as an ideal");
  for (Int n : s.minimal_generators()) {
    const std::vector<Int> ap = s.apery(n);
    bool ok = static_cast<Int>(ap.size()) == n && ap[0] == 0;
    for (Int i = 0; i < n && ok; ++i) {
      const Int w = ap[static_cast<std::size_t>(i)];
      ok = w % n == i && s.contains(w) && !s.contains(w - n);
    }
    c.expect(k, ok, "Ap(S, " + std::to_string(n) + ") is the least member per class");
  }
  const std::vector<Int> members = s.small_members();
  bool closed = true;
  for (Int x : members) {
    for (Int y : members) closed = closed && s.contains(x + y);
  }
  c.expect(k, closed, "window closed under addition");
  for (Int g : s.minimal_generators()) {
    bool decomposable = false;
    for (Int x : members) {
      decomposable = decomposable || (x > 0 && x < g && s.contains(g - x));
    }
    c.expect(k, !decomposable, "minimal generator " + std::to_string(g) + " is a sum");
  }
  const ClassificationReport& r = *c.out().report;
  c.expect(k, r.symmetric == (r.type == 1), "symmetric matches t(S) = 1");
  c.expect(k, r.almost_symmetric == (2 * r.genus == r.frobenius + r.type),
           "almost symmetric matches 2g = F + t");
}

void ideals_suite(Checker& c) {
  const NumericalSemigroup& s = c.s();
  const Suite k = Suite::kIdeals;
  const RelativeIdeal kk = canonical_ideal(s);
  for (const RelativeIdeal& i : standard_ideals(s)) {
    c.expect(k, dual(dual(i)) == i, "K - (K - I) = I for " + i.to_string());
    c.expect(k, is_subset(normalize_tilde(i), kk), "I~ inside K for " + i.to_string());
    const IdealInvariants inv = ideal_invariants(i);
    c.expect(k, static_cast<Int>(inv.apery.size()) == s.multiplicity(),
             "|Ap(I)| = e for " + i.to_string());
    c.expect(k, inv.genus + s.genus() >= s.frobenius() + inv.type,
             "g(I) + g(S) >= F(S) + t(I) for " + i.to_string());
    c.expect(k, (inv.type == 1) == (normalize_tilde(i) == kk),
             "type 1 exactly for canonical ideals: " + i.to_string());
  }
}

void gas_mme_suite(Checker& c) {
  const NumericalSemigroup& s = c.s();
  const Suite k = Suite::kGasMme;
  const ClassificationReport& r = *c.out().report;
  const GasResult by_definition = routes::gas(s).definition;
  const auto mme = routes::almost_canonical(mme_ideal(s));
  c.expect(k, all_equal(mme), "almost-canonical conditions on M - e agree");
  c.expect(k, by_definition.gas == mme[0], "GAS iff M - e almost canonical in M - M");
  c.expect(k, r.almost_symmetric == routes::mme_canonical(s),
           "almost symmetric iff M - e canonical in M - M");
  if (s.has_maximal_embedding_dimension() && r.gas && !r.almost_symmetric) {
    const std::vector<Int> expected{s.frobenius() - s.multiplicity(), s.frobenius()};
    c.expect(k, r.agl_level == 2 && r.two_k_gap == expected,
             "MED GAS is almost symmetric or 2-AGL with 2K \\ K = {F - e, F}");
  }
  if (r.agl_level <= 2) c.expect(k, r.gas, "at most 2-AGL implies GAS");
  if (r.gas) {
    c.expect(k, pf_pairing_check(s), "GAS implies the PF pairing");
    const auto structure = gas_structure(s);
    c.expect(k, static_cast<Int>(structure.size()) == r.agl_level,
             "<K> \\ K decomposition has agl_level elements");
    const Int mme_type = mme_type_formula(s);
    c.expect(k, mme_type >= 1, "t(M - e) positive");
    if (r.almost_symmetric) c.expect(k, mme_type == 1, "t(M - e) = 1 when almost symmetric");
  }
  c.expect(k, second_type_gap_lemma_check(s), "L(S) lemma");
  if (r.type == 2 && !r.almost_symmetric) {
    c.expect(k, gas_type2_profile(s).gas == r.gas, "type-2 criterion");
  }
}

void counting_suite(Checker& c, int exhaustive_genus) {
  const NumericalSemigroup& s = c.s();
  const Suite k = Suite::kCounting;
  const IdealFamily family = almost_canonical_ideals(s);
  const Int t = s.type();
  c.out().ideals_enumerated += static_cast<Int>(family.members.size());
  c.expect(k, static_cast<Int>(family.members.size()) == (Int{1} << t),
           "2^t almost canonical ideals");
  std::vector<Int> histogram(static_cast<std::size_t>(t + 2));
  for (const auto& m : family.members) {
    if (m.type >= 1 && m.type <= t + 1) ++histogram[static_cast<std::size_t>(m.type)];
    c.expect(k, m.ideal.frobenius() == s.frobenius(), "F(I) = F(S) for " + m.ideal.to_string());
    c.expect(k, is_almost_canonical(m.ideal), m.ideal.to_string() + " almost canonical");
  }
  for (Int i = 1; i <= t + 1; ++i) {
    c.expect(k, histogram[static_cast<std::size_t>(i)] == binomial(t, i - 1),
             "binomial(t, i - 1) ideals of type " + std::to_string(i));
  }
  c.expect(k, ideal_type_bound_check(s), "1 <= t(I) <= t(S) + 1");
  if (s.genus() <= exhaustive_genus) {
    const ExhaustiveScan scan = scan_for_missing_almost_canonical(family);
    c.out().exhaustive_ideals += scan.ideals_checked;
    for (const std::string& missing : scan.outside_family) {
      c.expect(k, false, "almost canonical ideal outside the family: " + missing);
    }
    c.expect(k, scan.outside_family.empty(), "exhaustive scan");
  }
}

void equivalences_suite(Checker& c) {
  const NumericalSemigroup& s = c.s();
  const Suite k = Suite::kEquivalences;
  const auto sym = routes::symmetric(s);
  c.expect(k, sym.equals_canonical == sym.type_one && sym.type_one == sym.genus_formula,
           "symmetric characterizations");
  const auto as = routes::almost_symmetric(s);
  c.expect(k, as.definition == as.genus_type && as.genus_type == as.second_type_gaps,
           "almost symmetric characterizations");
  const auto gas = routes::gas(s);
  c.expect(k, gas.definition.gas == gas.pair_differences &&
                  gas.pair_differences == gas.s_minus_k,
           "GAS characterizations");
  c.expect(k, gas.definition.gas == gas.mme_almost_canonical, "GAS and M - e");
  const auto ng = routes::nearly_gorenstein(s);
  c.expect(k, ng.trace == ng.generator_criterion, "nearly Gorenstein characterizations");
  if (ng.type2_formula) c.expect(k, *ng.type2_formula == ng.trace, "3f - 2F(S) criterion");
  const auto cr = routes::canonical_reduction(s);
  c.expect(k, cr.gap_scan == cr.e_in_s_minus_k, "canonical reduction characterizations");
  const auto agl = routes::agl_level(s);
  c.expect(k, agl.from_powers == agl.from_closure, "AGL level routes");
  for (const RelativeIdeal& i : standard_ideals(s)) {
    c.expect(k, all_equal(routes::almost_canonical(i)),
             "almost-canonical conditions on " + i.to_string());
  }
}

void constructions_suite(Checker& c) {
  const NumericalSemigroup& s = c.s();
  const Suite k = Suite::kConstructions;
  const ClassificationReport& r = *c.out().report;
  if (r.symmetric) return;

  // Gluing trichotomy, with N and with <2,3> as partner.
  const NumericalSemigroup partners[] = {NumericalSemigroup(),
                                         NumericalSemigroup::from_generators({2, 3})};
  for (const NumericalSemigroup& partner : partners) {
    for (const GluingParameters& p : gluing_parameters(s, partner, 2)) {
      c.run(k, [&] {
        const NumericalSemigroup t = gluing({s, partner, p.a, p.b});
        ++c.out().constructions;
        if (is_symmetric(t)) return;
        const bool gas = is_gas(t).gas;
        c.expect(k, gas == (agl_level(t) == 2), "glued T: GAS iff 2-AGL");
        c.expect(k, gas == is_double_plus_odd_gluing(t), "glued T: GAS iff <2S, b>");
      });
    }
  }

  const RelativeIdeal self = as_ideal(s);
  const RelativeIdeal m = maximal_ideal(s);
  const RelativeIdeal s_minus_closure = difference(self, canonical_closure_ideal(s));
  const RelativeIdeal kk = canonical_ideal(s);
  for (Int b : duplication_b_values(s, 2)) {
    c.run(k, [&] {
      const NumericalSemigroup t = duplication({s, s_minus_closure, b});
      ++c.out().constructions;
      c.expect(k, agl_level(t) == r.agl_level, "duplication with S - <K> keeps n-AGL");
      c.expect(k, is_gas(t).gas == r.gas, "duplication with S - <K> keeps GAS");
      const Decomposition d = duplication_decompose(t, b);
      c.expect(k, d.s == s && d.ideal == s_minus_closure, "decomposition round trip");
    });
    c.run(k, [&] {
      const NumericalSemigroup t = duplication({s, m, b});
      ++c.out().constructions;
      if (!r.almost_symmetric) {
        c.expect(k, !is_gas(t).gas, "duplication with M of non almost symmetric S");
      } else {
        c.expect(k, is_almost_symmetric(t) && t.type() == 2 * r.type + 1,
                 "duplication with M is almost symmetric of type 2t + 1");
      }
      const RelativeIdeal kt = canonical_ideal(t);
      bool lemma = true;
      for (Int x : kk.small_members()) lemma = lemma && kt.contains(2 * x) && kt.contains(2 * x + b);
      for (Int x = kk.conductor(); x <= kk.conductor() + 1; ++x) {
        lemma = lemma && kt.contains(2 * x) && kt.contains(2 * x + b);
      }
      c.expect(k, lemma, "k in K gives 2k and 2k + b in K(T)");
    });
  }

  for (Int a : dilatation_a_values(s, 2)) {
    c.run(k, [&] {
      const NumericalSemigroup t = dilatation({s, a});
      ++c.out().constructions;
      c.expect(k, is_gas(t).gas == r.gas, "dilatation keeps GAS");
    });
  }
}

Outcome evaluate(const NumericalSemigroup& s, const VerifyOptions& options,
                 const std::vector<Suite>& suites) {
  Outcome out;
  Checker c(s, out);
  try {
    out.report = classify(s);
    out.line = to_json(*out.report).dump();
  } catch (const Error& e) {
    nlohmann::ordered_json j;
    j["generators"] = s.minimal_generators();
    j["error"] = e.what();
    out.line = j.dump();
    out.violations.push_back({s.literal(), "classify", e.what()});
    return out;
  }
  for (Suite suite : suites) {
    switch (suite) {
      case Suite::kCore:
        c.run(suite, [&] { core_suite(c); });
        break;
      case Suite::kIdeals:
        c.run(suite, [&] { ideals_suite(c); });
        break;
      case Suite::kGasMme:
        c.run(suite, [&] { gas_mme_suite(c); });
        break;
      case Suite::kCounting:
        c.run(suite, [&] { counting_suite(c, options.exhaustive_genus); });
        break;
      case Suite::kEquivalences:
        c.run(suite, [&] { equivalences_suite(c); });
        break;
      case Suite::kConstructions:
        if (s.genus() <= options.construction_genus) {
          c.run(suite, [&] { constructions_suite(c); });
        }
        break;
    }
  }
  return out;
}

}  // namespace

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::kCore:
      return "core";
    case Suite::kIdeals:
      return "ideals";
    case Suite::kGasMme:
      return "gas-mme";
    case Suite::kCounting:
      return "counting";
    case Suite::kEquivalences:
      return "equivalences";
    case Suite::kConstructions:
      return "constructions";
  }
  return "unknown";
}

std::vector<Suite> parse_suites(std::string_view name) {
  if (name == "all") return {kAllSuites.begin(), kAllSuites.end()};
  for (Suite s : kAllSuites) {
    if (suite_name(s) == name) return {s};
  }
  fail(Errc::kParse, "unknown suite '" + std::string(name) + "'");
}

VerifyReport verify_corpus(const VerifyOptions& options) {
  if (options.max_genus < 1) {
    fail(Errc::kPreconditionFailed, "max genus must be at least 1");
  }
  std::vector<Suite> suites = options.suites;
  if (suites.empty()) suites.assign(kAllSuites.begin(), kAllSuites.end());
  std::sort(suites.begin(), suites.end());
  suites.erase(std::unique(suites.begin(), suites.end()), suites.end());

  const Corpus corpus = genus_tree(options.max_genus);
  std::vector<NumericalSemigroup> work;
  for (const NumericalSemigroup& s : corpus.semigroups) {
    if (!s.is_natural()) work.push_back(s);
  }

  std::vector<Outcome> outcomes(work.size());
  unsigned threads = options.threads ? options.threads
                                     : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(work.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < work.size(); i = next++) {
      outcomes[i] = evaluate(work[i], options, suites);
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  pool.clear();

  VerifyReport report;
  nlohmann::ordered_json counts;
  Int symmetric = 0, type_one = 0, pseudo = 0, almost = 0, gas = 0, ng = 0,
      ggl = 0, reduction = 0;
  std::vector<Int> levels;
  std::array<Int, kAllSuites.size()> checks{};
  Int ideals = 0, exhaustive = 0, constructions = 0;
  nlohmann::ordered_json witnesses;
  witnesses["agl3_gas"] = nullptr;
  witnesses["agl3_not_gas"] = nullptr;

  for (std::size_t i = 0; i < work.size(); ++i) {
    Outcome& o = outcomes[i];
    report.lines.push_back(std::move(o.line));
    for (Violation& v : o.violations) report.violations.push_back(std::move(v));
    for (std::size_t j = 0; j < checks.size(); ++j) checks[j] += o.checks[j];
    ideals += o.ideals_enumerated;
    exhaustive += o.exhaustive_ideals;
    constructions += o.constructions;
    if (!o.report) continue;
    const ClassificationReport& r = *o.report;
    symmetric += r.symmetric;
    type_one += r.type == 1;
    pseudo += r.pseudo_symmetric;
    almost += r.almost_symmetric;
    gas += r.gas;
    ng += r.nearly_gorenstein;
    ggl += r.ggl;
    reduction += r.canonical_reduction;
    if (static_cast<std::size_t>(r.agl_level) >= levels.size()) {
      levels.resize(static_cast<std::size_t>(r.agl_level) + 1);
    }
    ++levels[static_cast<std::size_t>(r.agl_level)];
    const char* key = r.gas ? "agl3_gas" : "agl3_not_gas";
    if (r.agl_level == 3 && witnesses[key].is_null()) {
      witnesses[key] = work[i].literal();
    }
  }

  counts["symmetric"] = symmetric;
  counts["type_one"] = type_one;
  counts["pseudo_symmetric"] = pseudo;
  counts["almost_symmetric"] = almost;
  counts["gas"] = gas;
  counts["nearly_gorenstein"] = ng;
  counts["ggl"] = ggl;
  counts["canonical_reduction"] = reduction;
  counts["agl_levels"] = levels;

  nlohmann::ordered_json check_counts;
  for (Suite s : suites) check_counts[std::string(suite_name(s))] = checks[index(s)];

  nlohmann::ordered_json violations = nlohmann::ordered_json::array();
  for (const Violation& v : report.violations) {
    violations.push_back({{"semigroup", v.semigroup}, {"suite", v.suite}, {"detail", v.detail}});
  }

  nlohmann::ordered_json suite_names = nlohmann::ordered_json::array();
  for (Suite s : suites) suite_names.push_back(std::string(suite_name(s)));

  auto& summary = report.summary;
  summary["max_genus"] = options.max_genus;
  summary["suites"] = suite_names;
  summary["semigroups"] = corpus.semigroups.size();
  summary["checked"] = work.size();
  summary["per_genus"] = per_genus_counts(corpus);
  summary["counts"] = counts;
  summary["checks"] = check_counts;
  summary["almost_canonical_ideals"] = ideals;
  summary["exhaustive_ideals_scanned"] = exhaustive;
  summary["constructions"] = constructions;
  summary["witnesses"] = witnesses;
  summary["violations"] = violations;
  return report;
}

void write_report(std::ostream& out, const VerifyReport& report) {
  for (const std::string& line : report.lines) out << line << '\n';
  nlohmann::ordered_json tail;
  tail["summary"] = report.summary;
  out << tail.dump() << '\n';
}

}  // namespace numsg
