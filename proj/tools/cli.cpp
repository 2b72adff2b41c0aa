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

#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <string_view>

#include "numsg/classify.hpp"
#include "numsg/constructions.hpp"
#include "numsg/enumerate.hpp"
#include "numsg/error.hpp"
#include "numsg/ideal.hpp"
#include "numsg/report.hpp"
#include "numsg/semigroup.hpp"
#include "numsg/verify.hpp"

namespace numsg::cli {

namespace {

using Json = nlohmann::ordered_json;

int exit_code(const Error& e) {
  switch (category(e.code())) {
    case ErrorCategory::kInput:
      return kInputError;
    case ErrorCategory::kDomain:
      return kDomainError;
    case ErrorCategory::kConstruction:
      return kConstructionError;
    case ErrorCategory::kTheorem:
      return kTheoremViolation;
  }
  return kDomainError;
}

// ---------------------------------------------------------------------------
// classify

// Report fields plus a few derived values that fixture files may ask for.
Json fixture_value(const NumericalSemigroup& s, const Json& report,
                   const std::string& key) {
  if (report.contains(key)) return report.at(key);
  if (key == "power_gaps") {
    Json out = Json::array();
    for (const PowerGap& g : power_gaps(s)) out.push_back(Json{g.n, g.elements});
    return out;
  }
  if (key == "pf_pairing") return pf_pairing_check(s);
  if (key == "almost_canonical_ideals") {
    return almost_canonical_ideals(s).members.size();
  }
  if (key == "gas_witness_text") {
    return to_string(is_gas(s).witness);
  }
  fail(Errc::kParse, "unknown fixture field '" + key + "'");
}

int run_fixtures(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) fail(Errc::kParse, "cannot read fixture file " + path);
  std::string line;
  int line_no = 0;
  int failures = 0;
  int total = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json fixture;
    try {
      fixture = Json::parse(line);
    } catch (const Json::exception& e) {
      fail(Errc::kParse, path + ":" + std::to_string(line_no) + ": " + e.what());
    }
    if (!fixture.contains("gens") || !fixture.contains("expect")) {
      fail(Errc::kParse, path + ":" + std::to_string(line_no) +
                             ": expected {\"gens\": [...], \"expect\": {...}}");
    }
    const auto gens = fixture.at("gens").get<std::vector<Int>>();
    const NumericalSemigroup s = NumericalSemigroup::from_generators(gens);
    const Json report = to_json(classify(s));
    ++total;
    bool ok = true;
    for (const auto& [key, expected] : fixture.at("expect").items()) {
      const Json actual = fixture_value(s, report, key);
      if (actual != expected) {
        ok = false;
        err << "mismatch <" << s.literal() << "> " << key << ": expected "
            << expected.dump() << ", got " << actual.dump() << '\n';
      }
    }
    out << (ok ? "ok " : "FAIL ") << s.literal() << '\n';
    failures += ok ? 0 : 1;
  }
  out << "fixtures " << total << " passed " << (total - failures) << '\n';
  return failures == 0 ? kOk : kTheoremViolation;
}

// ---------------------------------------------------------------------------
// construct

RelativeIdeal parse_ideal_kind(const NumericalSemigroup& s, const std::string& kind) {
  if (kind == "s-minus-genk") {
    return difference(as_ideal(s), canonical_closure_ideal(s));
  }
  if (kind == "m") return maximal_ideal(s);
  if (kind == "s") return as_ideal(s);
  const std::vector<Int> gens = parse_int_list(kind);
  return ideal_from_generators(s, gens);
}

void emit_construction(const NumericalSemigroup& t, Json construction,
                       bool pretty, std::ostream& out) {
  const ClassificationReport report = classify(t);
  if (pretty) {
    out << "construction        " << construction.dump() << '\n'
        << "postconditions      checked\n"
        << to_pretty(t, report);
    return;
  }
  Json j = to_json(report);
  j["construction"] = std::move(construction);
  out << j.dump() << '\n';
}

// ---------------------------------------------------------------------------
// search

struct Filter {
  std::string key;
  std::optional<Int> value;
  bool negate = false;
};

std::vector<Filter> parse_filters(const std::string& text) {
  std::vector<Filter> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    Filter f;
    if (token.rfind("not-", 0) == 0) {
      f.negate = true;
      token = token.substr(4);
    } else if (token[0] == '!') {
      f.negate = true;
      token = token.substr(1);
    }
    const auto eq = token.find('=');
    if (eq != std::string::npos) {
      const std::vector<Int> v = parse_int_list(token.substr(eq + 1));
      if (v.size() != 1) fail(Errc::kParse, "filter value must be one integer");
      f.value = v[0];
      token = token.substr(0, eq);
    }
    static const std::vector<std::string> kBool{
        "symmetric", "pseudo-symmetric", "almost-symmetric", "gas",
        "nearly-gorenstein", "ggl", "canonical-reduction", "med"};
    static const std::vector<std::string> kValued{"agl", "type", "genus",
                                                  "frobenius", "multiplicity"};
    const bool boolean = std::find(kBool.begin(), kBool.end(), token) != kBool.end();
    const bool valued = std::find(kValued.begin(), kValued.end(), token) != kValued.end();
    if ((boolean && f.value) || (valued && !f.value) || (!boolean && !valued)) {
      fail(Errc::kParse, "unknown filter '" + token + "'");
    }
    f.key = token;
    out.push_back(std::move(f));
  }
  return out;
}

bool matches(const NumericalSemigroup& s, const ClassificationReport& r,
             const Filter& f) {
  bool hit = false;
  if (f.key == "symmetric") hit = r.symmetric;
  else if (f.key == "pseudo-symmetric") hit = r.pseudo_symmetric;
  else if (f.key == "almost-symmetric") hit = r.almost_symmetric;
  else if (f.key == "gas") hit = r.gas;
  else if (f.key == "nearly-gorenstein") hit = r.nearly_gorenstein;
  else if (f.key == "ggl") hit = r.ggl;
  else if (f.key == "canonical-reduction") hit = r.canonical_reduction;
  else if (f.key == "med") hit = s.has_maximal_embedding_dimension();
  else if (f.key == "agl") hit = r.agl_level == *f.value;
  else if (f.key == "type") hit = r.type == *f.value;
  else if (f.key == "genus") hit = r.genus == *f.value;
  else if (f.key == "frobenius") hit = r.frobenius == *f.value;
  else if (f.key == "multiplicity") hit = r.multiplicity == *f.value;
  return hit != f.negate;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Numerical semigroups, almost canonical ideals and GAS classification",
               "numsg"};
  app.require_subcommand(1);

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "Classify one semigroup");
  std::string classify_literal;
  std::string fixtures_path;
  bool want_json = false;
  bool want_pretty = false;
  classify_cmd->add_option("semigroup", classify_literal, "Generators, e.g. 9,24,39,43,77");
  auto* json_flag = classify_cmd->add_flag("--json", want_json, "JSON output (default)");
  auto* pretty_flag = classify_cmd->add_flag("--pretty", want_pretty, "Readable output");
  json_flag->excludes(pretty_flag);
  classify_cmd->add_option("--fixtures", fixtures_path,
                           "Check every {\"gens\", \"expect\"} line of a JSON-lines file");

  // ideals
  auto* ideals_cmd = app.add_subcommand("ideals", "List almost canonical ideals with F(I) = F(S)");
  std::string ideals_literal;
  ideals_cmd->add_option("semigroup", ideals_literal)->required();
  ideals_cmd->add_flag("--almost-canonical", "Enumerate almost canonical ideals (default)");

  // construct
  auto* construct_cmd = app.add_subcommand("construct", "Gluing, duplication, dilatation");
  construct_cmd->require_subcommand(1);
  bool construct_pretty = false;
  construct_cmd->add_flag("--pretty", construct_pretty, "Readable output");
  std::string lit1, lit2, ideal_kind = "s-minus-genk";
  Int param_a = 0, param_b = 0;
  auto* glue_cmd = construct_cmd->add_subcommand("gluing", "<a S1, b S2>");
  glue_cmd->add_option("s1", lit1)->required();
  glue_cmd->add_option("s2", lit2)->required();
  glue_cmd->add_option("--a", param_a)->required();
  glue_cmd->add_option("--b", param_b)->required();
  auto* dup_cmd = construct_cmd->add_subcommand("duplicate", "S joined with 2I + b");
  dup_cmd->add_option("semigroup", lit1)->required();
  dup_cmd->add_option("--ideal", ideal_kind,
                      "s-minus-genk, m, s or a list of ideal generators");
  dup_cmd->add_option("--b", param_b)->required();
  auto* dil_cmd = construct_cmd->add_subcommand("dilate", "{0} u (M + a)");
  dil_cmd->add_option("semigroup", lit1)->required();
  dil_cmd->add_option("--a", param_a)->required();
  auto* dec_cmd = construct_cmd->add_subcommand("decompose", "Split T as a duplication");
  dec_cmd->add_option("semigroup", lit1)->required();
  dec_cmd->add_option("--b", param_b)->required();

  // search
  auto* search_cmd = app.add_subcommand("search", "List corpus members matching filters");
  int search_genus = 6;
  std::string filter_text;
  search_cmd->add_option("--max-genus", search_genus)->check(CLI::Range(0, 20));
  search_cmd->add_option("--filter", filter_text,
                         "Comma-separated: gas, symmetric, agl=2, type=3, not-gas, ...");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Run the property suites on the corpus");
  VerifyOptions verify_options;
  std::string suite = "all";
  bool summary_only = false;
  verify_cmd->add_option("--max-genus", verify_options.max_genus)->check(CLI::Range(1, 20));
  verify_cmd->add_option("--suite", suite,
                         "core, ideals, gas-mme, counting, equivalences, constructions, all");
  verify_cmd->add_option("--threads", verify_options.threads, "Worker threads (0: all cores)");
  verify_cmd->add_flag("--summary-only", summary_only, "Print only the summary line");

  std::vector<const char*> argv{"numsg"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (classify_cmd->parsed()) {
      if (!fixtures_path.empty()) return run_fixtures(fixtures_path, out, err);
      if (classify_literal.empty()) fail(Errc::kParse, "missing semigroup literal");
      const NumericalSemigroup s = parse_semigroup(classify_literal);
      const ClassificationReport r = classify(s);
      if (want_pretty) {
        out << to_pretty(s, r);
      } else {
        out << to_json(r).dump() << '\n';
      }
      return kOk;
    }

    if (ideals_cmd->parsed()) {
      const NumericalSemigroup s = parse_semigroup(ideals_literal);
      const IdealFamily family = almost_canonical_ideals(s);
      for (const auto& m : family.members) {
        if (!is_almost_canonical(m.ideal)) {
          fail(Errc::kInternalInconsistency,
               m.ideal.to_string() + " is not almost canonical");
        }
        out << m.ideal.to_string() << " type " << m.type << '\n';
      }
      out << "total " << family.members.size() << '\n';
      return kOk;
    }

    if (construct_cmd->parsed()) {
      const NumericalSemigroup s = parse_semigroup(lit1);
      Json info;
      if (glue_cmd->parsed()) {
        const NumericalSemigroup s2 = parse_semigroup(lit2);
        info = {{"kind", "gluing"}, {"s1", s.minimal_generators()},
                {"s2", s2.minimal_generators()}, {"a", param_a}, {"b", param_b}};
        emit_construction(gluing({s, s2, param_a, param_b}), info, construct_pretty, out);
      } else if (dup_cmd->parsed()) {
        const RelativeIdeal ideal = parse_ideal_kind(s, ideal_kind);
        info = {{"kind", "duplicate"}, {"s", s.minimal_generators()},
                {"ideal", ideal_kind}, {"ideal_set", ideal.to_string()}, {"b", param_b}};
        emit_construction(duplication({s, ideal, param_b}), info, construct_pretty, out);
      } else if (dil_cmd->parsed()) {
        info = {{"kind", "dilate"}, {"s", s.minimal_generators()}, {"a", param_a}};
        emit_construction(dilatation({s, param_a}), info, construct_pretty, out);
      } else {
        const Decomposition d = duplication_decompose(s, param_b);
        Json j;
        j["construction"] = {{"kind", "decompose"}, {"t", s.minimal_generators()},
                             {"b", param_b}};
        j["s"] = d.s.minimal_generators();
        j["ideal"] = d.ideal.to_string();
        j["ideal_generators"] = ideal_minimal_generators(d.ideal);
        if (construct_pretty) {
          out << "T / 2               " << d.s << '\n'
              << "ideal               " << d.ideal.to_string() << '\n';
        } else {
          out << j.dump() << '\n';
        }
      }
      return kOk;
    }

    if (search_cmd->parsed()) {
      const std::vector<Filter> filters = parse_filters(filter_text);
      std::size_t total = 0;
      for (const NumericalSemigroup& s : genus_tree(search_genus).semigroups) {
        if (s.is_natural()) continue;
        const ClassificationReport r = classify(s);
        const bool keep = std::all_of(filters.begin(), filters.end(),
                                      [&](const Filter& f) { return matches(s, r, f); });
        if (!keep) continue;
        out << s.literal() << '\n';
        ++total;
      }
      out << "total " << total << '\n';
      return kOk;
    }

    if (verify_cmd->parsed()) {
      verify_options.suites = parse_suites(suite);
      const VerifyReport report = verify_corpus(verify_options);
      if (summary_only) {
        out << Json{{"summary", report.summary}}.dump() << '\n';
      } else {
        write_report(out, report);
      }
      for (const Violation& v : report.violations) {
        err << "violation <" << v.semigroup << "> [" << v.suite << "] " << v.detail << '\n';
      }
      return report.violations.empty() ? kOk : kTheoremViolation;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e);
  }
  return kInputError;
}

}  // namespace numsg::cli
