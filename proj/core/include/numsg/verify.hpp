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

#ifndef NUMSG_VERIFY_HPP_
#define NUMSG_VERIFY_HPP_

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "numsg/semigroup.hpp"

namespace numsg {

enum class Suite {
  kCore,          // first-order invariants and report consistency
  kIdeals,        // duality and invariants on the standard ideals
  kGasMme,        // GAS versus M - e in M - M, and the GAS consequences
  kCounting,      // 2^t almost canonical ideals with binomial types
  kEquivalences,  // every characterization route agrees
  kConstructions  // GAS and AGL transfer through the three constructions
};

std::string_view suite_name(Suite s);

// "core", "ideals", "gas-mme", "counting", "equivalences", "constructions"
// or "all". Throws Parse for anything else.
std::vector<Suite> parse_suites(std::string_view name);

struct VerifyOptions {
  int max_genus = 12;
  std::vector<Suite> suites;
  unsigned threads = 0;       // 0 picks the hardware concurrency
  int exhaustive_genus = 8;   // exhaustive ideal scan up to this genus
  int construction_genus = 10;
};

struct Violation {
  std::string semigroup;
  std::string suite;
  std::string detail;
};

struct VerifyReport {
  std::vector<std::string> lines;  // one JSON object per semigroup S != N
  std::vector<Violation> violations;
  nlohmann::ordered_json summary;
};

// Evaluates the selected suites on every semigroup of the genus tree up to
// max_genus. Work is spread over threads, but the report only depends on the
// corpus order, so it is identical for every thread count.
VerifyReport verify_corpus(const VerifyOptions& options);

// JSON lines followed by {"summary": ...}.
void write_report(std::ostream& out, const VerifyReport& report);

}  // namespace numsg

#endif  // NUMSG_VERIFY_HPP_
