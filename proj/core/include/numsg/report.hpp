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

#ifndef NUMSG_REPORT_HPP_
#define NUMSG_REPORT_HPP_

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "numsg/classify.hpp"
#include "numsg/semigroup.hpp"

namespace numsg {

// Every classification outcome for one semigroup S != N.
struct ClassificationReport {
  std::vector<Int> generators;
  Int frobenius = 0;
  Int multiplicity = 0;
  Int genus = 0;
  Int type = 0;
  std::vector<Int> pf;
  std::vector<Int> apery;
  std::vector<Int> two_k_gap;
  Int agl_level = 0;
  bool symmetric = false;
  bool pseudo_symmetric = false;
  bool almost_symmetric = false;
  bool gas = false;
  GasWitness gas_witness;
  bool nearly_gorenstein = false;
  bool ggl = false;
  std::optional<Int> ggl_x;
  bool canonical_reduction = false;
};

// Runs every predicate on S and checks that the outcomes are mutually
// consistent (for example symmetric implies almost symmetric implies GAS).
// Throws FullSemigroup for N.
ClassificationReport classify(const NumericalSemigroup& s);

// Fields in a fixed order. gas_witness is null for GAS semigroups and
// otherwise {"kind": ..., "values": [...]}.
nlohmann::ordered_json to_json(const ClassificationReport& r);

// Human-readable rendering; sets of integers use the "{...} c+" notation.
std::string to_pretty(const NumericalSemigroup& s,
                      const ClassificationReport& r);

}  // namespace numsg

#endif  // NUMSG_REPORT_HPP_
