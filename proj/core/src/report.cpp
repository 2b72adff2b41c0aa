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

#include "numsg/report.hpp"

#include <sstream>

#include "numsg/ideal.hpp"

namespace numsg {

namespace {

void check(const NumericalSemigroup& s, bool ok, const char* what) {
  if (!ok) {
    fail(Errc::kInternalInconsistency,
         std::string(what) + " for <" + s.literal() + ">");
  }
}

std::string list(const std::vector<Int>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

}  // namespace

ClassificationReport classify(const NumericalSemigroup& s) {
  if (s.is_natural()) {
    fail(Errc::kFullSemigroup, "N is not classifiable");
  }
  ClassificationReport r;
  r.generators = s.minimal_generators();
  r.frobenius = s.frobenius();
  r.multiplicity = s.multiplicity();
  r.genus = s.genus();
  r.type = s.type();
  r.pf = s.pseudo_frobenius_numbers();
  r.apery = s.apery();
  r.two_k_gap = two_k_gap(s);
  r.agl_level = agl_level(s);
  r.symmetric = is_symmetric(s);
  r.pseudo_symmetric = is_pseudo_symmetric(s);
  r.almost_symmetric = is_almost_symmetric(s);
  const GasResult gas = is_gas(s);
  r.gas = gas.gas;
  r.gas_witness = gas.witness;
  r.nearly_gorenstein = is_nearly_gorenstein(s);
  const GglResult ggl = is_ggl(s);
  r.ggl = ggl.ggl;
  r.ggl_x = ggl.x;
  r.canonical_reduction = has_canonical_reduction(s);

  check(s, !r.symmetric || r.almost_symmetric, "symmetric but not almost symmetric");
  check(s, !r.pseudo_symmetric || r.almost_symmetric,
        "pseudo-symmetric but not almost symmetric");
  check(s, !r.almost_symmetric || r.gas, "almost symmetric but not GAS");
  check(s, r.agl_level > 2 || r.gas, "at most 2-AGL but not GAS");
  check(s, r.two_k_gap.empty() == r.symmetric, "2K = K does not match symmetry");
  check(s, r.symmetric == (r.type == 1), "type 1 does not match symmetry");
  check(s, !r.symmetric || (r.ggl && !r.ggl_x), "symmetric but not GGL");
  check(s, r.gas == (r.gas_witness.failure == GasFailureKind::kNone),
        "GAS witness does not match the verdict");
  return r;
}

nlohmann::ordered_json to_json(const ClassificationReport& r) {
  nlohmann::ordered_json j;
  j["generators"] = r.generators;
  j["frobenius"] = r.frobenius;
  j["multiplicity"] = r.multiplicity;
  j["genus"] = r.genus;
  j["type"] = r.type;
  j["pf"] = r.pf;
  j["apery"] = r.apery;
  j["two_k_gap"] = r.two_k_gap;
  j["agl_level"] = r.agl_level;
  j["symmetric"] = r.symmetric;
  j["pseudo_symmetric"] = r.pseudo_symmetric;
  j["almost_symmetric"] = r.almost_symmetric;
  j["gas"] = r.gas;
  switch (r.gas_witness.failure) {
    case GasFailureKind::kNone:
      j["gas_witness"] = nullptr;
      break;
    case GasFailureKind::kNotMinimalGenerator:
      j["gas_witness"] = {{"kind", "NotMinimalGenerator"},
                          {"values", {r.gas_witness.first}}};
      break;
    case GasFailureKind::kPairDifferenceInPF:
      j["gas_witness"] = {
          {"kind", "PairDifferenceInPF"},
          {"values", {r.gas_witness.first, r.gas_witness.second}}};
      break;
  }
  j["nearly_gorenstein"] = r.nearly_gorenstein;
  j["ggl"] = r.ggl;
  j["ggl_x"] = r.ggl_x ? nlohmann::ordered_json(*r.ggl_x) : nlohmann::ordered_json();
  j["canonical_reduction"] = r.canonical_reduction;
  return j;
}

std::string to_pretty(const NumericalSemigroup& s,
                      const ClassificationReport& r) {
  const RelativeIdeal k = canonical_ideal(s);
  std::ostringstream os;
  os << "semigroup           " << s << '\n'
     << "members             " << as_ideal(s).to_string() << '\n'
     << "canonical ideal     " << k.to_string() << '\n'
     << "2K                  " << sum(k, k).to_string() << '\n'
     << "frobenius           " << r.frobenius << '\n'
     << "multiplicity        " << r.multiplicity << '\n'
     << "genus               " << r.genus << '\n'
     << "type                " << r.type << '\n'
     << "pf                  " << list(r.pf) << '\n'
     << "apery               " << list(r.apery) << '\n'
     << "2K \\ K              " << list(r.two_k_gap) << '\n'
     << "agl level           " << r.agl_level << '\n'
     << "symmetric           " << std::boolalpha << r.symmetric << '\n'
     << "pseudo-symmetric    " << r.pseudo_symmetric << '\n'
     << "almost symmetric    " << r.almost_symmetric << '\n'
     << "GAS                 " << r.gas;
  if (!r.gas) os << " (" << to_string(r.gas_witness) << ')';
  os << '\n'
     << "nearly Gorenstein   " << r.nearly_gorenstein << '\n'
     << "GGL                 " << r.ggl;
  if (r.ggl_x) os << " (x = " << *r.ggl_x << ')';
  os << '\n' << "canonical reduction " << r.canonical_reduction << '\n';
  return os.str();
}

}  // namespace numsg
