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

#include "numsg/error.hpp"

namespace numsg {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::kEmptyGenerators: return "EmptyGenerators";
    case Errc::kNonPositiveGenerator: return "NonPositiveGenerator";
    case Errc::kGcdNotOne: return "GcdNotOne";
    case Errc::kTooLarge: return "TooLarge";
    case Errc::kParse: return "Parse";
    case Errc::kNotAMember: return "NotAMember";
    case Errc::kFullSemigroup: return "FullSemigroup";
    case Errc::kAmbientMismatch: return "AmbientMismatch";
    case Errc::kNotASemigroup: return "NotASemigroup";
    case Errc::kNotAnIdeal: return "NotAnIdeal";
    case Errc::kNotGas: return "NotGas";
    case Errc::kPreconditionFailed: return "PreconditionFailed";
    case Errc::kBoundTooSmall: return "BoundTooSmall";
    case Errc::kNotCoprime: return "NotCoprime";
    case Errc::kMinimalGenerator: return "MinimalGenerator";
    case Errc::kNotMember: return "NotMember";
    case Errc::kEvenB: return "EvenB";
    case Errc::kBNotMember: return "BNotMember";
    case Errc::kIdealNotIntegral: return "IdealNotIntegral";
    case Errc::kTwoBNotMember: return "TwoBNotMember";
    case Errc::kNotInM2M: return "NotInM2M";
    case Errc::kInternalInconsistency: return "InternalInconsistency";
    case Errc::kSubsetNotIdeal: return "SubsetNotIdeal";
    case Errc::kViolation: return "Violation";
  }
  return "Unknown";
}

ErrorCategory category(Errc code) noexcept {
  switch (code) {
    case Errc::kEmptyGenerators:
    case Errc::kNonPositiveGenerator:
    case Errc::kGcdNotOne:
    case Errc::kTooLarge:
    case Errc::kParse:
      return ErrorCategory::kInput;
    case Errc::kNotCoprime:
    case Errc::kMinimalGenerator:
    case Errc::kNotMember:
    case Errc::kEvenB:
    case Errc::kBNotMember:
    case Errc::kIdealNotIntegral:
    case Errc::kTwoBNotMember:
    case Errc::kNotInM2M:
    case Errc::kAmbientMismatch:
      return ErrorCategory::kConstruction;
    case Errc::kInternalInconsistency:
    case Errc::kSubsetNotIdeal:
    case Errc::kViolation:
      return ErrorCategory::kTheorem;
    default:
      return ErrorCategory::kDomain;
  }
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

void fail(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace numsg
