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

#ifndef NUMSG_ERROR_HPP_
#define NUMSG_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace numsg {

using Int = std::int64_t;

enum class Errc {
  // construction and parsing
  kEmptyGenerators,
  kNonPositiveGenerator,
  kGcdNotOne,
  kTooLarge,
  kParse,
  // domain preconditions
  kNotAMember,
  kFullSemigroup,
  kAmbientMismatch,
  kNotASemigroup,
  kNotAnIdeal,
  kNotGas,
  kPreconditionFailed,
  kBoundTooSmall,
  // construction parameters
  kNotCoprime,
  kMinimalGenerator,
  kNotMember,
  kEvenB,
  kBNotMember,
  kIdealNotIntegral,
  kTwoBNotMember,
  kNotInM2M,
  // a checked theorem failed
  kInternalInconsistency,
  kSubsetNotIdeal,
  kViolation,
};

std::string_view to_string(Errc code) noexcept;

// Which family an error code belongs to; drives the CLI exit-code contract.
enum class ErrorCategory { kInput, kDomain, kConstruction, kTheorem };

ErrorCategory category(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& message);

}  // namespace numsg

#endif  // NUMSG_ERROR_HPP_
