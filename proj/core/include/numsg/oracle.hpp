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

#ifndef NUMSG_ORACLE_HPP_
#define NUMSG_ORACLE_HPP_

#include <optional>
#include <vector>

#include "numsg/ideal.hpp"

namespace numsg {

// Brute-force reference for the windowed ideal arithmetic. Only membership
// queries (contains) are used on the operands, and the result is listed over
// the integer range [-bound, bound] straight from the set definitions.

enum class OracleOp { kSum, kDifference, kDual };

// Members of the result in [-bound, bound], ascending. `j` is required for
// sum and difference and ignored for dual (K - I). Throws BoundTooSmall when
// some operand has its minimum or conductor outside [-bound, bound], and
// PreconditionFailed when `j` is missing.
std::vector<Int> oracle_ideal_op(OracleOp op, const RelativeIdeal& i,
                                 const RelativeIdeal* j, Int bound);

// 3 * max(F(S), |min|, conductor over the operands) + 3.
Int oracle_default_bound(const RelativeIdeal& i, const RelativeIdeal* j);

// Members of a fast-path ideal in [-bound, bound], for comparison.
std::vector<Int> members_in_range(const RelativeIdeal& i, Int bound);

}  // namespace numsg

#endif  // NUMSG_ORACLE_HPP_
