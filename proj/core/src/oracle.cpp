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

#include "numsg/oracle.hpp"

#include <algorithm>
#include <cstdlib>

namespace numsg {

namespace {

void require_within(const RelativeIdeal& x, Int bound) {
  if (x.min() < -bound || x.min() > bound || x.conductor() > bound) {
    fail(Errc::kBoundTooSmall,
         "bound " + std::to_string(bound) + " does not cover " + x.to_string());
  }
}

// Largest integer in [-1, bound] missing from S, found by scanning.
Int frobenius_by_scan(const NumericalSemigroup& s, Int bound) {
  for (Int x = bound; x >= 0; --x) {
    if (!s.contains(x)) return x;
  }
  return -1;
}

}  // namespace

Int oracle_default_bound(const RelativeIdeal& i, const RelativeIdeal* j) {
  Int m = std::max({i.ambient().frobenius(), std::abs(i.min()), i.conductor()});
  if (j) m = std::max({m, std::abs(j->min()), j->conductor()});
  return 3 * m + 3;
}

std::vector<Int> members_in_range(const RelativeIdeal& i, Int bound) {
  std::vector<Int> out;
  for (Int x = -bound; x <= bound; ++x) {
    if (i.contains(x)) out.push_back(x);
  }
  return out;
}

std::vector<Int> oracle_ideal_op(OracleOp op, const RelativeIdeal& i,
                                 const RelativeIdeal* j, Int bound) {
  if (op != OracleOp::kDual && j == nullptr) {
    fail(Errc::kPreconditionFailed, "second operand missing");
  }
  require_within(i, bound);
  if (j) require_within(*j, bound);
  if (i.ambient().frobenius() > bound) {
    fail(Errc::kBoundTooSmall, "bound does not cover F(S)");
  }

  std::vector<Int> out;
  switch (op) {
    case OracleOp::kSum: {
      // x = a + b with both operands >= -bound, so a, b <= 2 * bound.
      std::vector<bool> hit(static_cast<std::size_t>(2 * bound + 1));
      for (Int a = -bound; a <= 2 * bound; ++a) {
        if (!i.contains(a)) continue;
        for (Int b = -bound; b <= 2 * bound; ++b) {
          const Int x = a + b;
          if (x >= -bound && x <= bound && j->contains(b)) {
            hit[static_cast<std::size_t>(x + bound)] = true;
          }
        }
      }
      for (Int x = -bound; x <= bound; ++x) {
        if (hit[static_cast<std::size_t>(x + bound)]) out.push_back(x);
      }
      break;
    }
    case OracleOp::kDifference:
    case OracleOp::kDual: {
      // For dual, the first operand is K built from its definition.
      const NumericalSemigroup& s = i.ambient();
      const Int f = frobenius_by_scan(s, bound);
      const auto in_k = [&](Int x) { return x >= 0 && !s.contains(f - x); };
      const auto in_left = [&](Int x) {
        return op == OracleOp::kDual ? in_k(x) : i.contains(x);
      };
      const RelativeIdeal& right = op == OracleOp::kDual ? i : *j;
      // Every member of the right operand above 2 * bound lands beyond the
      // conductors, where membership is automatic.
      for (Int x = -bound; x <= bound; ++x) {
        bool all = true;
        for (Int b = -bound; b <= 2 * bound && all; ++b) {
          if (right.contains(b) && !in_left(x + b)) all = false;
        }
        if (all) out.push_back(x);
      }
      break;
    }
  }
  return out;
}

}  // namespace numsg
