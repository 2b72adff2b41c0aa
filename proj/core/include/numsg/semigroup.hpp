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

#ifndef NUMSG_SEMIGROUP_HPP_
#define NUMSG_SEMIGROUP_HPP_

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "numsg/error.hpp"

namespace numsg {

// Largest Frobenius number (and multiplicity) a semigroup may have; membership
// windows are stored densely.
inline constexpr Int kMaxFrobenius = Int{1} << 22;

// A numerical semigroup: a submonoid of the naturals with finite complement.
//
// Membership is stored as a dense table over [0, F(S)]; every integer above
// the Frobenius number is a member. All first-order invariants are computed
// once at construction, after which the value is immutable. Copies share the
// underlying data, so passing by value is cheap and thread-safe.
//
// The full semigroup N is representable (F = -1, genus 0). Following the
// usual conventions its Apery set is {0} and its pseudo-Frobenius set is
// {-1}, so t(N) = 1; classification entry points reject it explicitly.
class NumericalSemigroup {
 public:
  // The full semigroup N.
  NumericalSemigroup();

  // The semigroup generated by `gens`. Stored generators are the unique
  // minimal system, sorted ascending.
  static NumericalSemigroup from_generators(std::span<const Int> gens);
  static NumericalSemigroup from_generators(std::initializer_list<Int> gens);

  // The set {x in [0, bound] : window[x]} together with every integer above
  // `bound`. Throws NotASemigroup unless that set is an additive monoid.
  static NumericalSemigroup from_member_window(
      const std::vector<std::uint8_t>& window);

  bool contains(Int x) const noexcept;

  bool is_natural() const noexcept;
  const std::vector<Int>& minimal_generators() const noexcept;
  Int embedding_dimension() const noexcept;
  bool is_minimal_generator(Int x) const noexcept;
  bool has_maximal_embedding_dimension() const noexcept;

  Int frobenius() const noexcept;
  Int conductor() const noexcept { return frobenius() + 1; }
  Int multiplicity() const noexcept;
  Int genus() const noexcept;
  // n(S): members strictly below the Frobenius number.
  Int small_count() const noexcept;
  Int type() const noexcept;

  // Cached PF(S) computed from the maximal Apery elements; {-1} for N.
  const std::vector<Int>& pseudo_frobenius_numbers() const noexcept;
  // Ap(S, e) indexed by residue.
  const std::vector<Int>& apery() const noexcept;
  // Ap(S, n) indexed by residue; n must be a positive member.
  std::vector<Int> apery(Int n) const;

  std::vector<Int> gaps() const;
  // Members in [0, F(S)].
  std::vector<Int> small_members() const;

  // "9,24,39,43,77"
  std::string literal() const;

  friend bool operator==(const NumericalSemigroup& a,
                         const NumericalSemigroup& b) noexcept;

 private:
  struct Data;
  explicit NumericalSemigroup(std::shared_ptr<const Data> data);
  static NumericalSemigroup from_validated_window(
      std::vector<std::uint8_t> window);

  std::shared_ptr<const Data> d_;
};

std::ostream& operator<<(std::ostream& os, const NumericalSemigroup& s);

// PF(S). Throws FullSemigroup for N.
std::vector<Int> pseudo_frobenius(const NumericalSemigroup& s);

// L(S) = K(S) \ S: gaps x with F(S) - x also a gap. Throws FullSemigroup.
std::vector<Int> second_type_gaps(const NumericalSemigroup& s);

// Parses "a,b,c" into integers; whitespace around entries is ignored.
std::vector<Int> parse_int_list(std::string_view text);

// Parses a semigroup literal and builds the semigroup it generates.
NumericalSemigroup parse_semigroup(std::string_view literal);

}  // namespace numsg

#endif  // NUMSG_SEMIGROUP_HPP_
