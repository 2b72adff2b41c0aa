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

#include "numsg/semigroup.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <limits>
#include <numeric>
#include <ostream>
#include <queue>
#include <sstream>
#include <utility>

namespace numsg {

struct NumericalSemigroup::Data {
  std::vector<Int> generators{1};
  std::vector<std::uint8_t> window;  // membership over [0, frobenius]
  Int frobenius = -1;
  Int multiplicity = 1;
  Int genus = 0;
  std::vector<Int> apery{0};
  std::vector<Int> pf{-1};
};

namespace {

constexpr Int kMaxGenerator = Int{1} << 31;

// Least member in each residue class modulo e: shortest paths on Z/e with an
// edge r -> r + g of weight g for every generator.
std::vector<Int> apery_by_shortest_paths(Int e, std::span<const Int> gens) {
  std::vector<Int> best_by_residue(static_cast<std::size_t>(e), -1);
  for (Int g : gens) {
    auto& slot = best_by_residue[static_cast<std::size_t>(g % e)];
    if (g % e != 0 && (slot < 0 || g < slot)) slot = g;
  }
  std::vector<Int> steps;
  for (Int g : best_by_residue) {
    if (g > 0) steps.push_back(g);
  }

  constexpr Int kUnreached = std::numeric_limits<Int>::max();
  std::vector<Int> dist(static_cast<std::size_t>(e), kUnreached);
  using Entry = std::pair<Int, Int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  dist[0] = 0;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [d, r] = queue.top();
    queue.pop();
    if (d != dist[static_cast<std::size_t>(r)]) continue;
    for (Int g : steps) {
      Int next = (r + g) % e;
      Int cand = d + g;
      if (cand < dist[static_cast<std::size_t>(next)]) {
        dist[static_cast<std::size_t>(next)] = cand;
        queue.emplace(cand, next);
      }
    }
  }
  return dist;
}

}  // namespace

NumericalSemigroup::NumericalSemigroup() {
  static const auto natural = std::make_shared<const Data>();
  d_ = natural;
}

NumericalSemigroup::NumericalSemigroup(std::shared_ptr<const Data> data)
    : d_(std::move(data)) {}

NumericalSemigroup NumericalSemigroup::from_generators(
    std::initializer_list<Int> gens) {
  return from_generators(std::span<const Int>(gens.begin(), gens.size()));
}

NumericalSemigroup NumericalSemigroup::from_generators(
    std::span<const Int> gens) {
  if (gens.empty()) fail(Errc::kEmptyGenerators, "no generators given");
  Int g = 0;
  for (Int x : gens) {
    if (x <= 0) {
      fail(Errc::kNonPositiveGenerator,
           "generator " + std::to_string(x) + " is not positive");
    }
    if (x > kMaxGenerator) {
      fail(Errc::kTooLarge, "generator " + std::to_string(x) + " too large");
    }
    g = std::gcd(g, x);
  }
  if (g != 1) {
    fail(Errc::kGcdNotOne, "gcd of generators is " + std::to_string(g));
  }
  Int e = *std::min_element(gens.begin(), gens.end());
  if (e == 1) return NumericalSemigroup();
  if (e > kMaxFrobenius) fail(Errc::kTooLarge, "multiplicity too large");

  std::vector<Int> apery = apery_by_shortest_paths(e, gens);
  Int frobenius = *std::max_element(apery.begin(), apery.end()) - e;
  if (frobenius > kMaxFrobenius) {
    fail(Errc::kTooLarge,
         "Frobenius number " + std::to_string(frobenius) + " too large");
  }
  std::vector<std::uint8_t> window(static_cast<std::size_t>(frobenius + 1));
  for (Int x = 0; x <= frobenius; ++x) {
    window[static_cast<std::size_t>(x)] =
        x >= apery[static_cast<std::size_t>(x % e)] ? 1 : 0;
  }
  return from_validated_window(std::move(window));
}

NumericalSemigroup NumericalSemigroup::from_member_window(
    const std::vector<std::uint8_t>& window) {
  if (window.empty() || !window[0]) {
    fail(Errc::kNotASemigroup, "0 is not a member");
  }
  // Trim trailing members so the window ends at the Frobenius number.
  Int frobenius = -1;
  for (Int x = static_cast<Int>(window.size()) - 1; x >= 0; --x) {
    if (!window[static_cast<std::size_t>(x)]) {
      frobenius = x;
      break;
    }
  }
  if (frobenius < 0) return NumericalSemigroup();
  if (frobenius > kMaxFrobenius) fail(Errc::kTooLarge, "window too large");
  std::vector<std::uint8_t> trimmed(window.begin(),
                                    window.begin() + frobenius + 1);
  NumericalSemigroup candidate = from_validated_window(trimmed);

  // The set is contained in the monoid generated by its Apery elements;
  // equality holds exactly when the set is closed under addition.
  std::vector<Int> gens(candidate.apery().begin() + 1, candidate.apery().end());
  gens.push_back(candidate.multiplicity());
  NumericalSemigroup closure = from_generators(gens);
  if (closure.frobenius() != frobenius || closure.d_->window != trimmed) {
    fail(Errc::kNotASemigroup, "set is not closed under addition");
  }
  return closure;
}

NumericalSemigroup NumericalSemigroup::from_validated_window(
    std::vector<std::uint8_t> window) {
  auto data = std::make_shared<Data>();
  const Int frobenius = static_cast<Int>(window.size()) - 1;
  auto member = [&](Int x) {
    return x >= 0 && (x > frobenius || window[static_cast<std::size_t>(x)]);
  };

  Int e = 1;
  while (!member(e)) ++e;

  std::vector<Int> apery(static_cast<std::size_t>(e), -1);
  apery[0] = 0;
  Int found = 1;
  for (Int x = 1; found < e; ++x) {
    auto& slot = apery[static_cast<std::size_t>(x % e)];
    if (slot < 0 && member(x)) {
      slot = x;
      ++found;
    }
  }

  auto in_apery = [&](Int x) {
    return member(x) && !member(x - e);
  };

  std::vector<Int> gens{e};
  for (std::size_t i = 1; i < apery.size(); ++i) {
    const Int w = apery[i];
    bool decomposable = false;
    for (std::size_t j = 1; j < apery.size() && !decomposable; ++j) {
      const Int v = apery[j];
      decomposable = v < w && in_apery(w - v);
    }
    if (!decomposable) gens.push_back(w);
  }
  std::sort(gens.begin(), gens.end());

  std::vector<Int> pf;
  for (Int w : apery) {
    bool maximal = true;
    for (Int v : apery) {
      if (v != w && member(v - w)) {
        maximal = false;
        break;
      }
    }
    if (maximal) pf.push_back(w - e);
  }
  std::sort(pf.begin(), pf.end());

  Int genus = 0;
  for (Int x = 1; x <= frobenius; ++x) genus += member(x) ? 0 : 1;

  data->generators = std::move(gens);
  data->window = std::move(window);
  data->frobenius = frobenius;
  data->multiplicity = e;
  data->genus = genus;
  data->apery = std::move(apery);
  data->pf = std::move(pf);
  return NumericalSemigroup(std::move(data));
}

bool NumericalSemigroup::contains(Int x) const noexcept {
  if (x < 0) return false;
  if (x > d_->frobenius) return true;
  return d_->window[static_cast<std::size_t>(x)] != 0;
}

bool NumericalSemigroup::is_natural() const noexcept {
  return d_->frobenius < 0;
}

const std::vector<Int>& NumericalSemigroup::minimal_generators()
    const noexcept {
  return d_->generators;
}

Int NumericalSemigroup::embedding_dimension() const noexcept {
  return static_cast<Int>(d_->generators.size());
}

bool NumericalSemigroup::is_minimal_generator(Int x) const noexcept {
  return std::binary_search(d_->generators.begin(), d_->generators.end(), x);
}

bool NumericalSemigroup::has_maximal_embedding_dimension() const noexcept {
  return embedding_dimension() == multiplicity();
}

Int NumericalSemigroup::frobenius() const noexcept { return d_->frobenius; }
Int NumericalSemigroup::multiplicity() const noexcept {
  return d_->multiplicity;
}
Int NumericalSemigroup::genus() const noexcept { return d_->genus; }
Int NumericalSemigroup::small_count() const noexcept {
  return d_->frobenius + 1 - d_->genus;
}
Int NumericalSemigroup::type() const noexcept {
  return static_cast<Int>(d_->pf.size());
}

const std::vector<Int>& NumericalSemigroup::pseudo_frobenius_numbers()
    const noexcept {
  return d_->pf;
}

const std::vector<Int>& NumericalSemigroup::apery() const noexcept {
  return d_->apery;
}

std::vector<Int> NumericalSemigroup::apery(Int n) const {
  if (n <= 0 || !contains(n)) {
    fail(Errc::kNotAMember,
         std::to_string(n) + " is not a positive member of " + literal());
  }
  std::vector<Int> result(static_cast<std::size_t>(n), -1);
  Int found = 0;
  for (Int x = 0; found < n; ++x) {
    auto& slot = result[static_cast<std::size_t>(x % n)];
    if (slot < 0 && contains(x)) {
      slot = x;
      ++found;
    }
  }
  return result;
}

std::vector<Int> NumericalSemigroup::gaps() const {
  std::vector<Int> out;
  for (Int x = 1; x <= d_->frobenius; ++x) {
    if (!contains(x)) out.push_back(x);
  }
  return out;
}

std::vector<Int> NumericalSemigroup::small_members() const {
  std::vector<Int> out;
  for (Int x = 0; x <= d_->frobenius; ++x) {
    if (contains(x)) out.push_back(x);
  }
  return out;
}

std::string NumericalSemigroup::literal() const {
  std::string out;
  for (Int g : d_->generators) {
    if (!out.empty()) out += ',';
    out += std::to_string(g);
  }
  return out;
}

bool operator==(const NumericalSemigroup& a,
                const NumericalSemigroup& b) noexcept {
  return a.d_ == b.d_ || a.d_->generators == b.d_->generators;
}

std::ostream& operator<<(std::ostream& os, const NumericalSemigroup& s) {
  return os << '<' << s.literal() << '>';
}

std::vector<Int> pseudo_frobenius(const NumericalSemigroup& s) {
  if (s.is_natural()) fail(Errc::kFullSemigroup, "PF(N) is not defined");
  return s.pseudo_frobenius_numbers();
}

std::vector<Int> second_type_gaps(const NumericalSemigroup& s) {
  if (s.is_natural()) fail(Errc::kFullSemigroup, "L(N) is not defined");
  std::vector<Int> out;
  const Int f = s.frobenius();
  for (Int x = 1; x <= f; ++x) {
    if (!s.contains(x) && !s.contains(f - x)) out.push_back(x);
  }
  return out;
}

std::vector<Int> parse_int_list(std::string_view text) {
  std::vector<Int> out;
  auto trim = [](std::string_view v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) {
      v.remove_prefix(1);
    }
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) {
      v.remove_suffix(1);
    }
    return v;
  };
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = trim(text.substr(start, comma - start));
    if (item.empty()) fail(Errc::kParse, "empty entry in '" + std::string(text) + "'");
    Int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec == std::errc::result_out_of_range) {
      fail(Errc::kTooLarge, "'" + std::string(item) + "' out of range");
    }
    if (ec != std::errc() || ptr != item.data() + item.size()) {
      fail(Errc::kParse, "'" + std::string(item) + "' is not an integer");
    }
    out.push_back(value);
    start = comma + 1;
  }
  return out;
}

NumericalSemigroup parse_semigroup(std::string_view literal) {
  std::vector<Int> gens = parse_int_list(literal);
  return NumericalSemigroup::from_generators(gens);
}

}  // namespace numsg
