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

#include <benchmark/benchmark.h>

#include "numsg/classify.hpp"
#include "numsg/enumerate.hpp"
#include "numsg/ideal.hpp"
#include "numsg/report.hpp"

namespace {

using numsg::Int;
using numsg::NumericalSemigroup;

// Frobenius number from generators, for increasingly large multiplicities.
void BM_FromGenerators(benchmark::State& state) {
  const Int e = state.range(0);
  const std::vector<Int> gens{e, e + 1, 2 * e + 3, 3 * e + 7};
  for (auto _ : state) {
    benchmark::DoNotOptimize(NumericalSemigroup::from_generators(gens).frobenius());
  }
}
BENCHMARK(BM_FromGenerators)->RangeMultiplier(4)->Range(8, 512);

void BM_CanonicalSquare(benchmark::State& state) {
  const auto s = NumericalSemigroup::from_generators({67, 69, 76, 78, 86});
  const auto k = numsg::canonical_ideal(s);
  for (auto _ : state) benchmark::DoNotOptimize(numsg::sum(k, k));
}
BENCHMARK(BM_CanonicalSquare);

void BM_ClassifyReport(benchmark::State& state) {
  const auto s = NumericalSemigroup::from_generators({9, 24, 39, 43, 77});
  for (auto _ : state) benchmark::DoNotOptimize(numsg::classify(s));
}
BENCHMARK(BM_ClassifyReport);

void BM_GenusTree(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(numsg::genus_tree(g).semigroups.size());
}
BENCHMARK(BM_GenusTree)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);

void BM_AlmostCanonicalFamily(benchmark::State& state) {
  const auto s = NumericalSemigroup::from_generators({9, 24, 39, 43, 77});
  for (auto _ : state) benchmark::DoNotOptimize(numsg::almost_canonical_ideals(s).members.size());
}
BENCHMARK(BM_AlmostCanonicalFamily);

}  // namespace

BENCHMARK_MAIN();
