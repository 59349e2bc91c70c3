// Copyright 2026 The tapcorrect Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Serial reference vs OpenMP kernels on generated bundles.
//
//   build/bench/tapcorrect_bench --benchmark_filter=Screen

#include <benchmark/benchmark.h>

#include <utility>
#include <vector>

#include "tapcorrect/kernels.h"
#include "testkit/testkit.h"

namespace {

using tapcorrect::NameFilter;
using tapcorrect::NetworkBundle;
using tapcorrect::VertexId;

const NetworkBundle& bundle_for(std::size_t characters) {
  static std::vector<std::pair<std::size_t, NetworkBundle>> cache;
  for (const auto& [n, b] : cache) {
    if (n == characters) return b;
  }
  tapcorrect::testkit::RandomBundleSpec spec;
  spec.characters = characters;
  spec.entities_per_type = {150, 150, 150, 150};
  spec.relation_types = 4;
  spec.edge_density = 0.02;
  spec.ensure_edge = true;
  spec.seed = 7;
  auto planted = tapcorrect::testkit::plant_duplicates(
      tapcorrect::testkit::generate(spec), characters / 20,
      tapcorrect::testkit::PlantMode::kExactClone, 11);
  cache.emplace_back(characters, std::move(planted.bundle));
  return cache.back().second;
}

std::vector<std::pair<VertexId, VertexId>> all_pairs(const NetworkBundle& b,
                                                     std::size_t limit) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  const auto people = b.characters();
  for (std::size_t i = 0; i < people.size() && pairs.size() < limit; ++i) {
    for (std::size_t j = i + 1; j < people.size() && pairs.size() < limit;
         ++j) {
      pairs.emplace_back(people[i], people[j]);
    }
  }
  return pairs;
}

void BM_ScreenSerial(benchmark::State& state) {
  const auto& b = bundle_for(static_cast<std::size_t>(state.range(0)));
  const auto people = b.characters();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        tapcorrect::kernels::screen_serial(b, people, NameFilter::kOff));
  }
}

void BM_ScreenOmp(benchmark::State& state) {
  const auto& b = bundle_for(static_cast<std::size_t>(state.range(0)));
  const auto people = b.characters();
  for (auto _ : state) {
    benchmark::DoNotOptimize(tapcorrect::kernels::screen_omp(
        b, people, NameFilter::kOff, static_cast<int>(state.range(1))));
  }
}

void BM_ScoreSerial(benchmark::State& state) {
  const auto& b = bundle_for(600);
  const auto pairs = all_pairs(b, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tapcorrect::kernels::score_serial(b, pairs, 2014));
  }
}

void BM_ScoreOmp(benchmark::State& state) {
  const auto& b = bundle_for(600);
  const auto pairs = all_pairs(b, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tapcorrect::kernels::score_omp(
        b, pairs, 2014, static_cast<int>(state.range(1))));
  }
}

}  // namespace

BENCHMARK(BM_ScreenSerial)->Arg(600)->Arg(2000);
BENCHMARK(BM_ScreenOmp)->ArgsProduct({{600, 2000}, {1, 2, 4, 8}});
BENCHMARK(BM_ScoreSerial)->Arg(10000);
BENCHMARK(BM_ScoreOmp)->ArgsProduct({{10000}, {1, 2, 4, 8}});

BENCHMARK_MAIN();
