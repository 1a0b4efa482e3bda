// Copyright 2026 The Synthaudit Authors
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

// Serial reference versus OpenMP nearest-neighbor kernels on mixed-type data.

#include <benchmark/benchmark.h>

#include <memory>
#include <vector>

#include "synthaudit/data/dataset.hpp"
#include "synthaudit/data/distance.hpp"
#include "synthaudit/data/neighbors.hpp"
#include "synthaudit/data/rng.hpp"

namespace synthaudit {
namespace {

std::shared_ptr<const TabularSchema> MixedSchema() {
  return std::make_shared<const TabularSchema>(std::vector<Column>{
      {"age", NumericKind{0.0, 100.0}},
      {"income", NumericKind{0.0, 200000.0}},
      {"score", NumericKind{-5.0, 5.0}},
      {"region", CategoricalKind{{"north", "south", "east", "west"}}},
      {"plan", CategoricalKind{{"basic", "plus", "pro"}}},
  });
}

Dataset RandomMixed(std::size_t n, std::uint64_t seed) {
  auto schema = MixedSchema();
  SeededRng rng(seed, "bench");
  std::vector<Record> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    rows.push_back({100.0 * rng.Uniform01(), 200000.0 * rng.Uniform01(),
                    10.0 * rng.Uniform01() - 5.0,
                    CategoryIndex{static_cast<std::uint32_t>(rng.UniformInt(4))},
                    CategoryIndex{static_cast<std::uint32_t>(rng.UniformInt(3))}});
  }
  return Dataset(schema, std::move(rows));
}

struct Fixture {
  Dataset corpus;
  Dataset queries;
  DistanceConfig cfg;
};

Fixture Make(std::size_t corpus_n) {
  Fixture f{RandomMixed(corpus_n, 1), RandomMixed(64, 2), {}};
  f.cfg = DistanceConfig::FromSchema(f.corpus.schema());
  return f;
}

void BM_SingleQuerySerial(benchmark::State& state) {
  const Fixture f = Make(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        NearestNeighborsSerial(f.queries.row(0), f.corpus, 5, f.cfg));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SingleQueryParallel(benchmark::State& state) {
  const Fixture f = Make(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        NearestNeighbors(f.queries.row(0), f.corpus, 5, f.cfg));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_BatchSerial(benchmark::State& state) {
  const Fixture f = Make(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        BatchNearestNeighborsSerial(f.queries, f.corpus, 2, f.cfg));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) *
                          static_cast<std::int64_t>(f.queries.n()));
}

void BM_BatchParallel(benchmark::State& state) {
  const Fixture f = Make(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        BatchNearestNeighbors(f.queries, f.corpus, 2, f.cfg));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) *
                          static_cast<std::int64_t>(f.queries.n()));
}

// Wall-clock timing: CPU time of the calling thread understates parallel work.
BENCHMARK(BM_SingleQuerySerial)
    ->RangeMultiplier(8)
    ->Range(512, 262144)
    ->UseRealTime();
BENCHMARK(BM_SingleQueryParallel)
    ->RangeMultiplier(8)
    ->Range(512, 262144)
    ->UseRealTime();
BENCHMARK(BM_BatchSerial)
    ->RangeMultiplier(8)
    ->Range(512, 32768)
    ->UseRealTime();
BENCHMARK(BM_BatchParallel)
    ->RangeMultiplier(8)
    ->Range(512, 32768)
    ->UseRealTime();

}  // namespace
}  // namespace synthaudit

BENCHMARK_MAIN();
