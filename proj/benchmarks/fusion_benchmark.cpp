// Copyright 2026 The dsfuse Authors.
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

#include <random>
#include <vector>

#include "dsfuse/fusion.hpp"
#include "dsfuse/oracle.hpp"
#include "dsfuse/scenario.hpp"

namespace dsfuse {
namespace {

MassFunction RandomMass(const Frame& frame, std::mt19937_64& rng, int focals) {
  std::uniform_int_distribution<Mask> pick(1, frame.full_mask());
  std::uniform_real_distribution<double> weight(0.05, 1.0);
  std::vector<MaskedMass> entries;
  double total = 0.0;
  for (int i = 0; i < focals; ++i) {
    entries.push_back({pick(rng), weight(rng)});
    total += entries.back().mass;
  }
  for (auto& e : entries) e.mass /= total;
  return MassFunction::FromMasks(frame, std::move(entries));
}

void BM_Combine(benchmark::State& state) {
  std::vector<std::string> labels;
  for (int i = 0; i < 16; ++i) labels.push_back("h" + std::to_string(i));
  const Frame frame = MakeFrame(labels);
  std::mt19937_64 rng(1);
  const int focals = static_cast<int>(state.range(0));
  const MassFunction a = RandomMass(frame, rng, focals);
  const MassFunction b = RandomMass(frame, rng, focals);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Combine(a, b));
  }
  state.SetComplexityN(focals * focals);
}
BENCHMARK(BM_Combine)->RangeMultiplier(2)->Range(2, 64)->Complexity();

void BM_FuseAllTakraw(benchmark::State& state) {
  const Scenario s = BuiltinTakrawScenario();
  const auto evidence = EvidenceFor(s, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(FuseAll(evidence));
  }
}
BENCHMARK(BM_FuseAllTakraw);

void BM_OracleTakraw(benchmark::State& state) {
  const Scenario s = BuiltinTakrawScenario();
  const auto evidence = EvidenceFor(s, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(OracleFuseAll(evidence));
  }
}
BENCHMARK(BM_OracleTakraw)->Unit(benchmark::kMillisecond);

void BM_SweepTakraw(benchmark::State& state) {
  const Scenario s = BuiltinTakrawScenario();
  const SweepOptions options{.parallel = state.range(0) != 0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(Sweep(s, options));
  }
}
BENCHMARK(BM_SweepTakraw)->Arg(0)->Arg(1)->UseRealTime();

}  // namespace
}  // namespace dsfuse

BENCHMARK_MAIN();
