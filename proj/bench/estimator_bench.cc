// Copyright 2026 The alphagrad Authors
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

// Serial reference versus OpenMP batch throughput for both estimators.

#include <benchmark/benchmark.h>

#include "alphagrad/envs/pushing.h"
#include "alphagrad/envs/tennis.h"
#include "alphagrad/estimators.h"

namespace {

using alphagrad::Execution;

template <class Env>
void BM_Fobg(benchmark::State& state) {
  const Env env;
  const auto policy = env.DefaultPolicy();
  const auto theta = env.DefaultTheta();
  const auto x1 = env.DefaultInitialState();
  const alphagrad::NoiseModel noise(0.1, env.input_dim());
  const auto exec = state.range(1) ? Execution::kParallel : Execution::kSerial;
  for (auto _ : state) {
    auto batch = alphagrad::Fobg(env, policy, theta, x1,
                                 static_cast<int>(state.range(0)), noise, 7,
                                 exec);
    benchmark::DoNotOptimize(batch.mean.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <class Env>
void BM_Zobg(benchmark::State& state) {
  const Env env;
  const auto policy = env.DefaultPolicy();
  const auto theta = env.DefaultTheta();
  const auto x1 = env.DefaultInitialState();
  const alphagrad::NoiseModel noise(0.1, env.input_dim());
  const auto exec = state.range(1) ? Execution::kParallel : Execution::kSerial;
  for (auto _ : state) {
    auto batch = alphagrad::Zobg(env, policy, theta, x1,
                                 static_cast<int>(state.range(0)), noise, 7,
                                 true, exec);
    benchmark::DoNotOptimize(batch.mean.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

BENCHMARK(BM_Fobg<alphagrad::PushingEnv>)
    ->ArgsProduct({{256, 1024}, {0, 1}})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Zobg<alphagrad::PushingEnv>)
    ->ArgsProduct({{256, 1024}, {0, 1}})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Fobg<alphagrad::TennisEnv>)
    ->ArgsProduct({{256}, {0, 1}})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Zobg<alphagrad::TennisEnv>)
    ->ArgsProduct({{256}, {0, 1}})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
