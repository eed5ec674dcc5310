// Copyright 2026 The qimp developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "qimp/annealer.hpp"
#include "qimp/experiment.hpp"

namespace {

using namespace qimp;

void BM_SampleBatch(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    CnfFormula f = gen_random_3sat(n, 1.5, 11);
    Encoding enc = encode(f, default_weights(n), EncodeMode::full());
    SaConfig cfg;
    cfg.num_samples = 50;
    cfg.sweeps_per_sample = 64;
    cfg.seed = 1;
    for (auto _ : state) {
        auto pool = sample(enc, cfg);
        benchmark::DoNotOptimize(best_of(pool).energy);
    }
    state.SetItemsProcessed(state.iterations() * cfg.num_samples);
}
BENCHMARK(BM_SampleBatch)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_IterateShrink(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    CnfFormula f = gen_random_3sat(n, 1.5, 11);
    Encoding enc = encode(f, default_weights(n), EncodeMode::full());
    SaConfig initial;
    initial.num_samples = 100;
    initial.seed = 2;
    SaConfig round;
    round.num_samples = 50;
    round.seed = 3;
    for (auto _ : state) {
        RefineTrace trace = iterate_shrink(enc, initial, round);
        benchmark::DoNotOptimize(trace.refine_rounds_used);
    }
}
BENCHMARK(BM_IterateShrink)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

}  // namespace
