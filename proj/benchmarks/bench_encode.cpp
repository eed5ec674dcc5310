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

#include "qimp/encoder.hpp"
#include "qimp/experiment.hpp"
#include "qimp/rng.hpp"

namespace {

using namespace qimp;

void BM_Encode3Sat(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    CnfFormula f = gen_random_3sat(n, 1.5, 7);
    for (auto _ : state) {
        Encoding enc = encode(f, default_weights(n), EncodeMode::full());
        benchmark::DoNotOptimize(enc.model.dim());
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_Encode3Sat)->RangeMultiplier(2)->Range(16, 256)->Complexity();

void BM_Energy(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    CnfFormula f = gen_random_3sat(n, 1.5, 7);
    Encoding enc = encode(f, default_weights(n), EncodeMode::full());
    Rng rng(3);
    Bits x(static_cast<std::size_t>(enc.model.dim()));
    for (auto& b : x) b = static_cast<std::uint8_t>(rng.coin());
    for (auto _ : state) benchmark::DoNotOptimize(enc.model.energy(x));
    state.SetComplexityN(n);
}
BENCHMARK(BM_Energy)->RangeMultiplier(2)->Range(16, 256)->Complexity();

void BM_MinOverAux(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    CnfFormula f = gen_random_3sat(n, 1.5, 7);
    Encoding enc = encode(f, default_weights(n), EncodeMode::full());
    Rng rng(5);
    Bits pol(static_cast<std::size_t>(2 * n), 0);
    for (int v = 1; v <= n; ++v) {
        const auto roll = rng.below(3);
        if (roll == 1) pol[static_cast<std::size_t>(2 * (v - 1))] = 1;
        else if (roll == 2) pol[static_cast<std::size_t>(2 * (v - 1) + 1)] = 1;
    }
    for (auto _ : state) benchmark::DoNotOptimize(min_over_aux(enc, pol));
}
BENCHMARK(BM_MinOverAux)->Arg(32)->Arg(128);

}  // namespace

int main(int argc, char** argv) {
    ::benchmark::Initialize(&argc, argv);
    if (::benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    ::benchmark::RunSpecifiedBenchmarks();
    ::benchmark::Shutdown();
    return 0;
}
