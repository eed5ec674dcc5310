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

#ifndef QIMP_ANNEALER_HPP
#define QIMP_ANNEALER_HPP

#include <cstdint>
#include <vector>

#include "qimp/encoder.hpp"

namespace qimp {

/// Geometric inverse-temperature schedule. Zero bounds mean "calibrate from
/// the model": beta_min accepts the largest single-flip move with probability
/// 1/2, beta_max pushes the acceptance of the smallest uphill move (and a
/// fortiori of every larger one) below 1e-6.
struct BetaSchedule {
    double beta_min = 0.0;
    double beta_max = 0.0;
};

struct SaConfig {
    int num_samples = 1000;
    int sweeps_per_sample = 64;  // one sweep = dim flip attempts
    BetaSchedule beta;
    std::uint64_t seed = 0;
    bool restarts_keep_best = true;
    int threads = 1;
};

struct SampleFlags {
    bool consistent = false;
    bool satisfying = false;
    bool below_bound = false;
};

/// One annealing restart: the spin vector, its recomputed energy, and the
/// decoded three-valued assignment. Flags are derived from the bits, never
/// taken from the sampler's bookkeeping. Variables decoded as (1,1) are listed
/// in inconsistent_vars and left Unassigned in `decoded`.
struct SampleResult {
    Bits bits;
    double energy = 0.0;
    PartialAssignment decoded;
    std::vector<int> inconsistent_vars;
    SampleFlags flags;
    int assigned_in_scope = 0;
    int sample_index = 0;
};

/// Build a SampleResult (decode + recomputed energy + flags) from raw bits.
SampleResult make_sample_result(const Encoding& enc, Bits bits, int sample_index);

/// Metropolis single-spin-flip annealing: num_samples independent restarts,
/// each with its own RNG stream derived from (seed, index). Fixed spins are
/// never flipped. Deterministic for a fixed seed, regardless of thread count.
std::vector<SampleResult> sample(const Encoding& enc, const SaConfig& cfg);

/// Lowest energy; ties broken by fewer in-scope assigned variables, then by
/// sample index. Throws on an empty pool.
SampleResult best_of(const std::vector<SampleResult>& samples);

struct RefineRound {
    std::vector<int> frozen;  // variables frozen to (0,0) entering this round
    SampleResult best;
};

struct RefineTrace {
    std::vector<RefineRound> rounds;  // rounds[0] is the initial run
    bool converged = false;
    int refine_rounds_used = 0;  // re-sampling rounds executed after round 0

    const SampleResult& final_best() const { return rounds.back().best; }
};

/// Iterative shrinking: run the initial configuration, then repeatedly freeze
/// the current don't-cares to (0,0), forbid flipping assigned literals, and
/// re-sample with cfg_round. A round is accepted only if its best sample is
/// satisfying and assigns strictly fewer in-scope variables. Stops when no
/// shrinkage occurs or after max_rounds refinement rounds.
RefineTrace iterate_shrink(const Encoding& enc, const SaConfig& cfg_initial,
                           const SaConfig& cfg_round, int max_rounds = 10);

}  // namespace qimp

#endif  // QIMP_ANNEALER_HPP
