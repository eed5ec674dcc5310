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

#include "qimp/annealer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "qimp/rng.hpp"

namespace qimp {

namespace {

// Flattened adjacency view of the model for fast delta-energy evaluation.
struct FlatModel {
    int dim = 0;
    std::vector<double> linear;
    std::vector<std::vector<std::pair<int, double>>> neighbors;
    std::vector<std::uint8_t> is_free;
    std::vector<std::uint8_t> fixed_value;
    std::vector<int> free_spins;

    explicit FlatModel(const QuboModel& m)
        : dim(m.dim()),
          linear(static_cast<std::size_t>(m.dim()), 0.0),
          neighbors(static_cast<std::size_t>(m.dim())),
          is_free(static_cast<std::size_t>(m.dim()), 1),
          fixed_value(static_cast<std::size_t>(m.dim()), 0) {
        for (const auto& [i, v] : m.linear()) linear[static_cast<std::size_t>(i)] = v;
        for (const auto& [ij, v] : m.quadratic()) {
            neighbors[static_cast<std::size_t>(ij.first)].emplace_back(ij.second, v);
            neighbors[static_cast<std::size_t>(ij.second)].emplace_back(ij.first, v);
        }
        for (const auto& [i, v] : m.fixed()) {
            is_free[static_cast<std::size_t>(i)] = 0;
            fixed_value[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v);
        }
        for (int i = 0; i < dim; ++i)
            if (is_free[static_cast<std::size_t>(i)]) free_spins.push_back(i);
    }

    // Energy change of flipping spin i in state x.
    double delta(const Bits& x, int i) const {
        double field = linear[static_cast<std::size_t>(i)];
        for (const auto& [j, v] : neighbors[static_cast<std::size_t>(i)])
            if (x[static_cast<std::size_t>(j)]) field += v;
        return x[static_cast<std::size_t>(i)] ? -field : field;
    }
};

BetaSchedule calibrate(const QuboModel& m, const BetaSchedule& requested) {
    if (requested.beta_min > 0 || requested.beta_max > 0) {
        if (!(requested.beta_min < requested.beta_max))
            throw std::invalid_argument("beta_min must be < beta_max");
        return requested;
    }
    // Largest possible single-flip magnitude and the smallest coefficient
    // scale present in the model.
    double max_field = 0.0;
    double min_scale = std::numeric_limits<double>::infinity();
    std::vector<double> field(static_cast<std::size_t>(m.dim()), 0.0);
    for (const auto& [i, v] : m.linear()) {
        field[static_cast<std::size_t>(i)] += std::abs(v);
        if (v != 0.0) min_scale = std::min(min_scale, std::abs(v));
    }
    for (const auto& [ij, v] : m.quadratic()) {
        field[static_cast<std::size_t>(ij.first)] += std::abs(v);
        field[static_cast<std::size_t>(ij.second)] += std::abs(v);
        if (v != 0.0) min_scale = std::min(min_scale, std::abs(v));
    }
    for (double f : field) max_field = std::max(max_field, f);
    if (!std::isfinite(min_scale) || max_field == 0.0) return {0.1, 1.0};  // flat model
    return {std::log(2.0) / max_field, std::log(1e6) / min_scale};
}

void run_restart(const FlatModel& fm, const QuboModel& model, const BetaSchedule& beta,
                 int sweeps, bool keep_best, std::uint64_t seed, Bits& out_bits) {
    Rng rng(seed);
    Bits x(static_cast<std::size_t>(fm.dim), 0);
    for (int i = 0; i < fm.dim; ++i)
        x[static_cast<std::size_t>(i)] = fm.is_free[static_cast<std::size_t>(i)]
                                             ? static_cast<std::uint8_t>(rng.coin())
                                             : fm.fixed_value[static_cast<std::size_t>(i)];
    if (fm.free_spins.empty()) {
        out_bits = x;
        return;
    }

    double energy = model.energy(x);
    double best_energy = energy;
    Bits best = x;

    const int steps = std::max(sweeps, 1);
    const double ratio = beta.beta_max / beta.beta_min;
    for (int sweep = 0; sweep < steps; ++sweep) {
        const double t = steps == 1 ? 1.0 : static_cast<double>(sweep) / (steps - 1);
        const double b = beta.beta_min * std::pow(ratio, t);
        for (int flip = 0; flip < fm.dim; ++flip) {
            const int i = fm.free_spins[rng.below(fm.free_spins.size())];
            const double de = fm.delta(x, i);
            if (de <= 0.0 || rng.uniform() < std::exp(-b * de)) {
                x[static_cast<std::size_t>(i)] ^= 1;
                energy += de;
                if (keep_best && energy < best_energy) {
                    best_energy = energy;
                    best = x;
                }
            }
        }
    }
    out_bits = keep_best && best_energy < energy ? std::move(best) : std::move(x);
}

}  // namespace

SampleResult make_sample_result(const Encoding& enc, Bits bits, int sample_index) {
    SampleResult r;
    r.energy = enc.model.energy(bits);
    r.sample_index = sample_index;
    r.decoded = PartialAssignment(enc.num_vars());
    for (int v = 1; v <= enc.num_vars(); ++v) {
        const bool p = bits[static_cast<std::size_t>(enc.registry.pos_index(v))] != 0;
        const bool n = bits[static_cast<std::size_t>(enc.registry.neg_index(v))] != 0;
        if (p && n) r.inconsistent_vars.push_back(v);
        else if (p) r.decoded.set(v, Ternary::True);
        else if (n) r.decoded.set(v, Ternary::False);
    }
    r.flags.consistent = r.inconsistent_vars.empty();
    bool covered = true;
    for (const ClauseGadget& g : enc.gadgets) {
        bool any = false;
        for (int spin : g.literal_spins)
            if (bits[static_cast<std::size_t>(spin)]) {
                any = true;
                break;
            }
        if (!any) {
            covered = false;
            break;
        }
    }
    r.flags.satisfying = r.flags.consistent && covered;
    r.flags.below_bound = r.energy <= enc.feasible_energy_bound;
    r.assigned_in_scope = r.flags.consistent
                              ? enc.assigned_in_scope(r.decoded)
                              : enc.num_vars() + 1;  // sorts after any consistent decode
    r.bits = std::move(bits);
    return r;
}

std::vector<SampleResult> sample(const Encoding& enc, const SaConfig& cfg) {
    if (cfg.num_samples < 1) throw std::invalid_argument("num_samples must be >= 1");
    if (cfg.sweeps_per_sample < 1) throw std::invalid_argument("sweeps must be >= 1");

    const FlatModel fm(enc.model);
    const BetaSchedule beta = calibrate(enc.model, cfg.beta);

    std::vector<Bits> raw(static_cast<std::size_t>(cfg.num_samples));
    auto worker = [&](int begin, int end) {
        for (int s = begin; s < end; ++s)
            run_restart(fm, enc.model, beta, cfg.sweeps_per_sample, cfg.restarts_keep_best,
                        derive_seed(cfg.seed, static_cast<std::uint64_t>(s)),
                        raw[static_cast<std::size_t>(s)]);
    };

    const int threads = std::clamp(cfg.threads, 1, cfg.num_samples);
    if (threads == 1) {
        worker(0, cfg.num_samples);
    } else {
        std::vector<std::thread> pool;
        const int chunk = (cfg.num_samples + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const int begin = t * chunk;
            const int end = std::min(cfg.num_samples, begin + chunk);
            if (begin < end) pool.emplace_back(worker, begin, end);
        }
        for (auto& th : pool) th.join();
    }

    std::vector<SampleResult> results;
    results.reserve(raw.size());
    for (int s = 0; s < cfg.num_samples; ++s)
        results.push_back(make_sample_result(enc, std::move(raw[static_cast<std::size_t>(s)]), s));
    return results;
}

SampleResult best_of(const std::vector<SampleResult>& samples) {
    if (samples.empty()) throw std::invalid_argument("best_of: empty sample pool");
    const SampleResult* best = &samples.front();
    for (const SampleResult& r : samples) {
        if (r.energy < best->energy ||
            (r.energy == best->energy && r.assigned_in_scope < best->assigned_in_scope))
            best = &r;
    }
    return *best;
}

RefineTrace iterate_shrink(const Encoding& enc, const SaConfig& cfg_initial,
                           const SaConfig& cfg_round, int max_rounds) {
    RefineTrace trace;
    trace.rounds.push_back({{}, best_of(sample(enc, cfg_initial))});

    SaConfig round_cfg = cfg_round;
    for (int round = 1; round <= max_rounds; ++round) {
        const SampleResult& current = trace.rounds.back().best;
        if (!current.flags.satisfying) break;  // nothing sound to refine

        std::vector<int> frozen;
        for (int v : enc.sparsity_vars)
            if (!current.decoded.assigned(v)) frozen.push_back(v);

        Encoding restricted = restrict_to_subsets(enc, current.decoded);
        round_cfg.seed = derive_seed(cfg_round.seed, static_cast<std::uint64_t>(round));
        const SampleResult best = best_of(sample(restricted, round_cfg));
        ++trace.refine_rounds_used;

        if (best.flags.satisfying && best.assigned_in_scope < current.assigned_in_scope) {
            trace.rounds.push_back({std::move(frozen), best});
        } else {
            trace.converged = true;
            break;
        }
    }
    return trace;
}

}  // namespace qimp
