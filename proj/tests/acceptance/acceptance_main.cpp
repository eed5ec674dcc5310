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

// Acceptance suite: one pass/fail line per criterion, exit nonzero on any
// failure. Everything here recomputes its expectations from independent
// oracles (exhaustive enumeration, breadth-first minimum search, truth
// tables); nothing trusts the library's own bookkeeping.

#include <array>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>
#include <sstream>
#include <vector>

#include "qimp/annealer.hpp"
#include "qimp/circuit.hpp"
#include "qimp/encoder.hpp"
#include "qimp/experiment.hpp"
#include "qimp/rng.hpp"
#include "qimp/verify.hpp"

using namespace qimp;

namespace {

struct Criterion {
    int id;
    const char* label;
    bool (*run)(std::string& detail);
};

// ---------------------------------------------------------------------------
// Shared helpers

// Per-clause minimum penalty tables indexed by the mapped literal bits.
struct FastEval {
    int n = 0;
    double gamma = 0, big_m = 0, bound = 0;
    std::uint32_t incons_mask = 0;
    std::vector<std::array<double, 8>> tables;
    std::vector<std::array<int, 3>> spins;

    explicit FastEval(const Encoding& enc) {
        n = enc.num_vars();
        gamma = enc.weights.gamma;
        big_m = enc.weights.big_m;
        bound = enc.feasible_energy_bound;
        for (int i = 0; i < n; ++i) incons_mask |= 1u << (2 * i);
        for (const ClauseGadget& g : enc.gadgets) {
            std::array<int, 3> s{};
            for (int j = 0; j < 3; ++j) s[static_cast<std::size_t>(j)] = g.literal_spins[static_cast<std::size_t>(j)];
            spins.push_back(s);
            std::array<double, 8> table{};
            for (int idx = 0; idx < 8; ++idx) {
                std::vector<std::uint8_t> lit_bits = {
                    static_cast<std::uint8_t>(idx & 1),
                    static_cast<std::uint8_t>((idx >> 1) & 1),
                    static_cast<std::uint8_t>((idx >> 2) & 1)};
                table[static_cast<std::size_t>(idx)] = min_clause_penalty(enc.weights, lit_bits);
            }
            tables.push_back(table);
        }
    }

    double energy(std::uint32_t w) const {
        double e = gamma * std::popcount(w) +
                   big_m * std::popcount(w & (w >> 1) & incons_mask);
        for (std::size_t k = 0; k < tables.size(); ++k) {
            const auto& s = spins[k];
            const int idx = static_cast<int>((w >> s[0]) & 1) |
                            (static_cast<int>((w >> s[1]) & 1) << 1) |
                            (static_cast<int>((w >> s[2]) & 1) << 2);
            e += tables[k][static_cast<std::size_t>(idx)];
        }
        return e;
    }

    bool consistent(std::uint32_t w) const { return (w & (w >> 1) & incons_mask) == 0; }

    bool satisfying(std::uint32_t w) const {
        for (std::size_t k = 0; k < spins.size(); ++k) {
            const auto& s = spins[k];
            if (((w >> s[0]) | (w >> s[1]) | (w >> s[2])) % 2 == 0) return false;
        }
        return true;
    }

    int decoded_size(std::uint32_t w) const { return std::popcount(w); }
};

std::vector<CnfFormula> seeded_instances(int per_n, const std::vector<int>& ns,
                                         std::uint64_t tag) {
    std::vector<CnfFormula> out;
    for (int n : ns)
        for (int i = 0; i < per_n; ++i)
            out.push_back(gen_random_3sat(
                n, 1.5, derive_seed(tag, (static_cast<std::uint64_t>(n) << 16) | static_cast<std::uint64_t>(i))));
    return out;
}

// All satisfying total assignments of f, n <= 20.
std::vector<std::uint32_t> all_models(const CnfFormula& f) {
    const int n = f.num_vars();
    std::vector<std::uint32_t> models;
    PartialAssignment eta(n);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        for (int v = 1; v <= n; ++v)
            eta.set(v, ((mask >> (v - 1)) & 1) ? Ternary::True : Ternary::False);
        if (entails(eta, f)) models.push_back(mask);
    }
    return models;
}

bool nearly_equal(double a, double b) { return std::abs(a - b) < 1e-9; }

// ---------------------------------------------------------------------------
// Criterion 1: gadget truth tables at lambda = 4.

bool criterion_gadget_tables(std::string& detail) {
    const double lambda = 4.0;
    const Weights w{1.0, lambda, lambda};

    // P(1-a, 1-b, c) expansion over all eight (a, b, c) configurations.
    const double and_expected[8] = {lambda, 0, 0, lambda, 0, lambda, 0, 3 * lambda};
    for (int pattern = 0; pattern < 8; ++pattern) {
        const int a = (pattern >> 2) & 1, b = (pattern >> 1) & 1, c = pattern & 1;
        const double value =
            lambda * (1 - a - b + a * b - c + 2 * a * c + 2 * b * c);
        if (value != and_expected[pattern]) {
            detail = "AND-penalty mismatch at pattern " + std::to_string(pattern);
            return false;
        }
    }
    // The same values must fall out of the assembled model: for a 3-clause on
    // fresh positive literals, fix d = 0 and subtract sparsity.
    CnfFormula f(3, {{Literal(1, true), Literal(2, true), Literal(3, true)}});
    Encoding enc = encode(f, w, EncodeMode::full());
    const auto& g = enc.gadgets[0];
    for (int pattern = 0; pattern < 8; ++pattern) {
        Bits bits(static_cast<std::size_t>(enc.model.dim()), 0);
        const int a = (pattern >> 2) & 1, b = (pattern >> 1) & 1, c = pattern & 1;
        bits[static_cast<std::size_t>(g.literal_spins[0])] = static_cast<std::uint8_t>(a);
        bits[static_cast<std::size_t>(g.literal_spins[1])] = static_cast<std::uint8_t>(b);
        bits[static_cast<std::size_t>(g.aux_spins[0])] = static_cast<std::uint8_t>(c);
        const double model_value =
            enc.model.energy(bits) - w.gamma * (a + b) - lambda * c * 1.0;  // E_sat with d=0
        if (model_value != and_expected[pattern]) {
            detail = "assembled model disagrees at pattern " + std::to_string(pattern);
            return false;
        }
    }

    const double sat_expected[4] = {0, 0, lambda, 0};
    for (int pattern = 0; pattern < 4; ++pattern) {
        const int c = (pattern >> 1) & 1, d = pattern & 1;
        if (lambda * c * (1 - d) != sat_expected[pattern]) {
            detail = "sat-term mismatch at pattern " + std::to_string(pattern);
            return false;
        }
    }
    detail = "both truth tables match at lambda=4";
    return true;
}

// ---------------------------------------------------------------------------
// Criterion 2: worked one-clause example energies {6, 4, 3, 1}.

bool criterion_worked_example(std::string& detail) {
    CnfFormula f = parse_dimacs("p cnf 3 1\n1 -2 3 0\n");
    Encoding enc = encode(f, Weights{1.0, 4.0, 4.0}, EncodeMode::full());
    const auto& reg = enc.registry;

    auto pol = [&](std::initializer_list<int> set_spins) {
        Bits bits(6, 0);
        for (int s : set_spins) bits[static_cast<std::size_t>(s)] = 1;
        return bits;
    };
    const double case1 = min_over_aux(enc, pol({reg.pos_index(1), reg.neg_index(1)}));
    const double case2 = min_over_aux(enc, pol({}));
    const double case3 =
        min_over_aux(enc, pol({reg.pos_index(1), reg.neg_index(2), reg.pos_index(3)}));
    const double case4 = min_over_aux(enc, pol({reg.pos_index(1)}));

    std::ostringstream oss;
    oss << "energies " << case1 << "," << case2 << "," << case3 << "," << case4;
    detail = oss.str();
    return case1 == 6.0 && case2 == 4.0 && case3 == 3.0 && case4 == 1.0;
}

// ---------------------------------------------------------------------------
// Criteria 3 and 4: exhaustive ground-state semantics and the energy bound.

bool ground_state_scan(const CnfFormula& f, bool& corollary_ok, std::string& why) {
    Encoding enc = encode(f, default_weights(f.num_vars()), EncodeMode::full());
    FastEval eval(enc);
    const std::uint64_t space = 1ULL << (2 * f.num_vars());

    double best = std::numeric_limits<double>::infinity();
    for (std::uint64_t w = 0; w < space; ++w)
        best = std::min(best, eval.energy(static_cast<std::uint32_t>(w)));

    OracleResult oracle = minimum_implicant_oracle(f, ~0ULL);
    if (oracle.status != OracleResult::Status::Found) {
        why = "oracle failed to find a minimum";
        return false;
    }
    if (!nearly_equal(best, oracle.size * enc.weights.gamma)) {
        why = "ground energy " + std::to_string(best) + " != gamma * " +
              std::to_string(oracle.size);
        return false;
    }

    for (std::uint64_t wi = 0; wi < space; ++wi) {
        const auto w = static_cast<std::uint32_t>(wi);
        const double e = eval.energy(w);
        if (e <= eval.bound && !(eval.consistent(w) && eval.satisfying(w))) {
            corollary_ok = false;
            why = "vector below the bound is not a valid implicant";
            return false;
        }
        if (nearly_equal(e, best)) {
            if (!eval.consistent(w) || !eval.satisfying(w)) {
                why = "ground state decodes inconsistently or unsatisfying";
                return false;
            }
            if (eval.decoded_size(w) != oracle.size) {
                why = "ground state size " + std::to_string(eval.decoded_size(w)) +
                      " != minimum " + std::to_string(oracle.size);
                return false;
            }
        }
    }
    return true;
}

std::vector<CnfFormula>& theorem_instances() {
    // 13+13+12+12 = 50 instances shared by criteria 3, 4 and 5.
    static std::vector<CnfFormula> instances = [] {
        std::vector<CnfFormula> out = seeded_instances(13, {6, 8}, 0xace01);
        auto more = seeded_instances(12, {10, 12}, 0xace02);
        out.insert(out.end(), more.begin(), more.end());
        return out;
    }();
    return instances;
}

bool criterion3_state = false;
bool criterion4_state = false;

bool criterion_theorem1(std::string& detail) {
    int passed = 0;
    bool corollary_ok = true;
    for (const CnfFormula& f : theorem_instances()) {
        std::string why;
        bool ok = ground_state_scan(f, corollary_ok, why);
        if (!ok) {
            detail = "instance with n=" + std::to_string(f.num_vars()) + ": " + why;
            criterion4_state = corollary_ok;
            return false;
        }
        ++passed;
    }
    criterion3_state = true;
    criterion4_state = corollary_ok;
    detail = std::to_string(passed) + "/50 instances: every ground state is a minimum implicant";
    return true;
}

bool criterion_corollary2(std::string& detail) {
    // The scan in criterion 3 also checked every enumerated vector against the
    // bound; the flag records whether any violation was seen.
    detail = criterion4_state ? "no vector at or below n*gamma fails consistency or satisfaction"
                              : "bound violation detected during the exhaustive scan";
    return criterion4_state && criterion3_state;
}

// ---------------------------------------------------------------------------
// Criterion 5: shrink-mode ground states vs. subset enumeration.

bool criterion_theorem3(std::string& detail) {
    int index = 0;
    for (const CnfFormula& f : theorem_instances()) {
        const int n = f.num_vars();
        const auto models = all_models(f);
        if (models.empty()) {
            detail = "instance unexpectedly unsatisfiable";
            return false;
        }
        const std::uint32_t eta_mask =
            models[derive_seed(0xe7a, static_cast<std::uint64_t>(index)) % models.size()];
        PartialAssignment eta(n);
        for (int v = 1; v <= n; ++v)
            eta.set(v, ((eta_mask >> (v - 1)) & 1) ? Ternary::True : Ternary::False);

        Encoding enc = encode(f, default_weights(n), EncodeMode::shrink(eta));
        FastEval eval(enc);

        // Free spins: the eta-consistent polarity of each variable. A subset
        // mask s maps to the polarity word with exactly those spins set.
        auto word_of = [&](std::uint32_t subset) {
            std::uint32_t w = 0;
            for (int v = 1; v <= n; ++v) {
                if ((subset >> (v - 1)) & 1) {
                    const int spin = eta.value(v) == Ternary::True
                                         ? enc.registry.pos_index(v)
                                         : enc.registry.neg_index(v);
                    w |= 1u << spin;
                }
            }
            return w;
        };

        // Oracle: minimum size over all subsets of eta that remain implicants.
        int min_size = n + 1;
        PartialAssignment mu(n);
        for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
            for (int v = 1; v <= n; ++v)
                mu.set(v, ((subset >> (v - 1)) & 1) ? eta.value(v) : Ternary::Unassigned);
            if (entails(mu, f)) min_size = std::min(min_size, std::popcount(subset));
        }

        double best = std::numeric_limits<double>::infinity();
        for (std::uint32_t subset = 0; subset < (1u << n); ++subset)
            best = std::min(best, eval.energy(word_of(subset)));
        if (!nearly_equal(best, min_size * enc.weights.gamma)) {
            detail = "restricted ground energy does not match the subset oracle";
            return false;
        }
        for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
            const std::uint32_t w = word_of(subset);
            if (!nearly_equal(eval.energy(w), best)) continue;
            for (int v = 1; v <= n; ++v)
                mu.set(v, ((subset >> (v - 1)) & 1) ? eta.value(v) : Ternary::Unassigned);
            if (!entails(mu, f) || mu.size() != min_size) {
                detail = "a restricted ground state is not a minimum implicant within eta";
                return false;
            }
        }
        ++index;
    }
    detail = "50/50 instances: restricted ground states are minima within eta";
    return true;
}

// ---------------------------------------------------------------------------
// Criterion 6: the projected-semantics separation example.

bool criterion_separation(std::string& detail) {
    CnfFormula f = parse_dimacs("p cnf 2 2\n1 2 0\n-1 -2 0\n");
    const std::set<int> visible{1};
    const std::set<int> hidden{2};
    PartialAssignment empty_pi(2);
    if (!projected_implicant_check(empty_pi, f, visible, hidden,
                                   ProjectedSemantics::ForallExists)) {
        detail = "forall-exists rejected the empty projected assignment";
        return false;
    }
    if (projected_implicant_check(empty_pi, f, visible, hidden,
                                  ProjectedSemantics::UniformWitness)) {
        detail = "uniform witness unexpectedly accepted the empty assignment";
        return false;
    }

    Encoding enc = encode(f, default_weights(1), EncodeMode::full().projected({1}));
    if (enc.model.dim() != 4) {
        detail = "unexpected encoding dimension";
        return false;
    }
    for (std::uint32_t w = 0; w < 16; ++w) {
        Bits bits = {static_cast<std::uint8_t>(w & 1), static_cast<std::uint8_t>((w >> 1) & 1),
                     static_cast<std::uint8_t>((w >> 2) & 1), static_cast<std::uint8_t>((w >> 3) & 1)};
        SampleResult r = make_sample_result(enc, bits, 0);
        const bool x_unassigned = bits[0] == 0 && bits[1] == 0;
        if (r.flags.consistent && r.flags.satisfying && x_unassigned) {
            detail = "a consistent satisfying configuration leaves x unassigned";
            return false;
        }
    }
    detail = "forall-exists accepts the empty assignment; no spin configuration realizes it";
    return true;
}

// ---------------------------------------------------------------------------
// Criterion 7: witness completion through the CNF transformation.

bool criterion_witness_completion(std::string& detail) {
    int instances = 0;
    int checked_mu = 0;
    const int arities[3] = {4, 5, 6};
    for (std::uint64_t seed = 0; instances < 30; ++seed) {
        const int n_vars = arities[instances % 3];
        BoolExpr e = random_nested(n_vars, 2, 2, seed);
        if (collect_vars(e).size() != 4) continue;  // read-once instances only
        ++instances;
        CnfConversion conv = plaisted_greenbaum(e);
        std::vector<int> orig(conv.visible.begin(), conv.visible.end());
        std::vector<int> hidden(conv.hidden.begin(), conv.hidden.end());

        std::vector<int> digits(orig.size(), 0);
        for (;;) {
            PartialAssignment mu(conv.cnf.num_vars());
            for (std::size_t i = 0; i < orig.size(); ++i) {
                if (digits[i] == 1) mu.set(orig[i], Ternary::True);
                else if (digits[i] == 2) mu.set(orig[i], Ternary::False);
            }
            if (entails_expr(mu, e)) {
                ++checked_mu;
                bool found = false;
                for (std::uint32_t mask = 0; mask < (1u << hidden.size()) && !found; ++mask) {
                    PartialAssignment full = mu;
                    for (std::size_t i = 0; i < hidden.size(); ++i)
                        full.set(hidden[i], ((mask >> i) & 1) ? Ternary::True : Ternary::False);
                    found = entails(full, conv.cnf);
                }
                if (!found) {
                    detail = "no hidden witness for an entailing assignment (seed " +
                             std::to_string(seed) + ")";
                    return false;
                }
            }
            std::size_t pos = 0;
            while (pos < digits.size() && digits[pos] == 2) digits[pos++] = 0;
            if (pos == digits.size()) break;
            ++digits[pos];
        }
    }
    detail = "30/30 instances, " + std::to_string(checked_mu) + " entailing assignments completed";
    return true;
}

// ---------------------------------------------------------------------------
// Criterion 8: annealing behavior on random 3-SAT.

bool criterion_sa_behavior(std::string& detail) {
    const std::vector<int> ns{16, 24, 32, 48};
    const int per_n = 10;

    int total = 0;
    int sound = 0;
    double ratio_sum = 0.0;
    int basic_minimal = 0, iter_minimal = 0;
    int iter_fast_converged = 0;

    for (int n : ns) {
        for (int i = 0; i < per_n; ++i) {
            const std::uint64_t inst_seed =
                derive_seed(0x5a5a, (static_cast<std::uint64_t>(n) << 16) | static_cast<std::uint64_t>(i));
            CnfFormula f = gen_random_3sat(n, 1.5, inst_seed);
            Encoding enc = encode(f, default_weights(n), EncodeMode::full());

            SaConfig initial;
            initial.num_samples = 1000;
            initial.sweeps_per_sample = 64;
            initial.seed = derive_seed(inst_seed, 0xba51c0);
            initial.threads = 4;

            const SampleResult basic = best_of(sample(enc, initial));
            ++total;
            const bool basic_ok = basic.flags.consistent && basic.flags.satisfying &&
                                  basic.energy <= n * enc.weights.gamma + 1e-12 &&
                                  entails(basic.decoded, f);
            if (basic_ok) ++sound;
            ratio_sum += static_cast<double>(basic.decoded.size()) / n;
            const bool basic_min = basic_ok && is_minimal_implicant(basic.decoded, f);
            if (basic_min) ++basic_minimal;

            SaConfig round;
            round.num_samples = 100;
            round.sweeps_per_sample = 64;
            round.seed = derive_seed(inst_seed, 0x17e7);
            round.threads = 4;
            RefineTrace trace = iterate_shrink(enc, initial, round);
            const SampleResult& final_best = trace.final_best();
            const bool iter_min = final_best.flags.satisfying &&
                                  is_minimal_implicant(final_best.decoded, f);
            if (iter_min) ++iter_minimal;
            if (trace.converged && trace.refine_rounds_used <= 5) ++iter_fast_converged;
        }
    }

    const double mean_ratio = ratio_sum / total;
    std::ostringstream oss;
    oss << "sound " << sound << "/" << total << ", mean ratio " << mean_ratio
        << ", minimal basic/iter " << basic_minimal << "/" << iter_minimal
        << ", converged<=5 " << iter_fast_converged << "/" << total;
    detail = oss.str();

    if (sound != total) return false;
    if (mean_ratio < 0.50 || mean_ratio > 0.80) return false;
    if (iter_minimal < basic_minimal) return false;
    if (iter_fast_converged * 100 < total * 80) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Criterion 9: iterative shrinking golden trace.

bool criterion_shrink_trace(std::string& detail) {
    CnfFormula f = parse_dimacs("p cnf 3 1\n1 -2 3 0\n");
    PartialAssignment eta(3);
    eta.set(1, Ternary::True);
    eta.set(2, Ternary::False);
    eta.set(3, Ternary::True);
    Encoding enc = encode(f, default_weights(3), EncodeMode::shrink(eta));

    int good = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        SaConfig weak;
        weak.num_samples = 2;
        weak.sweeps_per_sample = 2;
        weak.seed = seed;
        SaConfig round;
        round.num_samples = 100;
        round.seed = derive_seed(seed, 0x99);
        RefineTrace trace = iterate_shrink(enc, weak, round);

        bool strictly_decreasing = true;
        for (std::size_t i = 1; i < trace.rounds.size(); ++i)
            if (trace.rounds[i].best.assigned_in_scope >=
                trace.rounds[i - 1].best.assigned_in_scope)
                strictly_decreasing = false;
        if (strictly_decreasing && trace.converged && trace.final_best().flags.satisfying &&
            trace.final_best().decoded.size() == 1)
            ++good;
    }
    detail = std::to_string(good) + "/10 seeds reached a strictly decreasing trace ending at size 1";
    return good >= 9;
}

// ---------------------------------------------------------------------------
// Criterion 10: QUBO <-> Ising equivalence.

bool criterion_ising_equivalence(std::string& detail) {
    Rng rng(0x15e9);
    double worst = 0.0;
    for (int model_idx = 0; model_idx < 100; ++model_idx) {
        const int dim = 1 + static_cast<int>(rng.below(12));
        QuboModel m(dim);
        m.add_offset(rng.uniform() * 10 - 5);
        for (int i = 0; i < dim; ++i)
            if (rng.uniform() < 0.7) m.add_linear(i, rng.uniform() * 8 - 4);
        for (int i = 0; i < dim; ++i)
            for (int j = i + 1; j < dim; ++j)
                if (rng.uniform() < 0.5) m.add_quadratic(i, j, rng.uniform() * 8 - 4);

        const IsingModel ising = to_ising(m);
        Bits x(static_cast<std::size_t>(dim));
        std::vector<int> z(static_cast<std::size_t>(dim));
        for (std::uint32_t mask = 0; mask < (1u << dim); ++mask) {
            for (int i = 0; i < dim; ++i) {
                x[static_cast<std::size_t>(i)] = (mask >> i) & 1;
                z[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] ? 1 : -1;
            }
            worst = std::max(worst, std::abs(ising.energy(z) - m.energy(x)));
        }
    }
    std::ostringstream oss;
    oss << "100 models exhaustively checked, max |difference| = " << worst;
    detail = oss.str();
    return worst <= 1e-9;
}

}  // namespace

int main() {
    const Criterion criteria[] = {
        {1, "gadget truth tables", criterion_gadget_tables},
        {2, "worked example energies", criterion_worked_example},
        {3, "ground states are minimum implicants (exhaustive)", criterion_theorem1},
        {4, "energy bound implies consistency and satisfaction", criterion_corollary2},
        {5, "shrink-mode ground states are minima within eta", criterion_theorem3},
        {6, "projected-semantics separation example", criterion_separation},
        {7, "witness completion through the CNF transformation", criterion_witness_completion},
        {8, "annealing behavior on random 3-SAT", criterion_sa_behavior},
        {9, "iterative shrinking golden trace", criterion_shrink_trace},
        {10, "qubo/ising energy equivalence", criterion_ising_equivalence},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] criterion %2d: %s (%s; %.1fs)\n", ok ? "PASS" : "FAIL", c.id, c.label,
                    detail.c_str(), secs);
        std::fflush(stdout);
        if (!ok) ++failures;
    }
    std::printf("%d/10 criteria passed\n", 10 - failures);
    return failures == 0 ? 0 : 1;
}
