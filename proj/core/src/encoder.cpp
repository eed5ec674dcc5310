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

#include "qimp/encoder.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <set>
#include <stdexcept>

namespace qimp {

Weights default_weights(int n_or_p) {
    if (n_or_p < 1) throw std::invalid_argument("weight base must be >= 1");
    Weights w;
    w.gamma = 1.0;
    w.lambda = n_or_p + 1.0;
    w.big_m = n_or_p + 1.0;
    return w;
}

int Encoding::assigned_in_scope(const PartialAssignment& mu) const {
    int count = 0;
    for (int v : sparsity_vars)
        if (mu.assigned(v)) ++count;
    return count;
}

namespace {

// Quadratic AND-enforcement penalty P(x,y,z) = lambda*(xy - 2xz - 2yz + 3z),
// which is 0 iff z = xy. The three substitution patterns below are its
// expansions used by the clause chain; each adds the expanded terms to the
// model over the given spin indices.

// P(1-a, 1-b, c): constant lambda; linear -lambda on a and b; quadratic
// +lambda ab, +2 lambda ac, +2 lambda bc; linear -lambda on c.
void add_and_head(QuboModel& m, double lambda, int a, int b, int c) {
    m.add_offset(lambda);
    m.add_linear(a, -lambda);
    m.add_linear(b, -lambda);
    m.add_linear(c, -lambda);
    m.add_quadratic(a, b, lambda);
    m.add_quadratic(a, c, 2 * lambda);
    m.add_quadratic(b, c, 2 * lambda);
}

// P(prev, 1-a, c): linear +lambda on prev and c; quadratic -lambda prev*a,
// -2 lambda prev*c, +2 lambda a*c.
void add_and_link(QuboModel& m, double lambda, int prev, int a, int c) {
    m.add_linear(prev, lambda);
    m.add_linear(c, lambda);
    m.add_quadratic(prev, a, -lambda);
    m.add_quadratic(prev, c, -2 * lambda);
    m.add_quadratic(a, c, 2 * lambda);
}

// lambda * c * (1 - d): the terminal all-literals-false penalty.
void add_sat_tail(QuboModel& m, double lambda, int c, int d) {
    m.add_linear(c, lambda);
    m.add_quadratic(c, d, -lambda);
}

double and_penalty(double lambda, int x, int y, int z) {
    return lambda * (x * y - 2 * x * z - 2 * y * z + 3 * z);
}

void check_preprocessed(const CnfFormula& f) {
    for (const Clause& c : f.clauses()) {
        if (c.size() < 2)
            throw std::invalid_argument(
                "encode requires a preprocessed formula (unit clause found)");
        std::set<Literal> seen;
        for (const Literal& lit : c) {
            if (!seen.insert(lit).second)
                throw std::invalid_argument(
                    "encode requires a preprocessed formula (duplicate literal)");
            if (seen.count(lit.negated()))
                throw std::invalid_argument(
                    "encode requires a preprocessed formula (tautological clause)");
        }
    }
}

}  // namespace

Encoding encode(const CnfFormula& f, const Weights& w, const EncodeMode& mode) {
    if (w.gamma <= 0 || w.lambda <= 0 || w.big_m <= 0)
        throw std::invalid_argument("weights must be positive");
    check_preprocessed(f);

    Encoding enc;
    enc.formula = f;
    enc.weights = w;
    enc.mode = mode;
    enc.registry = SpinRegistry::for_formula(f);
    enc.model = QuboModel(enc.registry.size());

    const int n = f.num_vars();
    if (mode.is_projected()) {
        std::set<int> dedup(mode.projection->begin(), mode.projection->end());
        for (int v : dedup) {
            if (v < 1 || v > n)
                throw std::invalid_argument("projection variable out of range");
        }
        enc.sparsity_vars.assign(dedup.begin(), dedup.end());
    } else {
        enc.sparsity_vars.resize(static_cast<std::size_t>(n));
        for (int v = 1; v <= n; ++v) enc.sparsity_vars[static_cast<std::size_t>(v) - 1] = v;
    }
    const int base = static_cast<int>(enc.sparsity_vars.size());
    enc.feasible_energy_bound = base * w.gamma;
    enc.weights_in_regime = w.in_regime(base);

    // Semantic consistency penalty for every variable.
    for (int v = 1; v <= n; ++v)
        enc.model.add_quadratic(enc.registry.pos_index(v), enc.registry.neg_index(v), w.big_m);

    // Sparsity over the scope.
    for (int v : enc.sparsity_vars) {
        enc.model.add_linear(enc.registry.pos_index(v), w.gamma);
        enc.model.add_linear(enc.registry.neg_index(v), w.gamma);
    }

    // Clause penalty blocks.
    int next_aux = 2 * n;
    for (const Clause& clause : f.clauses()) {
        ClauseGadget gadget;
        for (const Literal& lit : clause)
            gadget.literal_spins.push_back(lit.positive ? enc.registry.pos_index(lit.var)
                                                        : enc.registry.neg_index(lit.var));
        const int k = static_cast<int>(clause.size());
        if (k == 2) {
            // lambda * (1-a)(1-b), already quadratic.
            const int a = gadget.literal_spins[0];
            const int b = gadget.literal_spins[1];
            enc.model.add_offset(w.lambda);
            enc.model.add_linear(a, -w.lambda);
            enc.model.add_linear(b, -w.lambda);
            enc.model.add_quadratic(a, b, w.lambda);
        } else {
            // Chain of k-2 auxiliaries: c1 = (1-a1)(1-a2), cj = c(j-1)*(1-a(j+1)),
            // then the tail penalizes c(k-2)=1 with the last literal false.
            for (int stage = 0; stage < k - 2; ++stage) gadget.aux_spins.push_back(next_aux++);
            add_and_head(enc.model, w.lambda, gadget.literal_spins[0],
                         gadget.literal_spins[1], gadget.aux_spins[0]);
            for (int stage = 1; stage < k - 2; ++stage)
                add_and_link(enc.model, w.lambda, gadget.aux_spins[stage - 1],
                             gadget.literal_spins[static_cast<std::size_t>(stage) + 1],
                             gadget.aux_spins[stage]);
            add_sat_tail(enc.model, w.lambda, gadget.aux_spins.back(),
                         gadget.literal_spins.back());
        }
        enc.gadgets.push_back(std::move(gadget));
    }

    // Shrink restrictions: the polarity spin opposite to each eta literal is
    // forbidden, so literals can only be dropped.
    if (mode.is_shrink()) {
        const PartialAssignment& eta = *mode.shrink_eta;
        if (eta.num_vars() != n)
            throw std::invalid_argument("shrink assignment has wrong variable count");
        for (int v = 1; v <= n; ++v) {
            if (!eta.assigned(v))
                throw std::invalid_argument("shrink requires a total assignment");
        }
        if (!entails(eta, f))
            throw std::invalid_argument("shrink assignment does not satisfy the formula");
        for (int v : enc.sparsity_vars) {
            if (eta.value(v) == Ternary::True)
                enc.model.fix_spin(enc.registry.neg_index(v), 0);
            else
                enc.model.fix_spin(enc.registry.pos_index(v), 0);
        }
    }
    return enc;
}

double min_clause_penalty(const Weights& w, const std::vector<std::uint8_t>& literal_bits) {
    const int k = static_cast<int>(literal_bits.size());
    if (k < 2) throw std::invalid_argument("clause must have >= 2 literals");
    if (k == 2) return w.lambda * (1 - literal_bits[0]) * (1 - literal_bits[1]);

    // DP over the auxiliary chain: best[v] = minimum penalty of the stages so
    // far with the current auxiliary at value v.
    const double kInf = std::numeric_limits<double>::infinity();
    double best[2];
    for (int c1 = 0; c1 <= 1; ++c1)
        best[c1] = and_penalty(w.lambda, 1 - literal_bits[0], 1 - literal_bits[1], c1);
    for (int stage = 1; stage < k - 2; ++stage) {
        double next[2] = {kInf, kInf};
        for (int prev = 0; prev <= 1; ++prev) {
            for (int cur = 0; cur <= 1; ++cur) {
                const double cost =
                    best[prev] + and_penalty(w.lambda, prev,
                                             1 - literal_bits[static_cast<std::size_t>(stage) + 1],
                                             cur);
                next[cur] = std::min(next[cur], cost);
            }
        }
        best[0] = next[0];
        best[1] = next[1];
    }
    const double tail0 = best[0];
    const double tail1 = best[1] + w.lambda * (1 - literal_bits.back());
    return std::min(tail0, tail1);
}

namespace {

// Retraces the min_clause_penalty DP and writes the argmin auxiliary values.
void fill_optimal_aux(const Encoding& enc, const ClauseGadget& gadget, Bits& bits) {
    if (gadget.aux_spins.empty()) return;
    const double lambda = enc.weights.lambda;
    const int k = static_cast<int>(gadget.literal_spins.size());
    auto lit_bit = [&](int idx) {
        return static_cast<int>(bits[static_cast<std::size_t>(gadget.literal_spins[static_cast<std::size_t>(idx)])]);
    };

    const int stages = k - 2;
    // forward[s][v]: best cost of stages 0..s with auxiliary s at value v.
    std::vector<std::array<double, 2>> forward(static_cast<std::size_t>(stages));
    for (int v = 0; v <= 1; ++v)
        forward[0][static_cast<std::size_t>(v)] =
            and_penalty(lambda, 1 - lit_bit(0), 1 - lit_bit(1), v);
    for (int s = 1; s < stages; ++s) {
        for (int v = 0; v <= 1; ++v) {
            double bestv = std::numeric_limits<double>::infinity();
            for (int prev = 0; prev <= 1; ++prev)
                bestv = std::min(bestv, forward[static_cast<std::size_t>(s) - 1][static_cast<std::size_t>(prev)] +
                                            and_penalty(lambda, prev, 1 - lit_bit(s + 1), v));
            forward[static_cast<std::size_t>(s)][static_cast<std::size_t>(v)] = bestv;
        }
    }
    // Pick the terminal value, then backtrack.
    std::vector<int> choice(static_cast<std::size_t>(stages));
    const double tail0 = forward[static_cast<std::size_t>(stages) - 1][0];
    const double tail1 =
        forward[static_cast<std::size_t>(stages) - 1][1] + lambda * (1 - lit_bit(k - 1));
    choice[static_cast<std::size_t>(stages) - 1] = tail0 <= tail1 ? 0 : 1;
    for (int s = stages - 1; s >= 1; --s) {
        const int cur = choice[static_cast<std::size_t>(s)];
        int best_prev = 0;
        double best_cost = std::numeric_limits<double>::infinity();
        for (int prev = 0; prev <= 1; ++prev) {
            const double cost = forward[static_cast<std::size_t>(s) - 1][static_cast<std::size_t>(prev)] +
                                and_penalty(lambda, prev, 1 - lit_bit(s + 1), cur);
            if (cost < best_cost) {
                best_cost = cost;
                best_prev = prev;
            }
        }
        choice[static_cast<std::size_t>(s) - 1] = best_prev;
    }
    for (int s = 0; s < stages; ++s)
        bits[static_cast<std::size_t>(gadget.aux_spins[static_cast<std::size_t>(s)])] =
            static_cast<std::uint8_t>(choice[static_cast<std::size_t>(s)]);
}

void check_polarity_block(const Encoding& enc, const Bits& polarity_bits) {
    if (static_cast<int>(polarity_bits.size()) != 2 * enc.num_vars())
        throw std::invalid_argument("polarity block must have length 2n");
    for (const auto& [i, v] : enc.model.fixed()) {
        if (i < 2 * enc.num_vars() && polarity_bits[static_cast<std::size_t>(i)] != v)
            throw std::invalid_argument("polarity block contradicts fixed spin");
    }
}

}  // namespace

double min_over_aux(const Encoding& enc, const Bits& polarity_bits) {
    check_polarity_block(enc, polarity_bits);
    const int n = enc.num_vars();
    double e = 0.0;
    for (int v = 1; v <= n; ++v) {
        if (polarity_bits[static_cast<std::size_t>(enc.registry.pos_index(v))] &&
            polarity_bits[static_cast<std::size_t>(enc.registry.neg_index(v))])
            e += enc.weights.big_m;
    }
    for (int v : enc.sparsity_vars) {
        e += enc.weights.gamma *
             (polarity_bits[static_cast<std::size_t>(enc.registry.pos_index(v))] +
              polarity_bits[static_cast<std::size_t>(enc.registry.neg_index(v))]);
    }
    std::vector<std::uint8_t> lit_bits;
    for (const ClauseGadget& gadget : enc.gadgets) {
        lit_bits.clear();
        for (int spin : gadget.literal_spins)
            lit_bits.push_back(polarity_bits[static_cast<std::size_t>(spin)]);
        e += min_clause_penalty(enc.weights, lit_bits);
    }
    return e;
}

Bits complete_with_optimal_aux(const Encoding& enc, const Bits& polarity_bits) {
    check_polarity_block(enc, polarity_bits);
    Bits bits(static_cast<std::size_t>(enc.model.dim()), 0);
    std::copy(polarity_bits.begin(), polarity_bits.end(), bits.begin());
    for (const ClauseGadget& gadget : enc.gadgets) fill_optimal_aux(enc, gadget, bits);
    return bits;
}

Encoding restrict_for_refinement(const Encoding& enc, const std::vector<int>& keep_unassigned) {
    Encoding out = enc;
    for (int v : keep_unassigned) {
        if (v < 1 || v > enc.num_vars())
            throw std::invalid_argument("refinement variable out of range");
        out.model.fix_spin(enc.registry.pos_index(v), 0);
        out.model.fix_spin(enc.registry.neg_index(v), 0);
    }
    return out;
}

Encoding restrict_to_subsets(const Encoding& enc, const PartialAssignment& mu) {
    if (mu.num_vars() != enc.num_vars())
        throw std::invalid_argument("assignment has wrong variable count");
    Encoding out = enc;
    for (int v : enc.sparsity_vars) {
        switch (mu.value(v)) {
            case Ternary::Unassigned:
                out.model.fix_spin(enc.registry.pos_index(v), 0);
                out.model.fix_spin(enc.registry.neg_index(v), 0);
                break;
            case Ternary::True:
                out.model.fix_spin(enc.registry.neg_index(v), 0);
                break;
            case Ternary::False:
                out.model.fix_spin(enc.registry.pos_index(v), 0);
                break;
        }
    }
    return out;
}

}  // namespace qimp
