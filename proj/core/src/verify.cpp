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

#include "qimp/verify.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qimp {

std::variant<PartialAssignment, InconsistencyReport> decode(const Bits& bits,
                                                            const SpinRegistry& registry) {
    if (static_cast<int>(bits.size()) != registry.size())
        throw std::invalid_argument("bit vector length does not match registry size");
    PartialAssignment mu(registry.num_vars());
    InconsistencyReport report;
    for (int v = 1; v <= registry.num_vars(); ++v) {
        const bool p = bits[static_cast<std::size_t>(registry.pos_index(v))] != 0;
        const bool n = bits[static_cast<std::size_t>(registry.neg_index(v))] != 0;
        if (p && n) report.vars.push_back(v);
        else if (p) mu.set(v, Ternary::True);
        else if (n) mu.set(v, Ternary::False);
    }
    if (!report.vars.empty()) return report;
    return mu;
}

namespace {

// Search space for the size-increasing oracles: each selectable variable may
// contribute its positive literal, its negative literal, or either.
struct CandidateSpace {
    std::vector<int> vars;
    std::vector<std::uint8_t> signs;  // 1 = positive only, 2 = negative only, 3 = both
};

// Enumerate assignments of increasing size over the candidate space, calling
// `accept` on each; the first accepted candidate is the minimum. Returns
// Exhausted when `remaining` reaches zero mid-search.
OracleResult bfs_minimum(int num_vars, const CandidateSpace& space, std::uint64_t budget,
                         const std::function<bool(const PartialAssignment&)>& accept) {
    OracleResult result;
    std::uint64_t checked = 0;
    const int pool = static_cast<int>(space.vars.size());

    std::vector<int> comb;
    PartialAssignment mu(num_vars);
    for (int k = 0; k <= pool; ++k) {
        comb.resize(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) comb[static_cast<std::size_t>(i)] = i;
        for (;;) {
            // All sign choices for the current combination.
            std::vector<int> two_sign_slots;
            for (int i = 0; i < k; ++i)
                if (space.signs[static_cast<std::size_t>(comb[static_cast<std::size_t>(i)])] == 3)
                    two_sign_slots.push_back(i);
            const std::uint64_t sign_count = 1ULL << two_sign_slots.size();
            for (std::uint64_t mask = 0; mask < sign_count; ++mask) {
                if (checked >= budget) {
                    result.status = OracleResult::Status::Exhausted;
                    result.candidates_checked = checked;
                    return result;
                }
                ++checked;
                for (int i = 0; i < k; ++i) {
                    const int slot = comb[static_cast<std::size_t>(i)];
                    const int var = space.vars[static_cast<std::size_t>(slot)];
                    bool positive = space.signs[static_cast<std::size_t>(slot)] != 2;
                    mu.set(var, positive ? Ternary::True : Ternary::False);
                }
                for (std::size_t s = 0; s < two_sign_slots.size(); ++s) {
                    if ((mask >> s) & 1) {
                        const int slot = comb[static_cast<std::size_t>(two_sign_slots[s])];
                        mu.set(space.vars[static_cast<std::size_t>(slot)], Ternary::False);
                    }
                }
                if (accept(mu)) {
                    result.status = OracleResult::Status::Found;
                    result.size = k;
                    result.witness = mu;
                    result.candidates_checked = checked;
                    return result;
                }
                for (int i = 0; i < k; ++i)
                    mu.unassign(space.vars[static_cast<std::size_t>(comb[static_cast<std::size_t>(i)])]);
            }
            // Next k-combination in lexicographic order.
            int i = k - 1;
            while (i >= 0 && comb[static_cast<std::size_t>(i)] == pool - k + i) --i;
            if (i < 0) break;
            ++comb[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j) - 1] + 1;
        }
    }
    result.status = OracleResult::Status::NoImplicant;
    result.candidates_checked = checked;
    return result;
}

// True iff some total hidden assignment extends pi to cover every clause.
// Budget ticks once per enumerated hidden assignment.
bool uniform_witness_exists(const PartialAssignment& pi, const CnfFormula& f,
                            const std::set<int>& hidden, std::uint64_t& remaining) {
    std::vector<Clause> reduced;
    std::set<int> relevant;
    for (const Clause& c : f.clauses()) {
        bool covered = false;
        Clause hidden_lits;
        for (const Literal& lit : c) {
            if (pi.satisfies(lit)) {
                covered = true;
                break;
            }
            if (hidden.count(lit.var)) hidden_lits.push_back(lit);
        }
        if (covered) continue;
        if (hidden_lits.empty()) return false;
        for (const Literal& lit : hidden_lits) relevant.insert(lit.var);
        reduced.push_back(std::move(hidden_lits));
    }
    if (reduced.empty()) return true;

    std::vector<int> order(relevant.begin(), relevant.end());
    if (order.size() > 30)
        throw std::invalid_argument("uniform-witness search space too large to enumerate");
    PartialAssignment sigma(f.num_vars());
    const std::uint64_t count = 1ULL << order.size();
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        if (remaining == 0) throw std::invalid_argument("oracle budget exceeded");
        --remaining;
        for (std::size_t i = 0; i < order.size(); ++i)
            sigma.set(order[i], ((mask >> i) & 1) ? Ternary::True : Ternary::False);
        bool all = true;
        for (const Clause& c : reduced) {
            bool covered = false;
            for (const Literal& lit : c)
                if (sigma.satisfies(lit)) {
                    covered = true;
                    break;
                }
            if (!covered) {
                all = false;
                break;
            }
        }
        if (all) return true;
    }
    return false;
}

// Minimum over uniform-witness projected implicants drawn from the given
// candidate space; Exhausted instead of throwing when the budget runs out.
OracleResult projected_bfs(const CnfFormula& f, const CandidateSpace& space,
                           const std::set<int>& hidden, std::uint64_t budget) {
    std::uint64_t witness_budget = budget;
    try {
        return bfs_minimum(f.num_vars(), space, budget, [&](const PartialAssignment& cand) {
            return uniform_witness_exists(cand, f, hidden, witness_budget);
        });
    } catch (const std::invalid_argument&) {
        OracleResult out;
        out.status = OracleResult::Status::Exhausted;
        return out;
    }
}

}  // namespace

OracleResult minimum_implicant_oracle(const CnfFormula& f, std::uint64_t budget) {
    CandidateSpace space;
    for (int v = 1; v <= f.num_vars(); ++v) {
        space.vars.push_back(v);
        space.signs.push_back(3);
    }
    return bfs_minimum(f.num_vars(), space, budget,
                       [&](const PartialAssignment& mu) { return entails(mu, f); });
}

OracleResult minimum_implicant_within(const CnfFormula& f, const PartialAssignment& eta,
                                      std::uint64_t budget) {
    CandidateSpace space;
    for (int v = 1; v <= f.num_vars(); ++v) {
        if (!eta.assigned(v)) continue;
        space.vars.push_back(v);
        space.signs.push_back(eta.value(v) == Ternary::True ? 1 : 2);
    }
    return bfs_minimum(f.num_vars(), space, budget,
                       [&](const PartialAssignment& mu) { return entails(mu, f); });
}

OracleResult minimum_projected_implicant(const CnfFormula& f, const std::set<int>& visible,
                                         const std::set<int>& hidden, std::uint64_t budget) {
    CandidateSpace space;
    for (int v : visible) {
        space.vars.push_back(v);
        space.signs.push_back(3);
    }
    return projected_bfs(f, space, hidden, budget);
}

bool projected_implicant_check(const PartialAssignment& pi, const CnfFormula& f,
                               const std::set<int>& visible, const std::set<int>& hidden,
                               ProjectedSemantics semantics) {
    for (const Literal& lit : pi.literals())
        if (!visible.count(lit.var))
            throw std::invalid_argument("projected assignment mentions a non-visible variable");
    for (int v : f.occurring_vars())
        if (!visible.count(v) && !hidden.count(v))
            throw std::invalid_argument("formula variable outside visible and hidden sets");

    if (semantics == ProjectedSemantics::UniformWitness) {
        std::uint64_t budget = ~0ULL;
        return uniform_witness_exists(pi, f, hidden, budget);
    }

    std::vector<int> rho_vars;
    for (int v : visible)
        if (!pi.assigned(v)) rho_vars.push_back(v);
    std::vector<int> sigma_vars(hidden.begin(), hidden.end());
    if (rho_vars.size() + sigma_vars.size() > 26)
        throw std::invalid_argument("forall-exists enumeration space too large");

    PartialAssignment total = pi;
    const std::uint64_t rho_count = 1ULL << rho_vars.size();
    const std::uint64_t sigma_count = 1ULL << sigma_vars.size();
    for (std::uint64_t rmask = 0; rmask < rho_count; ++rmask) {
        for (std::size_t i = 0; i < rho_vars.size(); ++i)
            total.set(rho_vars[i], ((rmask >> i) & 1) ? Ternary::True : Ternary::False);
        bool found = false;
        for (std::uint64_t smask = 0; smask < sigma_count && !found; ++smask) {
            for (std::size_t i = 0; i < sigma_vars.size(); ++i)
                total.set(sigma_vars[i], ((smask >> i) & 1) ? Ternary::True : Ternary::False);
            found = entails(total, f);
        }
        if (!found) return false;
    }
    return true;
}

Verdict verdict(const SampleResult& result, const Encoding& enc, std::uint64_t oracle_budget) {
    Verdict v;
    const double energy = enc.model.energy(result.bits);
    v.energy_below_bound = energy <= enc.feasible_energy_bound;

    auto decoded = decode(result.bits, enc.registry);
    if (std::holds_alternative<InconsistencyReport>(decoded)) {
        v.consistent = false;
        v.satisfying = false;
        return v;
    }
    v.consistent = true;
    const PartialAssignment& mu = std::get<PartialAssignment>(decoded);
    v.satisfying = entails(mu, enc.formula);
    if (!v.satisfying) return v;

    const CnfFormula& f = enc.formula;
    if (!enc.mode.is_projected()) {
        v.minimal = is_minimal_implicant(mu, f);
        if (oracle_budget > 0) {
            OracleResult oracle =
                enc.mode.is_shrink()
                    ? minimum_implicant_within(f, *enc.mode.shrink_eta, oracle_budget)
                    : minimum_implicant_oracle(f, oracle_budget);
            if (oracle.status == OracleResult::Status::Found)
                v.minimum = mu.size() == oracle.size;
        }
        return v;
    }

    // Projected: optimality is measured over the visible set only, with
    // uniform-witness completion over the hidden variables.
    const std::set<int> visible(enc.mode.projection->begin(), enc.mode.projection->end());
    std::set<int> hidden;
    for (int var = 1; var <= f.num_vars(); ++var)
        if (!visible.count(var)) hidden.insert(var);
    const PartialAssignment pi = mu.restricted_to(visible);

    if (oracle_budget > 0) {
        try {
            std::uint64_t remaining = oracle_budget;
            bool minimal = true;
            PartialAssignment probe = pi;
            for (const Literal& lit : pi.literals()) {
                probe.unassign(lit.var);
                if (uniform_witness_exists(probe, f, hidden, remaining)) {
                    minimal = false;
                    break;
                }
                probe.set(lit);
            }
            v.minimal = minimal;
        } catch (const std::invalid_argument&) {
            // budget exceeded: leave minimal unset
        }
        OracleResult oracle;
        if (enc.mode.is_shrink()) {
            CandidateSpace space;
            for (int var : visible) {
                space.vars.push_back(var);
                space.signs.push_back(
                    enc.mode.shrink_eta->value(var) == Ternary::True ? 1 : 2);
            }
            oracle = projected_bfs(f, space, hidden, oracle_budget);
        } else {
            oracle = minimum_projected_implicant(f, visible, hidden, oracle_budget);
        }
        if (oracle.status == OracleResult::Status::Found) v.minimum = pi.size() == oracle.size;
    }
    return v;
}

nlohmann::json to_json(const Verdict& v) {
    nlohmann::json j;
    j["consistent"] = v.consistent;
    j["satisfying"] = v.satisfying;
    j["minimal"] = v.minimal.has_value() ? nlohmann::json(*v.minimal) : nlohmann::json();
    j["minimum"] = v.minimum.has_value() ? nlohmann::json(*v.minimum) : nlohmann::json();
    j["below_bound"] = v.energy_below_bound;
    return j;
}

}  // namespace qimp
