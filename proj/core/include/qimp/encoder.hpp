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

#ifndef QIMP_ENCODER_HPP
#define QIMP_ENCODER_HPP

#include <optional>
#include <vector>

#include "qimp/formula.hpp"
#include "qimp/qubo.hpp"

namespace qimp {

/// Penalty weights: gamma scales the sparsity term, lambda the clause
/// penalties, big_m the polarity-consistency penalty. Ground-state semantics
/// require lambda > B*gamma and big_m > B*gamma, where B is the number of
/// sparsity-penalized variables.
struct Weights {
    double gamma = 1.0;
    double lambda = 0.0;
    double big_m = 0.0;

    bool in_regime(int base) const {
        return lambda > base * gamma && big_m > base * gamma;
    }
};

/// The integer-valued admissible choice gamma=1, lambda=big_m=n+1.
Weights default_weights(int n_or_p);

/// What to optimize for: a fresh short implicant (Full) or a shrink of a given
/// total satisfying assignment (Shrink), with sparsity either over all
/// variables (Standard) or only over a visible set (Projected).
struct EncodeMode {
    std::optional<PartialAssignment> shrink_eta;      // engaged => Shrink
    std::optional<std::vector<int>> projection;       // engaged => Projected

    static EncodeMode full() { return {}; }
    static EncodeMode shrink(PartialAssignment eta) {
        EncodeMode m;
        m.shrink_eta = std::move(eta);
        return m;
    }
    EncodeMode projected(std::vector<int> visible) && {
        projection = std::move(visible);
        return std::move(*this);
    }

    bool is_shrink() const { return shrink_eta.has_value(); }
    bool is_projected() const { return projection.has_value(); }
};

/// Spin indices backing one clause: the mapped polarity spin of each literal
/// plus the auxiliary chain (empty for 2-literal clauses).
struct ClauseGadget {
    std::vector<int> literal_spins;
    std::vector<int> aux_spins;
};

struct Encoding {
    QuboModel model;
    SpinRegistry registry;
    CnfFormula formula;  // the encoded (preprocessed) formula
    Weights weights;
    EncodeMode mode;
    std::vector<ClauseGadget> gadgets;
    std::vector<int> sparsity_vars;  // variables whose polarity spins pay gamma
    double feasible_energy_bound = 0.0;  // B * gamma
    bool weights_in_regime = true;

    int num_vars() const { return formula.num_vars(); }
    /// Assigned variables of mu restricted to the sparsity scope.
    int assigned_in_scope(const PartialAssignment& mu) const;
};

/// Build the full quadratic objective: big_m * p_i * n_i per variable, a
/// quadratic penalty block per clause (aux chains for clauses longer than 3),
/// and gamma * (p_i + n_i) over the sparsity scope. Shrink mode hard-fixes the
/// polarity spin opposite to each eta literal to 0 (scope variables only when
/// projected). Requires a preprocessed formula: no unit clauses, tautologies,
/// or duplicate literals.
Encoding encode(const CnfFormula& f, const Weights& w, const EncodeMode& mode);

/// Minimum clause penalty over its auxiliary chain, given the truth value of
/// each mapped literal spin. Exact for any clause length.
double min_clause_penalty(const Weights& w, const std::vector<std::uint8_t>& literal_bits);

/// Exact minimum energy over all auxiliary completions of the given polarity
/// block (length 2n, consistent with fixed spins). Auxiliaries of distinct
/// clauses do not interact, so the minimum decomposes per clause.
double min_over_aux(const Encoding& enc, const Bits& polarity_bits);

/// Extend a polarity block to a full spin vector using energy-minimizing
/// auxiliary values; model.energy of the result equals min_over_aux.
Bits complete_with_optimal_aux(const Encoding& enc, const Bits& polarity_bits);

/// Freeze the listed variables in the don't-care state by fixing both polarity
/// spins to 0. The model is otherwise unchanged.
Encoding restrict_for_refinement(const Encoding& enc, const std::vector<int>& keep_unassigned);

/// Restrict the search space to subassignments of mu over the sparsity scope:
/// unassigned variables are frozen to (0,0) and assigned variables get their
/// opposite polarity fixed to 0. Out-of-scope variables stay free.
Encoding restrict_to_subsets(const Encoding& enc, const PartialAssignment& mu);

}  // namespace qimp

#endif  // QIMP_ENCODER_HPP
