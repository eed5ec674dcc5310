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

#ifndef QIMP_VERIFY_HPP
#define QIMP_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "qimp/annealer.hpp"
#include "qimp/encoder.hpp"
#include "qimp/formula.hpp"
#include "qimp/qubo.hpp"

namespace qimp {

struct InconsistencyReport {
    std::vector<int> vars;  // variables decoded as (1,1)
};

/// Decode a spin vector under the polarity semantics: (1,0) -> True,
/// (0,1) -> False, (0,0) -> Unassigned. Any (1,1) pair yields a report
/// instead of an assignment.
std::variant<PartialAssignment, InconsistencyReport> decode(const Bits& bits,
                                                            const SpinRegistry& registry);

struct OracleResult {
    enum class Status { Found, Exhausted, NoImplicant };
    Status status = Status::Exhausted;
    int size = -1;
    PartialAssignment witness;
    std::uint64_t candidates_checked = 0;
};

/// Exact minimum implicant size by breadth-first search over assignments of
/// increasing size (all sign patterns over all k-subsets of variables).
/// `budget` caps the number of candidates; Exhausted when exceeded.
/// NoImplicant is reported when the search space is exhausted without a hit
/// (the formula is unsatisfiable).
OracleResult minimum_implicant_oracle(const CnfFormula& f, std::uint64_t budget);

/// Same search restricted to subassignments of eta (Shrink-mode optimum).
OracleResult minimum_implicant_within(const CnfFormula& f, const PartialAssignment& eta,
                                      std::uint64_t budget);

/// Minimum projected implicant size over P under uniform-witness semantics:
/// candidates are assignments over P, each completed by searching a total
/// hidden assignment covering all clauses.
OracleResult minimum_projected_implicant(const CnfFormula& f, const std::set<int>& visible,
                                         const std::set<int>& hidden, std::uint64_t budget);

enum class ProjectedSemantics { UniformWitness, ForallExists };

/// UniformWitness: exists a total sigma over H with pi and sigma covering
/// every clause. ForallExists: for every completion rho of the visible
/// variables there exists sigma with (pi, rho, sigma) satisfying f. The first
/// is strictly stronger. Enumerative; throws when the variable budget is
/// exceeded (ForallExists needs |P| + |H| <= 20ish).
bool projected_implicant_check(const PartialAssignment& pi, const CnfFormula& f,
                               const std::set<int>& visible, const std::set<int>& hidden,
                               ProjectedSemantics semantics);

struct Verdict {
    bool consistent = false;
    bool satisfying = false;
    std::optional<bool> minimal;
    std::optional<bool> minimum;
    bool energy_below_bound = false;
};

/// Full post-check of a sample against its encoding. Energy and flags are
/// recomputed from the bits. Minimality/minimum are filled per the encoding
/// mode (Shrink: relative to subsets of eta; Projected: over the visible set
/// with uniform-witness completion) and left empty when the oracle budget is
/// exhausted or the sample is not satisfying.
Verdict verdict(const SampleResult& result, const Encoding& enc, std::uint64_t oracle_budget);

nlohmann::json to_json(const Verdict& v);

}  // namespace qimp

#endif  // QIMP_VERIFY_HPP
