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

#ifndef QIMP_EXPERIMENT_HPP
#define QIMP_EXPERIMENT_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "qimp/annealer.hpp"
#include "qimp/verify.hpp"

namespace qimp {

enum class Task { Full, Shrink };
enum class Scope { Standard, Projected };
enum class Strategy { Basic, Iter };

struct ModeSpec {
    Task task = Task::Full;
    Scope scope = Scope::Standard;
    Strategy strategy = Strategy::Basic;

    std::string name() const;
    static ModeSpec parse(const std::string& name);
};

struct Random3SatSpec {
    std::vector<int> n_values;
    double density = 1.5;
    int instances_per_n = 10;
};

struct NonCnfSpec {
    std::vector<int> n_values;
    int depth = 3;
    int fanin = 5;
    int instances_per_n = 10;
};

struct ExperimentSpec {
    std::variant<Random3SatSpec, NonCnfSpec> family = Random3SatSpec{};
    std::vector<ModeSpec> modes = {ModeSpec{}};
    SaConfig sa_initial;  // defaults to 1000 samples
    SaConfig sa_round;    // defaults to 100 samples
    std::uint64_t seed = 0;
    int max_rounds = 10;
    double projected_fraction = 0.75;  // visible share for projected 3-SAT
    std::uint64_t oracle_budget = 2'000'000;

    ExperimentSpec() {
        sa_initial.num_samples = 1000;
        sa_round.num_samples = 100;
    }
};

/// Satisfiable random 3-SAT: round(density*n) clauses over 3 distinct
/// variables with uniform signs and no duplicate clauses. Satisfiability is
/// established by brute force for n <= 20 and by an annealing probe above;
/// failing candidates are regenerated from the next sub-seed. Deterministic.
CnfFormula gen_random_3sat(int n, double density, std::uint64_t seed);

struct RunRecord {
    std::string family;
    int n = 0;                  // size parameter of the family
    int instance = 0;
    std::uint64_t instance_seed = 0;
    std::string mode;
    bool failed = false;        // instance/mode level failure, batch continues
    std::string error;
    Bits bits;
    double energy = 0.0;
    int size = 0;               // assigned variables of the decode
    int size_in_scope = 0;      // assigned over the sparsity scope
    int scope_size = 0;         // |scope| (n or |P|)
    double ratio = 0.0;         // size_in_scope / scope_size
    Verdict verdict;
    int rounds = 0;             // refinement rounds executed (Iter)
    bool converged = true;
    double wall_seconds = 0.0;  // not emitted; files stay reproducible
};

/// Run every instance x mode combination of the spec. Shrink modes first
/// derive a total model (brute force for n <= 20, completion of an annealing
/// probe above); projected 3-SAT modes draw a seeded visible subset. Failures
/// are recorded per instance and never abort the batch.
std::vector<RunRecord> run_experiment(const ExperimentSpec& spec);

/// Write records.jsonl (one record per line) and summary.csv (per n x mode
/// aggregates) into out_dir. Byte-identical for identical records.
void emit(const std::vector<RunRecord>& records, const std::filesystem::path& out_dir);

std::string summary_csv(const std::vector<RunRecord>& records);
nlohmann::json to_json(const RunRecord& record);

}  // namespace qimp

#endif  // QIMP_EXPERIMENT_HPP
