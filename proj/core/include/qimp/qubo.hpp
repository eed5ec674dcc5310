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

#ifndef QIMP_QUBO_HPP
#define QIMP_QUBO_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "qimp/formula.hpp"

namespace qimp {

using Bits = std::vector<std::uint8_t>;

/// Role of one spin in the encoding: the positive or negative polarity rail of
/// a variable, or a clause-chain auxiliary (clause index 0-based, stage
/// 1..|C|-2).
struct SpinRole {
    enum class Kind { Pos, Neg, Aux };

    Kind kind = Kind::Pos;
    int var = 0;     // Pos/Neg
    int clause = 0;  // Aux
    int stage = 0;   // Aux

    static SpinRole pos(int var) { return {Kind::Pos, var, 0, 0}; }
    static SpinRole neg(int var) { return {Kind::Neg, var, 0, 0}; }
    static SpinRole aux(int clause, int stage) { return {Kind::Aux, 0, clause, stage}; }

    bool operator==(const SpinRole&) const = default;
};

/// Bijection between dense spin indices and roles. Layout: the polarity block
/// p_1, n_1, ..., p_n, n_n first, then clause auxiliaries in clause order.
class SpinRegistry {
  public:
    SpinRegistry() = default;

    static SpinRegistry for_formula(const CnfFormula& f);
    static SpinRegistry from_roles(std::vector<SpinRole> roles);

    int size() const { return static_cast<int>(roles_.size()); }
    const SpinRole& role(int index) const { return roles_.at(static_cast<std::size_t>(index)); }
    const std::vector<SpinRole>& roles() const { return roles_; }

    int num_vars() const { return num_vars_; }
    int pos_index(int var) const;
    int neg_index(int var) const;

    bool operator==(const SpinRegistry&) const = default;

  private:
    std::vector<SpinRole> roles_;
    int num_vars_ = 0;
};

/// Sparse upper-triangular quadratic form over binary spins, plus a constant
/// offset and optional hard-fixed spins.
class QuboModel {
  public:
    QuboModel() = default;
    explicit QuboModel(int dim) : dim_(dim) {
        if (dim < 0) throw std::invalid_argument("dim must be >= 0");
    }

    int dim() const { return dim_; }
    double offset() const { return offset_; }
    const std::map<int, double>& linear() const { return linear_; }
    const std::map<std::pair<int, int>, double>& quadratic() const { return quadratic_; }
    const std::map<int, int>& fixed() const { return fixed_; }

    void add_offset(double v) { offset_ += v; }
    void add_linear(int i, double v);
    /// Adds to the (min(i,j), max(i,j)) entry; i == j is rejected.
    void add_quadratic(int i, int j, double v);
    /// Hard-fix spin i to value (0 or 1). Refixing to a different value throws.
    void fix_spin(int i, int value);

    double linear_at(int i) const;
    double quadratic_at(int i, int j) const;

    /// offset + sum linear + sum quadratic over the set bits. Throws on length
    /// mismatch or when a fixed spin's bit contradicts its fixed value.
    double energy(const Bits& x) const;

    /// Dense row-major matrix Q with linear terms on the diagonal; for
    /// brute-force oracles on small models.
    std::vector<std::vector<double>> dense_matrix() const;

    bool operator==(const QuboModel&) const = default;

  private:
    void check_index(int i) const;

    int dim_ = 0;
    double offset_ = 0.0;
    std::map<int, double> linear_;
    std::map<std::pair<int, int>, double> quadratic_;
    std::map<int, int> fixed_;
};

/// Fold each fixed spin's contributions into linear terms and the offset.
/// Energies agree with the input on every vector respecting the fixes, the
/// index space is unchanged, and the result is a fixpoint of this operation.
QuboModel fold_fixed(const QuboModel& m);

/// Ising form over spins z in {-1,+1}: offset + sum h_i z_i + sum J_ij z_i z_j.
struct IsingModel {
    int dim = 0;
    double offset = 0.0;
    std::map<int, double> h;
    std::map<std::pair<int, int>, double> j;

    double energy(const std::vector<int>& z) const;
};

/// Affine change of variables z = 2x - 1. For every x respecting the model's
/// fixed spins, ising.energy(2x-1) == m.energy(x).
IsingModel to_ising(const QuboModel& m);

nlohmann::json to_json(const SpinRole& role);
nlohmann::json to_json(const SpinRegistry& registry);
SpinRegistry registry_from_json(const nlohmann::json& j);

nlohmann::json to_json(const QuboModel& m);
nlohmann::json to_json(const QuboModel& m, const SpinRegistry& registry);
QuboModel qubo_from_json(const nlohmann::json& j);

nlohmann::json to_json(const IsingModel& m);

}  // namespace qimp

#endif  // QIMP_QUBO_HPP
