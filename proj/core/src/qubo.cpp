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

#include "qimp/qubo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qimp {

SpinRegistry SpinRegistry::for_formula(const CnfFormula& f) {
    SpinRegistry reg;
    reg.num_vars_ = f.num_vars();
    reg.roles_.reserve(2 * static_cast<std::size_t>(f.num_vars()));
    for (int v = 1; v <= f.num_vars(); ++v) {
        reg.roles_.push_back(SpinRole::pos(v));
        reg.roles_.push_back(SpinRole::neg(v));
    }
    for (std::size_t k = 0; k < f.num_clauses(); ++k) {
        const int len = static_cast<int>(f.clauses()[k].size());
        for (int stage = 1; stage <= len - 2; ++stage)
            reg.roles_.push_back(SpinRole::aux(static_cast<int>(k), stage));
    }
    return reg;
}

SpinRegistry SpinRegistry::from_roles(std::vector<SpinRole> roles) {
    SpinRegistry reg;
    reg.roles_ = std::move(roles);
    for (const SpinRole& r : reg.roles_)
        if (r.kind != SpinRole::Kind::Aux) reg.num_vars_ = std::max(reg.num_vars_, r.var);
    // Validate the fixed polarity-block layout this library relies on.
    for (int v = 1; v <= reg.num_vars_; ++v) {
        if (reg.role(2 * (v - 1)) != SpinRole::pos(v) ||
            reg.role(2 * (v - 1) + 1) != SpinRole::neg(v))
            throw std::invalid_argument("registry roles must start with the polarity block");
    }
    return reg;
}

int SpinRegistry::pos_index(int var) const {
    if (var < 1 || var > num_vars_) throw std::out_of_range("variable out of range");
    return 2 * (var - 1);
}

int SpinRegistry::neg_index(int var) const { return pos_index(var) + 1; }

void QuboModel::check_index(int i) const {
    if (i < 0 || i >= dim_) throw std::out_of_range("spin index out of range");
}

void QuboModel::add_linear(int i, double v) {
    check_index(i);
    if (!std::isfinite(v)) throw std::invalid_argument("coefficient must be finite");
    linear_[i] += v;
}

void QuboModel::add_quadratic(int i, int j, double v) {
    check_index(i);
    check_index(j);
    if (i == j) throw std::invalid_argument("quadratic entry needs distinct indices");
    if (!std::isfinite(v)) throw std::invalid_argument("coefficient must be finite");
    quadratic_[{std::min(i, j), std::max(i, j)}] += v;
}

void QuboModel::fix_spin(int i, int value) {
    check_index(i);
    if (value != 0 && value != 1) throw std::invalid_argument("fixed value must be 0 or 1");
    auto [it, inserted] = fixed_.emplace(i, value);
    if (!inserted && it->second != value)
        throw std::invalid_argument("spin " + std::to_string(i) +
                                    " already fixed to the opposite value");
}

double QuboModel::linear_at(int i) const {
    auto it = linear_.find(i);
    return it == linear_.end() ? 0.0 : it->second;
}

double QuboModel::quadratic_at(int i, int j) const {
    auto it = quadratic_.find({std::min(i, j), std::max(i, j)});
    return it == quadratic_.end() ? 0.0 : it->second;
}

double QuboModel::energy(const Bits& x) const {
    if (static_cast<int>(x.size()) != dim_)
        throw std::invalid_argument("bit vector length does not match model dimension");
    for (const auto& [i, v] : fixed_) {
        if (x[static_cast<std::size_t>(i)] != v)
            throw std::invalid_argument("bit vector contradicts fixed spin " +
                                        std::to_string(i));
    }
    double e = offset_;
    for (const auto& [i, v] : linear_)
        if (x[static_cast<std::size_t>(i)]) e += v;
    for (const auto& [ij, v] : quadratic_)
        if (x[static_cast<std::size_t>(ij.first)] && x[static_cast<std::size_t>(ij.second)])
            e += v;
    return e;
}

std::vector<std::vector<double>> QuboModel::dense_matrix() const {
    std::vector<std::vector<double>> q(static_cast<std::size_t>(dim_),
                                       std::vector<double>(static_cast<std::size_t>(dim_), 0.0));
    for (const auto& [i, v] : linear_) q[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = v;
    for (const auto& [ij, v] : quadratic_)
        q[static_cast<std::size_t>(ij.first)][static_cast<std::size_t>(ij.second)] = v;
    return q;
}

QuboModel fold_fixed(const QuboModel& m) {
    QuboModel out(m.dim());
    out.add_offset(m.offset());
    const auto& fixed = m.fixed();
    auto fixed_value = [&](int i) -> int {
        auto it = fixed.find(i);
        return it == fixed.end() ? -1 : it->second;
    };

    for (const auto& [i, v] : m.linear()) {
        int fv = fixed_value(i);
        if (fv < 0) out.add_linear(i, v);
        else if (fv == 1) out.add_offset(v);
    }
    for (const auto& [ij, v] : m.quadratic()) {
        const auto [i, j] = ij;
        const int fi = fixed_value(i);
        const int fj = fixed_value(j);
        if (fi < 0 && fj < 0) out.add_quadratic(i, j, v);
        else if (fi < 0) {
            if (fj == 1) out.add_linear(i, v);
        } else if (fj < 0) {
            if (fi == 1) out.add_linear(j, v);
        } else if (fi == 1 && fj == 1) {
            out.add_offset(v);
        }
    }
    for (const auto& [i, v] : fixed) out.fix_spin(i, v);
    return out;
}

double IsingModel::energy(const std::vector<int>& z) const {
    if (static_cast<int>(z.size()) != dim)
        throw std::invalid_argument("spin vector length does not match model dimension");
    for (int s : z)
        if (s != -1 && s != 1) throw std::invalid_argument("Ising spins must be -1 or +1");
    double e = offset;
    for (const auto& [i, v] : h) e += v * z[static_cast<std::size_t>(i)];
    for (const auto& [ij, v] : j)
        e += v * z[static_cast<std::size_t>(ij.first)] * z[static_cast<std::size_t>(ij.second)];
    return e;
}

IsingModel to_ising(const QuboModel& m) {
    // x = (z + 1) / 2, so q x -> q/2 z + q/2 and q x_i x_j -> q/4 (z_i z_j +
    // z_i + z_j + 1).
    const QuboModel folded = fold_fixed(m);
    IsingModel out;
    out.dim = folded.dim();
    out.offset = folded.offset();
    for (const auto& [i, v] : folded.linear()) {
        out.h[i] += v / 2.0;
        out.offset += v / 2.0;
    }
    for (const auto& [ij, v] : folded.quadratic()) {
        out.j[ij] += v / 4.0;
        out.h[ij.first] += v / 4.0;
        out.h[ij.second] += v / 4.0;
        out.offset += v / 4.0;
    }
    return out;
}

nlohmann::json to_json(const SpinRole& role) {
    switch (role.kind) {
        case SpinRole::Kind::Pos:
            return {{"kind", "pos"}, {"var", role.var}};
        case SpinRole::Kind::Neg:
            return {{"kind", "neg"}, {"var", role.var}};
        case SpinRole::Kind::Aux:
            return {{"kind", "aux"}, {"clause", role.clause}, {"stage", role.stage}};
    }
    return {};
}

nlohmann::json to_json(const SpinRegistry& registry) {
    nlohmann::json roles = nlohmann::json::array();
    for (const SpinRole& r : registry.roles()) roles.push_back(to_json(r));
    return roles;
}

SpinRegistry registry_from_json(const nlohmann::json& j) {
    std::vector<SpinRole> roles;
    for (const auto& item : j) {
        const std::string kind = item.at("kind").get<std::string>();
        if (kind == "pos") roles.push_back(SpinRole::pos(item.at("var").get<int>()));
        else if (kind == "neg") roles.push_back(SpinRole::neg(item.at("var").get<int>()));
        else if (kind == "aux")
            roles.push_back(SpinRole::aux(item.at("clause").get<int>(),
                                          item.at("stage").get<int>()));
        else throw std::invalid_argument("unknown spin role kind '" + kind + "'");
    }
    return SpinRegistry::from_roles(std::move(roles));
}

nlohmann::json to_json(const QuboModel& m) {
    nlohmann::json j;
    j["dim"] = m.dim();
    j["offset"] = m.offset();
    auto linear = nlohmann::json::array();
    for (const auto& [i, v] : m.linear()) linear.push_back({i, v});
    j["linear"] = std::move(linear);
    auto quadratic = nlohmann::json::array();
    for (const auto& [ij, v] : m.quadratic()) quadratic.push_back({ij.first, ij.second, v});
    j["quadratic"] = std::move(quadratic);
    auto fixed = nlohmann::json::array();
    for (const auto& [i, v] : m.fixed()) fixed.push_back({i, v});
    j["fixed"] = std::move(fixed);
    return j;
}

nlohmann::json to_json(const QuboModel& m, const SpinRegistry& registry) {
    nlohmann::json j = to_json(m);
    j["registry"] = to_json(registry);
    return j;
}

QuboModel qubo_from_json(const nlohmann::json& j) {
    QuboModel m(j.at("dim").get<int>());
    m.add_offset(j.at("offset").get<double>());
    for (const auto& entry : j.at("linear"))
        m.add_linear(entry.at(0).get<int>(), entry.at(1).get<double>());
    for (const auto& entry : j.at("quadratic"))
        m.add_quadratic(entry.at(0).get<int>(), entry.at(1).get<int>(),
                        entry.at(2).get<double>());
    if (j.contains("fixed"))
        for (const auto& entry : j.at("fixed"))
            m.fix_spin(entry.at(0).get<int>(), entry.at(1).get<int>());
    return m;
}

nlohmann::json to_json(const IsingModel& m) {
    nlohmann::json j;
    j["dim"] = m.dim;
    j["offset"] = m.offset;
    auto h = nlohmann::json::array();
    for (const auto& [i, v] : m.h) h.push_back({i, v});
    j["h"] = std::move(h);
    auto couplings = nlohmann::json::array();
    for (const auto& [ij, v] : m.j) couplings.push_back({ij.first, ij.second, v});
    j["j"] = std::move(couplings);
    return j;
}

}  // namespace qimp
