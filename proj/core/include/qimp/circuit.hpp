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

#ifndef QIMP_CIRCUIT_HPP
#define QIMP_CIRCUIT_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "qimp/formula.hpp"

namespace qimp {

/// Non-CNF Boolean expression tree. And/Or nodes have >= 2 children.
struct BoolExpr {
    enum class Kind { Var, Not, And, Or };

    Kind kind = Kind::Var;
    int var = 0;                     // Kind::Var only
    std::vector<BoolExpr> children;  // Not: 1 child; And/Or: >= 2

    static BoolExpr make_var(int v);
    static BoolExpr make_not(BoolExpr child);
    static BoolExpr make_and(std::vector<BoolExpr> children);
    static BoolExpr make_or(std::vector<BoolExpr> children);

    bool operator==(const BoolExpr&) const = default;
};

/// Parse the prefix s-expression form, e.g. `(or (and x1 x2) (not x3))`.
/// Inverse of print_expr.
BoolExpr parse_expr(const std::string& text);
std::string print_expr(const BoolExpr& e);

std::set<int> collect_vars(const BoolExpr& e);
int max_var(const BoolExpr& e);

/// Evaluate under a total assignment; `total[v]` holds the value of variable v
/// (index 0 unused).
bool eval(const BoolExpr& e, const std::vector<bool>& total);

/// True iff every total extension of mu (over the variables of e) satisfies e.
/// Enumerates completions; intended for small variable counts.
bool entails_expr(const PartialAssignment& mu, const BoolExpr& e);

/// Negation normal form: negations pushed onto variables, double negations
/// removed. Semantics preserved.
BoolExpr to_nnf(const BoolExpr& e);

struct CnfConversion {
    CnfFormula cnf;
    std::set<int> visible;                 // original variable ids
    std::set<int> hidden;                  // auxiliary ids introduced here
    std::map<int, BoolExpr> definitions;   // aux id -> defining subformula
};

/// Plaisted-Greenbaum transformation of an NNF expression. One auxiliary
/// variable per internal gate, numbered after the original variables in
/// preorder; only one-directional gate->definition clauses are emitted, plus
/// the unit clause asserting the root.
CnfConversion plaisted_greenbaum(const BoolExpr& nnf);

/// Tseitin transformation with bidirectional gate clauses; accepts any
/// expression.
CnfConversion tseitin(const BoolExpr& e);

/// Deterministic random expression: alternating And/Or levels of the given
/// arity, literal leaves with uniform sign over variables 1..n_vars. The
/// result is already in NNF.
BoolExpr random_nested(int n_vars, int depth, int fanin, std::uint64_t seed);

}  // namespace qimp

#endif  // QIMP_CIRCUIT_HPP
