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

#ifndef QIMP_FORMULA_HPP
#define QIMP_FORMULA_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace qimp {

/// A signed propositional literal over a positive variable id.
struct Literal {
    int var = 0;
    bool positive = true;

    Literal() = default;
    Literal(int v, bool pos) : var(v), positive(pos) {
        if (v < 1) throw std::invalid_argument("literal variable must be >= 1");
    }

    /// DIMACS convention: +v for the positive literal, -v for the negative.
    static Literal from_dimacs(int code) {
        if (code == 0) throw std::invalid_argument("literal code must be nonzero");
        return Literal(code > 0 ? code : -code, code > 0);
    }
    int to_dimacs() const { return positive ? var : -var; }
    Literal negated() const { return Literal(var, !positive); }

    auto operator<=>(const Literal&) const = default;
};

using Clause = std::vector<Literal>;

/// CNF formula over variables 1..num_vars. Variable ids are the DIMACS ids;
/// preprocessing never renumbers.
class CnfFormula {
  public:
    CnfFormula() = default;
    explicit CnfFormula(int num_vars) : num_vars_(num_vars) {
        if (num_vars < 0) throw std::invalid_argument("num_vars must be >= 0");
    }
    CnfFormula(int num_vars, std::vector<Clause> clauses);

    int num_vars() const { return num_vars_; }
    const std::vector<Clause>& clauses() const { return clauses_; }
    std::size_t num_clauses() const { return clauses_.size(); }

    void add_clause(Clause clause);

    /// Variables that occur in at least one clause.
    std::set<int> occurring_vars() const;

    bool operator==(const CnfFormula&) const = default;

  private:
    int num_vars_ = 0;
    std::vector<Clause> clauses_;
};

enum class Ternary : std::uint8_t { Unassigned, True, False };

/// Three-valued assignment over variables 1..n; every variable is present,
/// defaulting to Unassigned.
class PartialAssignment {
  public:
    PartialAssignment() = default;
    explicit PartialAssignment(int num_vars)
        : values_(static_cast<std::size_t>(num_vars) + 1, Ternary::Unassigned) {}

    static PartialAssignment from_literals(int num_vars, const std::vector<Literal>& lits);

    int num_vars() const { return static_cast<int>(values_.size()) - 1; }

    Ternary value(int var) const { return values_.at(static_cast<std::size_t>(var)); }
    void set(int var, Ternary v) { values_.at(static_cast<std::size_t>(var)) = v; }
    void set(Literal lit) { set(lit.var, lit.positive ? Ternary::True : Ternary::False); }
    void unassign(int var) { set(var, Ternary::Unassigned); }

    bool assigned(int var) const { return value(var) != Ternary::Unassigned; }
    /// True iff lit is assigned and satisfied.
    bool satisfies(Literal lit) const {
        return value(lit.var) == (lit.positive ? Ternary::True : Ternary::False);
    }

    /// Number of assigned variables.
    int size() const;

    /// Assigned literals in ascending variable order.
    std::vector<Literal> literals() const;

    /// Copy keeping only the variables in `vars` assigned.
    PartialAssignment restricted_to(const std::set<int>& vars) const;

    /// True iff this assigns everything `other` assigns, with equal values.
    bool extends(const PartialAssignment& other) const;

    bool operator==(const PartialAssignment&) const = default;

  private:
    std::vector<Ternary> values_ = {Ternary::Unassigned};
};

enum class PreprocessStatus { Reduced, UnsatDetected, TriviallySat };

struct PreprocessResult {
    CnfFormula formula;            // reduced; same variable id space as the input
    std::vector<Literal> forced;   // literals fixed by unit propagation
    std::set<int> eliminated;      // vars(forced)
    PreprocessStatus status = PreprocessStatus::Reduced;
};

/// Error raised by the DIMACS parser, carrying the offending line.
class DimacsError : public std::runtime_error {
  public:
    enum class Kind { Syntax, VarOutOfRange, EmptyClause };

    DimacsError(Kind kind, int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg),
          kind_(kind),
          line_(line) {}

    Kind kind() const { return kind_; }
    int line() const { return line_; }

  private:
    Kind kind_;
    int line_;
};

/// Parse DIMACS CNF. Comments (`c` lines) are tolerated anywhere. An explicit
/// empty clause is rejected with Kind::EmptyClause so callers can report the
/// input as trivially unsatisfiable.
CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs(const std::string& text);

void write_dimacs(const CnfFormula& f, std::ostream& out);
std::string to_dimacs(const CnfFormula& f);

/// Remove tautological clauses and duplicate literals, then run unit
/// propagation to fixpoint. Forced literals are reported separately; the
/// reduced formula contains no unit clauses.
PreprocessResult preprocess(const CnfFormula& f);

/// CNF implicant criterion: every clause contains a literal satisfied by mu.
/// For CNF this is equivalent to "every total extension of mu satisfies f".
bool entails(const PartialAssignment& mu, const CnfFormula& f);

/// True iff mu is an implicant from which no single literal can be dropped.
/// Throws std::invalid_argument if mu is not an implicant of f.
bool is_minimal_implicant(const PartialAssignment& mu, const CnfFormula& f);

}  // namespace qimp

#endif  // QIMP_FORMULA_HPP
