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

#include "qimp/formula.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace qimp {

CnfFormula::CnfFormula(int num_vars, std::vector<Clause> clauses)
    : CnfFormula(num_vars) {
    for (auto& c : clauses) add_clause(std::move(c));
}

void CnfFormula::add_clause(Clause clause) {
    if (clause.empty()) throw std::invalid_argument("clause must be non-empty");
    for (const Literal& lit : clause) {
        if (lit.var < 1 || lit.var > num_vars_)
            throw std::invalid_argument("literal variable out of range");
    }
    clauses_.push_back(std::move(clause));
}

std::set<int> CnfFormula::occurring_vars() const {
    std::set<int> vars;
    for (const Clause& c : clauses_)
        for (const Literal& lit : c) vars.insert(lit.var);
    return vars;
}

PartialAssignment PartialAssignment::from_literals(int num_vars,
                                                   const std::vector<Literal>& lits) {
    PartialAssignment mu(num_vars);
    for (const Literal& lit : lits) mu.set(lit);
    return mu;
}

int PartialAssignment::size() const {
    int count = 0;
    for (std::size_t v = 1; v < values_.size(); ++v)
        if (values_[v] != Ternary::Unassigned) ++count;
    return count;
}

std::vector<Literal> PartialAssignment::literals() const {
    std::vector<Literal> out;
    for (int v = 1; v <= num_vars(); ++v) {
        if (value(v) == Ternary::True) out.emplace_back(v, true);
        else if (value(v) == Ternary::False) out.emplace_back(v, false);
    }
    return out;
}

PartialAssignment PartialAssignment::restricted_to(const std::set<int>& vars) const {
    PartialAssignment out(num_vars());
    for (int v : vars)
        if (v >= 1 && v <= num_vars()) out.set(v, value(v));
    return out;
}

bool PartialAssignment::extends(const PartialAssignment& other) const {
    if (num_vars() != other.num_vars()) return false;
    for (int v = 1; v <= num_vars(); ++v)
        if (other.assigned(v) && value(v) != other.value(v)) return false;
    return true;
}

namespace {

// Reads whitespace-separated tokens while tracking line numbers and skipping
// comment lines.
class DimacsLexer {
  public:
    explicit DimacsLexer(std::istream& in) : in_(in) {}

    // Next non-comment token, or empty string at end of input.
    std::string next() {
        for (;;) {
            if (pos_ >= line_.size()) {
                if (!std::getline(in_, line_)) return {};
                ++line_no_;
                pos_ = 0;
                continue;
            }
            while (pos_ < line_.size() && is_space(line_[pos_])) ++pos_;
            if (pos_ >= line_.size()) continue;
            if (line_[pos_] == 'c' &&
                (pos_ + 1 >= line_.size() || is_space(line_[pos_ + 1]))) {
                pos_ = line_.size();  // comment: drop rest of line
                continue;
            }
            std::size_t start = pos_;
            while (pos_ < line_.size() && !is_space(line_[pos_])) ++pos_;
            return line_.substr(start, pos_ - start);
        }
    }

    int line_no() const { return line_no_; }

  private:
    static bool is_space(char ch) {
        return ch == ' ' || ch == '\t' || ch == '\r' || ch == '\f' || ch == '\v';
    }

    std::istream& in_;
    std::string line_;
    std::size_t pos_ = 0;
    int line_no_ = 0;
};

int parse_int(const std::string& tok, int line) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &used);
    } catch (const std::exception&) {
        throw DimacsError(DimacsError::Kind::Syntax, line,
                          "expected integer, got '" + tok + "'");
    }
    if (used != tok.size())
        throw DimacsError(DimacsError::Kind::Syntax, line,
                          "trailing characters in token '" + tok + "'");
    return value;
}

}  // namespace

CnfFormula parse_dimacs(std::istream& in) {
    DimacsLexer lex(in);

    std::string tok = lex.next();
    if (tok != "p")
        throw DimacsError(DimacsError::Kind::Syntax, lex.line_no(),
                          "expected 'p cnf <vars> <clauses>' header");
    if (lex.next() != "cnf")
        throw DimacsError(DimacsError::Kind::Syntax, lex.line_no(),
                          "expected 'cnf' after 'p'");
    int num_vars = parse_int(lex.next(), lex.line_no());
    int num_clauses = parse_int(lex.next(), lex.line_no());
    if (num_vars < 0 || num_clauses < 0)
        throw DimacsError(DimacsError::Kind::Syntax, lex.line_no(),
                          "negative counts in header");

    CnfFormula formula(num_vars);
    Clause current;
    int clauses_read = 0;
    while (clauses_read < num_clauses) {
        tok = lex.next();
        if (tok.empty())
            throw DimacsError(DimacsError::Kind::Syntax, lex.line_no(),
                              "unexpected end of input: expected " +
                                  std::to_string(num_clauses) + " clauses, got " +
                                  std::to_string(clauses_read));
        int code = parse_int(tok, lex.line_no());
        if (code == 0) {
            if (current.empty())
                throw DimacsError(DimacsError::Kind::EmptyClause, lex.line_no(),
                                  "empty clause (trivially unsatisfiable)");
            formula.add_clause(std::move(current));
            current.clear();
            ++clauses_read;
            continue;
        }
        Literal lit = Literal::from_dimacs(code);
        if (lit.var > num_vars)
            throw DimacsError(DimacsError::Kind::VarOutOfRange, lex.line_no(),
                              "variable " + std::to_string(lit.var) +
                                  " exceeds header count " + std::to_string(num_vars));
        current.push_back(lit);
    }
    if (!current.empty())
        throw DimacsError(DimacsError::Kind::Syntax, lex.line_no(),
                          "unterminated clause at end of input");
    tok = lex.next();
    if (!tok.empty())
        throw DimacsError(DimacsError::Kind::Syntax, lex.line_no(),
                          "trailing content after declared clauses: '" + tok + "'");
    return formula;
}

CnfFormula parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs(in);
}

void write_dimacs(const CnfFormula& f, std::ostream& out) {
    out << "p cnf " << f.num_vars() << ' ' << f.num_clauses() << '\n';
    for (const Clause& c : f.clauses()) {
        for (const Literal& lit : c) out << lit.to_dimacs() << ' ';
        out << "0\n";
    }
}

std::string to_dimacs(const CnfFormula& f) {
    std::ostringstream out;
    write_dimacs(f, out);
    return out.str();
}

PreprocessResult preprocess(const CnfFormula& f) {
    PreprocessResult result;
    result.formula = CnfFormula(f.num_vars());

    // Tautology removal and literal dedup first, then unit propagation to
    // fixpoint over the cleaned clause list.
    std::vector<Clause> work;
    for (const Clause& c : f.clauses()) {
        Clause cleaned;
        bool tautology = false;
        for (const Literal& lit : c) {
            if (std::find(cleaned.begin(), cleaned.end(), lit) != cleaned.end())
                continue;
            if (std::find(cleaned.begin(), cleaned.end(), lit.negated()) != cleaned.end()) {
                tautology = true;
                break;
            }
            cleaned.push_back(lit);
        }
        if (!tautology) work.push_back(std::move(cleaned));
    }

    PartialAssignment forced(f.num_vars());
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Clause& c : work) {
            if (c.size() != 1) continue;
            const Literal lit = c.front();
            if (forced.satisfies(lit)) continue;
            if (forced.assigned(lit.var)) {
                result.status = PreprocessStatus::UnsatDetected;
                result.forced = forced.literals();
                for (const Literal& fl : result.forced) result.eliminated.insert(fl.var);
                return result;
            }
            forced.set(lit);
            changed = true;
        }
        if (!changed) break;

        std::vector<Clause> next;
        for (const Clause& c : work) {
            bool satisfied = false;
            Clause remaining;
            for (const Literal& lit : c) {
                if (forced.satisfies(lit)) {
                    satisfied = true;
                    break;
                }
                if (forced.assigned(lit.var)) continue;  // falsified literal
                remaining.push_back(lit);
            }
            if (satisfied) continue;
            if (remaining.empty()) {
                result.status = PreprocessStatus::UnsatDetected;
                result.forced = forced.literals();
                for (const Literal& fl : result.forced) result.eliminated.insert(fl.var);
                return result;
            }
            next.push_back(std::move(remaining));
        }
        work = std::move(next);
    }

    for (Clause& c : work) result.formula.add_clause(std::move(c));
    result.forced = forced.literals();
    for (const Literal& fl : result.forced) result.eliminated.insert(fl.var);
    result.status = result.formula.num_clauses() == 0 ? PreprocessStatus::TriviallySat
                                                      : PreprocessStatus::Reduced;
    return result;
}

bool entails(const PartialAssignment& mu, const CnfFormula& f) {
    for (const Clause& c : f.clauses()) {
        bool covered = false;
        for (const Literal& lit : c) {
            if (mu.satisfies(lit)) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

bool is_minimal_implicant(const PartialAssignment& mu, const CnfFormula& f) {
    if (!entails(mu, f))
        throw std::invalid_argument("is_minimal_implicant: mu is not an implicant");
    PartialAssignment probe = mu;
    for (int v = 1; v <= mu.num_vars(); ++v) {
        if (!mu.assigned(v)) continue;
        probe.unassign(v);
        const bool still = entails(probe, f);
        probe.set(v, mu.value(v));
        if (still) return false;
    }
    return true;
}

}  // namespace qimp
