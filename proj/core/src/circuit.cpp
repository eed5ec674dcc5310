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

#include "qimp/circuit.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qimp/rng.hpp"

namespace qimp {

BoolExpr BoolExpr::make_var(int v) {
    if (v < 1) throw std::invalid_argument("variable id must be >= 1");
    BoolExpr e;
    e.kind = Kind::Var;
    e.var = v;
    return e;
}

BoolExpr BoolExpr::make_not(BoolExpr child) {
    BoolExpr e;
    e.kind = Kind::Not;
    e.children.push_back(std::move(child));
    return e;
}

BoolExpr BoolExpr::make_and(std::vector<BoolExpr> children) {
    if (children.size() < 2) throw std::invalid_argument("And needs >= 2 children");
    BoolExpr e;
    e.kind = Kind::And;
    e.children = std::move(children);
    return e;
}

BoolExpr BoolExpr::make_or(std::vector<BoolExpr> children) {
    if (children.size() < 2) throw std::invalid_argument("Or needs >= 2 children");
    BoolExpr e;
    e.kind = Kind::Or;
    e.children = std::move(children);
    return e;
}

namespace {

struct ExprTokenizer {
    std::vector<std::string> tokens;
    std::size_t pos = 0;

    explicit ExprTokenizer(const std::string& text) {
        std::string current;
        auto flush = [&] {
            if (!current.empty()) {
                tokens.push_back(current);
                current.clear();
            }
        };
        for (char ch : text) {
            if (ch == '(' || ch == ')') {
                flush();
                tokens.push_back(std::string(1, ch));
            } else if (std::isspace(static_cast<unsigned char>(ch))) {
                flush();
            } else {
                current.push_back(ch);
            }
        }
        flush();
    }

    const std::string& peek() const {
        static const std::string kEnd;
        return pos < tokens.size() ? tokens[pos] : kEnd;
    }
    std::string take() {
        if (pos >= tokens.size()) throw std::invalid_argument("unexpected end of expression");
        return tokens[pos++];
    }
};

int parse_var_token(const std::string& tok) {
    if (tok.size() < 2 || tok[0] != 'x')
        throw std::invalid_argument("expected variable token 'x<id>', got '" + tok + "'");
    int id = 0;
    for (std::size_t i = 1; i < tok.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(tok[i])))
            throw std::invalid_argument("bad variable token '" + tok + "'");
        id = id * 10 + (tok[i] - '0');
    }
    if (id < 1) throw std::invalid_argument("variable id must be >= 1 in '" + tok + "'");
    return id;
}

BoolExpr parse_node(ExprTokenizer& tz) {
    std::string tok = tz.take();
    if (tok != "(") return BoolExpr::make_var(parse_var_token(tok));

    std::string op = tz.take();
    std::vector<BoolExpr> children;
    while (tz.peek() != ")") {
        if (tz.peek().empty()) throw std::invalid_argument("missing ')'");
        children.push_back(parse_node(tz));
    }
    tz.take();  // ')'

    if (op == "not") {
        if (children.size() != 1) throw std::invalid_argument("not takes one argument");
        return BoolExpr::make_not(std::move(children.front()));
    }
    if (op == "and") return BoolExpr::make_and(std::move(children));
    if (op == "or") return BoolExpr::make_or(std::move(children));
    throw std::invalid_argument("unknown operator '" + op + "'");
}

}  // namespace

BoolExpr parse_expr(const std::string& text) {
    ExprTokenizer tz(text);
    BoolExpr e = parse_node(tz);
    if (!tz.peek().empty())
        throw std::invalid_argument("trailing content after expression");
    return e;
}

std::string print_expr(const BoolExpr& e) {
    switch (e.kind) {
        case BoolExpr::Kind::Var:
            return "x" + std::to_string(e.var);
        case BoolExpr::Kind::Not:
            return "(not " + print_expr(e.children.front()) + ")";
        case BoolExpr::Kind::And:
        case BoolExpr::Kind::Or: {
            std::string out = e.kind == BoolExpr::Kind::And ? "(and" : "(or";
            for (const BoolExpr& c : e.children) out += " " + print_expr(c);
            return out + ")";
        }
    }
    return {};
}

std::set<int> collect_vars(const BoolExpr& e) {
    std::set<int> vars;
    if (e.kind == BoolExpr::Kind::Var) {
        vars.insert(e.var);
        return vars;
    }
    for (const BoolExpr& c : e.children) {
        auto sub = collect_vars(c);
        vars.insert(sub.begin(), sub.end());
    }
    return vars;
}

int max_var(const BoolExpr& e) {
    auto vars = collect_vars(e);
    return vars.empty() ? 0 : *vars.rbegin();
}

bool eval(const BoolExpr& e, const std::vector<bool>& total) {
    switch (e.kind) {
        case BoolExpr::Kind::Var:
            return total.at(static_cast<std::size_t>(e.var));
        case BoolExpr::Kind::Not:
            return !eval(e.children.front(), total);
        case BoolExpr::Kind::And:
            return std::all_of(e.children.begin(), e.children.end(),
                               [&](const BoolExpr& c) { return eval(c, total); });
        case BoolExpr::Kind::Or:
            return std::any_of(e.children.begin(), e.children.end(),
                               [&](const BoolExpr& c) { return eval(c, total); });
    }
    return false;
}

bool entails_expr(const PartialAssignment& mu, const BoolExpr& e) {
    const std::set<int> var_set = collect_vars(e);
    const std::vector<int> vars(var_set.begin(), var_set.end());
    std::vector<int> free;
    int n = std::max(max_var(e), mu.num_vars());
    std::vector<bool> total(static_cast<std::size_t>(n) + 1, false);
    for (int v : vars) {
        if (v <= mu.num_vars() && mu.assigned(v))
            total[static_cast<std::size_t>(v)] = mu.value(v) == Ternary::True;
        else
            free.push_back(v);
    }
    if (free.size() > 30)
        throw std::invalid_argument("entails_expr: too many free variables to enumerate");
    const std::uint64_t count = 1ULL << free.size();
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        for (std::size_t i = 0; i < free.size(); ++i)
            total[static_cast<std::size_t>(free[i])] = (mask >> i) & 1;
        if (!eval(e, total)) return false;
    }
    return true;
}

BoolExpr to_nnf(const BoolExpr& e) {
    struct Impl {
        static BoolExpr walk(const BoolExpr& node, bool negate) {
            switch (node.kind) {
                case BoolExpr::Kind::Var:
                    return negate ? BoolExpr::make_not(BoolExpr::make_var(node.var))
                                  : BoolExpr::make_var(node.var);
                case BoolExpr::Kind::Not:
                    return walk(node.children.front(), !negate);
                case BoolExpr::Kind::And:
                case BoolExpr::Kind::Or: {
                    const bool is_and = node.kind == BoolExpr::Kind::And;
                    std::vector<BoolExpr> children;
                    children.reserve(node.children.size());
                    for (const BoolExpr& c : node.children)
                        children.push_back(walk(c, negate));
                    // De Morgan: negation swaps the connective.
                    if (is_and != negate) return BoolExpr::make_and(std::move(children));
                    return BoolExpr::make_or(std::move(children));
                }
            }
            throw std::logic_error("unreachable");
        }
    };
    return Impl::walk(e, false);
}

namespace {

bool is_literal_node(const BoolExpr& e) {
    return e.kind == BoolExpr::Kind::Var ||
           (e.kind == BoolExpr::Kind::Not &&
            e.children.front().kind == BoolExpr::Kind::Var);
}

Literal literal_of_node(const BoolExpr& e) {
    if (e.kind == BoolExpr::Kind::Var) return Literal(e.var, true);
    return Literal(e.children.front().var, false);
}

// Shared gate walker for both CNF transformations. Auxiliary ids are assigned
// in preorder starting at first_aux; `encode` returns the literal standing for
// a subtree (the gate literal for internal nodes).
struct GateEncoder {
    int next_aux;
    bool bidirectional;
    std::vector<Clause> clauses;
    std::map<int, BoolExpr> definitions;

    Literal encode(const BoolExpr& node) {
        if (is_literal_node(node)) return literal_of_node(node);
        if (node.kind == BoolExpr::Kind::Not) {
            // Only reachable for non-NNF Tseitin input.
            Literal child = encode(node.children.front());
            return child.negated();
        }
        const int gate = next_aux++;
        definitions.emplace(gate, node);
        std::vector<Literal> child_lits;
        child_lits.reserve(node.children.size());
        for (const BoolExpr& c : node.children) child_lits.push_back(encode(c));

        const Literal g(gate, true);
        if (node.kind == BoolExpr::Kind::And) {
            for (const Literal& cl : child_lits) clauses.push_back({g.negated(), cl});
            if (bidirectional) {
                Clause back{g};
                for (const Literal& cl : child_lits) back.push_back(cl.negated());
                clauses.push_back(std::move(back));
            }
        } else {  // Or
            Clause fwd{g.negated()};
            for (const Literal& cl : child_lits) fwd.push_back(cl);
            clauses.push_back(std::move(fwd));
            if (bidirectional) {
                for (const Literal& cl : child_lits)
                    clauses.push_back({g, cl.negated()});
            }
        }
        return g;
    }
};

CnfConversion convert(const BoolExpr& e, bool bidirectional) {
    const std::set<int> original = collect_vars(e);
    const int n_orig = original.empty() ? 0 : *original.rbegin();

    // Gate ids are assigned in preorder, so the root gate (if any) is n+1.
    GateEncoder enc{n_orig + 1, bidirectional, {}, {}};
    Literal root = enc.encode(e);
    enc.clauses.push_back({root});

    CnfConversion out;
    out.cnf = CnfFormula(std::max(enc.next_aux - 1, n_orig));
    for (Clause& c : enc.clauses) out.cnf.add_clause(std::move(c));
    out.visible = original;
    for (int aux = n_orig + 1; aux < enc.next_aux; ++aux) out.hidden.insert(aux);
    out.definitions = std::move(enc.definitions);
    return out;
}

}  // namespace

CnfConversion plaisted_greenbaum(const BoolExpr& nnf) {
    struct Check {
        static void nnf_only(const BoolExpr& node) {
            if (node.kind == BoolExpr::Kind::Not && !is_literal_node(node))
                throw std::invalid_argument("plaisted_greenbaum requires NNF input");
            for (const BoolExpr& c : node.children) nnf_only(c);
        }
    };
    Check::nnf_only(nnf);
    return convert(nnf, /*bidirectional=*/false);
}

CnfConversion tseitin(const BoolExpr& e) { return convert(e, /*bidirectional=*/true); }

BoolExpr random_nested(int n_vars, int depth, int fanin, std::uint64_t seed) {
    if (n_vars < 1) throw std::invalid_argument("n_vars must be >= 1");
    if (depth < 1) throw std::invalid_argument("depth must be >= 1");
    if (fanin < 2) throw std::invalid_argument("fanin must be >= 2");

    Rng rng(derive_seed(seed, 0x6e657374ULL));
    const bool root_is_and = rng.coin();

    struct Builder {
        Rng& rng;
        int n_vars;
        int fanin;

        BoolExpr leaf() {
            int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n_vars))) + 1;
            BoolExpr var = BoolExpr::make_var(v);
            return rng.coin() ? BoolExpr::make_not(std::move(var)) : std::move(var);
        }

        BoolExpr gate(int level, bool is_and) {
            std::vector<BoolExpr> children;
            children.reserve(static_cast<std::size_t>(fanin));
            for (int i = 0; i < fanin; ++i) {
                if (level == 1)
                    children.push_back(leaf());
                else
                    children.push_back(gate(level - 1, !is_and));
            }
            return is_and ? BoolExpr::make_and(std::move(children))
                          : BoolExpr::make_or(std::move(children));
        }
    };

    Builder b{rng, n_vars, fanin};
    return b.gate(depth, root_is_and);
}

}  // namespace qimp
