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

#include "doctest.h"

#include <sstream>

#include "qimp/formula.hpp"
#include "qimp/rng.hpp"

using namespace qimp;

namespace {

CnfFormula random_formula(int n, int m, int max_len, Rng& rng) {
    CnfFormula f(n);
    for (int k = 0; k < m; ++k) {
        const int len = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_len)));
        Clause c;
        for (int i = 0; i < len; ++i)
            c.emplace_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(n))) + 1,
                           rng.coin());
        f.add_clause(std::move(c));
    }
    return f;
}

// Semantic entailment oracle: every total extension of mu satisfies f in the
// classic sense. Unlike the clause-cover criterion this is correct even for
// tautological clauses, so it can judge the unpreprocessed original.
bool entails_semantic(const PartialAssignment& mu, const CnfFormula& f) {
    const int n = f.num_vars();
    std::vector<int> free;
    for (int v = 1; v <= n; ++v)
        if (!mu.assigned(v)) free.push_back(v);
    PartialAssignment total = mu;
    for (std::uint64_t mask = 0; mask < (1ULL << free.size()); ++mask) {
        for (std::size_t i = 0; i < free.size(); ++i)
            total.set(free[i], ((mask >> i) & 1) ? Ternary::True : Ternary::False);
        for (const Clause& c : f.clauses()) {
            bool covered = false;
            for (const Literal& lit : c)
                if (total.satisfies(lit)) {
                    covered = true;
                    break;
                }
            if (!covered) return false;
        }
    }
    return true;
}

// Enumerates all 3^n partial assignments of n variables.
template <typename Fn>
void for_each_partial(int n, Fn&& fn) {
    std::vector<int> digits(static_cast<std::size_t>(n), 0);
    for (;;) {
        PartialAssignment mu(n);
        for (int v = 1; v <= n; ++v) {
            const int d = digits[static_cast<std::size_t>(v) - 1];
            if (d == 1) mu.set(v, Ternary::True);
            else if (d == 2) mu.set(v, Ternary::False);
        }
        fn(mu);
        int pos = 0;
        while (pos < n && digits[static_cast<std::size_t>(pos)] == 2)
            digits[static_cast<std::size_t>(pos++)] = 0;
        if (pos == n) break;
        ++digits[static_cast<std::size_t>(pos)];
    }
}

}  // namespace

TEST_SUITE("formula") {

TEST_CASE("parse_dimacs reads the one-clause example") {
    CnfFormula f = parse_dimacs("p cnf 3 1\n1 -2 3 0\n");
    CHECK(f.num_vars() == 3);
    REQUIRE(f.num_clauses() == 1);
    const Clause& c = f.clauses()[0];
    REQUIRE(c.size() == 3);
    CHECK(c[0] == Literal(1, true));
    CHECK(c[1] == Literal(2, false));
    CHECK(c[2] == Literal(3, true));
}

TEST_CASE("parse_dimacs accepts an empty formula") {
    CnfFormula f = parse_dimacs("p cnf 2 0\n");
    CHECK(f.num_vars() == 2);
    CHECK(f.num_clauses() == 0);
}

TEST_CASE("parse_dimacs tolerates comments and clause spanning lines") {
    CnfFormula f = parse_dimacs("c header comment\np cnf 4 2\nc mid comment\n1 2\n-3 0\n4 -1 0\n");
    REQUIRE(f.num_clauses() == 2);
    CHECK(f.clauses()[0].size() == 3);
}

TEST_CASE("parse_dimacs error paths") {
    CHECK_THROWS_AS(parse_dimacs("p dnf 2 1\n1 0\n"), DimacsError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2\n"), DimacsError);   // unterminated
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 2\n1 0\n"), DimacsError);   // missing clause
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 0\n2 0\n"), DimacsError);  // extra clause
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\nx 0\n"), DimacsError);   // junk token

    try {
        parse_dimacs("p cnf 2 1\n3 0\n");
        FAIL("expected DimacsError");
    } catch (const DimacsError& e) {
        CHECK(e.kind() == DimacsError::Kind::VarOutOfRange);
        CHECK(e.line() == 2);
    }

    try {
        parse_dimacs("p cnf 2 1\n0\n");
        FAIL("expected DimacsError");
    } catch (const DimacsError& e) {
        CHECK(e.kind() == DimacsError::Kind::EmptyClause);
    }
}

TEST_CASE("dimacs round trip on random formulas") {
    Rng rng(11);
    for (int iter = 0; iter < 50; ++iter) {
        CnfFormula f = random_formula(6, 8, 4, rng);
        CnfFormula back = parse_dimacs(to_dimacs(f));
        CHECK(back == f);
    }
}

TEST_CASE("preprocess removes tautologies") {
    CnfFormula f = parse_dimacs("p cnf 2 1\n1 -1 0\n");
    PreprocessResult pre = preprocess(f);
    CHECK(pre.formula.num_clauses() == 0);
    CHECK(pre.status == PreprocessStatus::TriviallySat);
}

TEST_CASE("preprocess propagates units") {
    CnfFormula f(2, {{Literal(1, true)}, {Literal(1, true), Literal(2, true)}});
    PreprocessResult pre = preprocess(f);
    CHECK(pre.status == PreprocessStatus::TriviallySat);
    CHECK(pre.formula.num_clauses() == 0);
    REQUIRE(pre.forced.size() == 1);
    CHECK(pre.forced[0] == Literal(1, true));
    CHECK(pre.eliminated == std::set<int>{1});
}

TEST_CASE("preprocess keeps an already-reduced formula") {
    CnfFormula f = parse_dimacs("p cnf 3 1\n1 -2 3 0\n");
    PreprocessResult pre = preprocess(f);
    CHECK(pre.status == PreprocessStatus::Reduced);
    CHECK(pre.formula == f);
    CHECK(pre.forced.empty());
}

TEST_CASE("preprocess detects unit conflicts") {
    CnfFormula f(1, {{Literal(1, true)}, {Literal(1, false)}});
    CHECK(preprocess(f).status == PreprocessStatus::UnsatDetected);
}

TEST_CASE("preprocess cascades to an empty clause conflict") {
    // unit 1 forces -2 via (¬1 ∨ ¬2), then (2) conflicts
    CnfFormula f(2, {{Literal(1, true)},
                     {Literal(1, false), Literal(2, false)},
                     {Literal(2, true)}});
    CHECK(preprocess(f).status == PreprocessStatus::UnsatDetected);
}

TEST_CASE("entails on the one-clause example") {
    CnfFormula f = parse_dimacs("p cnf 3 1\n1 -2 3 0\n");
    PartialAssignment mu(3);
    CHECK_FALSE(entails(mu, f));  // nothing assigned
    mu.set(1, Ternary::True);
    CHECK(entails(mu, f));
    PartialAssignment total(3);
    total.set(1, Ternary::True);
    total.set(2, Ternary::False);
    total.set(3, Ternary::True);
    CHECK(entails(total, f));
}

TEST_CASE("entails is monotone under extension") {
    Rng rng(7);
    for (int iter = 0; iter < 100; ++iter) {
        CnfFormula f = random_formula(5, 6, 3, rng);
        PartialAssignment mu(5);
        for (int v = 1; v <= 5; ++v) {
            const auto roll = rng.below(3);
            if (roll == 1) mu.set(v, Ternary::True);
            else if (roll == 2) mu.set(v, Ternary::False);
        }
        if (!entails(mu, f)) continue;
        PartialAssignment bigger = mu;
        for (int v = 1; v <= 5; ++v)
            if (!bigger.assigned(v)) bigger.set(v, rng.coin() ? Ternary::True : Ternary::False);
        CHECK(entails(bigger, f));
    }
}

TEST_CASE("is_minimal_implicant basic cases") {
    CnfFormula f = parse_dimacs("p cnf 3 1\n1 -2 3 0\n");
    PartialAssignment single(3);
    single.set(1, Ternary::True);
    CHECK(is_minimal_implicant(single, f));

    PartialAssignment two(3);
    two.set(1, Ternary::True);
    two.set(3, Ternary::True);
    CHECK_FALSE(is_minimal_implicant(two, f));

    PartialAssignment empty(3);
    CHECK_THROWS_AS(is_minimal_implicant(empty, f), std::invalid_argument);
}

TEST_CASE("is_minimal_implicant matches the drop-each-literal oracle") {
    Rng rng(23);
    for (int iter = 0; iter < 40; ++iter) {
        CnfFormula f = random_formula(8, 10, 3, rng);
        // Find some implicant by extending assignments greedily.
        PartialAssignment mu(8);
        for (int v = 1; v <= 8; ++v) mu.set(v, rng.coin() ? Ternary::True : Ternary::False);
        if (!entails(mu, f)) continue;

        // Oracle: drop each literal in turn and recheck from scratch.
        bool oracle_minimal = true;
        for (int v = 1; v <= 8 && oracle_minimal; ++v) {
            if (!mu.assigned(v)) continue;
            PartialAssignment probe = mu;
            probe.unassign(v);
            if (entails(probe, f)) oracle_minimal = false;
        }
        CHECK(is_minimal_implicant(mu, f) == oracle_minimal);
    }
}

TEST_CASE("preprocess preserves the implicant set modulo forced literals") {
    // Exhaustive over all partial assignments of the reduced formula.
    Rng rng(31);
    int tested = 0;
    for (int iter = 0; iter < 20; ++iter) {
        const int n = 6;
        CnfFormula f = random_formula(n, 6, 3, rng);
        f.add_clause({Literal(static_cast<int>(rng.below(n)) + 1, rng.coin())});  // a unit
        PreprocessResult pre = preprocess(f);
        if (pre.status == PreprocessStatus::UnsatDetected) continue;
        ++tested;
        for_each_partial(n, [&](const PartialAssignment& mu) {
            bool skip = false;
            for (const Literal& lit : pre.forced)
                if (mu.assigned(lit.var)) skip = true;  // overlap with forced: out of scope
            if (skip) return;
            PartialAssignment with_forced = mu;
            for (const Literal& lit : pre.forced) with_forced.set(lit);
            CHECK(entails(mu, pre.formula) == entails_semantic(with_forced, f));
        });
    }
    CHECK(tested > 0);
}

TEST_CASE("partial assignment bookkeeping") {
    PartialAssignment mu(4);
    CHECK(mu.size() == 0);
    mu.set(Literal(2, false));
    mu.set(3, Ternary::True);
    CHECK(mu.size() == 2);
    CHECK(mu.satisfies(Literal(2, false)));
    CHECK_FALSE(mu.satisfies(Literal(2, true)));
    CHECK(mu.literals() == std::vector<Literal>{Literal(2, false), Literal(3, true)});

    PartialAssignment sub = mu.restricted_to({3});
    CHECK(sub.size() == 1);
    CHECK(mu.extends(sub));
    CHECK_FALSE(sub.extends(mu));
}

}  // TEST_SUITE
