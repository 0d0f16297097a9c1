#include "oracles.hpp"
#include "support.hpp"

#include "vldl/analysis.hpp"
#include "vldl/corpus.hpp"
#include "vldl/error.hpp"
#include "vldl/logic.hpp"
#include "vldl/semantics.hpp"

#include <doctest.h>

using namespace vldl;
using support::lasso;

TEST_CASE("lasso enumeration order") {
    const auto a = support::crl();
    std::vector<LassoWord> seen;
    enumerate_lassos(a, {1, 2, std::nullopt}, [&](const LassoWord& w) {
        seen.push_back(w);
        return false;
    });
    CHECK(seen == corpus::all_lassos(a, 1, 2));
    // 3 of length 1, 9 + 6 of length 2, 27 of length 3 with |v| = 2.
    CHECK(seen.size() == 3 + 9 + 9 + 27);
    CHECK(seen.front() == lasso(a, "", "c"));
    CHECK(seen[3] == lasso(a, "c", "c"));

    std::vector<LassoWord> restricted;
    enumerate_lassos(a, {1, 1, std::vector<LetterId>{2, 0}}, [&](const LassoWord& w) {
        restricted.push_back(w);
        return restricted.size() == 3;
    });
    CHECK(restricted == std::vector<LassoWord>{lasso(a, "", "l"), lasso(a, "", "c"), lasso(a, "l", "l")});
}

TEST_CASE("bounded satisfiability and validity") {
    const auto p = support::sample("calls.json");
    const auto sat = bounded_sat(p.formula("truth"), p.guards, p.alphabet, {});
    CHECK(sat.outcome == Outcome::witness_found);
    CHECK(sat.word == corpus::all_lassos(p.alphabet, 0, 1).front());
    CHECK(sat.examined == 1);

    const auto none = bounded_sat(p.formula("contradiction"), p.guards, p.alphabet, {2, 1, std::nullopt});
    CHECK(none.outcome == Outcome::exhausted_bounds);
    CHECK_FALSE(none.word);
    CHECK(none.examined == corpus::all_lassos(p.alphabet, 2, 1).size());

    CHECK(bounded_validity(p.formula("truth"), p.guards, p.alphabet, {}).outcome == Outcome::holds);
    const auto atom = Formula::atom("p");
    const auto refuted = bounded_validity(atom, p.guards, p.alphabet, {});
    REQUIRE(refuted.outcome == Outcome::counterexample);
    CHECK_FALSE(evaluate_at(atom, p.guards, p.alphabet, *refuted.word, 0));

    const auto found = bounded_sat(p.formula("phi"), p.guards, p.alphabet, {});
    REQUIRE(found.word);
    CHECK(evaluate_at(p.formula("phi"), p.guards, p.alphabet, *found.word, 0));
}

TEST_CASE("repeatable traces") {
    const auto a = support::crl();
    Vps s;
    s.alphabet = a;
    s.add_state("idle");
    s.add_symbol("F");
    s.calls = {{0, 0, 0, 1}};
    s.returns = {{0, 1, 1, 0}};
    s.locals = {{0, 2, 0}};
    s.normalize();
    CHECK(is_repeatable_trace(s, 0, lasso(a, "", "l")));
    CHECK(is_repeatable_trace(s, 0, lasso(a, "", "c r")));
    CHECK(is_repeatable_trace(s, 0, lasso(a, "", "c")));
    CHECK(is_repeatable_trace(s, 0, lasso(a, "c c", "r l")) == false); // pops below the period entry forever
    CHECK_FALSE(is_repeatable_trace(s, 0, lasso(a, "", "r"))); // no rule on the empty stack
    CHECK(is_repeatable_trace(s, 0, lasso(a, "c c r", "l")));
}

TEST_CASE("bounded refutation") {
    const auto a = support::crl();
    Vps s;
    s.alphabet = a;
    s.add_state("only");
    s.locals = {{0, 2, 0}};
    s.normalize();
    const auto miss = bounded_refute(s, 0, Formula::atom("p"), {}, {});
    REQUIRE(miss.outcome == Outcome::counterexample);
    CHECK(*miss.word == lasso(a, "", "l"));
    const auto fine = bounded_refute(s, 0, Formula::atom("q"), {}, {});
    CHECK(fine.outcome == Outcome::exhausted_bounds);
    CHECK(fine.examined == 8); // only l^i (l^j)^omega is a trace: 4 prefixes times 2 periods
    CHECK_THROWS_AS(bounded_refute(s, 4, Formula::atom("q"), {}, {}), InputError);
}

TEST_CASE("privilege escape sample") {
    const auto p = support::sample("privilege.json");
    const auto& phi = p.formula("phi");
    const auto refuted = bounded_refute(p.systems.at("shell"), p.system_start.at("shell"), phi, p.guards, {6, 2, std::nullopt});
    REQUIRE(refuted.outcome == Outcome::counterexample);
    CHECK(refuted.word->prefix.size() <= 6);
    CHECK(is_repeatable_trace(p.systems.at("shell"), p.system_start.at("shell"), *refuted.word));

    const auto exact = intersect_empty(p.systems.at("shell"), p.system_start.at("shell"), p.bvpas.at("escape"));
    REQUIRE(exact.outcome == Outcome::counterexample);
    CHECK(exact.word->prefix.size() <= 6);
    CHECK(bvpa_accepts(p.bvpas.at("escape"), *exact.word));
    CHECK_FALSE(evaluate_at(phi, p.guards, p.alphabet, *exact.word, 0));

    CHECK(intersect_empty(p.systems.at("safe_shell"), p.system_start.at("safe_shell"), p.bvpas.at("escape")).outcome ==
          Outcome::holds);
    CHECK(bounded_refute(p.systems.at("safe_shell"), p.system_start.at("safe_shell"), phi, p.guards, {4, 2, std::nullopt})
              .outcome == Outcome::exhausted_bounds);
}

TEST_CASE("emptiness of the product") {
    const auto a = support::crl();
    Vps s;
    s.alphabet = a;
    s.add_state("only");
    s.locals = {{0, 2, 0}};
    s.normalize();
    Bvpa none;
    none.vps.alphabet = a;
    none.vps.add_state("x");
    none.vps.locals = {{0, 2, 0}};
    none.initial = {0};
    CHECK(intersect_empty(s, 0, none).outcome == Outcome::holds);
    Bvpa all = none;
    all.accepting = {0};
    const auto v = intersect_empty(s, 0, all);
    REQUIRE(v.outcome == Outcome::counterexample);
    CHECK(is_repeatable_trace(s, 0, *v.word));
    CHECK(bvpa_accepts(all, *v.word));
}

TEST_CASE("exact and bounded model checking agree") {
    corpus::Rng rng(44);
    const SearchBounds bounds{3, 2, std::nullopt};
    unsigned shared = 0, violated = 0;
    for (int i = 0; i < 60; ++i) {
        const auto a = corpus::random_alphabet(rng, 3);
        const auto system = corpus::random_system(rng, a, 3, 2);
        AutomatonTable table;
        table.add("G", corpus::random_guard(rng, a, {2, 1, 0.5}));
        const auto f = Formula::box("G", Formula::falsity("p"));
        const auto bad = oracle::eventually_final(table.require("G"));
        const auto exact = intersect_empty(system, 0, bad);
        const auto bounded = bounded_refute(system, 0, f, table, bounds);
        if (exact.word) {
            CHECK(is_repeatable_trace(system, 0, *exact.word));
            CHECK_FALSE(evaluate_at(f, table, a, *exact.word, 0));
        }
        if (bounded.word) CHECK(bvpa_accepts(bad, *bounded.word));
        if (bounded.outcome == Outcome::counterexample) {
            CHECK(exact.outcome == Outcome::counterexample);
            ++shared;
            ++violated;
        } else if (exact.outcome == Outcome::holds) {
            ++shared;
        }
    }
    CHECK(shared >= 40);
    CHECK(violated > 5);
}
