#include "oracles.hpp"
#include "support.hpp"

#include "vldl/corpus.hpp"
#include "vldl/logic.hpp"
#include "vldl/profile.hpp"
#include "vldl/semantics.hpp"
#include "vldl/translate.hpp"
#include "vldl/validate.hpp"

#include <doctest.h>

using namespace vldl;
using support::lasso;

TEST_CASE("guard reach on the call and return guards") {
    const auto p = support::sample("calls.json");
    const auto w = lasso(p.alphabet, "c", "q");
    const auto calls = guard_reach(p.guards.require("Ac"), w, {});
    CHECK(calls.ends[0] == std::vector<bool>{false, true});
    CHECK(calls.epsilon == std::vector<bool>{false, false});
    const auto returns = guard_reach(p.guards.require("Ar"), w, {});
    CHECK(returns.ends[0] == std::vector<bool>{false, false});

    Tvpa lazy = p.guards.require("Ar");
    lazy.final.push_back(lazy.initial.front());
    const auto eps = guard_reach(lazy, w, {});
    CHECK(eps.epsilon == std::vector<bool>{true, true});
    CHECK(eps.reaches(0, 0));
}

TEST_CASE("the running property on its two words") {
    const auto p = support::sample("calls.json");
    const auto& phi = p.formula("phi");
    CHECK_FALSE(evaluate_at(phi, p.guards, p.alphabet, p.word("violating"), 0));
    CHECK(evaluate_at(phi, p.guards, p.alphabet, p.word("satisfying"), 0));
    CHECK_FALSE(oracle::eval(phi, p.guards, p.alphabet, p.word("violating"), 0, 20));
    CHECK(oracle::eval(phi, p.guards, p.alphabet, p.word("satisfying"), 0, 20));
    CHECK_FALSE(evaluate_at(Formula::atom("r"), p.guards, p.alphabet, p.word("violating"), 0));
}

TEST_CASE("evaluate agrees with explicit guard runs on random formulas") {
    for (const auto& inst : corpus::formula_corpus(31, 400)) {
        const auto table = evaluate(inst.formula, inst.automata, inst.alphabet, inst.word);
        const std::size_t reach = inst.word.prefix.size() + 6 * inst.word.period.size() + 6;
        for (std::size_t k = 0; k < inst.word.classes(); ++k)
            CHECK(table.at_class(k) == oracle::eval(inst.formula, inst.automata, inst.alphabet, inst.word, k, reach));
    }
}

TEST_CASE("boolean and modal dualities") {
    for (const auto& inst : corpus::formula_corpus(32, 300)) {
        const auto f = evaluate(inst.formula, inst.automata, inst.alphabet, inst.word);
        const auto neg = evaluate(Formula::negation(inst.formula), inst.automata, inst.alphabet, inst.word);
        for (std::size_t k = 0; k < f.holds.size(); ++k) CHECK(f.holds[k] != neg.holds[k]);
        for (const auto& [id, guard] : inst.automata.entries()) {
            const auto box = evaluate(Formula::box(id, inst.formula), inst.automata, inst.alphabet, inst.word);
            const auto dual = evaluate(
                Formula::negation(Formula::diamond(id, Formula::negation(inst.formula))), inst.automata,
                inst.alphabet, inst.word);
            CHECK(box == dual);
        }
    }
}

namespace {

// No return after k ever takes the height below its level at k, counting a
// return on an empty stack as going below.
bool never_below(const PushdownAlphabet& a, const LassoWord& w, std::size_t k) {
    const auto letters = oracle::unroll(w, oracle::horizon(w, k));
    long level = 0;
    for (std::size_t j = k; j < letters.size(); ++j) {
        if (a.kind(letters[j]) == LetterClass::call) ++level;
        if (a.kind(letters[j]) == LetterClass::ret && --level < 0) return false;
    }
    return true;
}

} // namespace

TEST_CASE("the step formula rules out later unmatched returns") {
    corpus::Rng rng(33);
    std::size_t at_zero = 0, words = 0;
    for (int i = 0; i < 100; ++i) {
        const auto a = corpus::random_alphabet(rng, 4);
        const auto w = corpus::random_lasso(rng, a, 4, 3);
        const auto st = phi_st(a);
        const auto table = evaluate(st.formula, st.automata, a, w);
        for (std::size_t k = 0; k < w.prefix.size() + 2 * w.period.size(); ++k)
            CHECK(table.at_class(suffix_class(w, k)) == never_below(a, w, k));
        // Position 0 is always a step, but the formula only says so when no
        // return ever hits the empty stack.
        if (never_below(a, w, 0)) {
            ++words;
            at_zero += table.at_class(0);
        }
    }
    CHECK(at_zero == words);
}

TEST_CASE("BVPA acceptance") {
    const auto a = support::crl();
    Bvpa loop;
    loop.vps.alphabet = a;
    loop.vps.add_state("s");
    loop.vps.locals.push_back({0, 2, 0});
    loop.initial = {0};
    loop.accepting = {0};
    CHECK(bvpa_accepts(loop, lasso(a, "", "l")));
    CHECK_FALSE(bvpa_accepts(loop, lasso(a, "c", "l")));
    loop.accepting.clear();
    CHECK_FALSE(bvpa_accepts(loop, lasso(a, "", "l")));
}

TEST_CASE("BVPA acceptance agrees with a bounded run search") {
    corpus::Rng rng(34);
    for (int i = 0; i < 150; ++i) {
        const auto a = corpus::random_alphabet(rng, 3);
        Bvpa b;
        b.vps = corpus::random_system(rng, a, 3, 2);
        b.initial = {0};
        for (StateId q = 0; q < b.vps.state_count(); ++q)
            if (rng() % 2) b.accepting.push_back(q);
        for (int j = 0; j < 6; ++j) {
            const auto w = corpus::random_lasso(rng, a, 3, 3);
            const bool engine = bvpa_accepts(b, w);
            // Runs whose stack stays below 8 are all the bounded search sees.
            if (oracle::bvpa_accepts_bounded(b, w, 8)) CHECK(engine);
            // Words without calls in the period cannot need a growing stack.
            bool flat = true;
            for (auto x : w.period) flat &= a.kind(x) != LetterClass::call;
            if (flat) CHECK(engine == oracle::bvpa_accepts_bounded(b, w, 8));
        }
    }
}

TEST_CASE("the two-symbol BVPA for the call/return property") {
    const auto p = support::sample("calls.json");
    const auto& literal = p.bvpas.at("two_symbol");
    // The independent bounded search confirms that the automaton accepts both
    // words, although the property distinguishes them.
    for (const auto* id : {"violating", "satisfying"}) {
        CHECK(bvpa_accepts(literal, p.word(id)));
        CHECK(oracle::bvpa_accepts_bounded(literal, p.word(id), 8));
    }
}

namespace {

Dpsa toggler(const PushdownAlphabet& a, unsigned first, unsigned second) {
    Dpsa d;
    d.vps.alphabet = a;
    const auto s = d.vps.add_state("s"), t = d.vps.add_state("t");
    const auto A = d.vps.add_symbol("A");
    d.colors = {first, second};
    for (auto [from, to] : {std::pair{s, t}, std::pair{t, s}}) {
        d.vps.calls.push_back({from, 0, to, A});
        d.vps.returns.push_back({from, 1, A, to});
        d.vps.returns.push_back({from, 1, bottom_symbol, to});
        d.vps.locals.push_back({from, 2, to});
    }
    d.vps.normalize();
    return d;
}

} // namespace

TEST_CASE("DPSA acceptance") {
    const auto a = support::crl();
    Dpsa even;
    even.vps.alphabet = a;
    even.vps.add_state("s");
    even.vps.locals.push_back({0, 2, 0});
    even.colors = {0};
    CHECK(dpsa_accepts(even, lasso(a, "", "l")));
    even.colors = {1};
    CHECK_FALSE(dpsa_accepts(even, lasso(a, "", "l")));

    // States alternate on every letter; only steps count.
    const auto d = toggler(a, 1, 2);
    for (const auto* period : {"l", "c r", "l c r", "c r l", "c l r l", "c c r r"}) {
        const auto w = lasso(a, "", period);
        const std::size_t n = w.period.size();
        unsigned best = 0;
        for (std::size_t k = 4 * n; k < 8 * n; ++k)
            if (oracle::is_step(a, w, k)) best = std::max(best, d.colors[k % 2]);
        CHECK_MESSAGE(dpsa_accepts(d, w) == (best == 2), period);
    }
}

TEST_CASE("1-AJA acceptance") {
    const auto a = support::crl();
    OneAja loop;
    loop.alphabet = a;
    loop.add_state("s", 0);
    for (LetterId l = 0; l < a.size(); ++l) loop.delta[0][l] = PositiveBool::leaf({Direction::advance, 0, 0});
    loop.initial = {0};
    corpus::Rng rng(35);
    for (int i = 0; i < 20; ++i) CHECK(aja_accepts(loop, corpus::random_lasso(rng, a, 4, 3)));
    loop.colors = {1};
    for (int i = 0; i < 20; ++i) CHECK_FALSE(aja_accepts(loop, corpus::random_lasso(rng, a, 4, 3)));

    // Requires a call at position zero whose return exists.
    OneAja jumper;
    jumper.alphabet = a;
    const auto start = jumper.add_state("start", 1);
    const auto yes = jumper.add_state("yes", 0);
    const auto no = jumper.add_state("no", 1);
    for (LetterId l = 0; l < a.size(); ++l) {
        jumper.delta[start][l] = PositiveBool::leaf({Direction::jump, no, yes});
        jumper.delta[yes][l] = PositiveBool::leaf({Direction::advance, yes, yes});
        jumper.delta[no][l] = PositiveBool::leaf({Direction::advance, no, no});
    }
    jumper.initial = {start};
    CHECK(aja_accepts(jumper, lasso(a, "c r", "l")));
    CHECK_FALSE(aja_accepts(jumper, lasso(a, "", "c")));
    CHECK_FALSE(aja_accepts(jumper, lasso(a, "l", "c r")));
}

TEST_CASE("LTL evaluation") {
    const auto a = support::crl();
    CHECK(ltl_eval(Ltl::always(Ltl::prop("q")), a, lasso(a, "", "l")).at_class(0));
    CHECK_FALSE(ltl_eval(Ltl::eventually(Ltl::prop("p")), a, lasso(a, "r", "l")).at_class(0));
    CHECK(ltl_eval(Ltl::release(Ltl::prop("p"), Ltl::prop("q")), a, lasso(a, "", "l")).at_class(0));
    CHECK(ltl_eval(Ltl::next(Ltl::prop("p")), a, lasso(a, "l", "c")).holds == std::vector<bool>{true, true});
}

TEST_CASE("a corrected monitor for the running property") {
    const auto p = support::sample("calls.json");
    const auto monitor = oracle::call_return_monitor(p.alphabet);
    CHECK(validate(monitor).empty());
    CHECK_FALSE(bvpa_accepts(monitor, p.word("violating")));
    CHECK(bvpa_accepts(monitor, p.word("satisfying")));
    std::size_t words = 0;
    for (const auto& w : corpus::all_lassos(p.alphabet, 3, 2)) {
        ++words;
        CHECK(bvpa_accepts(monitor, w) == evaluate_at(p.formula("phi"), p.guards, p.alphabet, w, 0));
    }
    CHECK(words == 259 * 42);
}
