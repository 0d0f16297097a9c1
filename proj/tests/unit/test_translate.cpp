#include "oracles.hpp"
#include "support.hpp"

#include "vldl/corpus.hpp"
#include "vldl/logic.hpp"
#include "vldl/profile.hpp"
#include "vldl/semantics.hpp"
#include "vldl/translate.hpp"

#include <doctest.h>

using namespace vldl;
using support::lasso;

namespace {

std::vector<LassoWord> short_lassos(const PushdownAlphabet& a) {
    std::vector<LassoWord> out;
    for (LetterId x = 0; x < a.size(); ++x) {
        out.push_back({{}, {x}});
        for (LetterId y = 0; y < a.size(); ++y) out.push_back({{x}, {y}});
    }
    return out;
}

bool height_zero_return(const PushdownAlphabet& a, const LassoWord& w) {
    // A period with net pops lowers the height by at least one per turn, so
    // |u| + 2 turns reach every height the word will ever have at a return.
    const std::size_t length = w.prefix.size() + (w.prefix.size() + 2) * w.period.size();
    const auto h = oracle::heights(a, w, length);
    const auto letters = oracle::unroll(w, length);
    for (std::size_t k = 0; k < length; ++k)
        if (a.kind(letters[k]) == LetterClass::ret && h[k] == 0) return true;
    return false;
}

} // namespace

TEST_CASE("atoms") {
    const auto a = support::crl();
    const auto aja = vldl_to_aja(Formula::atom("p"), {}, a);
    const auto negated = vldl_to_aja(Formula::negation(Formula::atom("p")), {}, a);
    const auto complemented = aja_complement(aja);
    for (const auto& w : short_lassos(a)) {
        CHECK(aja_accepts(aja, w) == a.holds(w.at(0), "p"));
        CHECK(aja_accepts(negated, w) == !a.holds(w.at(0), "p"));
        CHECK(aja_accepts(complemented, w) == aja_accepts(negated, w));
    }
}

TEST_CASE("state count of a diamond over the call guard") {
    const auto p = support::sample("calls.json");
    const auto aja = vldl_to_aja(parse_formula("<Ac>p", p.guards, p.alphabet), p.guards, p.alphabet);
    std::size_t fresh = 0;
    for (const auto& name : aja.states) fresh += name.rfind("op.", 0) != 0;
    // 2k main states, k^2 (g - 1) verification states and the rejecting sink,
    // plus the accepting sink needed by verification returns without a test.
    const std::size_t k = 2, g = 2;
    CHECK(fresh == 2 * k + k * k * (g - 1) + 1 + 1);
    CHECK(aja.size() == fresh + atom_aja(p.alphabet, "p").size());
}

TEST_CASE("a guard that accepts right before a return with a pending call") {
    const auto p = support::sample("calls.json");
    const auto f = parse_formula("<Ac>p", p.guards, p.alphabet);
    const auto aja = vldl_to_aja(f, p.guards, p.alphabet);
    const auto w = lasso(p.alphabet, "c rp", "q");
    CHECK(evaluate_at(f, p.guards, p.alphabet, w, 0));
    CHECK(aja_accepts(aja, w));
    const auto v = lasso(p.alphabet, "c r", "q");
    CHECK_FALSE(evaluate_at(f, p.guards, p.alphabet, v, 0));
    CHECK_FALSE(aja_accepts(aja, v));
}

TEST_CASE("translation agrees with evaluation and stays quadratic") {
    for (const auto& inst : corpus::formula_corpus(41, 500)) {
        const auto aja = vldl_to_aja(inst.formula, inst.automata, inst.alphabet);
        CHECK(aja_accepts(aja, inst.word) == evaluate_at(inst.formula, inst.automata, inst.alphabet, inst.word, 0));
        const auto size = formula_size(inst.formula, inst.automata);
        CHECK(aja.size() <= 7 * size * size);
    }
}

TEST_CASE("translation is deterministic") {
    const auto p = support::sample("calls.json");
    const auto& phi = p.formula("phi");
    CHECK(dump_aja("phi", vldl_to_aja(phi, p.guards, p.alphabet)) == dump_aja("phi", vldl_to_aja(phi, p.guards, p.alphabet)));
}

TEST_CASE("boolean operations on 1-AJAs") {
    corpus::Rng rng(42);
    const auto a = support::crl();
    OneAja accept_all, reject_all;
    for (auto* x : {&accept_all, &reject_all}) {
        x->alphabet = a;
        x->add_state("s", x == &accept_all ? 0 : 1);
        for (LetterId l = 0; l < a.size(); ++l) x->delta[0][l] = PositiveBool::leaf({Direction::advance, 0, 0});
        x->initial = {0};
    }
    CHECK(aja_complement(accept_all).colors == std::vector<unsigned>{1});

    for (int i = 0; i < 100; ++i) {
        const auto lhs = corpus::random_aja(rng, a, 3);
        const auto rhs = corpus::random_aja(rng, a, 3);
        const auto either = aja_union(lhs, rhs);
        const auto both = aja_intersection(lhs, rhs);
        const auto morgan = aja_intersection(aja_complement(lhs), aja_complement(rhs));
        for (int j = 0; j < 5; ++j) {
            const auto w = corpus::random_lasso(rng, a, 4, 3);
            const bool x = aja_accepts(lhs, w), y = aja_accepts(rhs, w);
            CHECK(aja_accepts(either, w) == (x || y));
            CHECK(aja_accepts(both, w) == (x && y));
            CHECK(aja_accepts(aja_complement(lhs), w) == !x);
            CHECK(aja_accepts(aja_complement(aja_complement(lhs)), w) == x);
            CHECK(aja_accepts(aja_complement(either), w) == aja_accepts(morgan, w));
            CHECK(aja_accepts(aja_union(lhs, reject_all), w) == x);
            CHECK(aja_accepts(aja_intersection(lhs, accept_all), w) == x);
        }
    }
}

TEST_CASE("stair automata to formulas, trivial cases") {
    const PushdownAlphabet locals({"p"}, {{"a", {"p"}, LetterClass::local}, {"b", {}, LetterClass::local}});
    Dpsa d;
    d.vps.alphabet = locals;
    d.vps.add_state("s");
    d.vps.locals = {{0, 0, 0}, {0, 1, 0}};
    d.colors = {0};
    const auto accept = dpsa_to_vldl(d);
    d.colors = {1};
    const auto reject = dpsa_to_vldl(d);
    for (const auto& w : corpus::all_lassos(locals, 2, 2)) {
        CHECK(evaluate_at(accept.formula, accept.automata, locals, w, 0));
        CHECK_FALSE(evaluate_at(reject.formula, reject.automata, locals, w, 0));
    }
}

TEST_CASE("stair automata to formulas away from empty-stack returns") {
    corpus::Rng rng(43);
    std::size_t compared = 0;
    for (int i = 0; i < 30; ++i) {
        const auto a = corpus::random_alphabet(rng, 3);
        const auto d = corpus::random_dpsa(rng, a, 3, 2, 2);
        const auto f = dpsa_to_vldl(d);
        for (const auto& w : corpus::all_lassos(a, 3, 2)) {
            if (height_zero_return(a, w)) continue;
            ++compared;
            CHECK(evaluate_at(f.formula, f.automata, a, w, 0) == dpsa_accepts(d, w));
        }
    }
    CHECK(compared > 1000);
}

namespace {

LassoWord counter_model(const PushdownAlphabet& a, unsigned n) {
    LassoWord w;
    for (unsigned value = 0; value < (1u << n); ++value) {
        w.prefix.push_back(a.require("#"));
        for (unsigned bit = n; bit-- > 0;) w.prefix.push_back(a.require((value >> bit) & 1u ? "1" : "0"));
    }
    w.period.push_back(a.require("#"));
    return w;
}

} // namespace

TEST_CASE("binary counter formulas") {
    const auto a = counter_alphabet();
    for (unsigned n = 1; n <= 3; ++n) {
        const auto f = counter_formula(n);
        CHECK(formula_size(f.formula, f.automata) == 10 * n + 65);
        const auto model = counter_model(a, n);
        CHECK(model.prefix.size() == (n + 1) << n);
        CHECK(evaluate_at(f.formula, f.automata, a, model, 0));
    }
    // Every single-letter substitution of the n = 1 model fails.
    const auto f = counter_formula(1);
    const auto model = counter_model(a, 1);
    std::size_t mutations = 0;
    for (std::size_t i = 0; i < model.classes(); ++i)
        for (LetterId x = 0; x < a.size(); ++x) {
            LassoWord w = model;
            auto& slot = i < w.prefix.size() ? w.prefix[i] : w.period[i - w.prefix.size()];
            if (slot == x) continue;
            slot = x;
            ++mutations;
            CHECK_FALSE(evaluate_at(f.formula, f.automata, a, w, 0));
        }
    CHECK(mutations == 10);
}
