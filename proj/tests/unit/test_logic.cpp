#include "oracles.hpp"
#include "support.hpp"

#include "vldl/corpus.hpp"
#include "vldl/error.hpp"
#include "vldl/logic.hpp"
#include "vldl/ltl.hpp"
#include "vldl/semantics.hpp"

#include <doctest.h>

using namespace vldl;
using support::lasso;

namespace {

Formula parse(const Project& p, const std::string& text) { return parse_formula(text, p.guards, p.alphabet); }

} // namespace

TEST_CASE("parsing the running property") {
    const auto p = support::sample("calls.json");
    const auto f = parse(p, "[Ac](p -> <Ar> p)");
    const auto expected = Formula::box(
        "Ac", Formula::disjunction(Formula::negation(Formula::atom("p")), Formula::diamond("Ar", Formula::atom("p"))));
    CHECK(f == expected);
    CHECK(parse(p, "tt") == Formula::disjunction(Formula::atom("c"), Formula::negation(Formula::atom("c"))));
    CHECK(parse(p, "ff") == Formula::falsity("c"));
    CHECK_THROWS_AS(parse(p, "<Missing>p"), InputError);
    CHECK_THROWS_AS(parse(p, "p &&"), InputError);
    CHECK_THROWS_AS(parse(p, "nonexistent"), InputError);
}

TEST_CASE("printing round-trips through the parser") {
    corpus::Rng rng(5);
    for (int i = 0; i < 300; ++i) {
        const auto alphabet = corpus::random_alphabet(rng, 4);
        AutomatonTable table;
        const auto f = corpus::random_formula(rng, alphabet, table, 12);
        const auto again = parse_formula(to_string(f), table, alphabet);
        CHECK(again == f);
        CHECK(to_string(again) == to_string(f));
    }
}

TEST_CASE("negation normal form") {
    const auto p = support::sample("calls.json");
    CHECK(nnf(parse(p, "!([Ac]p)")) == parse(p, "<Ac>!p"));
    CHECK(nnf(parse(p, "!!p")) == parse(p, "p"));
    CHECK(nnf(parse(p, "!(p && <Ac>q)")) == parse(p, "!p || [Ac]!q"));

    corpus::Rng rng(6);
    for (int i = 0; i < 200; ++i) {
        const auto alphabet = corpus::random_alphabet(rng, 4);
        AutomatonTable table;
        const auto f = corpus::random_formula(rng, alphabet, table, 12);
        const auto w = corpus::random_lasso(rng, alphabet, 4, 3);
        CHECK(evaluate(nnf(f), table, alphabet, w) == evaluate(f, table, alphabet, w));
    }
}

TEST_CASE("formula size counts distinct subformulas plus guard states") {
    const auto p = support::sample("calls.json");
    CHECK(formula_size(Formula::atom("p"), AutomatonTable{}) == 1);
    const auto phi = parse(p, "[Ac](p -> <Ar> p)");
    // box, or, not, p, diamond: five subformulas, plus two states per guard.
    CHECK(subformulas(phi, p.guards).size() == 5);
    CHECK(formula_size(phi, p.guards) == 9);

    // A test formula contributes its own size.
    AutomatonTable table = p.guards;
    Tvpa tested = p.guards.require("Ar");
    tested.tests[0] = parse(p, "q && r");
    table.add("Aq", tested);
    const auto with_test = parse_formula("<Aq>p", table, p.alphabet);
    CHECK(formula_size(with_test, table) == 2 + 2 + formula_size(parse(p, "q && r"), table));
}

TEST_CASE("cyclic test references are rejected") {
    const auto p = support::sample("calls.json");
    AutomatonTable table;
    Tvpa loop = p.guards.require("Ac");
    loop.tests[0] = Formula::diamond("Loop", Formula::atom("p"));
    table.add("Loop", loop);
    CHECK_THROWS_AS(check_references(Formula::diamond("Loop", Formula::atom("p")), table), InputError);
}

TEST_CASE("LTL embedding on hand-picked words") {
    const PushdownAlphabet a({"p", "q"}, {{"p", {"p"}, LetterClass::local},
                                          {"q", {"q"}, LetterClass::local},
                                          {"e", {}, LetterClass::local}});
    const auto until = Ltl::until(Ltl::prop("p"), Ltl::prop("q"));
    const auto embedded = ltl_to_vldl(until, a);
    const auto yes = lasso(a, "p p q", "e");
    const auto no = lasso(a, "", "p");
    CHECK(ltl_eval(until, a, yes).at_class(0));
    CHECK_FALSE(ltl_eval(until, a, no).at_class(0));
    CHECK(evaluate_at(embedded.formula, embedded.automata, a, yes, 0));
    CHECK_FALSE(evaluate_at(embedded.formula, embedded.automata, a, no, 0));
    CHECK(ltl_eval(Ltl::always(Ltl::prop("p")), a, no).at_class(0));
    CHECK_FALSE(ltl_eval(Ltl::eventually(Ltl::prop("q")), a, no).at_class(0));
}

TEST_CASE("LTL embedding agrees with direct LTL evaluation") {
    corpus::Rng rng(8);
    for (int i = 0; i < 200; ++i) {
        const auto a = corpus::random_alphabet(rng, 4);
        const auto f = corpus::random_ltl(rng, a.propositions(), 4);
        const auto embedded = ltl_to_vldl(f, a);
        CHECK(formula_size(embedded.formula, embedded.automata) <= 8 * ltl_size(f));
        for (int j = 0; j < 5; ++j) {
            const auto w = corpus::random_lasso(rng, a, 4, 3);
            CHECK(evaluate(embedded.formula, embedded.automata, a, w) == ltl_eval(f, a, w));
        }
    }
}

TEST_CASE("next and eventually through the embedding") {
    corpus::Rng rng(9);
    for (int i = 0; i < 100; ++i) {
        const auto a = corpus::random_alphabet(rng, 4);
        const auto w = corpus::random_lasso(rng, a, 4, 3);
        const auto next = ltl_to_vldl(Ltl::next(Ltl::prop("p")), a);
        const auto until = ltl_to_vldl(Ltl::until(Ltl::truth(), Ltl::prop("p")), a);
        CHECK(evaluate(next.formula, next.automata, a, w) == ltl_eval(Ltl::next(Ltl::prop("p")), a, w));
        CHECK(evaluate(until.formula, until.automata, a, w) == ltl_eval(Ltl::eventually(Ltl::prop("p")), a, w));
    }
}

TEST_CASE("regular guards compile to stack-blind automata") {
    const PushdownAlphabet a({"a", "p"}, {{"a", {"a"}, LetterClass::local},
                                          {"p", {"p"}, LetterClass::local},
                                          {"e", {}, LetterClass::local},
                                          {"c", {}, LetterClass::call}});
    const auto star_a = Regex::star(Regex::letter({{"a"}, {}}));
    const auto f = Ldl::diamond(star_a, Ldl::prop("p"));
    const auto embedded = ldl_to_vldl(f, a);
    CHECK(evaluate_at(embedded.formula, embedded.automata, a, lasso(a, "a a p", "e"), 0));
    CHECK_FALSE(evaluate_at(embedded.formula, embedded.automata, a, lasso(a, "a e p", "e"), 0));

    // An epsilon-only guard leaves the operand unchanged.
    const auto eps = ldl_to_vldl(Ldl::diamond(Regex::epsilon(), Ldl::prop("p")), a);
    const auto atom = ldl_to_vldl(Ldl::prop("p"), a);
    corpus::Rng rng(10);
    for (int i = 0; i < 100; ++i) {
        const auto w = corpus::random_lasso(rng, a, 4, 3);
        CHECK(evaluate(eps.formula, eps.automata, a, w) == evaluate(atom.formula, atom.automata, a, w));
        // [r]ff against not <r>tt
        const auto box = ldl_to_vldl(Ldl::box(star_a, Ldl::falsity()), a);
        const auto dia = ldl_to_vldl(Ldl::negation(Ldl::diamond(star_a, Ldl::truth())), a);
        CHECK(evaluate(box.formula, box.automata, a, w) == evaluate(dia.formula, dia.automata, a, w));
    }
    CHECK_THROWS_AS(ldl_to_vldl(Ldl::diamond(Regex::test_of(Ldl::prop("p")), Ldl::truth()), a), Unsupported);
}
