#include "vldl/difftest.hpp"

#include "vldl/logic.hpp"
#include "vldl/semantics.hpp"
#include "vldl/translate.hpp"

namespace vldl::difftest {

namespace {

Project make_instance(const PushdownAlphabet& alphabet, const AutomatonTable& guards, const Formula& f,
                      const LassoWord& w) {
    Project p;
    p.alphabet = alphabet;
    p.guards = guards;
    p.formula_text["phi"] = to_string(f);
    p.formulas.emplace("phi", f);
    p.words.emplace("w", w);
    return p;
}

void record(SuiteReport& report, Failure failure) {
    ++report.failed;
    if (!report.smallest || failure.weight < report.smallest->weight) report.smallest = std::move(failure);
}

std::size_t word_length(const LassoWord& w) { return w.prefix.size() + w.period.size(); }

} // namespace

PushdownAlphabet three_letter_alphabet(corpus::Rng& rng) {
    std::bernoulli_distribution coin(0.5);
    auto props = [&] {
        std::vector<std::string> out;
        if (coin(rng)) out.push_back("p");
        if (coin(rng)) out.push_back("q");
        return out;
    };
    std::vector<Letter> letters{{"c", props(), LetterClass::call},
                                {"r", props(), LetterClass::ret},
                                {"l", props(), LetterClass::local}};
    return PushdownAlphabet({"p", "q"}, std::move(letters));
}

SuiteReport aja_translation(std::uint64_t seed, unsigned count, unsigned max_size) {
    SuiteReport report{"translation", 0, 0, std::nullopt};
    for (const auto& inst : corpus::formula_corpus(seed, count, max_size)) {
        ++report.checked;
        const bool expected = evaluate_at(inst.formula, inst.automata, inst.alphabet, inst.word, 0);
        const bool actual = aja_accepts(vldl_to_aja(inst.formula, inst.automata, inst.alphabet), inst.word);
        if (expected == actual) continue;
        record(report, {make_instance(inst.alphabet, inst.automata, inst.formula, inst.word),
                        "evaluate says " + std::string(expected ? "true" : "false") + ", the 1-AJA disagrees",
                        formula_size(inst.formula, inst.automata) + word_length(inst.word)});
    }
    return report;
}

SuiteReport stair_translation(std::uint64_t seed, unsigned count, unsigned lassos) {
    SuiteReport report{"stairs", 0, 0, std::nullopt};
    corpus::Rng rng(seed);
    for (unsigned i = 0; i < count; ++i) {
        const auto alphabet = three_letter_alphabet(rng);
        const Dpsa d = corpus::random_dpsa(rng, alphabet, 3, 2, 2);
        const Property prop = dpsa_to_vldl(d);
        for (unsigned j = 0; j < lassos; ++j) {
            const auto w = corpus::random_lasso(rng, alphabet, 4, 3);
            ++report.checked;
            const bool expected = dpsa_accepts(d, w);
            const bool actual = evaluate_at(prop.formula, prop.automata, alphabet, w, 0);
            if (expected == actual) continue;
            Project p = make_instance(alphabet, prop.automata, prop.formula, w);
            p.dpsas.emplace("d", d);
            record(report, {std::move(p),
                            "the DPSA " + std::string(expected ? "accepts" : "rejects") +
                                ", its translation disagrees",
                            d.vps.state_count() + word_length(w)});
        }
    }
    return report;
}

SuiteReport ltl_embedding(std::uint64_t seed, unsigned count, unsigned lassos, unsigned max_depth) {
    SuiteReport report{"ltl", 0, 0, std::nullopt};
    corpus::Rng rng(seed);
    for (unsigned i = 0; i < count; ++i) {
        const auto alphabet = corpus::random_alphabet(rng, 4);
        const Ltl f = corpus::random_ltl(rng, alphabet.propositions(), max_depth);
        const Property prop = ltl_to_vldl(f, alphabet);
        for (unsigned j = 0; j < lassos; ++j) {
            const auto w = corpus::random_lasso(rng, alphabet, 4, 3);
            ++report.checked;
            const SatTable expected = ltl_eval(f, alphabet, w);
            const SatTable actual = evaluate(prop.formula, prop.automata, alphabet, w);
            if (expected == actual) continue;
            record(report, {make_instance(alphabet, prop.automata, prop.formula, w),
                            "LTL source: " + to_string(f), ltl_size(f) + word_length(w)});
        }
    }
    return report;
}

} // namespace vldl::difftest
