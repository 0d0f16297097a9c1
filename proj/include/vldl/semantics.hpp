#pragma once

#include "vldl/aja.hpp"
#include "vldl/automata.hpp"
#include "vldl/ltl.hpp"
#include "vldl/pushdown.hpp"
#include "vldl/word.hpp"

#include <map>
#include <vector>

namespace vldl {

// Truth value per suffix class of one lasso word.
struct SatTable {
    std::vector<bool> holds;

    bool at_class(std::size_t cls) const { return holds.at(cls); }
    bool operator==(const SatTable&) const = default;
};

// Test tables keyed by formula node identity.
using TestTables = std::map<const FormulaNode*, SatTable>;

// Pairs of classes (c, c') such that the guard accepts some infix from a
// position of class c to a later (or equal) position of class c' with every
// visited test satisfied.
struct GuardReach {
    std::vector<std::vector<bool>> ends; // [start][end], includes length-0 runs
    std::vector<bool> epsilon;           // length-0 runs only

    bool reaches(std::size_t from, std::size_t to) const { return ends.at(from).at(to); }
};

GuardReach guard_reach(const Tvpa& guard, const LassoWord& word, const TestTables& tests);

// Product of a VPS with the class ring of a word: control q * classes + c.
// `keep(q, c)` filters controls; rule labels are letters.
template <class Keep>
PushdownSystem word_product(const Vps& vps, const LassoWord& word, Keep keep);

// Memoizing evaluator for one word; tables and guard relations are cached.
class Evaluator {
public:
    Evaluator(const AutomatonTable& table, const PushdownAlphabet& alphabet, LassoWord word);

    const SatTable& table(const Formula& f);
    // Truth at one class, computing full tables only below temporal operators.
    bool at_class(const Formula& f, std::size_t cls);
    const LassoWord& word() const { return word_; }

private:
    const GuardReach& reach(const std::string& automaton);

    const AutomatonTable& automata_;
    const PushdownAlphabet& alphabet_;
    LassoWord word_;
    std::map<const FormulaNode*, SatTable> tables_;
    std::map<std::string, GuardReach> reach_;
};

SatTable evaluate(const Formula& f, const AutomatonTable& table, const PushdownAlphabet& alphabet,
                  const LassoWord& word);
bool evaluate_at(const Formula& f, const AutomatonTable& table, const PushdownAlphabet& alphabet,
                 const LassoWord& word, std::size_t position);

bool bvpa_accepts(const Bvpa& b, const LassoWord& word);
bool dpsa_accepts(const Dpsa& d, const LassoWord& word);
bool aja_accepts(const OneAja& a, const LassoWord& word);

SatTable ltl_eval(const Ltl& f, const PushdownAlphabet& alphabet, const LassoWord& word);

// ---------------------------------------------------------------------------

template <class Keep>
PushdownSystem word_product(const Vps& vps, const LassoWord& word, Keep keep) {
    const auto classes = static_cast<std::uint32_t>(word.classes());
    PushdownSystem pds;
    pds.controls = static_cast<std::uint32_t>(vps.state_count()) * classes;
    pds.symbols = static_cast<std::uint32_t>(vps.symbol_count());
    auto control = [&](StateId q, std::size_t c) { return static_cast<ControlId>(q * classes + c); };
    for (std::uint32_t c = 0; c < classes; ++c) {
        const LetterId a = word.at(c);
        const std::size_t next = word.next_class(c);
        for (const auto& r : vps.calls)
            if (r.letter == a && keep(r.from, c) && keep(r.to, next))
                pds.rules.push_back({RuleKind::push, control(r.from, c), control(r.to, next), r.push, a});
        for (const auto& r : vps.returns)
            if (r.letter == a && keep(r.from, c) && keep(r.to, next))
                pds.rules.push_back({RuleKind::pop, control(r.from, c), control(r.to, next), r.pop, a});
        for (const auto& r : vps.locals)
            if (r.letter == a && keep(r.from, c) && keep(r.to, next))
                pds.rules.push_back({RuleKind::internal, control(r.from, c), control(r.to, next), 0, a});
    }
    return pds;
}

} // namespace vldl
