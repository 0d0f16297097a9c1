#include "vldl/analysis.hpp"

#include "vldl/error.hpp"
#include "vldl/pushdown.hpp"
#include "vldl/semantics.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace vldl {

std::string_view to_string(Outcome o) {
    switch (o) {
    case Outcome::witness_found: return "witness";
    case Outcome::exhausted_bounds: return "exhausted";
    case Outcome::holds: return "holds";
    case Outcome::counterexample: return "counterexample";
    }
    return "?";
}

void enumerate_lassos(const PushdownAlphabet& alphabet, const SearchBounds& bounds,
                      const std::function<bool(const LassoWord&)>& visit) {
    std::vector<LetterId> letters;
    if (bounds.letters) {
        letters = *bounds.letters;
    } else {
        letters.resize(alphabet.size());
        std::iota(letters.begin(), letters.end(), LetterId{0});
    }
    for (LetterId l : letters)
        if (l >= alphabet.size()) throw InputError("letter restriction out of range");
    if (letters.empty() || bounds.max_period == 0) return;
    const std::size_t k = letters.size();

    // Odometer over digit vectors; digits index into `letters`.
    auto advance = [&](std::vector<std::size_t>& digits) {
        std::size_t i = digits.size();
        while (i > 0 && digits[i - 1] + 1 == k) digits[--i] = 0;
        if (i == 0) return false;
        ++digits[i - 1];
        return true;
    };
    LassoWord w;
    for (unsigned total = 1; total <= bounds.max_prefix + bounds.max_period; ++total)
        for (unsigned v = 1; v <= std::min(total, bounds.max_period); ++v) {
            const unsigned u = total - v;
            if (u > bounds.max_prefix) continue;
            std::vector<std::size_t> du(u, 0);
            w.prefix.resize(u);
            w.period.resize(v);
            do {
                for (unsigned i = 0; i < u; ++i) w.prefix[i] = letters[du[i]];
                std::vector<std::size_t> dv(v, 0);
                do {
                    for (unsigned i = 0; i < v; ++i) w.period[i] = letters[dv[i]];
                    if (visit(w)) return;
                } while (advance(dv));
            } while (advance(du));
        }
}

Verdict bounded_sat(const Formula& f, const AutomatonTable& table, const PushdownAlphabet& alphabet,
                    const SearchBounds& bounds) {
    check_references(f, table);
    Verdict verdict;
    enumerate_lassos(alphabet, bounds, [&](const LassoWord& w) {
        ++verdict.examined;
        Evaluator e(table, alphabet, w);
        if (!e.at_class(f, 0)) return false;
        verdict.outcome = Outcome::witness_found;
        verdict.word = w;
        return true;
    });
    // Independent re-check with a fresh evaluator over full tables.
    if (verdict.word && !evaluate(f, table, alphabet, *verdict.word).at_class(0))
        throw std::logic_error("satisfiability witness failed re-validation");
    return verdict;
}

Verdict bounded_validity(const Formula& f, const AutomatonTable& table, const PushdownAlphabet& alphabet,
                         const SearchBounds& bounds) {
    Verdict v = bounded_sat(Formula::negation(f), table, alphabet, bounds);
    v.outcome = v.word ? Outcome::counterexample : Outcome::holds;
    return v;
}

namespace {

std::set<Configuration> step_all(const Vps& system, const std::set<Configuration>& from, LetterId a) {
    std::set<Configuration> out;
    for (const auto& c : from)
        for (auto& next : config_successors(system, c, a)) out.insert(std::move(next));
    return out;
}

// Period never drops below its entry height and ends at least as high.
bool non_shrinking(const PushdownAlphabet& alphabet, const FiniteWord& v) {
    long h = 0;
    for (LetterId a : v) {
        if (alphabet.kind(a) == LetterClass::call) ++h;
        if (alphabet.kind(a) == LetterClass::ret && --h < 0) return false;
    }
    return true;
}

} // namespace

bool is_repeatable_trace(const Vps& system, StateId q0, const LassoWord& word) {
    if (q0 >= system.state_count()) throw InputError("unknown start state");
    check_word(system.alphabet, word);
    std::set<Configuration> current{Configuration{q0, {bottom_symbol}}};
    for (LetterId a : word.prefix) {
        current = step_all(system, current, a);
        if (current.empty()) return false;
    }
    const bool loose = non_shrinking(system.alphabet, word.period);
    for (const auto& entry : current) {
        std::set<Configuration> run{entry};
        for (LetterId a : word.period) {
            run = step_all(system, run, a);
            if (run.empty()) break;
        }
        for (const auto& exit : run) {
            if (exit == entry) return true;
            if (loose && exit.state == entry.state) return true;
        }
    }
    return false;
}

Verdict bounded_refute(const Vps& system, StateId q0, const Formula& f, const AutomatonTable& table,
                       const SearchBounds& bounds) {
    if (q0 >= system.state_count()) throw InputError("unknown start state");
    check_references(f, table);
    Verdict verdict;
    enumerate_lassos(system.alphabet, bounds, [&](const LassoWord& w) {
        if (!is_repeatable_trace(system, q0, w)) return false;
        ++verdict.examined;
        Evaluator e(table, system.alphabet, w);
        if (e.at_class(f, 0)) return false;
        verdict.outcome = Outcome::counterexample;
        verdict.word = w;
        return true;
    });
    if (verdict.word && evaluate(f, table, system.alphabet, *verdict.word).at_class(0))
        throw std::logic_error("counterexample failed re-validation");
    return verdict;
}

Verdict intersect_empty(const Vps& system, StateId q0, const Bvpa& bad) {
    if (!(system.alphabet == bad.vps.alphabet)) throw InputError("system and automaton alphabets differ");
    if (q0 >= system.state_count()) throw InputError("unknown start state");
    const auto bs = static_cast<std::uint32_t>(bad.vps.state_count());
    const auto bg = static_cast<std::uint32_t>(bad.vps.symbol_count());
    auto control = [&](StateId s, StateId b) { return static_cast<ControlId>(s * bs + b); };
    auto symbol = [&](SymbolId s, SymbolId b) { return static_cast<StackSymbol>(s * bg + b); };

    PushdownSystem pds;
    pds.controls = static_cast<std::uint32_t>(system.state_count()) * bs;
    pds.symbols = static_cast<std::uint32_t>(system.symbol_count()) * bg;
    for (const auto& x : system.calls)
        for (const auto& y : bad.vps.calls)
            if (x.letter == y.letter)
                pds.rules.push_back({RuleKind::push, control(x.from, y.from), control(x.to, y.to), symbol(x.push, y.push), x.letter});
    for (const auto& x : system.returns)
        for (const auto& y : bad.vps.returns)
            // Stacks move in lock step, so bottom markers coincide.
            if (x.letter == y.letter && (x.pop == bottom_symbol) == (y.pop == bottom_symbol))
                pds.rules.push_back({RuleKind::pop, control(x.from, y.from), control(x.to, y.to), symbol(x.pop, y.pop), x.letter});
    for (const auto& x : system.locals)
        for (const auto& y : bad.vps.locals)
            if (x.letter == y.letter)
                pds.rules.push_back({RuleKind::internal, control(x.from, y.from), control(x.to, y.to), 0, x.letter});

    std::vector<bool> accepting(pds.controls, false);
    for (StateId s = 0; s < system.state_count(); ++s)
        for (StateId b : bad.accepting) accepting[control(s, b)] = true;

    Verdict verdict;
    verdict.outcome = Outcome::holds;
    for (StateId b : bad.initial) {
        const PdsConfiguration start{control(q0, b), {0}};
        if (!buchi_nonempty(pds, start, accepting)) continue;
        const auto lasso = buchi_witness(pds, start, accepting);
        if (!lasso) throw std::logic_error("nonempty product without a witness");
        LassoWord w;
        for (auto r : lasso->prefix) w.prefix.push_back(pds.rules[r].label);
        for (auto r : lasso->cycle) w.period.push_back(pds.rules[r].label);
        if (!bvpa_accepts(bad, w)) throw std::logic_error("witness rejected by the automaton");
        if (!is_repeatable_trace(system, q0, w)) throw std::logic_error("witness is not a trace of the system");
        verdict.outcome = Outcome::counterexample;
        verdict.word = std::move(w);
        verdict.examined = 1;
        return verdict;
    }
    return verdict;
}

} // namespace vldl
