#include "vldl/semantics.hpp"

#include "vldl/error.hpp"
#include "vldl/parity.hpp"
#include "vldl/profile.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace vldl {

GuardReach guard_reach(const Tvpa& guard, const LassoWord& word, const TestTables& tests) {
    const std::size_t classes = word.classes();
    const auto states = guard.vps.state_count();

    std::vector<std::vector<bool>> allowed(states, std::vector<bool>(classes, true));
    for (const auto& [q, test] : guard.tests) {
        const auto it = tests.find(test.identity());
        if (it == tests.end()) throw ContractViolation("missing test table for " + to_string(test));
        if (it->second.holds.size() != classes) throw ContractViolation("test table has the wrong size");
        for (std::size_t c = 0; c < classes; ++c) allowed[q][c] = it->second.holds[c];
    }
    auto keep = [&](StateId q, std::size_t c) { return static_cast<bool>(allowed[q][c]); };
    const PushdownSystem pds = word_product(guard.vps, word, keep);
    auto control = [&](StateId q, std::size_t c) { return static_cast<ControlId>(q * classes + c); };

    // One final state per end class, entered from any kept final control.
    PAutomaton targets(pds.controls, pds.symbols);
    std::vector<std::uint32_t> sink(classes);
    for (std::size_t c = 0; c < classes; ++c) {
        sink[c] = targets.add_state(true);
        for (StackSymbol s = 0; s < pds.symbols; ++s) targets.add_edge(sink[c], s, sink[c]);
    }
    for (StateId q : guard.final)
        for (std::size_t c = 0; c < classes; ++c)
            if (keep(q, c))
                for (StackSymbol s = 0; s < pds.symbols; ++s) targets.add_edge(control(q, c), s, sink[c]);
    const PAutomaton pre = pre_star(pds, targets);

    GuardReach reach;
    reach.ends.assign(classes, std::vector<bool>(classes, false));
    reach.epsilon.assign(classes, false);
    for (std::size_t c = 0; c < classes; ++c) {
        for (StateId q : guard.initial) {
            if (!keep(q, c)) continue;
            if (guard.is_final(q)) reach.epsilon[c] = true;
            for (std::size_t end = 0; end < classes; ++end)
                if (pre.has_edge(control(q, c), bottom_symbol, sink[end])) reach.ends[c][end] = true;
        }
    }
    return reach;
}

Evaluator::Evaluator(const AutomatonTable& table, const PushdownAlphabet& alphabet, LassoWord word)
    : automata_(table), alphabet_(alphabet), word_(std::move(word)) {
    check_word(alphabet_, word_);
}

const GuardReach& Evaluator::reach(const std::string& automaton) {
    if (auto it = reach_.find(automaton); it != reach_.end()) return it->second;
    const Tvpa& guard = automata_.require(automaton);
    TestTables tests;
    for (const auto& [q, test] : guard.tests) tests.emplace(test.identity(), table(test));
    return reach_.emplace(automaton, guard_reach(guard, word_, tests)).first->second;
}

const SatTable& Evaluator::table(const Formula& f) {
    if (auto it = tables_.find(f.identity()); it != tables_.end()) return it->second;
    const std::size_t classes = word_.classes();
    SatTable out;
    out.holds.resize(classes);
    switch (f.kind()) {
    case FormulaKind::atom:
        for (std::size_t c = 0; c < classes; ++c) out.holds[c] = alphabet_.holds(word_.at(c), f.name());
        break;
    case FormulaKind::negation: {
        const auto& inner = table(f.operand());
        for (std::size_t c = 0; c < classes; ++c) out.holds[c] = !inner.holds[c];
        break;
    }
    case FormulaKind::conjunction:
    case FormulaKind::disjunction: {
        const auto lhs = table(f.lhs());
        const auto& rhs = table(f.rhs());
        const bool both = f.kind() == FormulaKind::conjunction;
        for (std::size_t c = 0; c < classes; ++c)
            out.holds[c] = both ? lhs.holds[c] && rhs.holds[c] : lhs.holds[c] || rhs.holds[c];
        break;
    }
    case FormulaKind::diamond:
    case FormulaKind::box: {
        const auto inner = table(f.operand());
        const auto& r = reach(f.name());
        const bool some = f.kind() == FormulaKind::diamond;
        for (std::size_t c = 0; c < classes; ++c) {
            bool value = !some;
            for (std::size_t end = 0; end < classes; ++end) {
                if (!r.ends[c][end]) continue;
                if (some && inner.holds[end]) value = true;
                if (!some && !inner.holds[end]) value = false;
            }
            out.holds[c] = value;
        }
        break;
    }
    }
    return tables_.emplace(f.identity(), std::move(out)).first->second;
}

bool Evaluator::at_class(const Formula& f, std::size_t cls) {
    switch (f.kind()) {
    case FormulaKind::atom: return alphabet_.holds(word_.at(cls), f.name());
    case FormulaKind::negation: return !at_class(f.operand(), cls);
    case FormulaKind::conjunction: return at_class(f.lhs(), cls) && at_class(f.rhs(), cls);
    case FormulaKind::disjunction: return at_class(f.lhs(), cls) || at_class(f.rhs(), cls);
    case FormulaKind::diamond:
    case FormulaKind::box: return table(f).at_class(cls);
    }
    return false;
}

SatTable evaluate(const Formula& f, const AutomatonTable& table, const PushdownAlphabet& alphabet,
                  const LassoWord& word) {
    check_references(f, table);
    Evaluator e(table, alphabet, word);
    return e.table(f);
}

bool evaluate_at(const Formula& f, const AutomatonTable& table, const PushdownAlphabet& alphabet,
                 const LassoWord& word, std::size_t position) {
    check_references(f, table);
    Evaluator e(table, alphabet, word);
    return e.at_class(f, suffix_class(word, position));
}

bool bvpa_accepts(const Bvpa& b, const LassoWord& word) {
    check_word(b.vps.alphabet, word);
    const auto classes = word.classes();
    const PushdownSystem pds = word_product(b.vps, word, [](StateId, std::size_t) { return true; });
    std::vector<bool> accepting(pds.controls, false);
    for (StateId q : b.accepting)
        for (std::size_t c = 0; c < classes; ++c) accepting[q * classes + c] = true;
    return std::any_of(b.initial.begin(), b.initial.end(), [&](StateId q) {
        return buchi_nonempty(pds, PdsConfiguration{static_cast<ControlId>(q * classes), {0}}, accepting);
    });
}

bool dpsa_accepts(const Dpsa& d, const LassoWord& word) {
    const auto& alphabet = d.vps.alphabet;
    const StackProfile profile = build_profile(alphabet, word);
    const std::size_t classes = word.classes();
    std::vector<std::optional<std::size_t>> seen(d.vps.state_count() * classes);
    std::vector<unsigned> step_colors;

    StateId state = d.initial;
    std::vector<SymbolId> stack{bottom_symbol}; // top at the back
    const std::size_t limit = profile.threshold() + profile.period() * (seen.size() + 2) + 1;
    for (std::size_t p = 0; p <= limit; ++p) {
        if (profile.is_step(p)) {
            auto& slot = seen[state * classes + suffix_class(word, p)];
            if (slot) {
                const unsigned top = *std::max_element(step_colors.begin() + *slot, step_colors.end());
                return top % 2 == 0;
            }
            slot = step_colors.size();
            step_colors.push_back(d.colors.at(state));
            stack.assign(1, bottom_symbol);
        }
        const LetterId a = word.at(p);
        std::optional<StateId> next;
        switch (alphabet.kind(a)) {
        case LetterClass::call:
            for (const auto& r : d.vps.calls)
                if (r.from == state && r.letter == a) {
                    next = r.to;
                    stack.push_back(r.push);
                    break;
                }
            break;
        case LetterClass::ret:
            for (const auto& r : d.vps.returns)
                if (r.from == state && r.letter == a && r.pop == stack.back()) {
                    next = r.to;
                    if (stack.size() > 1) stack.pop_back();
                    break;
                }
            break;
        case LetterClass::local:
            for (const auto& r : d.vps.locals)
                if (r.from == state && r.letter == a) {
                    next = r.to;
                    break;
                }
            break;
        }
        if (!next) return false;
        state = *next;
    }
    throw std::logic_error("stair run did not revisit a step configuration");
}

bool aja_accepts(const OneAja& a, const LassoWord& word) {
    const StackProfile profile = build_profile(a.alphabet, word);
    const std::size_t classes = word.classes();

    std::vector<std::optional<std::size_t>> jump_class(classes);
    for (std::size_t c = 0; c < classes; ++c)
        if (profile.is_call(c))
            if (auto m = profile.matching(c)) jump_class[c] = suffix_class(word, *m + 1);

    ParityGame game;
    auto state_node = [&](StateId q, std::size_t c) { return static_cast<std::uint32_t>(q * classes + c); };
    for (StateId q = 0; q < a.size(); ++q)
        for (std::size_t c = 0; c < classes; ++c) game.add_node(Player::exists, a.colors.at(q) + 2);

    std::function<std::uint32_t(const PositiveBool&, std::size_t)> build = [&](const PositiveBool& f,
                                                                                std::size_t c) -> std::uint32_t {
        if (f.kind() == PositiveBool::Kind::command) {
            const Command& cmd = f.command();
            if (cmd.direction == Direction::jump && jump_class[c]) return state_node(cmd.jump_to, *jump_class[c]);
            return state_node(cmd.advance_to, word.next_class(c));
        }
        const auto node = game.add_node(f.kind() == PositiveBool::Kind::any ? Player::exists : Player::all, 0);
        for (const auto& child : f.children()) {
            const auto target = build(child, c);
            game.add_edge(node, target);
        }
        return node;
    };
    for (StateId q = 0; q < a.size(); ++q)
        for (std::size_t c = 0; c < classes; ++c) {
            const auto target = build(a.delta.at(q).at(word.at(c)), c);
            game.add_edge(state_node(q, c), target);
        }
    game.close_terminals();
    const ParitySolution solution = solve_parity(game);
    return std::any_of(a.initial.begin(), a.initial.end(),
                       [&](StateId q) { return static_cast<bool>(solution.exists_wins[state_node(q, 0)]); });
}

SatTable ltl_eval(const Ltl& f, const PushdownAlphabet& alphabet, const LassoWord& word) {
    const std::size_t classes = word.classes();
    SatTable out;
    out.holds.assign(classes, false);
    auto& h = out.holds;
    auto arg = [&](std::size_t i) { return ltl_eval(f.args.at(i), alphabet, word).holds; };
    // Least or greatest fixpoint of value(c) = now(c) || (keep(c) && value(next c)).
    auto fixpoint = [&](const std::vector<bool>& now, const std::vector<bool>& keep, bool greatest) {
        std::vector<bool> value(classes, greatest);
        for (std::size_t round = 0; round <= classes; ++round)
            for (std::size_t c = classes; c-- > 0;)
                value[c] = now[c] || (keep[c] && value[word.next_class(c)]);
        return value;
    };
    switch (f.kind) {
    case LtlKind::truth: h.assign(classes, true); break;
    case LtlKind::falsity: break;
    case LtlKind::atom:
        for (std::size_t c = 0; c < classes; ++c) h[c] = alphabet.holds(word.at(c), f.atom);
        break;
    case LtlKind::negation: {
        const auto a = arg(0);
        for (std::size_t c = 0; c < classes; ++c) h[c] = !a[c];
        break;
    }
    case LtlKind::conjunction:
    case LtlKind::disjunction: {
        const auto a = arg(0), b = arg(1);
        for (std::size_t c = 0; c < classes; ++c)
            h[c] = f.kind == LtlKind::conjunction ? a[c] && b[c] : a[c] || b[c];
        break;
    }
    case LtlKind::next: {
        const auto a = arg(0);
        for (std::size_t c = 0; c < classes; ++c) h[c] = a[word.next_class(c)];
        break;
    }
    case LtlKind::until: h = fixpoint(arg(1), arg(0), false); break;
    case LtlKind::eventually: h = fixpoint(arg(0), std::vector<bool>(classes, true), false); break;
    case LtlKind::always: {
        // G a = not F not a
        auto a = arg(0);
        a.flip();
        h = fixpoint(a, std::vector<bool>(classes, true), false);
        h.flip();
        break;
    }
    case LtlKind::release: {
        // a R b = not (not a U not b)
        auto a = arg(0), b = arg(1);
        a.flip();
        b.flip();
        h = fixpoint(b, a, false);
        h.flip();
        break;
    }
    }
    return out;
}

} // namespace vldl
