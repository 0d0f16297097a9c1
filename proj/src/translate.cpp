#include "vldl/translate.hpp"

#include "vldl/error.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace vldl {

std::string state_name(const AjaStateTag& tag, const Vps& guard) {
    struct Render {
        const Vps& vps;
        std::string operator()(const MainTag& t) const {
            return "main(" + vps.states.at(t.state) + "," + (t.flag ? "1" : "0") + ")";
        }
        std::string operator()(const VerifyTag& t) const {
            return "ver(" + vps.states.at(t.state) + "," + vps.states.at(t.target) + "," +
                   vps.symbols.at(t.symbol) + ")";
        }
        std::string operator()(const SinkTag& t) const { return t.accepting ? "acc" : "rej"; }
        std::string operator()(const ImportedTag& t) const { return t.origin + "." + t.state; }
    };
    return std::visit(Render{guard}, tag);
}

namespace {

Command advance(StateId to) { return {Direction::advance, to, to}; }

// Appends all states of `from`; returns the offset of its first state.
StateId import_into(OneAja& into, const OneAja& from, const std::string& origin) {
    if (!(into.alphabet == from.alphabet)) throw ContractViolation("1-AJA alphabet mismatch");
    const auto offset = static_cast<StateId>(into.size());
    for (StateId q = 0; q < from.size(); ++q)
        into.add_state(state_name(ImportedTag{origin, from.states[q]}, Vps{}), from.colors.at(q));
    for (StateId q = 0; q < from.size(); ++q)
        for (LetterId a = 0; a < from.alphabet.size(); ++a)
            into.delta[offset + q][a] = from.delta[q][a].shifted(offset);
    return offset;
}

// Disjunction of the initial moves of an imported automaton on `letter`.
PositiveBool initial_moves(const OneAja& a, StateId offset, LetterId letter) {
    std::vector<PositiveBool> parts;
    for (StateId q : a.initial) parts.push_back(a.delta.at(q).at(letter).shifted(offset));
    return PositiveBool::any_of(std::move(parts));
}

OneAja empty_like(const PushdownAlphabet& alphabet) {
    OneAja out;
    out.alphabet = alphabet;
    return out;
}

} // namespace

OneAja atom_aja(const PushdownAlphabet& alphabet, const std::string& proposition) {
    if (!alphabet.has_proposition(proposition)) throw InputError("unknown proposition '" + proposition + "'");
    OneAja a = empty_like(alphabet);
    const auto probe = a.add_state("probe", 1);
    const auto yes = a.add_state("yes", 2);
    const auto no = a.add_state("no", 1);
    for (LetterId l = 0; l < alphabet.size(); ++l) {
        a.delta[probe][l] = PositiveBool::leaf(advance(alphabet.holds(l, proposition) ? yes : no));
        a.delta[yes][l] = PositiveBool::leaf(advance(yes));
        a.delta[no][l] = PositiveBool::leaf(advance(no));
    }
    a.initial = {probe};
    return a;
}

OneAja aja_union(const OneAja& lhs, const OneAja& rhs) {
    OneAja out = empty_like(lhs.alphabet);
    const auto left = import_into(out, lhs, "l");
    const auto right = import_into(out, rhs, "r");
    for (StateId q : lhs.initial) out.initial.push_back(left + q);
    for (StateId q : rhs.initial) out.initial.push_back(right + q);
    return out;
}

OneAja aja_intersection(const OneAja& lhs, const OneAja& rhs) {
    OneAja out = empty_like(lhs.alphabet);
    const auto root = out.add_state("and", 1);
    const auto left = import_into(out, lhs, "l");
    const auto right = import_into(out, rhs, "r");
    for (LetterId a = 0; a < out.alphabet.size(); ++a)
        out.delta[root][a] = PositiveBool::all_of({initial_moves(lhs, left, a), initial_moves(rhs, right, a)});
    out.initial = {root};
    return out;
}

OneAja aja_complement(const OneAja& a) {
    OneAja out;
    if (a.initial.size() == 1) {
        out = a;
    } else {
        out = empty_like(a.alphabet);
        const auto root = out.add_state("entry", 0);
        const auto offset = import_into(out, a, "c");
        for (LetterId l = 0; l < out.alphabet.size(); ++l) {
            if (a.initial.empty()) {
                // No initial state: the language is empty, so the entry accepts everything.
                out.delta[root][l] = PositiveBool::leaf(advance(root));
                continue;
            }
            out.delta[root][l] = initial_moves(a, offset, l);
        }
        if (a.initial.empty()) out.colors[root] = 1; // becomes 2 below: accept-all sink
        out.initial = {root};
    }
    for (auto& row : out.delta)
        for (auto& f : row) f = f.dual();
    for (auto& c : out.colors) c += 1;
    return out;
}

OneAja diamond_aja(const Tvpa& guard, const OneAja& operand, const std::map<std::string, OneAja>& tests) {
    const Vps& vps = guard.vps;
    const auto& alphabet = operand.alphabet;
    if (!(vps.alphabet == alphabet)) throw ContractViolation("guard alphabet differs from operand alphabet");
    const auto k = static_cast<StateId>(vps.state_count());
    const auto g = static_cast<SymbolId>(vps.symbol_count());

    // A verification copy that pops correctly at a state without a test must
    // simply accept; that needs an accepting sink.
    const bool need_accept = std::any_of(vps.returns.begin(), vps.returns.end(), [&](const ReturnRule& r) {
        return r.pop != bottom_symbol && guard.test(r.from) == nullptr;
    });

    OneAja out = empty_like(alphabet);
    auto main_state = [&](StateId q, bool flag) { return static_cast<StateId>(2 * q + (flag ? 1 : 0)); };
    auto verify_state = [&](StateId q, StateId target, SymbolId a) {
        return static_cast<StateId>(2 * k + (q * k + target) * (g - 1) + (a - 1));
    };
    for (StateId q = 0; q < k; ++q)
        for (bool flag : {false, true}) out.add_state(state_name(MainTag{q, flag}, vps), 1);
    for (StateId q = 0; q < k; ++q)
        for (StateId target = 0; target < k; ++target)
            for (SymbolId a = 1; a < g; ++a) out.add_state(state_name(VerifyTag{q, target, a}, vps), 1);
    const auto rej = out.add_state(state_name(SinkTag{false}, vps), 1);
    std::optional<StateId> acc;
    if (need_accept) acc = out.add_state(state_name(SinkTag{true}, vps), 0);

    const auto op = import_into(out, operand, "op");
    std::map<std::string, StateId> test_offset;
    for (const auto& [text, automaton] : tests)
        test_offset[text] = import_into(out, automaton, "t" + std::to_string(test_offset.size()));

    const PositiveBool reject = PositiveBool::leaf(advance(rej));
    auto go = [&](StateId to) { return PositiveBool::leaf(Command{Direction::advance, to, rej}); };
    auto jump = [&](StateId to) { return PositiveBool::leaf(Command{Direction::jump, rej, to}); };
    auto any = [&](std::vector<PositiveBool> parts) {
        return parts.empty() ? reject : PositiveBool::any_of(std::move(parts));
    };
    auto chi = [&](StateId q, LetterId a) {
        return guard.is_final(q) ? initial_moves(operand, op, a) : reject;
    };
    auto theta = [&](StateId q, LetterId a) -> std::optional<PositiveBool> {
        const Formula* t = guard.test(q);
        if (!t) return std::nullopt;
        const auto key = to_string(*t);
        const auto it = tests.find(key);
        if (it == tests.end()) throw ContractViolation("missing test automaton for " + key);
        return initial_moves(it->second, test_offset.at(key), a);
    };
    auto with_test = [&](PositiveBool f, StateId q, LetterId a) {
        auto t = theta(q, a);
        return t ? PositiveBool::all_of({std::move(f), std::move(*t)}) : f;
    };

    for (LetterId a = 0; a < alphabet.size(); ++a) {
        out.delta[rej][a] = reject;
        if (acc) out.delta[*acc][a] = PositiveBool::leaf(advance(*acc));
    }

    for (StateId q = 0; q < k; ++q) {
        for (LetterId a = 0; a < alphabet.size(); ++a) {
            switch (alphabet.kind(a)) {
            case LetterClass::local:
                for (bool flag : {false, true}) {
                    std::vector<PositiveBool> parts{chi(q, a)};
                    for (const auto& r : vps.locals)
                        if (r.from == q && r.letter == a) parts.push_back(go(main_state(r.to, flag)));
                    out.delta[main_state(q, flag)][a] = with_test(any(std::move(parts)), q, a);
                }
                break;
            case LetterClass::call:
                for (bool flag : {false, true}) {
                    std::vector<PositiveBool> parts{chi(q, a)};
                    for (const auto& r : vps.calls) {
                        if (r.from != q || r.letter != a) continue;
                        for (StateId resume = 0; resume < k; ++resume)
                            parts.push_back(PositiveBool::all_of(
                                {go(verify_state(r.to, resume, r.push)), jump(main_state(resume, flag))}));
                        parts.push_back(go(main_state(r.to, true)));
                    }
                    out.delta[main_state(q, flag)][a] = with_test(any(std::move(parts)), q, a);
                }
                break;
            case LetterClass::ret: {
                std::vector<PositiveBool> parts{chi(q, a)};
                for (const auto& r : vps.returns)
                    if (r.from == q && r.letter == a && r.pop == bottom_symbol)
                        parts.push_back(go(main_state(r.to, false)));
                out.delta[main_state(q, false)][a] = with_test(any(std::move(parts)), q, a);
                // A skipped call is still open: the guard may only accept here.
                out.delta[main_state(q, true)][a] = with_test(chi(q, a), q, a);
                break;
            }
            }
        }
    }

    for (StateId q = 0; q < k; ++q)
        for (StateId target = 0; target < k; ++target)
            for (SymbolId sym = 1; sym < g; ++sym) {
                const auto self = verify_state(q, target, sym);
                for (LetterId a = 0; a < alphabet.size(); ++a) {
                    PositiveBool f;
                    switch (alphabet.kind(a)) {
                    case LetterClass::local: {
                        std::vector<PositiveBool> parts;
                        for (const auto& r : vps.locals)
                            if (r.from == q && r.letter == a) parts.push_back(go(verify_state(r.to, target, sym)));
                        f = with_test(any(std::move(parts)), q, a);
                        break;
                    }
                    case LetterClass::call: {
                        std::vector<PositiveBool> parts;
                        for (const auto& r : vps.calls) {
                            if (r.from != q || r.letter != a) continue;
                            for (StateId mid = 0; mid < k; ++mid)
                                parts.push_back(PositiveBool::all_of(
                                    {go(verify_state(r.to, mid, r.push)), jump(verify_state(mid, target, sym))}));
                        }
                        f = with_test(any(std::move(parts)), q, a);
                        break;
                    }
                    case LetterClass::ret: {
                        const bool valid = std::any_of(vps.returns.begin(), vps.returns.end(), [&](const ReturnRule& r) {
                            return r.from == q && r.letter == a && r.pop == sym && r.to == target;
                        });
                        if (!valid) {
                            f = reject;
                        } else if (auto t = theta(q, a)) {
                            f = std::move(*t);
                        } else {
                            f = PositiveBool::leaf(advance(*acc));
                        }
                        break;
                    }
                    }
                    out.delta[self][a] = std::move(f);
                }
            }

    for (StateId q : guard.initial) out.initial.push_back(main_state(q, false));
    return out;
}

OneAja vldl_to_aja(const Formula& f, const AutomatonTable& table, const PushdownAlphabet& alphabet) {
    check_references(f, table);
    std::function<OneAja(const Formula&)> build = [&](const Formula& g) -> OneAja {
        switch (g.kind()) {
        case FormulaKind::atom: return atom_aja(alphabet, g.name());
        case FormulaKind::negation: return aja_complement(build(g.operand()));
        case FormulaKind::conjunction: return aja_intersection(build(g.lhs()), build(g.rhs()));
        case FormulaKind::disjunction: return aja_union(build(g.lhs()), build(g.rhs()));
        case FormulaKind::diamond:
        case FormulaKind::box: {
            const Tvpa& guard = table.require(g.name());
            std::map<std::string, OneAja> tests;
            for (const auto& [q, test] : guard.tests) {
                const auto key = to_string(test);
                if (!tests.contains(key)) tests.emplace(key, build(test));
            }
            if (g.kind() == FormulaKind::diamond) return diamond_aja(guard, build(g.operand()), tests);
            // [A] f  ==  ! <A> ! f
            return aja_complement(diamond_aja(guard, aja_complement(build(g.operand())), tests));
        }
        }
        throw std::logic_error("unhandled formula kind");
    };
    return build(f);
}

Tvpa steps_guard(const PushdownAlphabet& alphabet) {
    Tvpa a;
    a.vps.alphabet = alphabet;
    const auto loop = a.vps.add_state("loop");
    const auto done = a.vps.add_state("done");
    std::vector<LetterId> letters(alphabet.size());
    for (LetterId l = 0; l < alphabet.size(); ++l) letters[l] = l;
    add_stack_blind_moves(a.vps, loop, loop, letters);
    // The self-loop must not pop the bottom marker: that return is unmatched.
    std::erase_if(a.vps.returns, [](const ReturnRule& r) { return r.pop == bottom_symbol; });
    for (LetterId r : alphabet.letters_of(LetterClass::ret)) a.vps.returns.push_back({loop, r, bottom_symbol, done});
    a.vps.normalize();
    a.initial = {loop};
    a.final = {done};
    return a;
}

Property phi_st(const PushdownAlphabet& alphabet) {
    if (alphabet.propositions().empty()) throw InputError("alphabet declares no propositions");
    Property p;
    const auto id = p.automata.fresh_id("st");
    p.automata.add(id, steps_guard(alphabet));
    p.formula = Formula::box(id, Formula::falsity(alphabet.propositions().front()));
    return p;
}

namespace {

// The DPSA's VPS with chosen initial and final sets; a fresh non-final
// initial state keeps the empty word out when the sets overlap.
Tvpa restricted(const Dpsa& d, const std::vector<StateId>& initial, const std::vector<StateId>& final) {
    Tvpa a;
    a.vps = d.vps;
    a.final = final;
    const bool overlap = std::any_of(initial.begin(), initial.end(), [&](StateId q) {
        return std::find(final.begin(), final.end(), q) != final.end();
    });
    if (!overlap) {
        a.initial = initial;
        return a;
    }
    std::string name = "start";
    while (a.vps.find_state(name)) name += "'";
    const auto fresh = a.vps.add_state(name);
    const Vps& base = d.vps;
    for (StateId q : initial) {
        for (const auto& r : base.calls)
            if (r.from == q) a.vps.calls.push_back({fresh, r.letter, r.to, r.push});
        for (const auto& r : base.returns)
            if (r.from == q) a.vps.returns.push_back({fresh, r.letter, r.pop, r.to});
        for (const auto& r : base.locals)
            if (r.from == q) a.vps.locals.push_back({fresh, r.letter, r.to});
    }
    a.vps.normalize();
    a.initial = {fresh};
    return a;
}

} // namespace

Property dpsa_to_vldl(const Dpsa& d) {
    const auto& alphabet = d.vps.alphabet;
    if (alphabet.propositions().empty()) throw InputError("alphabet declares no propositions");
    Property out = phi_st(alphabet);
    const Formula st = out.formula;
    const auto& prop = alphabet.propositions().front();

    std::optional<Formula> result;
    for (StateId q : d.even_states()) {
        const auto tag = std::to_string(q);
        const auto reach = out.automata.fresh_id("reach" + tag);
        out.automata.add(reach, restricted(d, {d.initial}, {q}));
        const auto above = out.automata.fresh_id("above" + tag);
        out.automata.add(above, restricted(d, {q}, d.states_above(q)));
        const auto again = out.automata.fresh_id("again" + tag);
        out.automata.add(again, restricted(d, {q}, {q}));

        const Formula first =
            Formula::diamond(reach, Formula::conjunction(st, Formula::box(above, Formula::negation(st))));
        const Formula second = Formula::box(reach, Formula::implication(st, Formula::diamond(again, st)));
        const Formula both = Formula::conjunction(first, second);
        result = result ? Formula::disjunction(*result, both) : both;
    }
    out.formula = result ? *result : Formula::falsity(prop);
    return out;
}

PushdownAlphabet counter_alphabet() {
    return PushdownAlphabet({"hash", "one", "zero"}, {Letter{"0", {"zero"}, LetterClass::local},
                                                      Letter{"1", {"one"}, LetterClass::local},
                                                      Letter{"#", {"hash"}, LetterClass::local}});
}

namespace {

Ltl next_power(Ltl f, unsigned k) {
    for (unsigned i = 0; i < k; ++i) f = Ltl::next(std::move(f));
    return f;
}

// X(f && X(f && ... X f)) with k nested nexts: f holds at the next k positions.
Ltl next_each(const Ltl& f, unsigned k) {
    Ltl out = Ltl::next(f);
    for (unsigned i = 1; i < k; ++i) out = Ltl::next(Ltl::conjunction(f, out));
    return out;
}

Ltl implies(Ltl a, Ltl b) { return Ltl::disjunction(Ltl::negation(std::move(a)), std::move(b)); }

} // namespace

Ltl counter_ltl(unsigned n) {
    if (n == 0) throw ContractViolation("counter width must be positive");
    const Ltl zero = Ltl::prop("zero"), one = Ltl::prop("one"), hash = Ltl::prop("hash");
    const Ltl bit = Ltl::negation(hash);
    const Ltl zero_ahead = Ltl::next(Ltl::until(bit, zero)); // a later bit of this block is 0
    const Ltl ones_ahead = Ltl::next(Ltl::until(one, hash)); // all later bits of this block are 1

    const Ltl start = Ltl::conjunction(hash, next_each(zero, n));
    const Ltl blocks = Ltl::always(implies(Ltl::conjunction(hash, Ltl::next(bit)),
                                           Ltl::conjunction(next_each(bit, n), next_power(hash, n + 1))));
    const Ltl more = Ltl::always(implies(Ltl::conjunction(hash, zero_ahead), next_power(Ltl::next(bit), n + 1)));
    const Ltl stop = Ltl::always(implies(Ltl::conjunction(hash, ones_ahead), next_power(Ltl::always(hash), n + 1)));
    const Ltl copy = Ltl::always(implies(
        Ltl::conjunction(bit, zero_ahead),
        Ltl::disjunction(Ltl::conjunction(zero, next_power(zero, n + 1)), Ltl::conjunction(one, next_power(one, n + 1)))));
    const Ltl flip = Ltl::always(implies(Ltl::conjunction(bit, ones_ahead),
                                         Ltl::disjunction(Ltl::conjunction(zero, next_power(one, n + 1)),
                                                          Ltl::conjunction(one, next_power(Ltl::negation(one), n + 1)))));
    return Ltl::conjunction(
        start, Ltl::conjunction(blocks, Ltl::conjunction(more, Ltl::conjunction(stop, Ltl::conjunction(copy, flip)))));
}

Property counter_formula(unsigned n) { return ltl_to_vldl(counter_ltl(n), counter_alphabet()); }

} // namespace vldl
