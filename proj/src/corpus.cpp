#include "vldl/corpus.hpp"

#include "vldl/logic.hpp"

#include <algorithm>
#include <functional>

namespace vldl::corpus {

namespace {

unsigned pick(Rng& rng, unsigned lo, unsigned hi) { return std::uniform_int_distribution<unsigned>(lo, hi)(rng); }
bool chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

template <class T>
std::vector<T> nonempty_subset(Rng& rng, unsigned n) {
    std::vector<T> out;
    while (out.empty())
        for (unsigned i = 0; i < n; ++i)
            if (chance(rng, 0.5)) out.push_back(static_cast<T>(i));
    return out;
}

std::vector<std::string> prop_subset(Rng& rng, const std::vector<std::string>& props) {
    std::vector<std::string> out;
    for (const auto& p : props)
        if (chance(rng, 0.5)) out.push_back(p);
    return out;
}

} // namespace

PushdownAlphabet random_alphabet(Rng& rng, unsigned max_letters) {
    const std::vector<std::string> props{"p", "q"};
    const unsigned n = pick(rng, 2, std::max(2u, max_letters));
    std::vector<Letter> letters;
    unsigned counters[3] = {0, 0, 0};
    for (unsigned i = 0; i < n; ++i) {
        LetterClass kind = i == 0 ? LetterClass::call : i == 1 ? LetterClass::ret : static_cast<LetterClass>(pick(rng, 0, 2));
        const char* stem = kind == LetterClass::call ? "c" : kind == LetterClass::ret ? "r" : "l";
        auto& counter = counters[static_cast<unsigned>(kind)];
        letters.push_back({stem + std::to_string(counter++), prop_subset(rng, props), kind});
    }
    return PushdownAlphabet(props, std::move(letters));
}

LassoWord random_lasso(Rng& rng, const PushdownAlphabet& alphabet, unsigned max_prefix, unsigned max_period) {
    const auto letter = [&] { return static_cast<LetterId>(pick(rng, 0, static_cast<unsigned>(alphabet.size()) - 1)); };
    LassoWord w;
    w.prefix.resize(pick(rng, 0, max_prefix));
    w.period.resize(pick(rng, 1, std::max(1u, max_period)));
    for (auto& a : w.prefix) a = letter();
    for (auto& a : w.period) a = letter();
    return w;
}

std::vector<LassoWord> all_lassos(const PushdownAlphabet& alphabet, unsigned max_prefix, unsigned max_period) {
    const auto k = static_cast<LetterId>(alphabet.size());
    // All words of length n in lexicographic order.
    auto words = [&](std::size_t n) {
        std::vector<FiniteWord> out;
        FiniteWord w(n, 0);
        while (true) {
            out.push_back(w);
            std::size_t i = n;
            while (i > 0 && w[i - 1] + 1 == k) w[--i] = 0;
            if (i == 0) break;
            ++w[i - 1];
        }
        return out;
    };
    std::vector<LassoWord> out;
    for (unsigned total = 1; total <= max_prefix + max_period; ++total)
        for (unsigned v = 1; v <= std::min(total, max_period); ++v) {
            const unsigned u = total - v;
            if (u > max_prefix) continue;
            const auto us = words(u);
            const auto vs = words(v);
            for (const auto& pu : us)
                for (const auto& pv : vs) out.push_back({pu, pv});
        }
    return out;
}

Tvpa random_guard(Rng& rng, const PushdownAlphabet& alphabet, const GuardShape& shape) {
    Tvpa a;
    a.vps.alphabet = alphabet;
    const unsigned states = pick(rng, 1, shape.max_states);
    for (unsigned i = 0; i < states; ++i) a.vps.add_state("s" + std::to_string(i));
    const unsigned symbols = pick(rng, 1, shape.max_symbols);
    for (unsigned i = 0; i < symbols; ++i) a.vps.add_symbol(std::string(1, static_cast<char>('A' + i)));
    for (StateId q = 0; q < states; ++q)
        for (LetterId l = 0; l < alphabet.size(); ++l) {
            if (!chance(rng, shape.rule_density)) continue;
            const StateId to = pick(rng, 0, states - 1);
            switch (alphabet.kind(l)) {
            case LetterClass::call: a.vps.calls.push_back({q, l, to, pick(rng, 1, symbols)}); break;
            case LetterClass::ret: a.vps.returns.push_back({q, l, pick(rng, 0, symbols), to}); break;
            case LetterClass::local: a.vps.locals.push_back({q, l, to}); break;
            }
        }
    a.vps.normalize();
    a.initial = nonempty_subset<StateId>(rng, states);
    a.final = nonempty_subset<StateId>(rng, states);
    return a;
}

namespace {

Formula grow(Rng& rng, const PushdownAlphabet& alphabet, AutomatonTable& table, unsigned budget) {
    const auto& props = alphabet.propositions();
    const auto atom = [&] { return Formula::atom(props[pick(rng, 0, static_cast<unsigned>(props.size()) - 1)]); };
    if (budget <= 1) return atom();
    switch (pick(rng, 0, 9)) {
    case 0: return atom();
    case 1: return Formula::negation(grow(rng, alphabet, table, budget - 1));
    case 2:
    case 3: {
        const unsigned left = pick(rng, 1, std::max(1u, budget - 2));
        auto lhs = grow(rng, alphabet, table, left);
        auto rhs = grow(rng, alphabet, table, budget > left + 1 ? budget - left - 1 : 1);
        return chance(rng, 0.5) ? Formula::conjunction(lhs, rhs) : Formula::disjunction(lhs, rhs);
    }
    default: {
        Tvpa guard = random_guard(rng, alphabet, {2, 2, 0.55});
        const unsigned used = static_cast<unsigned>(guard.vps.state_count()) + 1;
        if (budget > used + 2 && chance(rng, 0.3)) {
            const StateId q = pick(rng, 0, static_cast<unsigned>(guard.vps.state_count()) - 1);
            guard.tests[q] = grow(rng, alphabet, table, 2);
        }
        const auto id = table.fresh_id("g");
        table.add(id, std::move(guard));
        auto operand = grow(rng, alphabet, table, budget > used ? budget - used : 1);
        return chance(rng, 0.5) ? Formula::diamond(id, operand) : Formula::box(id, operand);
    }
    }
}

} // namespace

Formula random_formula(Rng& rng, const PushdownAlphabet& alphabet, AutomatonTable& table, unsigned max_size) {
    while (true) {
        AutomatonTable local;
        // Keep ids unique with respect to the caller's table.
        for (const auto& [id, a] : table.entries()) local.add(id, a);
        Formula f = grow(rng, alphabet, local, pick(rng, 1, max_size));
        if (formula_size(f, local) > max_size) continue;
        for (const auto& id : referenced_automata(f, local))
            if (!table.contains(id)) table.add(id, local.require(id));
        return f;
    }
}

std::vector<Instance> formula_corpus(std::uint64_t seed, unsigned count, unsigned max_size) {
    Rng rng(seed);
    std::vector<Instance> out;
    out.reserve(count);
    for (unsigned i = 0; i < count; ++i) {
        Instance inst;
        inst.alphabet = random_alphabet(rng, 4);
        inst.formula = random_formula(rng, inst.alphabet, inst.automata, max_size);
        inst.word = random_lasso(rng, inst.alphabet, 4, 3);
        out.push_back(std::move(inst));
    }
    return out;
}

Dpsa random_dpsa(Rng& rng, const PushdownAlphabet& alphabet, unsigned max_states, unsigned max_color,
                 unsigned max_symbols, bool partial) {
    Dpsa d;
    d.vps.alphabet = alphabet;
    const unsigned states = pick(rng, 1, max_states);
    for (unsigned i = 0; i < states; ++i) {
        d.vps.add_state("q" + std::to_string(i));
        d.colors.push_back(pick(rng, 0, max_color));
    }
    const unsigned symbols = pick(rng, 1, max_symbols);
    for (unsigned i = 0; i < symbols; ++i) d.vps.add_symbol(std::string(1, static_cast<char>('A' + i)));
    const auto target = [&] { return static_cast<StateId>(pick(rng, 0, states - 1)); };
    const auto skip = [&] { return partial && chance(rng, 0.15); };
    for (StateId q = 0; q < states; ++q)
        for (LetterId l = 0; l < alphabet.size(); ++l) {
            switch (alphabet.kind(l)) {
            case LetterClass::call:
                if (!skip()) d.vps.calls.push_back({q, l, target(), pick(rng, 1, symbols)});
                break;
            case LetterClass::ret:
                for (SymbolId s = 0; s <= symbols; ++s)
                    if (!skip()) d.vps.returns.push_back({q, l, s, target()});
                break;
            case LetterClass::local:
                if (!skip()) d.vps.locals.push_back({q, l, target()});
                break;
            }
        }
    d.vps.normalize();
    d.initial = 0;
    return d;
}

PushdownSystem random_pds(Rng& rng, unsigned max_controls, unsigned max_symbols, unsigned max_rules) {
    PushdownSystem pds;
    pds.controls = pick(rng, 1, max_controls);
    pds.symbols = pick(rng, 1, max_symbols);
    const unsigned rules = pick(rng, 0, max_rules);
    for (unsigned i = 0; i < rules; ++i) {
        PushdownRule r;
        r.from = pick(rng, 0, pds.controls - 1);
        r.to = pick(rng, 0, pds.controls - 1);
        r.label = i;
        const unsigned kind = pick(rng, 0, 2);
        if (kind == 0 && pds.symbols > 1) {
            r.kind = RuleKind::push;
            r.symbol = pick(rng, 1, pds.symbols - 1);
        } else if (kind == 1) {
            r.kind = RuleKind::pop;
            r.symbol = pick(rng, 0, pds.symbols - 1);
        } else {
            r.kind = RuleKind::internal;
        }
        pds.rules.push_back(r);
    }
    return pds;
}

ParityGame random_parity_game(Rng& rng, unsigned max_nodes, unsigned max_color) {
    ParityGame g;
    const unsigned n = pick(rng, 1, max_nodes);
    for (unsigned v = 0; v < n; ++v)
        g.add_node(chance(rng, 0.5) ? Player::exists : Player::all, pick(rng, 0, max_color));
    for (unsigned v = 0; v < n; ++v) {
        const unsigned out = pick(rng, 1, std::min(3u, n));
        for (unsigned i = 0; i < out; ++i) g.add_edge(v, pick(rng, 0, n - 1));
    }
    return g;
}

Ltl random_ltl(Rng& rng, const std::vector<std::string>& props, unsigned max_depth) {
    const auto atom = [&] {
        const unsigned i = pick(rng, 0, static_cast<unsigned>(props.size()) + 1);
        if (i == props.size()) return Ltl::truth();
        if (i == props.size() + 1) return Ltl::falsity();
        return Ltl::prop(props[i]);
    };
    if (max_depth == 0 || chance(rng, 0.2)) return atom();
    const auto sub = [&] { return random_ltl(rng, props, max_depth - 1); };
    switch (pick(rng, 0, 8)) {
    case 0: return Ltl::negation(sub());
    case 1: return Ltl::conjunction(sub(), sub());
    case 2: return Ltl::disjunction(sub(), sub());
    case 3: return Ltl::next(sub());
    case 4: return Ltl::until(sub(), sub());
    case 5: return Ltl::eventually(sub());
    case 6: return Ltl::always(sub());
    case 7: return Ltl::release(sub(), sub());
    default: return atom();
    }
}

OneAja random_aja(Rng& rng, const PushdownAlphabet& alphabet, unsigned states) {
    OneAja a;
    a.alphabet = alphabet;
    for (unsigned q = 0; q < states; ++q) a.add_state("a" + std::to_string(q), pick(rng, 0, 3));
    const auto state = [&] { return static_cast<StateId>(pick(rng, 0, states - 1)); };
    std::function<PositiveBool(unsigned)> formula = [&](unsigned depth) {
        if (depth == 0 || chance(rng, 0.5))
            return PositiveBool::leaf(Command{chance(rng, 0.3) ? Direction::jump : Direction::advance, state(), state()});
        std::vector<PositiveBool> parts{formula(depth - 1), formula(depth - 1)};
        return chance(rng, 0.5) ? PositiveBool::all_of(std::move(parts)) : PositiveBool::any_of(std::move(parts));
    };
    for (unsigned q = 0; q < states; ++q)
        for (LetterId l = 0; l < alphabet.size(); ++l) a.delta[q][l] = formula(2);
    a.initial = nonempty_subset<StateId>(rng, states);
    return a;
}

Vps random_system(Rng& rng, const PushdownAlphabet& alphabet, unsigned max_states, unsigned max_symbols) {
    Vps s;
    s.alphabet = alphabet;
    const unsigned states = pick(rng, 1, max_states);
    for (unsigned i = 0; i < states; ++i) s.add_state("s" + std::to_string(i));
    const unsigned symbols = pick(rng, 1, max_symbols);
    for (unsigned i = 0; i < symbols; ++i) s.add_symbol(std::string(1, static_cast<char>('A' + i)));
    for (StateId q = 0; q < states; ++q)
        for (LetterId l = 0; l < alphabet.size(); ++l) {
            if (!chance(rng, 0.45)) continue;
            const StateId to = pick(rng, 0, states - 1);
            switch (alphabet.kind(l)) {
            case LetterClass::call: s.calls.push_back({q, l, to, pick(rng, 1, symbols)}); break;
            case LetterClass::ret: s.returns.push_back({q, l, pick(rng, 0, symbols), to}); break;
            case LetterClass::local: s.locals.push_back({q, l, to}); break;
            }
        }
    s.normalize();
    return s;
}

} // namespace vldl::corpus
