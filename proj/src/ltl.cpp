#include "vldl/ltl.hpp"

#include "vldl/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace vldl {

std::size_t ltl_size(const Ltl& f) {
    std::size_t n = 1;
    for (const auto& a : f.args) n += ltl_size(a);
    return n;
}

std::size_t ltl_depth(const Ltl& f) {
    std::size_t d = 0;
    for (const auto& a : f.args) d = std::max(d, ltl_depth(a));
    return f.args.empty() ? 0 : d + 1;
}

std::string to_string(const Ltl& f) {
    auto un = [&](const char* op) { return std::string(op) + "(" + to_string(f.args[0]) + ")"; };
    auto bin = [&](const char* op) {
        return "(" + to_string(f.args[0]) + " " + op + " " + to_string(f.args[1]) + ")";
    };
    switch (f.kind) {
    case LtlKind::truth: return "true";
    case LtlKind::falsity: return "false";
    case LtlKind::atom: return f.atom;
    case LtlKind::negation: return un("!");
    case LtlKind::conjunction: return bin("&&");
    case LtlKind::disjunction: return bin("||");
    case LtlKind::next: return un("X");
    case LtlKind::until: return bin("U");
    case LtlKind::eventually: return un("F");
    case LtlKind::always: return un("G");
    case LtlKind::release: return bin("R");
    }
    return "?";
}

bool LetterPredicate::matches(const PushdownAlphabet& alphabet, LetterId letter) const {
    for (const auto& p : require)
        if (!alphabet.holds(letter, p)) return false;
    for (const auto& p : forbid)
        if (alphabet.holds(letter, p)) return false;
    return true;
}

void add_stack_blind_moves(Vps& vps, StateId from, StateId to, const std::vector<LetterId>& letters) {
    auto dummy = vps.find_symbol("D");
    for (LetterId l : letters) {
        switch (vps.alphabet.kind(l)) {
        case LetterClass::call:
            if (!dummy) dummy = vps.add_symbol("D");
            vps.calls.push_back({from, l, to, *dummy});
            break;
        case LetterClass::ret:
            if (!dummy) dummy = vps.add_symbol("D");
            vps.returns.push_back({from, l, bottom_symbol, to});
            vps.returns.push_back({from, l, *dummy, to});
            break;
        case LetterClass::local: vps.locals.push_back({from, l, to}); break;
        }
    }
}

namespace {

std::vector<LetterId> all_letters(const PushdownAlphabet& alphabet) {
    std::vector<LetterId> out(alphabet.size());
    std::iota(out.begin(), out.end(), LetterId{0});
    return out;
}

const std::string& designated(const PushdownAlphabet& alphabet) {
    if (alphabet.propositions().empty()) throw InputError("alphabet declares no propositions");
    return alphabet.propositions().front();
}

class LtlEmbedding {
public:
    explicit LtlEmbedding(const PushdownAlphabet& alphabet) : alphabet_(alphabet) {}

    Property run(const Ltl& f) {
        Property out;
        out.formula = compile(f);
        out.automata = std::move(table_);
        return out;
    }

private:
    Formula compile(const Ltl& f) {
        const auto& p = designated(alphabet_);
        switch (f.kind) {
        case LtlKind::truth: return Formula::truth(p);
        case LtlKind::falsity: return Formula::falsity(p);
        case LtlKind::atom: return Formula::atom(f.atom);
        case LtlKind::negation: return Formula::negation(compile(f.args[0]));
        case LtlKind::conjunction: return Formula::conjunction(compile(f.args[0]), compile(f.args[1]));
        case LtlKind::disjunction: return Formula::disjunction(compile(f.args[0]), compile(f.args[1]));
        case LtlKind::next: return Formula::diamond(next_guard(), compile(f.args[0]));
        case LtlKind::until: return Formula::diamond(until_guard(&f.args[0]), compile(f.args[1]));
        case LtlKind::eventually: return Formula::diamond(until_guard(nullptr), compile(f.args[0]));
        case LtlKind::always:
            return Formula::negation(
                Formula::diamond(until_guard(nullptr), Formula::negation(compile(f.args[0]))));
        case LtlKind::release: {
            const Ltl lhs = Ltl::negation(f.args[0]);
            return Formula::negation(
                Formula::diamond(until_guard(&lhs), Formula::negation(compile(f.args[1]))));
        }
        }
        throw ContractViolation("unknown LTL node");
    }

    std::string next_guard() {
        const std::string id = "next";
        if (table_.contains(id)) return id;
        Tvpa a;
        a.vps.alphabet = alphabet_;
        const auto from = a.vps.add_state("wait");
        const auto to = a.vps.add_state("done");
        add_stack_blind_moves(a.vps, from, to, all_letters(alphabet_));
        a.vps.normalize();
        a.initial = {from};
        a.final = {to};
        table_.add(id, std::move(a));
        return id;
    }

    // `hold == nullptr` means the looping state carries no test.
    std::string until_guard(const Ltl* hold) {
        std::optional<Formula> test;
        if (hold && hold->kind != LtlKind::truth) test = compile(*hold);
        const std::string key = test ? to_string(*test) : std::string();
        if (auto it = until_ids_.find(key); it != until_ids_.end()) return it->second;

        Tvpa a;
        a.vps.alphabet = alphabet_;
        const auto loop = a.vps.add_state("loop");
        const auto done = a.vps.add_state("done");
        const auto letters = all_letters(alphabet_);
        add_stack_blind_moves(a.vps, loop, loop, letters);
        add_stack_blind_moves(a.vps, loop, done, letters);
        a.vps.normalize();
        a.initial = {loop, done};
        a.final = {done};
        if (test) a.tests.emplace(loop, *test);
        const auto id = table_.fresh_id(test ? "until" : "eventually");
        table_.add(id, std::move(a));
        until_ids_.emplace(key, id);
        return id;
    }

    const PushdownAlphabet& alphabet_;
    AutomatonTable table_;
    std::map<std::string, std::string> until_ids_;
};

struct Nfa {
    struct Move {
        std::size_t from;
        const LetterPredicate* predicate;
        std::size_t to;
    };
    std::size_t states = 0;
    std::vector<std::vector<std::size_t>> epsilon;
    std::vector<Move> moves;

    std::size_t add() {
        epsilon.emplace_back();
        return states++;
    }
};

// Thompson construction; returns (entry, exit).
std::pair<std::size_t, std::size_t> thompson(const Regex& r, Nfa& nfa) {
    switch (r.kind) {
    case RegexKind::test: throw Unsupported("regex tests are not supported");
    case RegexKind::epsilon: {
        const auto s = nfa.add();
        return {s, s};
    }
    case RegexKind::letter: {
        const auto s = nfa.add();
        const auto t = nfa.add();
        nfa.moves.push_back({s, &r.predicate, t});
        return {s, t};
    }
    case RegexKind::concat: {
        auto [a0, a1] = thompson(r.parts.at(0), nfa);
        auto [b0, b1] = thompson(r.parts.at(1), nfa);
        nfa.epsilon[a1].push_back(b0);
        return {a0, b1};
    }
    case RegexKind::choice: {
        const auto s = nfa.add();
        auto [a0, a1] = thompson(r.parts.at(0), nfa);
        auto [b0, b1] = thompson(r.parts.at(1), nfa);
        const auto t = nfa.add();
        nfa.epsilon[s] = {a0, b0};
        nfa.epsilon[a1].push_back(t);
        nfa.epsilon[b1].push_back(t);
        return {s, t};
    }
    case RegexKind::star: {
        const auto s = nfa.add();
        auto [a0, a1] = thompson(r.parts.at(0), nfa);
        const auto t = nfa.add();
        nfa.epsilon[s] = {a0, t};
        nfa.epsilon[a1].push_back(a0);
        nfa.epsilon[a1].push_back(t);
        return {s, t};
    }
    }
    throw ContractViolation("unknown regex node");
}

std::vector<bool> closure(const Nfa& nfa, std::size_t from) {
    std::vector<bool> seen(nfa.states, false);
    std::vector<std::size_t> stack{from};
    seen[from] = true;
    while (!stack.empty()) {
        const auto s = stack.back();
        stack.pop_back();
        for (auto t : nfa.epsilon[s])
            if (!seen[t]) {
                seen[t] = true;
                stack.push_back(t);
            }
    }
    return seen;
}

Tvpa compile_regex(const Regex& r, const PushdownAlphabet& alphabet) {
    Nfa nfa;
    const auto [entry, exit] = thompson(r, nfa);
    std::vector<std::vector<bool>> close(nfa.states);
    for (std::size_t s = 0; s < nfa.states; ++s) close[s] = closure(nfa, s);

    // Keep the states that are entry-closure members or targets of moves.
    std::vector<long> index(nfa.states, -1);
    Tvpa a;
    a.vps.alphabet = alphabet;
    auto state = [&](std::size_t s) {
        if (index[s] < 0) index[s] = a.vps.add_state("s" + std::to_string(s));
        return static_cast<StateId>(index[s]);
    };
    for (std::size_t s = 0; s < nfa.states; ++s)
        if (close[entry][s]) a.initial.push_back(state(s));

    // Saturate: a kept state s moves on letter l to every closure member of a move target.
    bool changed = true;
    std::vector<bool> expanded(nfa.states, false);
    while (changed) {
        changed = false;
        for (std::size_t s = 0; s < nfa.states; ++s) {
            if (index[s] < 0 || expanded[s]) continue;
            expanded[s] = true;
            changed = true;
            for (const auto& m : nfa.moves) {
                if (!close[s][m.from]) continue;
                std::vector<LetterId> letters;
                for (LetterId l = 0; l < alphabet.size(); ++l)
                    if (m.predicate->matches(alphabet, l)) letters.push_back(l);
                for (std::size_t t = 0; t < nfa.states; ++t)
                    if (close[m.to][t]) add_stack_blind_moves(a.vps, state(s), state(t), letters);
            }
        }
    }
    for (std::size_t s = 0; s < nfa.states; ++s)
        if (index[s] >= 0 && s == exit) a.final.push_back(static_cast<StateId>(index[s]));
    a.vps.normalize();
    return a;
}

class LdlEmbedding {
public:
    explicit LdlEmbedding(const PushdownAlphabet& alphabet) : alphabet_(alphabet) {}

    Property run(const Ldl& f) {
        Property out;
        out.formula = compile(f);
        out.automata = std::move(table_);
        return out;
    }

private:
    Formula compile(const Ldl& f) {
        switch (f.kind) {
        case LdlKind::truth: return Formula::truth(designated(alphabet_));
        case LdlKind::falsity: return Formula::falsity(designated(alphabet_));
        case LdlKind::atom: return Formula::atom(f.atom);
        case LdlKind::negation: return Formula::negation(compile(f.args[0]));
        case LdlKind::conjunction: return Formula::conjunction(compile(f.args[0]), compile(f.args[1]));
        case LdlKind::disjunction: return Formula::disjunction(compile(f.args[0]), compile(f.args[1]));
        case LdlKind::diamond:
        case LdlKind::box: {
            const auto id = table_.fresh_id("regex");
            table_.add(id, compile_regex(*f.guard, alphabet_));
            auto inner = compile(f.args[0]);
            return f.kind == LdlKind::diamond ? Formula::diamond(id, inner) : Formula::box(id, inner);
        }
        }
        throw ContractViolation("unknown LDL node");
    }

    const PushdownAlphabet& alphabet_;
    AutomatonTable table_;
};

} // namespace

Property ltl_to_vldl(const Ltl& f, const PushdownAlphabet& alphabet) { return LtlEmbedding(alphabet).run(f); }

Property ldl_to_vldl(const Ldl& f, const PushdownAlphabet& alphabet) { return LdlEmbedding(alphabet).run(f); }

} // namespace vldl
