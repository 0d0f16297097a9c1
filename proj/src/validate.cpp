#include "vldl/validate.hpp"

#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace vldl {

namespace {

void add(std::vector<Diagnostic>& out, std::string message) { out.push_back({std::move(message)}); }

std::string letter_name(const Vps& vps, LetterId id) {
    return id < vps.alphabet.size() ? vps.alphabet.letter(id).id : "#" + std::to_string(id);
}

void check_states(const Vps& vps, const std::vector<StateId>& states, const char* role,
                  std::vector<Diagnostic>& out) {
    for (StateId q : states)
        if (q >= vps.state_count()) add(out, std::string(role) + " state index " + std::to_string(q) + " is undeclared");
}

} // namespace

std::vector<Diagnostic> validate(const Vps& vps) {
    std::vector<Diagnostic> out;
    if (vps.states.empty()) add(out, "no states");
    if (vps.symbols.empty() || vps.symbols.front() != bottom_name)
        add(out, "stack symbol 0 must be the bottom marker");
    const auto n = vps.state_count();
    const auto letters = vps.alphabet.size();
    auto check_rule = [&](StateId from, StateId to, LetterId letter, LetterClass want, const char* what) {
        if (from >= n || to >= n) add(out, std::string(what) + " rule references an undeclared state");
        if (letter >= letters) {
            add(out, std::string(what) + " rule references an undeclared letter");
        } else if (vps.alphabet.kind(letter) != want) {
            add(out, std::string(what) + " rule on letter '" + letter_name(vps, letter) + "' of class " +
                         std::string(to_string(vps.alphabet.kind(letter))));
        }
    };
    for (const auto& r : vps.calls) {
        check_rule(r.from, r.to, r.letter, LetterClass::call, "call");
        if (r.push == bottom_symbol) add(out, "call pushes bottom marker on letter '" + letter_name(vps, r.letter) + "'");
        if (r.push >= vps.symbol_count()) add(out, "call pushes an undeclared stack symbol");
    }
    for (const auto& r : vps.returns) {
        check_rule(r.from, r.to, r.letter, LetterClass::ret, "return");
        if (r.pop >= vps.symbol_count()) add(out, "return pops an undeclared stack symbol");
    }
    for (const auto& r : vps.locals) check_rule(r.from, r.to, r.letter, LetterClass::local, "local");
    return out;
}

std::vector<Diagnostic> validate(const Tvpa& a) {
    auto out = validate(a.vps);
    check_states(a.vps, a.initial, "initial", out);
    check_states(a.vps, a.final, "final", out);
    for (const auto& [q, test] : a.tests) {
        if (q >= a.vps.state_count()) add(out, "test attached to undeclared state");
        if (test.empty()) add(out, "empty test formula");
    }
    return out;
}

std::vector<Diagnostic> validate(const Bvpa& a) {
    auto out = validate(a.vps);
    check_states(a.vps, a.initial, "initial", out);
    check_states(a.vps, a.accepting, "accepting", out);
    return out;
}

std::vector<Diagnostic> validate(const Dpsa& a) {
    auto out = validate(a.vps);
    check_states(a.vps, {a.initial}, "initial", out);
    if (a.colors.size() != a.vps.state_count()) add(out, "coloring is not total");
    std::map<std::tuple<StateId, LetterId, SymbolId>, int> seen;
    for (const auto& r : a.vps.calls)
        if (++seen[{r.from, r.letter, 0}] == 2)
            add(out, "nondeterministic call rules in state '" + a.vps.states.at(r.from) + "'");
    seen.clear();
    for (const auto& r : a.vps.returns)
        if (++seen[{r.from, r.letter, r.pop}] == 2)
            add(out, "nondeterministic return rules in state '" + a.vps.states.at(r.from) + "'");
    seen.clear();
    for (const auto& r : a.vps.locals)
        if (++seen[{r.from, r.letter, 0}] == 2)
            add(out, "nondeterministic local rules in state '" + a.vps.states.at(r.from) + "'");
    return out;
}

std::vector<Diagnostic> validate(const OneAja& a) {
    std::vector<Diagnostic> out;
    const auto n = a.states.size();
    if (n == 0) add(out, "no states");
    if (a.colors.size() != n) add(out, "coloring is not total");
    if (a.delta.size() != n) add(out, "transition function is not total");
    for (StateId q : a.initial)
        if (q >= n) add(out, "initial state index is undeclared");
    std::vector<const PositiveBool*> stack;
    for (const auto& row : a.delta) {
        if (row.size() != a.alphabet.size()) add(out, "transition function is not total");
        for (const auto& f : row) stack.push_back(&f);
    }
    while (!stack.empty()) {
        const auto* f = stack.back();
        stack.pop_back();
        if (f->kind() == PositiveBool::Kind::command) {
            if (f->command().advance_to >= n || f->command().jump_to >= n)
                add(out, "command references an undeclared state");
        } else {
            if (f->children().empty()) add(out, "empty positive formula");
            for (const auto& c : f->children()) stack.push_back(&c);
        }
    }
    return out;
}

namespace {

std::string escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out;
}

std::string symbol_label(const Vps& vps, SymbolId s) {
    return s == bottom_symbol ? "⊥" : vps.symbols.at(s);
}

struct NodeStyle {
    bool initial = false;
    bool accepting = false;
    std::string extra;
};

std::string render(const Vps& vps, const std::string& name, const std::vector<NodeStyle>& styles) {
    std::ostringstream out;
    out << "digraph \"" << escape(name) << "\" {\n  rankdir=LR;\n  node [shape=circle];\n";
    for (StateId q = 0; q < vps.state_count(); ++q) {
        const auto& st = styles.at(q);
        std::string label = vps.states[q] + st.extra;
        out << "  \"" << escape(vps.states[q]) << "\" [label=\"" << escape(label) << "\"";
        if (st.accepting) out << ", shape=doublecircle";
        if (st.initial) out << ", style=bold";
        out << "];\n";
    }
    // One edge per (source, target, stack action); letters are listed together.
    std::vector<std::tuple<StateId, StateId, std::string>> keys;
    std::map<std::tuple<StateId, StateId, std::string>, std::string> letters;
    auto edge = [&](StateId from, StateId to, std::string action, LetterId letter) {
        auto key = std::make_tuple(from, to, std::move(action));
        auto [it, fresh] = letters.try_emplace(key, vps.alphabet.letter(letter).id);
        if (fresh) keys.push_back(key);
        else it->second += "," + vps.alphabet.letter(letter).id;
    };
    for (const auto& r : vps.calls) edge(r.from, r.to, "↓" + symbol_label(vps, r.push), r.letter);
    for (const auto& r : vps.returns) edge(r.from, r.to, "↑" + symbol_label(vps, r.pop), r.letter);
    for (const auto& r : vps.locals) edge(r.from, r.to, "→", r.letter);
    for (const auto& key : keys) {
        const auto& [from, to, action] = key;
        out << "  \"" << escape(vps.states.at(from)) << "\" -> \"" << escape(vps.states.at(to)) << "\" [label=\""
            << escape(letters.at(key) + " / " + action) << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace

std::string to_dot(const Vps& vps, const std::string& name) {
    return render(vps, name, std::vector<NodeStyle>(vps.state_count()));
}

std::string to_dot(const Tvpa& a, const std::string& name) {
    std::vector<NodeStyle> styles(a.vps.state_count());
    for (StateId q : a.initial) styles.at(q).initial = true;
    for (StateId q : a.final) styles.at(q).accepting = true;
    for (const auto& [q, test] : a.tests) styles.at(q).extra = " ? " + to_string(test);
    return render(a.vps, name, styles);
}

std::string to_dot(const Bvpa& a, const std::string& name) {
    std::vector<NodeStyle> styles(a.vps.state_count());
    for (StateId q : a.initial) styles.at(q).initial = true;
    for (StateId q : a.accepting) styles.at(q).accepting = true;
    return render(a.vps, name, styles);
}

std::string to_dot(const Dpsa& a, const std::string& name) {
    std::vector<NodeStyle> styles(a.vps.state_count());
    styles.at(a.initial).initial = true;
    for (StateId q = 0; q < a.colors.size(); ++q) styles.at(q).extra = " / " + std::to_string(a.colors[q]);
    return render(a.vps, name, styles);
}

std::string to_dot(const OneAja& a, const std::string& name) {
    std::ostringstream out;
    out << "digraph \"" << escape(name) << "\" {\n  rankdir=LR;\n  node [shape=circle];\n";
    std::set<StateId> initial(a.initial.begin(), a.initial.end());
    for (StateId q = 0; q < a.states.size(); ++q) {
        out << "  \"" << escape(a.states[q]) << "\" [label=\"" << escape(a.states[q]) << " / " << a.colors[q]
            << "\"";
        if (initial.contains(q)) out << ", style=bold";
        out << "];\n";
    }
    for (StateId q = 0; q < a.states.size(); ++q) {
        // One edge per distinct (letter, command target, direction).
        std::set<std::tuple<LetterId, StateId, int>> edges;
        for (LetterId l = 0; l < a.alphabet.size(); ++l) {
            std::vector<const PositiveBool*> stack{&a.delta[q][l]};
            while (!stack.empty()) {
                const auto* f = stack.back();
                stack.pop_back();
                if (f->kind() != PositiveBool::Kind::command) {
                    for (const auto& c : f->children()) stack.push_back(&c);
                    continue;
                }
                const auto& c = f->command();
                if (c.direction == Direction::advance)
                    edges.insert({l, c.advance_to, 0});
                else
                    edges.insert({l, c.jump_to, 1});
            }
        }
        for (const auto& [l, to, jump] : edges)
            out << "  \"" << escape(a.states[q]) << "\" -> \"" << escape(a.states.at(to)) << "\" [label=\""
                << escape(a.alphabet.letter(l).id) << "\"" << (jump ? ", style=dashed" : "") << "];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace vldl
