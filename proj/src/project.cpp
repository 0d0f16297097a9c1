#include "vldl/project.hpp"

#include "vldl/error.hpp"
#include "vldl/logic.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

#include <fstream>
#include <sstream>

namespace vldl {

using Json = nlohmann::ordered_json;

const Formula& Project::formula(const std::string& id) const {
    const auto it = formulas.find(id);
    if (it == formulas.end()) throw InputError("unknown formula '" + id + "'");
    return it->second;
}

const LassoWord& Project::word(const std::string& id) const {
    const auto it = words.find(id);
    if (it == words.end()) throw InputError("unknown word '" + id + "'");
    return it->second;
}

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::string text(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_string()) throw InputError(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

std::vector<std::string> strings(const Json& j, const char* key, bool required = true) {
    if (!required && (!j.is_object() || !j.contains(key))) return {};
    const Json& v = field(j, key);
    if (!v.is_array()) throw InputError(std::string("field '") + key + "' must be an array");
    std::vector<std::string> out;
    for (const auto& e : v) {
        if (!e.is_string()) throw InputError(std::string("field '") + key + "' must hold strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

StateId state_of(const Vps& vps, const std::string& name) {
    auto q = vps.find_state(name);
    if (!q) throw InputError("unknown state '" + name + "'");
    return *q;
}

std::vector<StateId> states_of(const Vps& vps, const std::vector<std::string>& names) {
    std::vector<StateId> out;
    for (const auto& n : names) out.push_back(state_of(vps, n));
    return out;
}

SymbolId symbol_of(const Vps& vps, const std::string& name) {
    auto s = vps.find_symbol(name);
    if (!s) throw InputError("unknown stack symbol '" + name + "'");
    return *s;
}

Vps read_vps(const Json& j, const PushdownAlphabet& alphabet) {
    Vps vps;
    vps.alphabet = alphabet;
    for (const auto& s : strings(j, "states")) {
        if (vps.find_state(s)) throw InputError("duplicate state '" + s + "'");
        vps.add_state(s);
    }
    for (const auto& s : strings(j, "stack", false)) {
        if (vps.find_symbol(s)) throw InputError("duplicate stack symbol '" + s + "'");
        vps.add_symbol(s);
    }
    const Json& rules = field(j, "transitions");
    if (!rules.is_array()) throw InputError("transitions must be an array");
    for (const auto& t : rules) {
        const StateId from = state_of(vps, text(t, "from"));
        const StateId to = state_of(vps, text(t, "to"));
        const LetterId letter = alphabet.require(text(t, "letter"));
        const std::string kind = text(t, "kind");
        const LetterClass expected = kind == "push"  ? LetterClass::call
                                     : kind == "pop" ? LetterClass::ret
                                     : kind == "local"
                                         ? LetterClass::local
                                         : throw InputError("unknown transition kind '" + kind + "'");
        if (alphabet.kind(letter) != expected)
            throw InputError("transition kind '" + kind + "' does not match letter '" + text(t, "letter") + "'");
        switch (expected) {
        case LetterClass::call: {
            const SymbolId s = symbol_of(vps, text(t, "symbol"));
            if (s == bottom_symbol) throw InputError("calls may not push the bottom marker");
            vps.calls.push_back({from, letter, to, s});
            break;
        }
        case LetterClass::ret: vps.returns.push_back({from, letter, symbol_of(vps, text(t, "symbol")), to}); break;
        case LetterClass::local: vps.locals.push_back({from, letter, to}); break;
        }
    }
    vps.normalize();
    return vps;
}

Json write_vps_fields(Json& j, const Vps& vps) {
    j["states"] = vps.states;
    j["stack"] = std::vector<std::string>(vps.symbols.begin() + 1, vps.symbols.end());
    return j;
}

Json write_transitions(const Vps& vps) {
    const auto& al = vps.alphabet;
    Json out = Json::array();
    for (const auto& r : vps.calls)
        out.push_back({{"from", vps.states[r.from]}, {"letter", al.letter(r.letter).id}, {"kind", "push"},
                       {"symbol", vps.symbols[r.push]}, {"to", vps.states[r.to]}});
    for (const auto& r : vps.returns)
        out.push_back({{"from", vps.states[r.from]}, {"letter", al.letter(r.letter).id}, {"kind", "pop"},
                       {"symbol", vps.symbols[r.pop]}, {"to", vps.states[r.to]}});
    for (const auto& r : vps.locals)
        out.push_back({{"from", vps.states[r.from]}, {"letter", al.letter(r.letter).id}, {"kind", "local"},
                       {"to", vps.states[r.to]}});
    return out;
}

std::vector<std::string> names(const Vps& vps, const std::vector<StateId>& ids) {
    std::vector<std::string> out;
    for (auto q : ids) out.push_back(vps.states.at(q));
    return out;
}

Json write_alphabet(const PushdownAlphabet& alphabet) {
    Json letters = Json::array();
    for (const auto& l : alphabet.letters())
        letters.push_back({{"id", l.id}, {"props", l.props}, {"class", std::string(to_string(l.kind))}});
    return {{"propositions", alphabet.propositions()}, {"letters", letters}};
}

Json write_aja(const std::string& id, const OneAja& a) {
    Json coloring = Json::object();
    for (std::size_t q = 0; q < a.size(); ++q) coloring[a.states[q]] = a.colors[q];
    Json transitions = Json::array();
    for (std::size_t q = 0; q < a.size(); ++q)
        for (LetterId l = 0; l < a.alphabet.size(); ++l)
            transitions.push_back(
                {{"from", a.states[q]}, {"letter", a.alphabet.letter(l).id}, {"formula", to_string(a, a.delta[q][l])}});
    std::vector<std::string> initial;
    for (auto q : a.initial) initial.push_back(a.states.at(q));
    return {{"id", id},         {"kind", "aja"},         {"states", a.states}, {"initial", initial},
            {"coloring", coloring}, {"transitions", transitions}};
}

OneAja read_aja(const Json& j, const PushdownAlphabet& alphabet) {
    OneAja a;
    a.alphabet = alphabet;
    const Json& coloring = field(j, "coloring");
    for (const auto& s : strings(j, "states")) {
        if (std::find(a.states.begin(), a.states.end(), s) != a.states.end())
            throw InputError("duplicate state '" + s + "'");
        if (!coloring.contains(s) || !coloring.at(s).is_number_unsigned())
            throw InputError("coloring is not total: '" + s + "'");
        a.add_state(s, coloring.at(s).get<unsigned>());
    }
    auto index = [&](const std::string& s) {
        const auto it = std::find(a.states.begin(), a.states.end(), s);
        if (it == a.states.end()) throw InputError("unknown state '" + s + "'");
        return static_cast<StateId>(it - a.states.begin());
    };
    for (const auto& s : strings(j, "initial")) a.initial.push_back(index(s));
    std::vector<std::vector<bool>> seen(a.size(), std::vector<bool>(alphabet.size(), false));
    for (const auto& t : field(j, "transitions")) {
        const StateId q = index(text(t, "from"));
        const LetterId l = alphabet.require(text(t, "letter"));
        a.delta[q][l] = parse_positive_bool(a, text(t, "formula"));
        seen[q][l] = true;
    }
    for (std::size_t q = 0; q < a.size(); ++q)
        for (LetterId l = 0; l < alphabet.size(); ++l)
            if (!seen[q][l])
                throw InputError("missing transition for state '" + a.states[q] + "' on '" + alphabet.letter(l).id + "'");
    return a;
}

} // namespace

Project parse_project(std::string_view json_text) {
    Json root;
    try {
        root = Json::parse(json_text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    try {
        Project p;
        const Json& al = field(root, "alphabet");
        std::vector<Letter> letters;
        for (const auto& l : field(al, "letters")) {
            const auto cls = parse_letter_class(text(l, "class"));
            if (!cls) throw InputError("unknown letter class '" + text(l, "class") + "'");
            letters.push_back({text(l, "id"), strings(l, "props"), *cls});
        }
        std::vector<std::string> props = strings(al, "propositions", false);
        if (props.empty()) {
            for (const auto& l : letters) props.insert(props.end(), l.props.begin(), l.props.end());
            std::sort(props.begin(), props.end());
            props.erase(std::unique(props.begin(), props.end()), props.end());
        }
        p.alphabet = PushdownAlphabet(std::move(props), std::move(letters));

        std::set<std::string> ids;
        // Guards first without tests so that test formulas can name any guard.
        std::map<std::string, std::map<std::string, std::string>> pending_tests;
        std::map<std::string, Tvpa> guards;
        const Json empty = Json::array();
        const Json& automata = root.contains("automata") ? root.at("automata") : empty;
        for (const auto& a : automata) {
            const std::string id = text(a, "id");
            if (!ids.insert(id).second) throw InputError("duplicate automaton id '" + id + "'");
            const std::string kind = text(a, "kind");
            if (kind == "aja") {
                p.ajas.emplace(id, read_aja(a, p.alphabet));
                continue;
            }
            Vps vps = read_vps(a, p.alphabet);
            if (kind == "tvpa") {
                Tvpa t;
                t.initial = states_of(vps, strings(a, "initial"));
                t.final = states_of(vps, strings(a, "final"));
                if (a.contains("tests"))
                    for (const auto& [state, formula] : a.at("tests").items()) {
                        state_of(vps, state);
                        if (!formula.is_string()) throw InputError("tests must map states to formula strings");
                        pending_tests[id][state] = formula.get<std::string>();
                    }
                t.vps = std::move(vps);
                guards.emplace(id, std::move(t));
            } else if (kind == "bvpa") {
                Bvpa b;
                b.initial = states_of(vps, strings(a, "initial"));
                b.accepting = states_of(vps, strings(a, "accepting"));
                b.vps = std::move(vps);
                p.bvpas.emplace(id, std::move(b));
            } else if (kind == "dpsa") {
                Dpsa d;
                const auto initial = states_of(vps, strings(a, "initial"));
                if (initial.size() != 1) throw InputError("a DPSA needs exactly one initial state");
                d.initial = initial.front();
                const Json& coloring = field(a, "coloring");
                for (const auto& s : vps.states) {
                    if (!coloring.contains(s) || !coloring.at(s).is_number_unsigned())
                        throw InputError("coloring is not total: '" + s + "'");
                    d.colors.push_back(coloring.at(s).get<unsigned>());
                }
                d.vps = std::move(vps);
                p.dpsas.emplace(id, std::move(d));
            } else if (kind == "vps") {
                const auto initial = states_of(vps, strings(a, "initial", false));
                if (!initial.empty()) p.system_start[id] = initial.front();
                p.systems.emplace(id, std::move(vps));
            } else {
                throw InputError("unknown automaton kind '" + kind + "'");
            }
        }
        AutomatonTable names_only;
        for (const auto& [id, g] : guards) names_only.add(id, g);
        for (auto& [id, g] : guards)
            for (const auto& [state, formula] : pending_tests[id])
                g.tests[state_of(g.vps, state)] = parse_formula(formula, names_only, p.alphabet);
        for (auto& [id, g] : guards) p.guards.add(id, std::move(g));

        if (root.contains("formulas"))
            for (const auto& f : root.at("formulas")) {
                const std::string id = text(f, "id");
                if (p.formula_text.contains(id)) throw InputError("duplicate formula id '" + id + "'");
                p.formula_text[id] = text(f, "text");
                p.formulas.emplace(id, parse_formula(p.formula_text[id], p.guards, p.alphabet));
                check_references(p.formulas.at(id), p.guards);
            }
        for (const auto& [id, g] : p.guards.entries())
            for (const auto& [q, t] : g.tests) check_references(t, p.guards);

        if (root.contains("words"))
            for (const auto& w : root.at("words")) {
                const std::string id = text(w, "id");
                if (p.words.contains(id)) throw InputError("duplicate word id '" + id + "'");
                const auto prefix = strings(w, "prefix");
                const auto period = strings(w, "period");
                p.words.emplace(id, parse_lasso(p.alphabet, prefix, period));
            }
        return p;
    } catch (const Json::exception& e) {
        throw InputError(std::string("schema violation: ") + e.what());
    }
}

Project load_project(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_project(buffer.str());
}

std::string dump_project(const Project& p) {
    Json root;
    root["alphabet"] = write_alphabet(p.alphabet);
    Json automata = Json::array();
    for (const auto& [id, g] : p.guards.entries()) {
        Json j{{"id", id}, {"kind", "tvpa"}};
        write_vps_fields(j, g.vps);
        j["initial"] = names(g.vps, g.initial);
        j["final"] = names(g.vps, g.final);
        j["transitions"] = write_transitions(g.vps);
        if (!g.tests.empty()) {
            Json tests = Json::object();
            for (const auto& [q, f] : g.tests) tests[g.vps.states[q]] = to_string(f);
            j["tests"] = tests;
        }
        automata.push_back(j);
    }
    for (const auto& [id, b] : p.bvpas) {
        Json j{{"id", id}, {"kind", "bvpa"}};
        write_vps_fields(j, b.vps);
        j["initial"] = names(b.vps, b.initial);
        j["accepting"] = names(b.vps, b.accepting);
        j["transitions"] = write_transitions(b.vps);
        automata.push_back(j);
    }
    for (const auto& [id, d] : p.dpsas) {
        Json j{{"id", id}, {"kind", "dpsa"}};
        write_vps_fields(j, d.vps);
        j["initial"] = names(d.vps, {d.initial});
        Json coloring = Json::object();
        for (std::size_t q = 0; q < d.vps.state_count(); ++q) coloring[d.vps.states[q]] = d.colors.at(q);
        j["coloring"] = coloring;
        j["transitions"] = write_transitions(d.vps);
        automata.push_back(j);
    }
    for (const auto& [id, s] : p.systems) {
        Json j{{"id", id}, {"kind", "vps"}};
        write_vps_fields(j, s);
        if (auto it = p.system_start.find(id); it != p.system_start.end())
            j["initial"] = names(s, {it->second});
        j["transitions"] = write_transitions(s);
        automata.push_back(j);
    }
    for (const auto& [id, a] : p.ajas) automata.push_back(write_aja(id, a));
    root["automata"] = automata;
    Json formulas = Json::array();
    for (const auto& [id, f] : p.formulas) {
        const auto it = p.formula_text.find(id);
        formulas.push_back({{"id", id}, {"text", it != p.formula_text.end() ? it->second : to_string(f)}});
    }
    root["formulas"] = formulas;
    Json words = Json::array();
    for (const auto& [id, w] : p.words) {
        std::vector<std::string> prefix, period;
        for (auto l : w.prefix) prefix.push_back(p.alphabet.letter(l).id);
        for (auto l : w.period) period.push_back(p.alphabet.letter(l).id);
        words.push_back({{"id", id}, {"prefix", prefix}, {"period", period}});
    }
    root["words"] = words;
    return root.dump(2) + "\n";
}

std::string dump_aja(const std::string& id, const OneAja& a) {
    Json root;
    root["alphabet"] = write_alphabet(a.alphabet);
    root["automata"] = Json::array({write_aja(id, a)});
    return root.dump(2) + "\n";
}

} // namespace vldl
