#pragma once

#include "vldl/aja.hpp"
#include "vldl/automata.hpp"
#include "vldl/word.hpp"

#include <map>
#include <string>
#include <string_view>

namespace vldl {

// A project file: one alphabet plus named automata, formulas and words.
struct Project {
    PushdownAlphabet alphabet;
    AutomatonTable guards; // kind "tvpa"
    std::map<std::string, Bvpa> bvpas;
    std::map<std::string, Dpsa> dpsas;
    std::map<std::string, OneAja> ajas;
    std::map<std::string, Vps> systems;
    std::map<std::string, StateId> system_start; // first listed initial state, if any
    std::map<std::string, std::string> formula_text;
    std::map<std::string, Formula> formulas;
    std::map<std::string, LassoWord> words;

    const Formula& formula(const std::string& id) const; // throws InputError
    const LassoWord& word(const std::string& id) const;
};

// Throws InputError on malformed JSON, schema violations or dangling ids.
Project parse_project(std::string_view json_text);
Project load_project(const std::string& path);

// Canonical JSON rendering (fixed key order, two-space indent).
std::string dump_project(const Project& p);

// Minimal project holding a single automaton.
std::string dump_aja(const std::string& id, const OneAja& a);

} // namespace vldl
