#pragma once

#include "vldl/automata.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace vldl {

// Grammar, loosest binding first: <->, -> (right-assoc), ||, &&, then the
// prefix operators !, <id>, [id]. Atoms must be declared propositions; tt and
// ff expand over the first declared proposition. Throws InputError.
Formula parse_formula(std::string_view text, const AutomatonTable& table, const PushdownAlphabet& alphabet);

// Pushes negations down to atoms; guard automata are left untouched.
Formula nnf(const Formula& f);

// Distinct subformulas of f and of every test reachable through its guards.
std::vector<Formula> subformulas(const Formula& f, const AutomatonTable& table);

// Ids of the guard automata reachable from f (through tests as well).
std::vector<std::string> referenced_automata(const Formula& f, const AutomatonTable& table);

// Distinct subformulas plus the states of every referenced automaton.
std::size_t formula_size(const Formula& f, const AutomatonTable& table);

// Nesting depth of diamond/box operators, not counting tests.
std::size_t temporal_depth(const Formula& f);

} // namespace vldl
