#pragma once

#include "vldl/aja.hpp"
#include "vldl/automata.hpp"
#include "vldl/ltl.hpp"

#include <map>

#include <string>
#include <variant>

namespace vldl {

// Provenance of a state created by the diamond construction. Rendered names
// are stable, so repeated translations produce identical automata.
struct MainTag {
    StateId state;
    bool flag; // set once a call has been skipped
};
struct VerifyTag {
    StateId state;
    StateId target;
    SymbolId symbol; // never the bottom marker
};
struct SinkTag {
    bool accepting;
};
struct ImportedTag {
    std::string origin;
    std::string state;
};
using AjaStateTag = std::variant<MainTag, VerifyTag, SinkTag, ImportedTag>;

std::string state_name(const AjaStateTag& tag, const Vps& guard);

// Atom checker: probe (color 1) branching to an accepting (2) or rejecting (1) sink.
OneAja atom_aja(const PushdownAlphabet& alphabet, const std::string& proposition);

OneAja aja_union(const OneAja& lhs, const OneAja& rhs);
OneAja aja_intersection(const OneAja& lhs, const OneAja& rhs);
// Dualization: single initial state, swapped connectives, colors + 1.
OneAja aja_complement(const OneAja& a);

// <guard> operand, given the automata for the operand and for each distinct
// test formula of the guard (keyed by its rendering).
OneAja diamond_aja(const Tvpa& guard, const OneAja& operand, const std::map<std::string, OneAja>& tests);

OneAja vldl_to_aja(const Formula& f, const AutomatonTable& table, const PushdownAlphabet& alphabet);

// Guard accepting exactly the infixes that end with an unmatched return.
Tvpa steps_guard(const PushdownAlphabet& alphabet);
// [A_st] ff; the guard is registered under `st` (or a fresh variant).
Property phi_st(const PushdownAlphabet& alphabet);

// Disjunction over even-colored q of
//   <I A q>(st && [q A >q] !st) && [I A q](st -> <q A q> st).
Property dpsa_to_vldl(const Dpsa& d);

// Alphabet {0, 1, #} (all local) with propositions zero, one, hash.
PushdownAlphabet counter_alphabet();
Ltl counter_ltl(unsigned n);
// Embedded LTL formula whose only model is # bin(0) # ... # bin(2^n - 1) # #^omega.
Property counter_formula(unsigned n);

} // namespace vldl
