#pragma once

#include "vldl/formula.hpp"
#include "vldl/vps.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vldl {

// Testing VPA: a VPS with initial/final states and per-state test formulas.
struct Tvpa {
    Vps vps;
    std::vector<StateId> initial;
    std::vector<StateId> final;
    std::map<StateId, Formula> tests; // absent means tt

    bool is_initial(StateId q) const;
    bool is_final(StateId q) const;
    const Formula* test(StateId q) const;
};

struct Bvpa {
    Vps vps;
    std::vector<StateId> initial;
    std::vector<StateId> accepting;

    bool is_initial(StateId q) const;
    bool is_accepting(StateId q) const;
};

// Deterministic parity stair automaton.
struct Dpsa {
    Vps vps;
    StateId initial = 0;
    std::vector<unsigned> colors;

    std::vector<StateId> even_states() const;
    std::vector<StateId> states_above(StateId q) const; // strictly larger color
};

class AutomatonTable {
public:
    void add(std::string id, Tvpa automaton); // throws InputError on duplicates
    const Tvpa* find(const std::string& id) const;
    const Tvpa& require(const std::string& id) const; // throws InputError
    bool contains(const std::string& id) const { return entries_.contains(id); }
    const std::map<std::string, Tvpa>& entries() const { return entries_; }
    // Copies every automaton of `other`; throws on conflicting ids.
    void merge(const AutomatonTable& other);
    // Id not yet in use, derived from `stem`.
    std::string fresh_id(const std::string& stem) const;

private:
    std::map<std::string, Tvpa> entries_;
};

// A formula together with the guards it references.
struct Property {
    Formula formula;
    AutomatonTable automata;
};

// Throws InputError if a referenced automaton is missing or tests are cyclic.
void check_references(const Formula& f, const AutomatonTable& table);

} // namespace vldl
