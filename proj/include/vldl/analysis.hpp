#pragma once

#include "vldl/automata.hpp"
#include "vldl/word.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace vldl {

struct SearchBounds {
    unsigned max_prefix = 3;
    unsigned max_period = 2;
    std::optional<std::vector<LetterId>> letters; // restriction, in enumeration order
};

enum class Outcome : std::uint8_t { witness_found, exhausted_bounds, holds, counterexample };

struct Verdict {
    Outcome outcome = Outcome::exhausted_bounds;
    std::optional<LassoWord> word;
    std::size_t examined = 0; // lassos considered
};

std::string_view to_string(Outcome o);

// Calls `visit` on lassos ordered by total length, then period length, then
// prefix and period lexicographically; stops when it returns true.
void enumerate_lassos(const PushdownAlphabet& alphabet, const SearchBounds& bounds,
                      const std::function<bool(const LassoWord&)>& visit);

Verdict bounded_sat(const Formula& f, const AutomatonTable& table, const PushdownAlphabet& alphabet,
                    const SearchBounds& bounds);
Verdict bounded_validity(const Formula& f, const AutomatonTable& table, const PushdownAlphabet& alphabet,
                         const SearchBounds& bounds);

// Whether u v^omega is a trace of the system from (q0, bottom) through a run
// whose control repeats at the start of v, with either the same configuration
// or a period that never dips below its entry height and does not shrink.
bool is_repeatable_trace(const Vps& system, StateId q0, const LassoWord& word);

Verdict bounded_refute(const Vps& system, StateId q0, const Formula& f, const AutomatonTable& table,
                       const SearchBounds& bounds);

// Exact check that no trace of the system is accepted by `bad`.
Verdict intersect_empty(const Vps& system, StateId q0, const Bvpa& bad);

} // namespace vldl
