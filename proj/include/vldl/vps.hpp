#pragma once

#include "vldl/alphabet.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vldl {

using StateId = std::uint32_t;
using SymbolId = std::uint32_t;

// Stack symbol 0 is always the bottom marker.
inline constexpr SymbolId bottom_symbol = 0;
inline constexpr std::string_view bottom_name = "bot";

struct CallRule {
    StateId from;
    LetterId letter;
    StateId to;
    SymbolId push;
    auto operator<=>(const CallRule&) const = default;
};

struct ReturnRule {
    StateId from;
    LetterId letter;
    SymbolId pop; // may be the bottom marker
    StateId to;
    auto operator<=>(const ReturnRule&) const = default;
};

struct LocalRule {
    StateId from;
    LetterId letter;
    StateId to;
    auto operator<=>(const LocalRule&) const = default;
};

// Visibly pushdown system: states, shared alphabet, stack symbols and rules.
struct Vps {
    PushdownAlphabet alphabet;
    std::vector<std::string> states;
    std::vector<std::string> symbols{std::string(bottom_name)};
    std::vector<CallRule> calls;
    std::vector<ReturnRule> returns;
    std::vector<LocalRule> locals;

    std::size_t state_count() const { return states.size(); }
    std::size_t symbol_count() const { return symbols.size(); }
    std::optional<StateId> find_state(std::string_view name) const;
    std::optional<SymbolId> find_symbol(std::string_view name) const;
    StateId add_state(std::string name);
    SymbolId add_symbol(std::string name);
    // Canonical rule order (sorted, duplicates removed).
    void normalize();

    bool operator==(const Vps&) const = default;
};

// Stack written top first, ending with the bottom marker.
struct Configuration {
    StateId state;
    std::vector<SymbolId> stack{bottom_symbol};
    auto operator<=>(const Configuration&) const = default;
};

std::vector<Configuration> config_successors(const Vps& vps, const Configuration& c, LetterId letter);

} // namespace vldl
