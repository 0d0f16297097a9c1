#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace vldl {

using ControlId = std::uint32_t;
using StackSymbol = std::uint32_t; // 0 is the bottom marker

enum class RuleKind : std::uint8_t { push, pop, internal };

// push: any top A becomes symbol A. pop: removes `symbol`; popping the bottom
// marker leaves it in place. internal: top unchanged.
struct PushdownRule {
    RuleKind kind = RuleKind::internal;
    ControlId from = 0;
    ControlId to = 0;
    StackSymbol symbol = 0;
    std::uint32_t label = 0; // opaque to the engines
};

struct PushdownSystem {
    std::uint32_t controls = 0;
    std::uint32_t symbols = 1;
    std::vector<PushdownRule> rules;
};

// Stack written top first, ending with the bottom marker.
struct PdsConfiguration {
    ControlId control = 0;
    std::vector<StackSymbol> stack{0};
    auto operator<=>(const PdsConfiguration&) const = default;
};

// Finite automaton over stack symbols whose first `controls` states are the
// control states of a pushdown system; (p, w) is accepted if w leads from p
// to a final state.
class PAutomaton {
public:
    struct Edge {
        std::uint32_t from;
        StackSymbol symbol;
        std::uint32_t to;
        auto operator<=>(const Edge&) const = default;
    };

    PAutomaton(std::uint32_t controls, std::uint32_t symbols);

    std::uint32_t add_state(bool final);
    void set_final(std::uint32_t state, bool final = true);
    void add_edge(std::uint32_t from, StackSymbol symbol, std::uint32_t to);

    std::uint32_t controls() const { return controls_; }
    std::uint32_t symbols() const { return symbols_; }
    std::uint32_t states() const { return static_cast<std::uint32_t>(final_.size()); }
    bool is_final(std::uint32_t s) const { return final_[s]; }
    bool has_edge(std::uint32_t from, StackSymbol symbol, std::uint32_t to) const;
    const std::vector<std::uint32_t>& targets(std::uint32_t from, StackSymbol symbol) const;
    std::vector<Edge> edges() const;

    bool accepts(ControlId control, std::span<const StackSymbol> stack) const;

private:
    std::uint32_t controls_;
    std::uint32_t symbols_;
    std::vector<bool> final_;
    std::vector<std::vector<std::uint32_t>> out_; // [state * symbols + symbol]
};

// Saturation: the result accepts exactly the configurations that can reach
// one accepted by `targets`. Edges into control states are not allowed in
// `targets`.
PAutomaton pre_star(const PushdownSystem& pds, const PAutomaton& targets);

// Target automaton for "control in `controls`, any stack".
PAutomaton any_stack(const PushdownSystem& pds, std::span<const ControlId> controls);

struct BuchiLasso {
    std::vector<std::uint32_t> prefix; // rule indices
    std::vector<std::uint32_t> cycle;
};

// Whether some infinite run from `start` visits `accepting` controls
// infinitely often, decided through repeating heads.
bool buchi_nonempty(const PushdownSystem& pds, const PdsConfiguration& start, const std::vector<bool>& accepting);

// Rule sequences u, v such that u v^omega is an accepting run from `start`.
// `search_limit` bounds the explicit searches that rebuild the run.
std::optional<BuchiLasso> buchi_witness(const PushdownSystem& pds, const PdsConfiguration& start,
                                        const std::vector<bool>& accepting, std::size_t search_limit = 2'000'000);

// Successor configurations via each rule, paired with the rule index.
std::vector<std::pair<std::uint32_t, PdsConfiguration>> pds_successors(const PushdownSystem& pds,
                                                                       const PdsConfiguration& c);

} // namespace vldl
