#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace vldl {

enum class Player : std::uint8_t { exists, all };

// Max-parity game: Exists wins a play iff the largest color seen infinitely
// often is even.
struct ParityGame {
    std::vector<Player> owner;
    std::vector<std::uint32_t> color;
    std::vector<std::vector<std::uint32_t>> successors;

    std::uint32_t add_node(Player who, std::uint32_t c);
    void add_edge(std::uint32_t from, std::uint32_t to);
    std::uint32_t size() const { return static_cast<std::uint32_t>(owner.size()); }

    // Gives every dead end a self-loop and a color that makes its owner lose.
    void close_terminals();
};

struct ParitySolution {
    std::vector<bool> exists_wins;
    // Chosen successor for each node on its owner's winning region.
    std::vector<std::optional<std::uint32_t>> strategy;
};

// Zielonka's recursive algorithm. Every node needs a successor.
ParitySolution solve_parity(const ParityGame& game);

// Independent check that both strategies win on their regions: the region is
// closed under the opponent's moves, and no cycle of the restricted graph has
// a maximum color of the wrong parity.
bool check_strategy(const ParityGame& game, const ParitySolution& solution);

} // namespace vldl
