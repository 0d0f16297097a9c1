#include "vldl/parity.hpp"

#include "vldl/error.hpp"

#include <algorithm>
#include <functional>

namespace vldl {

std::uint32_t ParityGame::add_node(Player who, std::uint32_t c) {
    owner.push_back(who);
    color.push_back(c);
    successors.emplace_back();
    return size() - 1;
}

void ParityGame::add_edge(std::uint32_t from, std::uint32_t to) {
    if (from >= size() || to >= size()) throw ContractViolation("parity edge out of range");
    auto& out = successors[from];
    if (std::find(out.begin(), out.end(), to) == out.end()) out.push_back(to);
}

void ParityGame::close_terminals() {
    for (std::uint32_t v = 0; v < size(); ++v) {
        if (!successors[v].empty()) continue;
        successors[v].push_back(v);
        color[v] = owner[v] == Player::exists ? 1 : 2;
    }
}

namespace {

using Mask = std::vector<char>;

Player opponent(Player p) { return p == Player::exists ? Player::all : Player::exists; }

class Zielonka {
public:
    explicit Zielonka(const ParityGame& g) : g_(g), pred_(g.size()), strategy_(g.size()) {
        for (std::uint32_t v = 0; v < g.size(); ++v) {
            if (g.successors[v].empty()) throw ContractViolation("parity game node without successor");
            for (auto w : g.successors[v]) pred_[w].push_back(v);
        }
    }

    ParitySolution run() {
        Mask all(g_.size(), 1);
        auto [exists_region, all_region] = solve(all);
        ParitySolution s;
        s.exists_wins.assign(exists_region.begin(), exists_region.end());
        s.strategy = strategy_;
        return s;
    }

private:
    // Attractor of `target` for `who` inside `game`; records attracting moves.
    Mask attract(const Mask& game, const Mask& target, Player who) {
        Mask in = target;
        std::vector<std::uint32_t> queue, remaining(g_.size(), 0);
        for (std::uint32_t v = 0; v < g_.size(); ++v) {
            if (!game[v]) continue;
            if (in[v]) queue.push_back(v);
            for (auto w : g_.successors[v]) remaining[v] += game[w] ? 1 : 0;
        }
        for (std::size_t i = 0; i < queue.size(); ++i) {
            const auto w = queue[i];
            for (auto v : pred_[w]) {
                if (!game[v] || in[v]) continue;
                if (g_.owner[v] == who) {
                    strategy_[v] = w;
                } else if (--remaining[v] > 0) {
                    continue;
                }
                in[v] = 1;
                queue.push_back(v);
            }
        }
        return in;
    }

    static Mask minus(const Mask& a, const Mask& b) {
        Mask r(a.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] && !b[i];
        return r;
    }

    // Returns the winning regions of (Exists, All) in the subgame `game`.
    std::pair<Mask, Mask> solve(const Mask& game) {
        const auto n = g_.size();
        std::optional<std::uint32_t> top;
        for (std::uint32_t v = 0; v < n; ++v)
            if (game[v]) top = std::max(top.value_or(0), g_.color[v]);
        if (!top) return {Mask(n, 0), Mask(n, 0)};
        const Player me = *top % 2 == 0 ? Player::exists : Player::all;
        const Player you = opponent(me);

        Mask target(n, 0);
        for (std::uint32_t v = 0; v < n; ++v) target[v] = game[v] && g_.color[v] == *top;
        const Mask attractor = attract(game, target, me);
        auto [sub_exists, sub_all] = solve(minus(game, attractor));
        Mask& sub_you = you == Player::exists ? sub_exists : sub_all;

        if (std::none_of(sub_you.begin(), sub_you.end(), [](char c) { return c; })) {
            // Top-color nodes of `me` may move anywhere inside the game.
            for (std::uint32_t v = 0; v < n; ++v) {
                if (!target[v] || g_.owner[v] != me) continue;
                for (auto w : g_.successors[v])
                    if (game[w]) {
                        strategy_[v] = w;
                        break;
                    }
            }
            Mask won = game, lost(n, 0);
            return me == Player::exists ? std::pair{won, lost} : std::pair{lost, won};
        }
        const Mask taken = attract(game, sub_you, you);
        auto [rest_exists, rest_all] = solve(minus(game, taken));
        Mask& rest_you = you == Player::exists ? rest_exists : rest_all;
        for (std::uint32_t v = 0; v < n; ++v)
            if (taken[v]) rest_you[v] = 1;
        return {rest_exists, rest_all};
    }

    const ParityGame& g_;
    std::vector<std::vector<std::uint32_t>> pred_;
    std::vector<std::optional<std::uint32_t>> strategy_;
};

} // namespace

ParitySolution solve_parity(const ParityGame& game) {
    ParitySolution s = Zielonka(game).run();
    // Drop choices left over from nodes outside their owner's region.
    for (std::uint32_t v = 0; v < game.size(); ++v) {
        const bool mine = (game.owner[v] == Player::exists) == s.exists_wins[v];
        if (!mine) s.strategy[v].reset();
    }
    return s;
}

namespace {

// Whether every cycle inside `nodes` (under `edges`) has its max color with
// parity `good` (0 = even).
bool cycles_have_parity(const ParityGame& g, const std::vector<char>& nodes,
                        const std::vector<std::vector<std::uint32_t>>& edges, std::uint32_t good) {
    std::uint32_t top = 0;
    for (std::uint32_t v = 0; v < g.size(); ++v)
        if (nodes[v]) top = std::max(top, g.color[v]);
    for (std::uint32_t d = 0; d <= top; ++d) {
        if (d % 2 == good) continue;
        // SCCs among nodes of color <= d; any nontrivial one holding color d is bad.
        std::vector<char> keep(g.size(), 0);
        for (std::uint32_t v = 0; v < g.size(); ++v) keep[v] = nodes[v] && g.color[v] <= d;
        std::vector<int> index(g.size(), -1), low(g.size(), 0), comp(g.size(), -1);
        std::vector<std::uint32_t> stack;
        std::vector<char> on(g.size(), 0);
        int counter = 0, comps = 0;
        std::function<void(std::uint32_t)> visit = [&](std::uint32_t v) {
            index[v] = low[v] = counter++;
            stack.push_back(v);
            on[v] = 1;
            for (auto w : edges[v]) {
                if (!keep[w]) continue;
                if (index[w] < 0) {
                    visit(w);
                    low[v] = std::min(low[v], low[w]);
                } else if (on[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
            }
            if (low[v] == index[v]) {
                std::uint32_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on[w] = 0;
                    comp[w] = comps;
                } while (w != v);
                ++comps;
            }
        };
        for (std::uint32_t v = 0; v < g.size(); ++v)
            if (keep[v] && index[v] < 0) visit(v);
        std::vector<char> nontrivial(comps, 0);
        for (std::uint32_t v = 0; v < g.size(); ++v)
            if (keep[v])
                for (auto w : edges[v])
                    if (keep[w] && comp[w] == comp[v]) nontrivial[comp[v]] = 1;
        for (std::uint32_t v = 0; v < g.size(); ++v)
            if (keep[v] && g.color[v] == d && nontrivial[comp[v]]) return false;
    }
    return true;
}

bool region_wins(const ParityGame& g, const ParitySolution& s, Player who) {
    std::vector<char> region(g.size(), 0);
    for (std::uint32_t v = 0; v < g.size(); ++v) region[v] = s.exists_wins[v] == (who == Player::exists);
    std::vector<std::vector<std::uint32_t>> edges(g.size());
    for (std::uint32_t v = 0; v < g.size(); ++v) {
        if (!region[v]) continue;
        if (g.owner[v] == who) {
            const auto& choice = s.strategy[v];
            if (!choice || !region[*choice]) return false;
            const auto& out = g.successors[v];
            if (std::find(out.begin(), out.end(), *choice) == out.end()) return false;
            edges[v].push_back(*choice);
        } else {
            for (auto w : g.successors[v]) {
                if (!region[w]) return false;
                edges[v].push_back(w);
            }
        }
    }
    return cycles_have_parity(g, region, edges, who == Player::exists ? 0 : 1);
}

} // namespace

bool check_strategy(const ParityGame& game, const ParitySolution& solution) {
    if (solution.exists_wins.size() != game.size() || solution.strategy.size() != game.size()) return false;
    return region_wins(game, solution, Player::exists) && region_wins(game, solution, Player::all);
}

} // namespace vldl
