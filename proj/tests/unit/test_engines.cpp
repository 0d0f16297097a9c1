#include "oracles.hpp"

#include "vldl/corpus.hpp"
#include "vldl/error.hpp"
#include "vldl/parity.hpp"
#include "vldl/pushdown.hpp"

#include <doctest.h>

#include <set>

using namespace vldl;

namespace {

std::optional<PdsConfiguration> apply(const PushdownSystem& pds, const PdsConfiguration& c, std::uint32_t rule) {
    const auto& r = pds.rules.at(rule);
    if (r.from != c.control) return std::nullopt;
    PdsConfiguration next{r.to, c.stack};
    if (r.kind == RuleKind::push) next.stack.insert(next.stack.begin(), r.symbol);
    if (r.kind == RuleKind::pop) {
        if (c.stack.front() != r.symbol) return std::nullopt;
        if (r.symbol != 0) next.stack.erase(next.stack.begin());
    }
    return next;
}

} // namespace

TEST_CASE("pre* of a single internal step") {
    PushdownSystem pds{2, 1, {{RuleKind::internal, 0, 1, 0, 0}}};
    const auto result = pre_star(pds, oracle::exact_targets(pds, {{1, {0}}}));
    const std::vector<StackSymbol> bottom{0};
    CHECK(result.accepts(0, bottom));
    CHECK(result.accepts(1, bottom));
}

TEST_CASE("pre* cannot shrink a stack through pushes") {
    PushdownSystem pds{2, 3, {{RuleKind::push, 0, 1, 1, 0}, {RuleKind::push, 1, 0, 2, 1}, {RuleKind::push, 1, 1, 1, 2}}};
    const auto result = pre_star(pds, oracle::exact_targets(pds, {{0, {0}}}));
    for (const auto& c : oracle::configurations(pds, 4)) CHECK(result.accepts(c.control, c.stack) == (c == PdsConfiguration{0, {0}}));
}

TEST_CASE("pre* rejects targets with edges into control states") {
    PushdownSystem pds{2, 1, {}};
    PAutomaton bad(2, 1);
    bad.add_edge(0, 0, 1);
    CHECK_THROWS_AS(pre_star(pds, bad), ContractViolation);
}

TEST_CASE("pre* agrees with bounded breadth-first search") {
    corpus::Rng rng(21);
    std::size_t mismatches = 0;
    for (int i = 0; i < 200; ++i) {
        const auto pds = corpus::random_pds(rng, 4, 3, 8);
        std::set<PdsConfiguration> targets;
        const auto all = oracle::configurations(pds, 2);
        for (int j = 0; j < 3; ++j) targets.insert(all[rng() % all.size()]);
        const auto engine = pre_star(pds, oracle::exact_targets(pds, targets));
        // Paths from height-6 configurations may have to push first, so the
        // search explores up to height 12; within height 6 alone it can only
        // under-approximate.
        const auto expected = oracle::bounded_pre_star(pds, targets, 6, 12);
        const auto tight = oracle::bounded_pre_star(pds, targets, 6, 6);
        for (const auto& c : oracle::configurations(pds, 6)) {
            const bool accepted = engine.accepts(c.control, c.stack);
            mismatches += accepted != expected.contains(c);
            if (tight.contains(c)) CHECK(accepted);
        }
    }
    CHECK(mismatches == 0);
}

TEST_CASE("any-stack targets") {
    corpus::Rng rng(22);
    for (int i = 0; i < 100; ++i) {
        const auto pds = corpus::random_pds(rng, 4, 3, 8);
        const std::vector<ControlId> controls{0};
        const auto engine = pre_star(pds, any_stack(pds, controls));
        std::set<PdsConfiguration> targets;
        for (const auto& c : oracle::configurations(pds, 6))
            if (c.control == 0) targets.insert(c);
        const auto expected = oracle::bounded_pre_star(pds, targets, 4, 6);
        for (const auto& c : oracle::configurations(pds, 4)) CHECK(engine.accepts(c.control, c.stack) == expected.contains(c));
    }
}

TEST_CASE("Büchi emptiness basics") {
    PushdownSystem loop{1, 1, {{RuleKind::internal, 0, 0, 0, 0}}};
    CHECK(buchi_nonempty(loop, {0, {0}}, {true}));
    CHECK_FALSE(buchi_nonempty(loop, {0, {0}}, {false}));
    // Unbounded pushing still repeats heads.
    PushdownSystem pusher{1, 2, {{RuleKind::push, 0, 0, 1, 0}}};
    CHECK(buchi_nonempty(pusher, {0, {0}}, {true}));
    // A run that must pop forever dies.
    PushdownSystem popper{2, 2, {{RuleKind::pop, 0, 0, 1, 0}}};
    CHECK_FALSE(buchi_nonempty(popper, {0, {1, 1, 0}}, {true, true}));
}

TEST_CASE("Büchi emptiness against a bounded lasso search, with replayed witnesses") {
    corpus::Rng rng(23);
    for (int i = 0; i < 200; ++i) {
        const auto pds = corpus::random_pds(rng, 3, 3, 7);
        std::vector<bool> accepting(pds.controls);
        for (auto&& a : accepting) a = rng() % 2 == 0;
        const PdsConfiguration start{0, {0}};
        const bool engine = buchi_nonempty(pds, start, accepting);
        const bool bounded = oracle::bounded_buchi(pds, start, accepting, 5);
        // The bounded search only sees runs with small stacks.
        if (bounded) CHECK(engine);
        if (!engine) continue;
        const auto lasso = buchi_witness(pds, start, accepting);
        REQUIRE(lasso.has_value());
        REQUIRE_FALSE(lasso->cycle.empty());
        PdsConfiguration c = start;
        for (auto r : lasso->prefix) {
            auto next = apply(pds, c, r);
            REQUIRE(next.has_value());
            c = *next;
        }
        // Three turns of the cycle, each returning to the same head and
        // passing an accepting control.
        for (int turn = 0; turn < 3; ++turn) {
            const auto head = std::make_pair(c.control, c.stack.front());
            bool visited = false;
            for (auto r : lasso->cycle) {
                auto next = apply(pds, c, r);
                REQUIRE(next.has_value());
                c = *next;
                visited |= accepting[c.control];
            }
            CHECK(visited);
            CHECK(std::make_pair(c.control, c.stack.front()) == head);
        }
    }
}

TEST_CASE("parity basics") {
    ParityGame even;
    even.add_node(Player::all, 0);
    even.add_edge(0, 0);
    CHECK(solve_parity(even).exists_wins[0]);
    ParityGame odd;
    odd.add_node(Player::exists, 1);
    odd.add_edge(0, 0);
    CHECK_FALSE(solve_parity(odd).exists_wins[0]);

    ParityGame stuck;
    stuck.add_node(Player::exists, 0);
    stuck.add_node(Player::all, 0);
    stuck.close_terminals();
    const auto s = solve_parity(stuck);
    CHECK_FALSE(s.exists_wins[0]);
    CHECK(s.exists_wins[1]);
}

TEST_CASE("parity against positional brute force") {
    corpus::Rng rng(24);
    for (int i = 0; i < 500; ++i) {
        const auto game = corpus::random_parity_game(rng, 7, 2);
        const auto solution = solve_parity(game);
        CHECK(solution.exists_wins == oracle::parity_brute_force(game));
        CHECK(check_strategy(game, solution));
    }
}

TEST_CASE("strategy checker catches a losing choice") {
    ParityGame g;
    g.add_node(Player::exists, 0);
    g.add_node(Player::all, 2);
    g.add_node(Player::all, 1);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 1);
    g.add_edge(2, 2);
    auto solution = solve_parity(g);
    REQUIRE(solution.exists_wins[0]);
    CHECK(solution.strategy[0] == std::optional<std::uint32_t>(1));
    CHECK(check_strategy(g, solution));
    solution.strategy[0] = 2;
    CHECK_FALSE(check_strategy(g, solution));
}
