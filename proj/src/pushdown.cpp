#include "vldl/pushdown.hpp"

#include "vldl/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace vldl {

PAutomaton::PAutomaton(std::uint32_t controls, std::uint32_t symbols)
    : controls_(controls), symbols_(symbols), final_(controls, false), out_(std::size_t{controls} * symbols) {}

std::uint32_t PAutomaton::add_state(bool final) {
    final_.push_back(final);
    out_.resize(final_.size() * symbols_);
    return static_cast<std::uint32_t>(final_.size() - 1);
}

void PAutomaton::set_final(std::uint32_t state, bool final) { final_.at(state) = final; }

void PAutomaton::add_edge(std::uint32_t from, StackSymbol symbol, std::uint32_t to) {
    auto& list = out_.at(std::size_t{from} * symbols_ + symbol);
    if (std::find(list.begin(), list.end(), to) == list.end()) list.push_back(to);
}

bool PAutomaton::has_edge(std::uint32_t from, StackSymbol symbol, std::uint32_t to) const {
    const auto& list = out_.at(std::size_t{from} * symbols_ + symbol);
    return std::find(list.begin(), list.end(), to) != list.end();
}

const std::vector<std::uint32_t>& PAutomaton::targets(std::uint32_t from, StackSymbol symbol) const {
    return out_.at(std::size_t{from} * symbols_ + symbol);
}

std::vector<PAutomaton::Edge> PAutomaton::edges() const {
    std::vector<Edge> out;
    for (std::uint32_t s = 0; s < states(); ++s)
        for (StackSymbol a = 0; a < symbols_; ++a)
            for (auto t : targets(s, a)) out.push_back({s, a, t});
    std::sort(out.begin(), out.end());
    return out;
}

bool PAutomaton::accepts(ControlId control, std::span<const StackSymbol> stack) const {
    std::vector<bool> current(states(), false);
    current.at(control) = true;
    for (StackSymbol a : stack) {
        std::vector<bool> next(states(), false);
        for (std::uint32_t s = 0; s < states(); ++s)
            if (current[s])
                for (auto t : targets(s, a)) next[t] = true;
        current = std::move(next);
    }
    for (std::uint32_t s = 0; s < states(); ++s)
        if (current[s] && final_[s]) return true;
    return false;
}

PAutomaton any_stack(const PushdownSystem& pds, std::span<const ControlId> controls) {
    PAutomaton a(pds.controls, pds.symbols);
    const auto sink = a.add_state(true);
    for (StackSymbol s = 0; s < pds.symbols; ++s) {
        a.add_edge(sink, s, sink);
        for (auto c : controls) a.add_edge(c, s, sink);
    }
    return a;
}

namespace {

// Rule indices keyed by the control they lead to.
struct RuleIndex {
    std::vector<std::vector<ControlId>> internal_into; // [to] -> from
    std::vector<std::vector<ControlId>> bottom_into;   // [to] -> from
    std::vector<std::vector<ControlId>> push_into;     // [to * symbols + pushed] -> from

    explicit RuleIndex(const PushdownSystem& pds)
        : internal_into(pds.controls), bottom_into(pds.controls),
          push_into(std::size_t{pds.controls} * pds.symbols) {
        for (const auto& r : pds.rules) {
            if (r.from >= pds.controls || r.to >= pds.controls || r.symbol >= pds.symbols)
                throw ContractViolation("pushdown rule out of range");
            switch (r.kind) {
            case RuleKind::internal: internal_into[r.to].push_back(r.from); break;
            case RuleKind::pop:
                if (r.symbol == 0) bottom_into[r.to].push_back(r.from);
                break;
            case RuleKind::push:
                if (r.symbol == 0) throw ContractViolation("push of the bottom marker");
                push_into[std::size_t{r.to} * pds.symbols + r.symbol].push_back(r.from);
                break;
            }
        }
    }
};

// Saturation over edges (state, symbol, state, flag). With `track` off every
// flag is 0 and the procedure is plain pre*. With `track` on, a flag of 1
// records that the summarized run passed through an accepting control before
// reaching its end.
class Saturation {
public:
    Saturation(const PushdownSystem& pds, std::uint32_t states, const std::vector<bool>* accepting)
        : pds_(pds), index_(pds), states_(states), accepting_(accepting),
          present_(std::size_t{states} * pds.symbols * states * 2, false),
          out_(std::size_t{states} * pds.symbols), derived_(std::size_t{pds.controls} * states * 2, false),
          derived_into_(states) {}

    void add(std::uint32_t from, StackSymbol a, std::uint32_t to, bool flag) {
        const auto key = ((std::size_t{from} * pds_.symbols + a) * states_ + to) * 2 + flag;
        if (present_[key]) return;
        present_[key] = true;
        out_[std::size_t{from} * pds_.symbols + a].push_back({to, flag});
        work_.push_back({from, a, to, flag});
    }

    void run() {
        for (const auto& r : pds_.rules)
            if (r.kind == RuleKind::pop && r.symbol != 0) add(r.from, r.symbol, r.to, acc(r.from));
        while (!work_.empty()) {
            const auto e = work_.front();
            work_.pop_front();
            if (e.from < pds_.controls) {
                const auto q = e.from;
                for (auto p : index_.internal_into[q]) add(p, e.symbol, e.to, acc(p) || e.flag);
                if (e.symbol == 0)
                    for (auto p : index_.bottom_into[q]) add(p, 0, e.to, acc(p) || e.flag);
                for (auto p : index_.push_into[std::size_t{q} * pds_.symbols + e.symbol])
                    derive(p, e.to, acc(p) || e.flag);
            }
            for (const auto& [p, g] : derived_into_[e.from]) add(p, e.symbol, e.to, g || e.flag);
        }
    }

    bool has(std::uint32_t from, StackSymbol a, std::uint32_t to, bool flag) const {
        return present_[((std::size_t{from} * pds_.symbols + a) * states_ + to) * 2 + flag];
    }

    struct Target {
        std::uint32_t to;
        bool flag;
    };
    const std::vector<Target>& out(std::uint32_t from, StackSymbol a) const {
        return out_[std::size_t{from} * pds_.symbols + a];
    }

private:
    struct Work {
        std::uint32_t from;
        StackSymbol symbol;
        std::uint32_t to;
        bool flag;
    };

    bool acc(ControlId p) const { return accepting_ && (*accepting_)[p]; }

    // Derived rule <p, A> -> <s, A> for every A, obtained from a push whose
    // pushed symbol can be consumed ending in s.
    void derive(ControlId p, std::uint32_t s, bool flag) {
        const auto key = (std::size_t{p} * states_ + s) * 2 + flag;
        if (derived_[key]) return;
        derived_[key] = true;
        derived_into_[s].push_back({p, flag});
        for (StackSymbol a = 0; a < pds_.symbols; ++a) {
            const auto copy = out(s, a);
            for (const auto& t : copy) add(p, a, t.to, flag || t.flag);
        }
    }

    const PushdownSystem& pds_;
    RuleIndex index_;
    std::uint32_t states_;
    const std::vector<bool>* accepting_;
    std::vector<bool> present_;
    std::vector<std::vector<Target>> out_;
    std::vector<bool> derived_;
    std::vector<std::vector<std::pair<ControlId, bool>>> derived_into_;
    std::deque<Work> work_;
};

} // namespace

PAutomaton pre_star(const PushdownSystem& pds, const PAutomaton& targets) {
    if (targets.controls() != pds.controls || targets.symbols() != pds.symbols)
        throw ContractViolation("target automaton does not match the pushdown system");
    for (const auto& e : targets.edges())
        if (e.to < pds.controls) throw ContractViolation("target automaton has an edge into a control state");
    Saturation sat(pds, targets.states(), nullptr);
    for (const auto& e : targets.edges()) sat.add(e.from, e.symbol, e.to, false);
    sat.run();
    PAutomaton result = targets;
    for (std::uint32_t s = 0; s < targets.states(); ++s)
        for (StackSymbol a = 0; a < pds.symbols; ++a)
            for (const auto& t : sat.out(s, a)) result.add_edge(s, a, t.to);
    return result;
}

namespace {

struct HeadEdge {
    std::uint32_t to;
    bool flag;
};

// Heads (p, A) admitting a run <p, A> ->+ <p, A w> through an accepting control.
std::vector<bool> repeating_heads(const PushdownSystem& pds, const std::vector<bool>& accepting) {
    if (accepting.size() != pds.controls) throw ContractViolation("accepting set size mismatch");
    Saturation pops(pds, pds.controls, &accepting);
    pops.run();

    const std::uint32_t n = pds.controls * pds.symbols;
    auto head = [&](ControlId p, StackSymbol a) { return p * pds.symbols + a; };
    std::vector<std::vector<HeadEdge>> graph(n);
    for (const auto& r : pds.rules) {
        const bool f = accepting[r.from];
        switch (r.kind) {
        case RuleKind::internal:
            for (StackSymbol a = 0; a < pds.symbols; ++a) graph[head(r.from, a)].push_back({head(r.to, a), f});
            break;
        case RuleKind::pop:
            if (r.symbol == 0) graph[head(r.from, 0)].push_back({head(r.to, 0), f});
            break;
        case RuleKind::push:
            for (StackSymbol a = 0; a < pds.symbols; ++a) {
                graph[head(r.from, a)].push_back({head(r.to, r.symbol), f});
                for (const auto& t : pops.out(r.to, r.symbol))
                    graph[head(r.from, a)].push_back({head(t.to, a), f || t.flag});
            }
            break;
        }
    }

    // Tarjan's algorithm, iterative.
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<std::uint32_t> stack;
    std::vector<bool> on_stack(n, false);
    int counter = 0, comps = 0;
    for (std::uint32_t root = 0; root < n; ++root) {
        if (index[root] >= 0) continue;
        std::vector<std::pair<std::uint32_t, std::size_t>> call{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto& [v, i] = call.back();
            if (i < graph[v].size()) {
                const auto w = graph[v][i++].to;
                if (index[w] < 0) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                std::uint32_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = comps;
                } while (w != v);
                ++comps;
            }
            const auto done = v;
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
        }
    }
    std::vector<bool> good_comp(comps, false);
    for (std::uint32_t v = 0; v < n; ++v)
        for (const auto& e : graph[v])
            if (e.flag && comp[v] == comp[e.to]) good_comp[comp[v]] = true;
    std::vector<bool> repeating(n, false);
    for (std::uint32_t v = 0; v < n; ++v) repeating[v] = good_comp[comp[v]];
    return repeating;
}

PAutomaton repeating_targets(const PushdownSystem& pds, const std::vector<bool>& repeating) {
    PAutomaton a(pds.controls, pds.symbols);
    const auto sink = a.add_state(true);
    for (StackSymbol s = 0; s < pds.symbols; ++s) a.add_edge(sink, s, sink);
    for (ControlId p = 0; p < pds.controls; ++p)
        for (StackSymbol s = 0; s < pds.symbols; ++s)
            if (repeating[p * pds.symbols + s]) a.add_edge(p, s, sink);
    return a;
}

} // namespace

std::vector<std::pair<std::uint32_t, PdsConfiguration>> pds_successors(const PushdownSystem& pds,
                                                                       const PdsConfiguration& c) {
    std::vector<std::pair<std::uint32_t, PdsConfiguration>> out;
    const StackSymbol top = c.stack.front();
    for (std::uint32_t i = 0; i < pds.rules.size(); ++i) {
        const auto& r = pds.rules[i];
        if (r.from != c.control) continue;
        PdsConfiguration next{r.to, c.stack};
        switch (r.kind) {
        case RuleKind::internal: break;
        case RuleKind::push: next.stack.insert(next.stack.begin(), r.symbol); break;
        case RuleKind::pop:
            if (r.symbol != top) continue;
            if (top != 0) next.stack.erase(next.stack.begin());
            break;
        }
        out.emplace_back(i, std::move(next));
    }
    return out;
}

bool buchi_nonempty(const PushdownSystem& pds, const PdsConfiguration& start, const std::vector<bool>& accepting) {
    const auto repeating = repeating_heads(pds, accepting);
    if (std::none_of(repeating.begin(), repeating.end(), [](bool b) { return b; })) return false;
    const auto reach = pre_star(pds, repeating_targets(pds, repeating));
    return reach.accepts(start.control, start.stack);
}

std::optional<BuchiLasso> buchi_witness(const PushdownSystem& pds, const PdsConfiguration& start,
                                        const std::vector<bool>& accepting, std::size_t search_limit) {
    const auto repeating = repeating_heads(pds, accepting);
    const auto reach = pre_star(pds, repeating_targets(pds, repeating));
    if (!reach.accepts(start.control, start.stack)) return std::nullopt;

    auto is_repeating = [&](const PdsConfiguration& c) {
        return repeating[c.control * pds.symbols + c.stack.front()];
    };

    // Shortest rule sequence from start to a configuration with a repeating head.
    struct Node {
        PdsConfiguration config;
        bool flag;
        std::size_t parent;
        std::uint32_t rule;
    };
    auto trace = [](const std::vector<Node>& nodes, std::size_t i) {
        std::vector<std::uint32_t> rules;
        for (; nodes[i].parent != i; i = nodes[i].parent) rules.push_back(nodes[i].rule);
        std::reverse(rules.begin(), rules.end());
        return rules;
    };

    BuchiLasso lasso;
    PdsConfiguration entry;
    {
        std::vector<Node> nodes{{start, false, 0, 0}};
        std::map<PdsConfiguration, std::size_t> seen{{start, 0}};
        std::optional<std::size_t> found;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            if (is_repeating(nodes[i].config)) {
                found = i;
                break;
            }
            if (nodes.size() > search_limit) throw std::runtime_error("witness search limit exceeded");
            // Only successors that can still reach a repeating head.
            for (auto& [rule, next] : pds_successors(pds, nodes[i].config)) {
                if (seen.contains(next) || !reach.accepts(next.control, next.stack)) continue;
                seen.emplace(next, nodes.size());
                nodes.push_back({std::move(next), false, i, rule});
            }
        }
        if (!found) throw std::logic_error("repeating head unreachable during witness search");
        lasso.prefix = trace(nodes, *found);
        entry = nodes[*found].config;
    }

    // From <p, A>: return to control p with A on top, above the original A,
    // passing an accepting control; the original A is never popped.
    const ControlId p = entry.control;
    const StackSymbol a = entry.stack.front();
    const PdsConfiguration floor{p, {a}};
    std::vector<Node> nodes{{floor, accepting[p], 0, 0}};
    std::map<std::pair<PdsConfiguration, bool>, std::size_t> seen{{{floor, accepting[p]}, 0}};
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes.size() > search_limit) throw std::runtime_error("witness search limit exceeded");
        const auto current = nodes[i];
        for (auto& [rule, next] : pds_successors(pds, current.config)) {
            const auto& r = pds.rules[rule];
            if (r.kind == RuleKind::pop && current.config.stack.size() == 1 && a != 0) continue;
            const bool flag = current.flag || accepting[next.control];
            if (next.control == p && next.stack.front() == a && current.flag) {
                nodes.push_back({next, flag, i, rule});
                lasso.cycle = trace(nodes, nodes.size() - 1);
                return lasso;
            }
            if (seen.contains({next, flag})) continue;
            seen.emplace(std::pair{next, flag}, nodes.size());
            nodes.push_back({std::move(next), flag, i, rule});
        }
    }
    throw std::logic_error("no cycle found from a repeating head");
}

} // namespace vldl
