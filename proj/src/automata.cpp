#include "vldl/automata.hpp"

#include "vldl/error.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace vldl {

namespace {

bool contains(const std::vector<StateId>& v, StateId q) {
    return std::find(v.begin(), v.end(), q) != v.end();
}

} // namespace

bool Tvpa::is_initial(StateId q) const { return contains(initial, q); }
bool Tvpa::is_final(StateId q) const { return contains(final, q); }

const Formula* Tvpa::test(StateId q) const {
    auto it = tests.find(q);
    return it == tests.end() ? nullptr : &it->second;
}

bool Bvpa::is_initial(StateId q) const { return contains(initial, q); }
bool Bvpa::is_accepting(StateId q) const { return contains(accepting, q); }

std::vector<StateId> Dpsa::even_states() const {
    std::vector<StateId> out;
    for (StateId q = 0; q < colors.size(); ++q)
        if (colors[q] % 2 == 0) out.push_back(q);
    return out;
}

std::vector<StateId> Dpsa::states_above(StateId q) const {
    std::vector<StateId> out;
    for (StateId p = 0; p < colors.size(); ++p)
        if (colors[p] > colors.at(q)) out.push_back(p);
    return out;
}

void AutomatonTable::add(std::string id, Tvpa automaton) {
    if (entries_.contains(id)) throw InputError("duplicate automaton id '" + id + "'");
    entries_.emplace(std::move(id), std::move(automaton));
}

const Tvpa* AutomatonTable::find(const std::string& id) const {
    auto it = entries_.find(id);
    return it == entries_.end() ? nullptr : &it->second;
}

const Tvpa& AutomatonTable::require(const std::string& id) const {
    if (const auto* a = find(id)) return *a;
    throw InputError("unknown automaton '" + id + "'");
}

void AutomatonTable::merge(const AutomatonTable& other) {
    for (const auto& [id, a] : other.entries_) add(id, a);
}

std::string AutomatonTable::fresh_id(const std::string& stem) const {
    if (!entries_.contains(stem)) return stem;
    for (std::size_t i = 1;; ++i) {
        auto candidate = stem + "_" + std::to_string(i);
        if (!entries_.contains(candidate)) return candidate;
    }
}

void check_references(const Formula& f, const AutomatonTable& table) {
    // Colors: automata currently on the DFS path vs. finished ones.
    std::set<std::string> active;
    std::set<std::string> done;
    std::function<void(const Formula&)> walk = [&](const Formula& g) {
        switch (g.kind()) {
        case FormulaKind::atom: return;
        case FormulaKind::negation: walk(g.operand()); return;
        case FormulaKind::conjunction:
        case FormulaKind::disjunction:
            walk(g.lhs());
            walk(g.rhs());
            return;
        case FormulaKind::diamond:
        case FormulaKind::box: {
            const auto& id = g.name();
            const auto& guard = table.require(id);
            if (active.contains(id)) throw InputError("cyclic test reference through '" + id + "'");
            if (!done.contains(id)) {
                active.insert(id);
                for (const auto& [q, test] : guard.tests) walk(test);
                active.erase(id);
                done.insert(id);
            }
            walk(g.operand());
            return;
        }
        }
    };
    walk(f);
}

} // namespace vldl
