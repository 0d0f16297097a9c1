#include "vldl/logic.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

namespace vldl {

Formula nnf(const Formula& f) {
    std::function<Formula(const Formula&, bool)> go = [&](const Formula& g, bool negate) -> Formula {
        switch (g.kind()) {
        case FormulaKind::atom: return negate ? Formula::negation(g) : g;
        case FormulaKind::negation: return go(g.operand(), !negate);
        case FormulaKind::conjunction:
        case FormulaKind::disjunction: {
            const bool conj = (g.kind() == FormulaKind::conjunction) != negate;
            auto l = go(g.lhs(), negate);
            auto r = go(g.rhs(), negate);
            return conj ? Formula::conjunction(l, r) : Formula::disjunction(l, r);
        }
        case FormulaKind::diamond:
        case FormulaKind::box: {
            const bool diamond = (g.kind() == FormulaKind::diamond) != negate;
            auto inner = go(g.operand(), negate);
            return diamond ? Formula::diamond(g.name(), inner) : Formula::box(g.name(), inner);
        }
        }
        return g;
    };
    return go(f, false);
}

namespace {

struct Collector {
    const AutomatonTable& table;
    std::set<std::string> seen_keys;
    std::vector<Formula> formulas;
    std::vector<std::string> automata; // discovery order

    void visit(const Formula& f) {
        if (!seen_keys.insert(to_string(f)).second) return;
        formulas.push_back(f);
        switch (f.kind()) {
        case FormulaKind::atom: return;
        case FormulaKind::negation: visit(f.operand()); return;
        case FormulaKind::conjunction:
        case FormulaKind::disjunction:
            visit(f.lhs());
            visit(f.rhs());
            return;
        case FormulaKind::diamond:
        case FormulaKind::box:
            guard(f.name());
            visit(f.operand());
            return;
        }
    }

    void guard(const std::string& id) {
        if (std::find(automata.begin(), automata.end(), id) != automata.end()) return;
        automata.push_back(id);
        for (const auto& [q, test] : table.require(id).tests) visit(test);
    }
};

} // namespace

std::vector<Formula> subformulas(const Formula& f, const AutomatonTable& table) {
    Collector c{table, {}, {}, {}};
    c.visit(f);
    return c.formulas;
}

std::vector<std::string> referenced_automata(const Formula& f, const AutomatonTable& table) {
    Collector c{table, {}, {}, {}};
    c.visit(f);
    return c.automata;
}

std::size_t formula_size(const Formula& f, const AutomatonTable& table) {
    Collector c{table, {}, {}, {}};
    c.visit(f);
    std::size_t size = c.formulas.size();
    for (const auto& id : c.automata) size += table.require(id).vps.state_count();
    return size;
}

std::size_t temporal_depth(const Formula& f) {
    switch (f.kind()) {
    case FormulaKind::atom: return 0;
    case FormulaKind::negation: return temporal_depth(f.operand());
    case FormulaKind::conjunction:
    case FormulaKind::disjunction: return std::max(temporal_depth(f.lhs()), temporal_depth(f.rhs()));
    case FormulaKind::diamond:
    case FormulaKind::box: return 1 + temporal_depth(f.operand());
    }
    return 0;
}

} // namespace vldl
