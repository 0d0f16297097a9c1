#include "vldl/formula.hpp"

#include "vldl/error.hpp"

namespace vldl {

FormulaKind Formula::kind() const {
    if (!node_) throw ContractViolation("empty formula");
    return node_->kind;
}

const std::string& Formula::name() const { return node_->name; }
const Formula& Formula::operand() const { return node_->left; }
const Formula& Formula::lhs() const { return node_->left; }
const Formula& Formula::rhs() const { return node_->right; }

Formula Formula::atom(std::string proposition) {
    return Formula(std::make_shared<const FormulaNode>(
        FormulaNode{FormulaKind::atom, std::move(proposition), {}, {}}));
}

Formula Formula::negation(Formula operand) {
    return Formula(std::make_shared<const FormulaNode>(
        FormulaNode{FormulaKind::negation, {}, std::move(operand), {}}));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
    return Formula(std::make_shared<const FormulaNode>(
        FormulaNode{FormulaKind::conjunction, {}, std::move(lhs), std::move(rhs)}));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
    return Formula(std::make_shared<const FormulaNode>(
        FormulaNode{FormulaKind::disjunction, {}, std::move(lhs), std::move(rhs)}));
}

Formula Formula::implication(Formula lhs, Formula rhs) {
    return disjunction(negation(std::move(lhs)), std::move(rhs));
}

Formula Formula::equivalence(Formula lhs, Formula rhs) {
    return conjunction(implication(lhs, rhs), implication(rhs, lhs));
}

Formula Formula::diamond(std::string automaton, Formula operand) {
    return Formula(std::make_shared<const FormulaNode>(
        FormulaNode{FormulaKind::diamond, std::move(automaton), std::move(operand), {}}));
}

Formula Formula::box(std::string automaton, Formula operand) {
    return Formula(std::make_shared<const FormulaNode>(
        FormulaNode{FormulaKind::box, std::move(automaton), std::move(operand), {}}));
}

Formula Formula::truth(const std::string& proposition) {
    auto p = atom(proposition);
    return disjunction(p, negation(p));
}

Formula Formula::falsity(const std::string& proposition) {
    auto p = atom(proposition);
    return conjunction(p, negation(p));
}

bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (!a.node_ || !b.node_) return false;
    const auto& x = *a.node_;
    const auto& y = *b.node_;
    return x.kind == y.kind && x.name == y.name && x.left == y.left && x.right == y.right;
}

namespace {

int level(const Formula& f) {
    switch (f.kind()) {
    case FormulaKind::disjunction: return 1;
    case FormulaKind::conjunction: return 2;
    default: return 3;
    }
}

void print(const Formula& f, std::string& out);

void print_at(const Formula& f, int min_level, std::string& out) {
    if (level(f) < min_level) {
        out += '(';
        print(f, out);
        out += ')';
    } else {
        print(f, out);
    }
}

void print(const Formula& f, std::string& out) {
    switch (f.kind()) {
    case FormulaKind::atom: out += f.name(); return;
    case FormulaKind::negation:
        out += '!';
        print_at(f.operand(), 3, out);
        return;
    case FormulaKind::diamond:
    case FormulaKind::box:
        out += f.kind() == FormulaKind::diamond ? '<' : '[';
        out += f.name();
        out += f.kind() == FormulaKind::diamond ? '>' : ']';
        print_at(f.operand(), 3, out);
        return;
    case FormulaKind::conjunction:
    case FormulaKind::disjunction: {
        const int lv = level(f);
        print_at(f.lhs(), lv, out);
        out += lv == 2 ? " && " : " || ";
        print_at(f.rhs(), lv + 1, out);
        return;
    }
    }
}

} // namespace

std::string to_string(const Formula& f) {
    std::string out;
    print(f, out);
    return out;
}

} // namespace vldl
