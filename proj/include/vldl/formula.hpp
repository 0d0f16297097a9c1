#pragma once

#include <cstdint>
#include <memory>
#include <string>

namespace vldl {

enum class FormulaKind : std::uint8_t { atom, negation, conjunction, disjunction, diamond, box };

struct FormulaNode;

// Immutable, cheaply copyable handle to a VLDL syntax tree. Temporal
// operators name their guard automaton; names resolve in an AutomatonTable.
class Formula {
public:
    Formula() = default;

    static Formula atom(std::string proposition);
    static Formula negation(Formula operand);
    static Formula conjunction(Formula lhs, Formula rhs);
    static Formula disjunction(Formula lhs, Formula rhs);
    static Formula implication(Formula lhs, Formula rhs); // !lhs || rhs
    static Formula equivalence(Formula lhs, Formula rhs);
    static Formula diamond(std::string automaton, Formula operand);
    static Formula box(std::string automaton, Formula operand);
    // p || !p and p && !p for a designated proposition p.
    static Formula truth(const std::string& proposition);
    static Formula falsity(const std::string& proposition);

    bool empty() const { return node_ == nullptr; }
    FormulaKind kind() const;
    // Proposition of an atom or automaton name of a temporal node.
    const std::string& name() const;
    const Formula& operand() const; // negation, diamond, box
    const Formula& lhs() const;
    const Formula& rhs() const;
    const FormulaNode* identity() const { return node_.get(); }

    friend bool operator==(const Formula& a, const Formula& b);

private:
    explicit Formula(std::shared_ptr<const FormulaNode> node) : node_(std::move(node)) {}
    std::shared_ptr<const FormulaNode> node_;
};

struct FormulaNode {
    FormulaKind kind;
    std::string name;
    Formula left;
    Formula right;
};

// Concrete syntax with minimal parentheses; reparses to the same tree.
std::string to_string(const Formula& f);

} // namespace vldl
