#pragma once

#include "vldl/automata.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace vldl {

enum class LtlKind : std::uint8_t {
    truth, falsity, atom, negation, conjunction, disjunction, next, until, eventually, always, release
};

struct Ltl {
    LtlKind kind = LtlKind::truth;
    std::string atom;
    std::vector<Ltl> args;

    static Ltl truth() { return {LtlKind::truth, {}, {}}; }
    static Ltl falsity() { return {LtlKind::falsity, {}, {}}; }
    static Ltl prop(std::string p) { return {LtlKind::atom, std::move(p), {}}; }
    static Ltl negation(Ltl a) { return {LtlKind::negation, {}, {std::move(a)}}; }
    static Ltl conjunction(Ltl a, Ltl b) { return {LtlKind::conjunction, {}, {std::move(a), std::move(b)}}; }
    static Ltl disjunction(Ltl a, Ltl b) { return {LtlKind::disjunction, {}, {std::move(a), std::move(b)}}; }
    static Ltl next(Ltl a) { return {LtlKind::next, {}, {std::move(a)}}; }
    static Ltl until(Ltl a, Ltl b) { return {LtlKind::until, {}, {std::move(a), std::move(b)}}; }
    static Ltl eventually(Ltl a) { return {LtlKind::eventually, {}, {std::move(a)}}; }
    static Ltl always(Ltl a) { return {LtlKind::always, {}, {std::move(a)}}; }
    static Ltl release(Ltl a, Ltl b) { return {LtlKind::release, {}, {std::move(a), std::move(b)}}; }

    bool operator==(const Ltl&) const = default;
};

std::size_t ltl_size(const Ltl& f); // number of syntax-tree nodes
std::size_t ltl_depth(const Ltl& f);
std::string to_string(const Ltl& f);

// Conjunction of literals over propositions; the empty predicate matches every letter.
struct LetterPredicate {
    std::vector<std::string> require;
    std::vector<std::string> forbid;

    bool matches(const PushdownAlphabet& alphabet, LetterId letter) const;
};

struct Ldl;

enum class RegexKind : std::uint8_t { letter, epsilon, concat, choice, star, test };

struct Regex {
    RegexKind kind = RegexKind::epsilon;
    LetterPredicate predicate;
    std::vector<Regex> parts;
    std::shared_ptr<const Ldl> test; // only for RegexKind::test

    static Regex letter(LetterPredicate p) { return {RegexKind::letter, std::move(p), {}, {}}; }
    static Regex epsilon() { return {}; }
    static Regex concat(Regex a, Regex b) { return {RegexKind::concat, {}, {std::move(a), std::move(b)}, {}}; }
    static Regex choice(Regex a, Regex b) { return {RegexKind::choice, {}, {std::move(a), std::move(b)}, {}}; }
    static Regex star(Regex a) { return {RegexKind::star, {}, {std::move(a)}, {}}; }
    static Regex test_of(Ldl condition);
};

enum class LdlKind : std::uint8_t { truth, falsity, atom, negation, conjunction, disjunction, diamond, box };

struct Ldl {
    LdlKind kind = LdlKind::truth;
    std::string atom;
    std::vector<Ldl> args;
    std::shared_ptr<const Regex> guard; // diamond and box

    static Ldl truth() { return {}; }
    static Ldl falsity() { return {LdlKind::falsity, {}, {}, {}}; }
    static Ldl prop(std::string p) { return {LdlKind::atom, std::move(p), {}, {}}; }
    static Ldl negation(Ldl a) { return {LdlKind::negation, {}, {std::move(a)}, {}}; }
    static Ldl conjunction(Ldl a, Ldl b) { return {LdlKind::conjunction, {}, {std::move(a), std::move(b)}, {}}; }
    static Ldl disjunction(Ldl a, Ldl b) { return {LdlKind::disjunction, {}, {std::move(a), std::move(b)}, {}}; }
    static Ldl diamond(Regex r, Ldl a) {
        return {LdlKind::diamond, {}, {std::move(a)}, std::make_shared<const Regex>(std::move(r))};
    }
    static Ldl box(Regex r, Ldl a) {
        return {LdlKind::box, {}, {std::move(a)}, std::make_shared<const Regex>(std::move(r))};
    }
};

inline Regex Regex::test_of(Ldl condition) {
    return {RegexKind::test, {}, {}, std::make_shared<const Ldl>(std::move(condition))};
}

// Embeds LTL into VLDL: next becomes a diamond over a one-letter guard, until
// becomes a diamond over a two-state guard whose looping state carries the
// left operand as its test.
Property ltl_to_vldl(const Ltl& f, const PushdownAlphabet& alphabet);

// Compiles each regex guard to an epsilon-free automaton whose moves ignore
// the stack. Throws Unsupported if a regex contains a test.
Property ldl_to_vldl(const Ldl& f, const PushdownAlphabet& alphabet);

// Guard that moves from `from` to `to` on every letter without inspecting the
// stack (calls push a dummy symbol, returns pop it or the bottom marker).
void add_stack_blind_moves(Vps& vps, StateId from, StateId to, const std::vector<LetterId>& letters);

} // namespace vldl
