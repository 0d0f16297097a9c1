#pragma once

#include "vldl/aja.hpp"
#include "vldl/automata.hpp"
#include "vldl/ltl.hpp"
#include "vldl/parity.hpp"
#include "vldl/pushdown.hpp"
#include "vldl/word.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace vldl::corpus {

using Rng = std::mt19937_64;

// Letters named c*, r*, l* over propositions p and q; at least one call and
// one return.
PushdownAlphabet random_alphabet(Rng& rng, unsigned max_letters = 4);

LassoWord random_lasso(Rng& rng, const PushdownAlphabet& alphabet, unsigned max_prefix, unsigned max_period);

// Every lasso with |u| <= max_prefix and 1 <= |v| <= max_period, ordered by
// total length, then period length, then lexicographically.
std::vector<LassoWord> all_lassos(const PushdownAlphabet& alphabet, unsigned max_prefix, unsigned max_period);

struct GuardShape {
    unsigned max_states = 2;
    unsigned max_symbols = 1; // besides the bottom marker
    double rule_density = 0.5;
};

Tvpa random_guard(Rng& rng, const PushdownAlphabet& alphabet, const GuardShape& shape);

// Random VLDL formula whose guards (and test formulas) land in `table`;
// retried until formula_size <= max_size.
Formula random_formula(Rng& rng, const PushdownAlphabet& alphabet, AutomatonTable& table, unsigned max_size);

struct Instance {
    PushdownAlphabet alphabet;
    AutomatonTable automata;
    Formula formula;
    LassoWord word;
};

// The fixed differential corpus: random formulas (size <= max_size) over
// random alphabets, each with a random lasso (|u| <= 4, |v| <= 3).
std::vector<Instance> formula_corpus(std::uint64_t seed, unsigned count, unsigned max_size = 12);

// Deterministic stair automaton; total unless `partial` is set.
Dpsa random_dpsa(Rng& rng, const PushdownAlphabet& alphabet, unsigned max_states, unsigned max_color,
                 unsigned max_symbols, bool partial = false);

PushdownSystem random_pds(Rng& rng, unsigned max_controls, unsigned max_symbols, unsigned max_rules);

ParityGame random_parity_game(Rng& rng, unsigned max_nodes, unsigned max_color);

Ltl random_ltl(Rng& rng, const std::vector<std::string>& props, unsigned max_depth);

// Random 1-AJA with `states` states and small transition formulas.
OneAja random_aja(Rng& rng, const PushdownAlphabet& alphabet, unsigned states);

Vps random_system(Rng& rng, const PushdownAlphabet& alphabet, unsigned max_states, unsigned max_symbols);

} // namespace vldl::corpus
