#pragma once

#include "vldl/corpus.hpp"
#include "vldl/project.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace vldl::difftest {

struct Failure {
    Project instance;          // re-loadable: formula "phi", word "w" (and DPSA "d" when relevant)
    std::string note;
    std::size_t weight = 0;    // formula size plus word length; the smallest failure is kept
};

struct SuiteReport {
    std::string name;
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::optional<Failure> smallest;
    bool passed() const { return failed == 0; }
};

// Alphabet with exactly one call "c", one return "r" and one local "l",
// carrying random subsets of {p, q}.
PushdownAlphabet three_letter_alphabet(corpus::Rng& rng);

// aja_accepts(vldl_to_aja(f), w) against evaluate(f, w) on formula_corpus(seed, count, max_size).
SuiteReport aja_translation(std::uint64_t seed, unsigned count, unsigned max_size = 12);

// dpsa_accepts(d, w) against evaluate(dpsa_to_vldl(d), w) for `count` random
// DPSAs, each on `lassos` random words (|u| <= 4, |v| <= 3).
SuiteReport stair_translation(std::uint64_t seed, unsigned count, unsigned lassos = 5);

// ltl_eval(f, w) against evaluate(ltl_to_vldl(f), w) at every class.
SuiteReport ltl_embedding(std::uint64_t seed, unsigned count, unsigned lassos = 10, unsigned max_depth = 4);

} // namespace vldl::difftest
