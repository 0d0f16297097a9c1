#pragma once

#include "vldl/alphabet.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace vldl {

using FiniteWord = std::vector<LetterId>;

// The ultimately periodic word prefix . period^omega.
struct LassoWord {
    FiniteWord prefix;
    FiniteWord period; // nonempty

    std::size_t classes() const { return prefix.size() + period.size(); }
    LetterId at(std::size_t position) const;
    // Class of the position following a position of class `cls`.
    std::size_t next_class(std::size_t cls) const;

    bool operator==(const LassoWord&) const = default;
};

// Canonical representative of the suffix starting at `position`.
std::size_t suffix_class(const LassoWord& word, std::size_t position);

// Throws InputError if the period is empty or a letter is out of range.
void check_word(const PushdownAlphabet& alphabet, const LassoWord& word);

LassoWord parse_lasso(const PushdownAlphabet& alphabet, std::span<const std::string> prefix,
                      std::span<const std::string> period);

// "u1 u2 ; v1 v2" style rendering with letter ids.
std::string format_lasso(const PushdownAlphabet& alphabet, const LassoWord& word);

} // namespace vldl
