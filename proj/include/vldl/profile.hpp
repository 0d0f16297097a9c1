#pragma once

#include "vldl/word.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace vldl {

// Stack-height structure of a lasso word. Positions at or beyond
// `threshold + period` are folded back by multiples of `period`.
class StackProfile {
public:
    std::size_t threshold() const { return threshold_; }
    std::size_t period() const { return period_; }
    // Height shift per folded period (0 unless the period has positive net effect).
    std::size_t shift() const { return shift_; }

    LetterId letter(std::size_t position) const;
    std::size_t height_before(std::size_t position) const;
    bool is_step(std::size_t position) const;
    // Matching return of the call at `position`; ContractViolation if not a call.
    std::optional<std::size_t> matching(std::size_t position) const;
    bool is_call(std::size_t position) const;

private:
    friend StackProfile build_profile(const PushdownAlphabet&, const LassoWord&);

    std::size_t fold(std::size_t position) const;

    LassoWord word_;
    std::vector<LetterClass> kinds_; // per position in the window
    std::vector<std::size_t> height_; // height before each window position
    std::vector<bool> step_;
    std::vector<std::optional<std::size_t>> match_;
    std::size_t threshold_ = 0;
    std::size_t period_ = 1;
    std::size_t shift_ = 0;
};

StackProfile build_profile(const PushdownAlphabet& alphabet, const LassoWord& word);

std::optional<std::size_t> matching_return(const StackProfile& profile, std::size_t position);
bool steps_membership(const StackProfile& profile, std::size_t position);

} // namespace vldl
