#include "vldl/profile.hpp"

#include "vldl/error.hpp"

#include <algorithm>
#include <stdexcept>

namespace vldl {

namespace {

std::size_t apply(LetterClass kind, std::size_t height) {
    switch (kind) {
    case LetterClass::call: return height + 1;
    case LetterClass::ret: return height == 0 ? 0 : height - 1;
    case LetterClass::local: return height;
    }
    return height;
}

} // namespace

std::size_t StackProfile::fold(std::size_t position) const {
    const std::size_t limit = threshold_ + period_;
    if (position < limit) return position;
    return threshold_ + (position - threshold_) % period_;
}

LetterId StackProfile::letter(std::size_t position) const { return word_.at(position); }

bool StackProfile::is_call(std::size_t position) const {
    return kinds_[fold(position)] == LetterClass::call;
}

std::size_t StackProfile::height_before(std::size_t position) const {
    const std::size_t base = fold(position);
    return height_[base] + shift_ * ((position - base) / period_);
}

bool StackProfile::is_step(std::size_t position) const { return step_[fold(position)]; }

std::optional<std::size_t> StackProfile::matching(std::size_t position) const {
    const std::size_t base = fold(position);
    if (kinds_[base] != LetterClass::call)
        throw ContractViolation("matching queried at a position that is not a call");
    const auto& m = match_[base];
    if (!m) return std::nullopt;
    return *m + (position - base);
}

StackProfile build_profile(const PushdownAlphabet& alphabet, const LassoWord& word) {
    check_word(alphabet, word);
    StackProfile profile;
    profile.word_ = word;

    const std::size_t u = word.prefix.size();
    const std::size_t v = word.period.size();

    // Net effect and deepest in-period drop of the period, read unclamped.
    long net = 0;
    long lowest = 0;
    for (LetterId id : word.period) {
        const auto kind = alphabet.kind(id);
        if (kind == LetterClass::call) ++net;
        if (kind == LetterClass::ret) --net;
        lowest = std::min(lowest, net);
    }
    const auto dip = static_cast<std::size_t>(-lowest);

    std::size_t max_height = 0;
    std::size_t h = 0;
    for (std::size_t p = 0; p < u + v; ++p) {
        h = apply(alphabet.kind(word.at(p)), h);
        max_height = std::max(max_height, h);
    }

    profile.threshold_ = u + v * (max_height + dip + 2);
    profile.period_ = v;
    profile.shift_ = net > 0 ? static_cast<std::size_t>(net) : 0;

    const std::size_t n = profile.threshold_;
    const std::size_t p_len = profile.period_;
    const std::size_t window = n + 4 * p_len;
    const std::size_t known = n + 2 * p_len; // positions with exact step/matching data

    profile.kinds_.resize(window);
    profile.height_.resize(window + 1);
    profile.height_[0] = 0;
    for (std::size_t p = 0; p < window; ++p) {
        profile.kinds_[p] = alphabet.kind(word.at(p));
        profile.height_[p + 1] = apply(profile.kinds_[p], profile.height_[p]);
    }

    std::vector<std::size_t> suffix_min(window + 1);
    suffix_min[window] = profile.height_[window];
    for (std::size_t p = window; p-- > 0;)
        suffix_min[p] = std::min(profile.height_[p], suffix_min[p + 1]);

    profile.step_.assign(known, false);
    profile.match_.assign(known, std::nullopt);
    for (std::size_t p = 0; p < known; ++p) {
        profile.step_[p] = suffix_min[p] >= profile.height_[p];
        if (profile.kinds_[p] != LetterClass::call) continue;
        for (std::size_t q = p + 1; q < window; ++q) {
            if (profile.height_[q + 1] == profile.height_[p]) {
                profile.match_[p] = q;
                break;
            }
        }
    }

    // Defensive check of the folding invariants.
    for (std::size_t p = n; p < n + p_len; ++p) {
        const std::size_t q = p + p_len;
        const bool ok = profile.kinds_[p] == profile.kinds_[q] &&
                        profile.height_[q] == profile.height_[p] + profile.shift_ &&
                        profile.step_[p] == profile.step_[q] &&
                        profile.match_[p].has_value() == profile.match_[q].has_value() &&
                        (!profile.match_[p] || *profile.match_[q] == *profile.match_[p] + p_len);
        if (!ok) throw std::logic_error("stack profile periodicity check failed");
    }
    profile.step_.resize(n + p_len);
    profile.match_.resize(n + p_len);
    return profile;
}

std::optional<std::size_t> matching_return(const StackProfile& profile, std::size_t position) {
    return profile.matching(position);
}

bool steps_membership(const StackProfile& profile, std::size_t position) {
    return profile.is_step(position);
}

} // namespace vldl
