#include "vldl/word.hpp"

#include "vldl/error.hpp"

namespace vldl {

LetterId LassoWord::at(std::size_t position) const {
    return position < prefix.size() ? prefix[position]
                                    : period[(position - prefix.size()) % period.size()];
}

std::size_t LassoWord::next_class(std::size_t cls) const {
    return cls + 1 < classes() ? cls + 1 : prefix.size();
}

std::size_t suffix_class(const LassoWord& word, std::size_t position) {
    const std::size_t u = word.prefix.size();
    return position < u ? position : u + (position - u) % word.period.size();
}

void check_word(const PushdownAlphabet& alphabet, const LassoWord& word) {
    if (word.period.empty()) throw InputError("lasso period must be nonempty");
    for (const auto* part : {&word.prefix, &word.period})
        for (LetterId id : *part)
            if (id >= alphabet.size()) throw InputError("letter index out of range");
}

LassoWord parse_lasso(const PushdownAlphabet& alphabet, std::span<const std::string> prefix,
                      std::span<const std::string> period) {
    LassoWord word;
    for (const auto& id : prefix) word.prefix.push_back(alphabet.require(id));
    for (const auto& id : period) word.period.push_back(alphabet.require(id));
    check_word(alphabet, word);
    return word;
}

std::string format_lasso(const PushdownAlphabet& alphabet, const LassoWord& word) {
    std::string out;
    for (LetterId id : word.prefix) {
        out += alphabet.letter(id).id;
        out += ' ';
    }
    out += "; ";
    for (std::size_t i = 0; i < word.period.size(); ++i) {
        if (i) out += ' ';
        out += alphabet.letter(word.period[i]).id;
    }
    return out;
}

} // namespace vldl
