#include "vldl/alphabet.hpp"

#include "vldl/error.hpp"

#include <algorithm>
#include <set>

namespace vldl {

std::string_view to_string(LetterClass c) {
    switch (c) {
    case LetterClass::call: return "call";
    case LetterClass::ret: return "return";
    case LetterClass::local: return "local";
    }
    return "local";
}

std::optional<LetterClass> parse_letter_class(std::string_view text) {
    if (text == "call") return LetterClass::call;
    if (text == "return") return LetterClass::ret;
    if (text == "local") return LetterClass::local;
    return std::nullopt;
}

PushdownAlphabet::PushdownAlphabet(std::vector<std::string> propositions, std::vector<Letter> letters)
    : propositions_(std::move(propositions)), letters_(std::move(letters)) {
    if (letters_.empty()) throw InputError("alphabet has no letters");
    std::set<std::string> seen_props;
    for (const auto& p : propositions_) {
        if (p.empty()) throw InputError("empty proposition name");
        if (!seen_props.insert(p).second) throw InputError("duplicate proposition '" + p + "'");
    }
    std::set<std::string> seen_ids;
    for (auto& letter : letters_) {
        if (letter.id.empty()) throw InputError("empty letter id");
        if (!seen_ids.insert(letter.id).second) throw InputError("duplicate letter '" + letter.id + "'");
        std::sort(letter.props.begin(), letter.props.end());
        letter.props.erase(std::unique(letter.props.begin(), letter.props.end()), letter.props.end());
        for (const auto& p : letter.props)
            if (!seen_props.contains(p))
                throw InputError("letter '" + letter.id + "' uses undeclared proposition '" + p + "'");
    }
}

std::optional<LetterId> PushdownAlphabet::find(std::string_view id) const {
    for (std::size_t i = 0; i < letters_.size(); ++i)
        if (letters_[i].id == id) return static_cast<LetterId>(i);
    return std::nullopt;
}

LetterId PushdownAlphabet::require(std::string_view id) const {
    if (auto found = find(id)) return *found;
    throw InputError("unknown letter '" + std::string(id) + "'");
}

bool PushdownAlphabet::has_proposition(std::string_view name) const {
    return std::find(propositions_.begin(), propositions_.end(), name) != propositions_.end();
}

bool PushdownAlphabet::holds(LetterId letter, std::string_view prop) const {
    const auto& props = letters_.at(letter).props;
    return std::binary_search(props.begin(), props.end(), prop);
}

std::vector<LetterId> PushdownAlphabet::letters_of(LetterClass c) const {
    std::vector<LetterId> out;
    for (std::size_t i = 0; i < letters_.size(); ++i)
        if (letters_[i].kind == c) out.push_back(static_cast<LetterId>(i));
    return out;
}

} // namespace vldl
