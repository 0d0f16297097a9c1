#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vldl {

using LetterId = std::uint32_t;

enum class LetterClass : std::uint8_t { call, ret, local };

std::string_view to_string(LetterClass c);
std::optional<LetterClass> parse_letter_class(std::string_view text);

struct Letter {
    std::string id;
    std::vector<std::string> props; // sorted, unique
    LetterClass kind = LetterClass::local;

    bool operator==(const Letter&) const = default;
};

// A finite alphabet partitioned into calls, returns and locals, together with
// the propositions its letters are built from.
class PushdownAlphabet {
public:
    PushdownAlphabet() = default;
    // Throws InputError on duplicate ids or undeclared propositions.
    PushdownAlphabet(std::vector<std::string> propositions, std::vector<Letter> letters);

    const std::vector<std::string>& propositions() const { return propositions_; }
    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    const Letter& letter(LetterId id) const { return letters_.at(id); }
    LetterClass kind(LetterId id) const { return letters_.at(id).kind; }

    std::optional<LetterId> find(std::string_view id) const;
    LetterId require(std::string_view id) const; // throws InputError
    bool has_proposition(std::string_view name) const;
    bool holds(LetterId letter, std::string_view prop) const;

    std::vector<LetterId> letters_of(LetterClass c) const;

    bool operator==(const PushdownAlphabet&) const = default;

private:
    std::vector<std::string> propositions_;
    std::vector<Letter> letters_;
};

} // namespace vldl
