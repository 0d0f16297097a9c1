#pragma once

#include "vldl/alphabet.hpp"
#include "vldl/vps.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace vldl {

enum class Direction : std::uint8_t { advance, jump };

// Command of a one-way alternating jumping automaton. An advance reads on in
// `advance_to`; a jump on a matched call resumes after its matching return in
// `jump_to`, and behaves like an advance anywhere else.
struct Command {
    Direction direction = Direction::advance;
    StateId advance_to = 0;
    StateId jump_to = 0;
    auto operator<=>(const Command&) const = default;
};

// Positive Boolean combination of commands, without constants.
class PositiveBool {
public:
    enum class Kind : std::uint8_t { command, all, any };

    PositiveBool() = default;
    static PositiveBool leaf(Command c);
    // A single child collapses to the child; no children is a contract violation.
    static PositiveBool all_of(std::vector<PositiveBool> children);
    static PositiveBool any_of(std::vector<PositiveBool> children);

    Kind kind() const { return kind_; }
    const Command& command() const { return command_; }
    const std::vector<PositiveBool>& children() const { return children_; }

    PositiveBool dual() const;
    // Adds `offset` to every state mentioned.
    PositiveBool shifted(StateId offset) const;
    std::size_t node_count() const;

    bool operator==(const PositiveBool&) const = default;

private:
    static PositiveBool node(Kind kind, std::vector<PositiveBool> children);

    Kind kind_ = Kind::command;
    Command command_{};
    std::vector<PositiveBool> children_;
};

struct OneAja {
    PushdownAlphabet alphabet;
    std::vector<std::string> states;
    std::vector<std::vector<PositiveBool>> delta; // [state][letter]
    std::vector<StateId> initial;
    std::vector<unsigned> colors;

    std::size_t size() const { return states.size(); }
    StateId add_state(std::string name, unsigned color);
};

std::string to_string(const OneAja& aja, const PositiveBool& f);
// Inverse of the rendering above ("adv(a,b) & (jump(a,b) | ...)").
PositiveBool parse_positive_bool(const OneAja& aja, const std::string& text);

} // namespace vldl
