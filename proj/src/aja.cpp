#include "vldl/aja.hpp"

#include "vldl/error.hpp"

#include <cctype>

namespace vldl {

PositiveBool PositiveBool::leaf(Command c) {
    PositiveBool f;
    f.kind_ = Kind::command;
    f.command_ = c;
    return f;
}

PositiveBool PositiveBool::node(Kind kind, std::vector<PositiveBool> children) {
    if (children.empty()) throw ContractViolation("positive formula without operands");
    if (children.size() == 1) return std::move(children.front());
    PositiveBool f;
    f.kind_ = kind;
    // Flatten nested nodes of the same kind.
    for (auto& child : children) {
        if (child.kind_ == kind)
            for (auto& g : child.children_) f.children_.push_back(std::move(g));
        else
            f.children_.push_back(std::move(child));
    }
    return f;
}

PositiveBool PositiveBool::all_of(std::vector<PositiveBool> children) {
    return node(Kind::all, std::move(children));
}

PositiveBool PositiveBool::any_of(std::vector<PositiveBool> children) {
    return node(Kind::any, std::move(children));
}

PositiveBool PositiveBool::dual() const {
    PositiveBool f = *this;
    if (kind_ == Kind::command) return f;
    f.kind_ = kind_ == Kind::all ? Kind::any : Kind::all;
    for (auto& child : f.children_) child = child.dual();
    return f;
}

PositiveBool PositiveBool::shifted(StateId offset) const {
    PositiveBool f = *this;
    if (kind_ == Kind::command) {
        f.command_.advance_to += offset;
        f.command_.jump_to += offset;
        return f;
    }
    for (auto& child : f.children_) child = child.shifted(offset);
    return f;
}

std::size_t PositiveBool::node_count() const {
    std::size_t n = 1;
    for (const auto& child : children_) n += child.node_count();
    return n;
}

StateId OneAja::add_state(std::string name, unsigned color) {
    states.push_back(std::move(name));
    colors.push_back(color);
    delta.emplace_back(alphabet.size());
    return static_cast<StateId>(states.size() - 1);
}

namespace {

void quote(const std::string& s, std::string& out) {
    out += '"';
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    out += '"';
}

void render(const OneAja& aja, const PositiveBool& f, bool nested, std::string& out) {
    switch (f.kind()) {
    case PositiveBool::Kind::command:
        out += f.command().direction == Direction::advance ? "adv(" : "jump(";
        quote(aja.states.at(f.command().advance_to), out);
        out += ',';
        quote(aja.states.at(f.command().jump_to), out);
        out += ')';
        return;
    case PositiveBool::Kind::all:
    case PositiveBool::Kind::any: {
        if (nested) out += '(';
        const char* sep = f.kind() == PositiveBool::Kind::all ? " & " : " | ";
        bool first = true;
        for (const auto& child : f.children()) {
            if (!first) out += sep;
            first = false;
            render(aja, child, child.kind() != PositiveBool::Kind::command, out);
        }
        if (nested) out += ')';
        return;
    }
    }
}

class BoolParser {
public:
    BoolParser(const OneAja& aja, const std::string& text) : aja_(aja), text_(text) {}

    PositiveBool parse() {
        auto f = disjunction();
        skip();
        if (pos_ != text_.size()) fail("trailing input");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw InputError("transition formula: " + what + " at offset " + std::to_string(pos_));
    }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char ch) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char ch) {
        if (!accept(ch)) fail(std::string("expected '") + ch + "'");
    }

    PositiveBool disjunction() {
        std::vector<PositiveBool> parts{conjunction()};
        while (accept('|')) parts.push_back(conjunction());
        return PositiveBool::any_of(std::move(parts));
    }

    PositiveBool conjunction() {
        std::vector<PositiveBool> parts{primary()};
        while (accept('&')) parts.push_back(primary());
        return PositiveBool::all_of(std::move(parts));
    }

    PositiveBool primary() {
        if (accept('(')) {
            auto f = disjunction();
            expect(')');
            return f;
        }
        skip();
        Direction d;
        if (text_.compare(pos_, 4, "adv(") == 0) {
            d = Direction::advance;
            pos_ += 4;
        } else if (text_.compare(pos_, 5, "jump(") == 0) {
            d = Direction::jump;
            pos_ += 5;
        } else {
            fail("expected command");
        }
        const StateId a = state();
        expect(',');
        const StateId b = state();
        expect(')');
        return PositiveBool::leaf(Command{d, a, b});
    }

    StateId state() {
        expect('"');
        std::string name;
        while (pos_ < text_.size() && text_[pos_] != '"') {
            if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
            name += text_[pos_++];
        }
        expect('"');
        for (std::size_t i = 0; i < aja_.states.size(); ++i)
            if (aja_.states[i] == name) return static_cast<StateId>(i);
        fail("unknown state '" + name + "'");
    }

    const OneAja& aja_;
    const std::string& text_;
    std::size_t pos_ = 0;
};

} // namespace

std::string to_string(const OneAja& aja, const PositiveBool& f) {
    std::string out;
    render(aja, f, false, out);
    return out;
}

PositiveBool parse_positive_bool(const OneAja& aja, const std::string& text) {
    return BoolParser(aja, text).parse();
}

} // namespace vldl
