#include "vldl/error.hpp"
#include "vldl/logic.hpp"

#include <cctype>
#include <string>

namespace vldl {

namespace {

class FormulaParser {
public:
    FormulaParser(std::string_view text, const AutomatonTable& table, const PushdownAlphabet& alphabet)
        : text_(text), table_(table), alphabet_(alphabet) {}

    Formula parse() {
        auto f = equivalence();
        skip();
        if (pos_ != text_.size()) fail("unexpected input");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw InputError("syntax error at offset " + std::to_string(pos_) + ": " + what);
    }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(std::string_view token) {
        skip();
        if (text_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    Formula equivalence() {
        auto f = implication();
        while (accept("<->")) f = Formula::equivalence(f, implication());
        return f;
    }

    Formula implication() {
        auto f = disjunction();
        if (accept("->")) return Formula::implication(f, implication());
        return f;
    }

    Formula disjunction() {
        auto f = conjunction();
        while (accept("||")) f = Formula::disjunction(f, conjunction());
        return f;
    }

    Formula conjunction() {
        auto f = unary();
        while (accept("&&")) f = Formula::conjunction(f, unary());
        return f;
    }

    Formula unary() {
        skip();
        if (accept("!")) return Formula::negation(unary());
        if (peek_is("<") && !peek_is("<->")) {
            ++pos_;
            auto id = identifier();
            if (!accept(">")) fail("expected '>'");
            table_.require(id);
            return Formula::diamond(std::move(id), unary());
        }
        if (accept("[")) {
            auto id = identifier();
            if (!accept("]")) fail("expected ']'");
            table_.require(id);
            return Formula::box(std::move(id), unary());
        }
        if (accept("(")) {
            auto f = equivalence();
            if (!accept(")")) fail("expected ')'");
            return f;
        }
        const std::size_t at = pos_;
        auto id = identifier();
        if (id == "tt" || id == "ff") {
            if (alphabet_.propositions().empty()) fail("tt/ff need at least one declared proposition");
            const auto& p = alphabet_.propositions().front();
            return id == "tt" ? Formula::truth(p) : Formula::falsity(p);
        }
        if (!alphabet_.has_proposition(id)) {
            pos_ = at;
            fail("undeclared proposition '" + id + "'");
        }
        return Formula::atom(std::move(id));
    }

    bool peek_is(std::string_view token) {
        skip();
        return text_.substr(pos_, token.size()) == token;
    }

    std::string identifier() {
        skip();
        const std::size_t start = pos_;
        auto ok = [](char ch, bool first) {
            const auto c = static_cast<unsigned char>(ch);
            return std::isalpha(c) || ch == '_' || (!first && (std::isdigit(c) || ch == '.' || ch == '\''));
        };
        while (pos_ < text_.size() && ok(text_[pos_], pos_ == start)) ++pos_;
        if (pos_ == start) fail("expected identifier");
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string_view text_;
    const AutomatonTable& table_;
    const PushdownAlphabet& alphabet_;
    std::size_t pos_ = 0;
};

} // namespace

Formula parse_formula(std::string_view text, const AutomatonTable& table, const PushdownAlphabet& alphabet) {
    return FormulaParser(text, table, alphabet).parse();
}

} // namespace vldl
