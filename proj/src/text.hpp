#pragma once

// Small cursor over a line of text shared by the hand-written parsers.

#include "domtorso/error.hpp"
#include "domtorso/vertex.hpp"

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace domtorso::detail {

class Cursor {
public:
    explicit Cursor(std::string_view text, std::size_t line = 1, std::size_t firstColumn = 1)
        : text_(text)
        , line_(line)
        , firstColumn_(firstColumn)
    {
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at_end()
    {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool consume(char c)
    {
        if (peek() != c)
            return false;
        ++pos_;
        return true;
    }

    /// Consumes `word` when it appears next as a whole token.
    bool consume_word(std::string_view word)
    {
        skip_ws();
        if (text_.substr(pos_, word.size()) != word)
            return false;
        std::size_t end = pos_ + word.size();
        if (end < text_.size() && is_name_char(text_[end]))
            return false;
        pos_ = end;
        return true;
    }

    bool consume_symbol(std::string_view sym)
    {
        skip_ws();
        if (text_.substr(pos_, sym.size()) != sym)
            return false;
        pos_ += sym.size();
        return true;
    }

    void expect_word(std::string_view word)
    {
        if (!consume_word(word))
            fail("expected '" + std::string(word) + "'");
    }

    void expect_symbol(std::string_view sym)
    {
        if (!consume_symbol(sym))
            fail("expected '" + std::string(sym) + "'");
    }

    void expect(char c)
    {
        if (!consume(c))
            fail(std::string("expected '") + c + "'");
    }

    std::optional<std::string> try_name()
    {
        if (pos_ >= text_.size() || !is_name_start(text_[pos_]))
            return std::nullopt;
        std::size_t begin = pos_;
        while (pos_ < text_.size() && is_name_char(text_[pos_]))
            ++pos_;
        return std::string(text_.substr(begin, pos_ - begin));
    }

    std::string name()
    {
        skip_ws();
        auto n = try_name();
        if (!n)
            fail("expected a name");
        return *n;
    }

    std::optional<Index> try_number()
    {
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            return std::nullopt;
        Index value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            Index digit = static_cast<Index>(text_[pos_] - '0');
            if (value > (~Index{0} - digit) / 10)
                fail("number too large");
            value = value * 10 + digit;
            ++pos_;
        }
        return value;
    }

    Index number()
    {
        skip_ws();
        auto n = try_number();
        if (!n)
            fail("expected a number");
        return *n;
    }

    /// Everything up to the next whitespace.
    std::string_view token()
    {
        skip_ws();
        std::size_t begin = pos_;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return text_.substr(begin, pos_ - begin);
    }

    std::string_view rest()
    {
        skip_ws();
        return text_.substr(pos_);
    }

    std::size_t column() const { return firstColumn_ + pos_; }
    std::size_t position() const { return pos_; }
    void reset(std::size_t pos) { pos_ = pos; }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, column(), what); }

    static bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
    static bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_;
    std::size_t firstColumn_;
};

inline std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

inline std::vector<std::string_view> split_lines(std::string_view text)
{
    std::vector<std::string_view> lines;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        std::size_t end = text.find('\n', begin);
        if (end == std::string_view::npos) {
            if (begin < text.size())
                lines.push_back(text.substr(begin));
            break;
        }
        std::string_view line = text.substr(begin, end - begin);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        lines.push_back(line);
        begin = end + 1;
    }
    return lines;
}

inline std::string_view strip_comment(std::string_view line)
{
    auto hash = line.find('#');
    // '#' also separates a replicated copy from its ordinal (Z#0.z); only a
    // '#' at the start of a token opens a comment.
    while (hash != std::string_view::npos) {
        if (hash == 0 || std::isspace(static_cast<unsigned char>(line[hash - 1])))
            return line.substr(0, hash);
        hash = line.find('#', hash + 1);
    }
    return line;
}

/// Parses one vertex address at the cursor. With `allowVariable`, one numeric
/// slot may be `n`, `i`, `n+c` or `i+c`.
VertexPattern parse_address(Cursor& cur, bool allowVariable);

} // namespace domtorso::detail
