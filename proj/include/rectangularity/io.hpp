#pragma once

// Text formats. All numbers in files are 0-based; `one_based` only shifts what render
// prints for humans and is not accepted back by the parsers.
//
//   table      first line n, then n lines of n whitespace-separated symbols
//   partial    as table, with "." for an empty cell
//   matrix     first line n, then n lines of n characters in {0,1}
//   graph pair first line n, n red rows, one blank line, n green rows

#include "bool_matrix.hpp"
#include "core.hpp"
#include "error.hpp"

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

namespace rectangularity {

/// Malformed text; line and column are 1-based (column 0: whole line).
class ParseError : public ValidationError {
public:
    ParseError(std::size_t line, std::size_t column, const std::string & what)
        : ValidationError("line " + std::to_string(line) + (column ? ", column " + std::to_string(column) : std::string{})
                          + ": " + what),
          line_(line), column_(column)
    {
    }

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_, column_;
};

namespace detail {

    inline constexpr std::size_t max_text_order = 4096;

    struct Token {
        std::string_view text;
        std::size_t column; // 1-based
    };

    /// Reads text line by line, tracking 1-based line numbers.
    class LineReader {
    public:
        explicit LineReader(std::string_view text) : text_(text) {}

        bool at_end() const noexcept { return pos_ >= text_.size(); }
        std::size_t line_number() const noexcept { return line_; }

        /// Next line without its terminator ("\r\n" accepted); line_number() then refers to it.
        std::string_view next()
        {
            auto end = text_.find('\n', pos_);
            if (end == std::string_view::npos)
                end = text_.size();
            auto line = text_.substr(pos_, end - pos_);
            if (!line.empty() && line.back() == '\r')
                line.remove_suffix(1);
            pos_ = end + 1;
            ++line_;
            return line;
        }

        /// Next line, or a diagnostic naming what was expected.
        std::string_view require(const std::string & expected)
        {
            if (at_end())
                throw ParseError(line_ + 1, 0, "expected " + expected + ", found end of input");
            return next();
        }

        /// Only blank lines may follow.
        void expect_trailing_blank()
        {
            while (!at_end()) {
                auto line = next();
                if (line.find_first_not_of(" \t") != std::string_view::npos)
                    throw ParseError(line_, line.find_first_not_of(" \t") + 1, "unexpected content after the last row");
            }
        }

    private:
        std::string_view text_;
        std::size_t pos_ = 0;
        std::size_t line_ = 0;
    };

    inline std::vector<Token> tokenize(std::string_view line)
    {
        std::vector<Token> out;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
                ++i;
            if (i == line.size())
                break;
            auto start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t')
                ++i;
            out.push_back({line.substr(start, i - start), start + 1});
        }
        return out;
    }

    inline std::size_t parse_number(const Token & t, std::size_t line)
    {
        std::size_t v = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc{} || ptr != t.text.data() + t.text.size())
            throw ParseError(line, t.column, "expected a non-negative integer, found \"" + std::string(t.text) + "\"");
        return v;
    }

    inline std::size_t parse_order(LineReader & in)
    {
        auto line = in.require("the order on the first line");
        auto tokens = tokenize(line);
        if (tokens.size() != 1)
            throw ParseError(in.line_number(), tokens.empty() ? 0 : tokens[1 % tokens.size()].column,
                             "expected a single order on the first line");
        auto n = parse_number(tokens[0], in.line_number());
        if (n == 0 || n > max_text_order)
            throw ParseError(in.line_number(), tokens[0].column,
                             "order must be in 1.." + std::to_string(max_text_order) + ", got " + std::to_string(n));
        return n;
    }

    /// n rows of n tokens; `cell(token, line, row, col)` converts one token.
    template <typename Cell, typename Convert>
    std::vector<Cell> parse_grid(LineReader & in, std::size_t n, Convert && convert)
    {
        std::vector<Cell> cells;
        cells.reserve(n * n);
        for (std::size_t r = 0; r < n; ++r) {
            auto line = in.require("row " + std::to_string(r) + " of " + std::to_string(n));
            auto tokens = tokenize(line);
            if (tokens.size() != n)
                throw ParseError(in.line_number(), tokens.size() > n ? tokens[n].column : 0,
                                 "expected " + std::to_string(n) + " entries, found " + std::to_string(tokens.size()));
            for (const auto & t : tokens)
                cells.push_back(convert(t, in.line_number(), n));
        }
        return cells;
    }

    inline Symbol parse_symbol(const Token & t, std::size_t line, std::size_t n)
    {
        auto v = parse_number(t, line);
        if (v >= n)
            throw ParseError(line, t.column,
                             "entry " + std::to_string(v) + " out of range 0.." + std::to_string(n - 1));
        return static_cast<Symbol>(v);
    }

    inline BoolMatrix parse_bit_rows(LineReader & in, std::size_t n, const std::string & what)
    {
        BoolMatrix m(n);
        for (std::size_t r = 0; r < n; ++r) {
            auto line = in.require(what + " row " + std::to_string(r) + " of " + std::to_string(n));
            while (!line.empty() && (line.back() == ' ' || line.back() == '\t'))
                line.remove_suffix(1);
            if (line.size() != n)
                throw ParseError(in.line_number(), line.size() > n ? n + 1 : 0,
                                 "expected " + std::to_string(n) + " characters in {0,1}, found "
                                     + std::to_string(line.size()));
            for (std::size_t c = 0; c < n; ++c) {
                if (line[c] != '0' && line[c] != '1')
                    throw ParseError(in.line_number(), c + 1,
                                     std::string("expected 0 or 1, found '") + line[c] + "'");
                m.set(r, c, line[c] == '1');
            }
        }
        return m;
    }

    inline void append_bit_rows(std::string & out, const BoolMatrix & m)
    {
        for (std::size_t r = 0; r < m.order(); ++r) {
            for (std::size_t c = 0; c < m.order(); ++c)
                out += m(r, c) ? '1' : '0';
            out += '\n';
        }
    }

} // namespace detail

inline Groupoid parse_table(std::string_view text)
{
    detail::LineReader in(text);
    auto n = detail::parse_order(in);
    auto cells = detail::parse_grid<Symbol>(in, n, detail::parse_symbol);
    in.expect_trailing_blank();
    return Groupoid(n, std::move(cells));
}

inline std::string render_table(const Groupoid & g, bool one_based = false)
{
    const auto n = g.order();
    std::string out = std::to_string(n) + "\n";
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            if (c)
                out += ' ';
            out += std::to_string(g(r, c) + (one_based ? 1 : 0));
        }
        out += '\n';
    }
    return out;
}

inline PartialArray parse_partial(std::string_view text)
{
    detail::LineReader in(text);
    auto n = detail::parse_order(in);
    auto cells = detail::parse_grid<PartialArray::Cell>(in, n, [](const detail::Token & t, std::size_t line, std::size_t n) {
        if (t.text == ".")
            return PartialArray::Cell{};
        return PartialArray::Cell{detail::parse_symbol(t, line, n)};
    });
    in.expect_trailing_blank();
    return PartialArray(n, std::move(cells));
}

inline std::string render_partial(const PartialArray & p, bool one_based = false)
{
    const auto n = p.order();
    std::string out = std::to_string(n) + "\n";
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            if (c)
                out += ' ';
            const auto & cell = p(r, c);
            out += cell ? std::to_string(*cell + (one_based ? 1 : 0)) : std::string(".");
        }
        out += '\n';
    }
    return out;
}

inline BoolMatrix parse_matrix(std::string_view text)
{
    detail::LineReader in(text);
    auto n = detail::parse_order(in);
    auto m = detail::parse_bit_rows(in, n, "matrix");
    in.expect_trailing_blank();
    return m;
}

inline std::string render_matrix(const BoolMatrix & m)
{
    std::string out = std::to_string(m.order()) + "\n";
    detail::append_bit_rows(out, m);
    return out;
}

/// Two matrix blocks (A, then B), each with its own order line, separated by a blank line.
inline std::pair<BoolMatrix, BoolMatrix> parse_matrix_pair(std::string_view text)
{
    detail::LineReader in(text);
    auto n = detail::parse_order(in);
    auto a = detail::parse_bit_rows(in, n, "first matrix");
    auto sep = in.require("a blank line between the matrices");
    if (sep.find_first_not_of(" \t") != std::string_view::npos)
        throw ParseError(in.line_number(), 0, "expected a blank line between the matrices");
    auto m = detail::parse_order(in);
    if (m != n)
        throw ParseError(in.line_number(), 1,
                         "second matrix has order " + std::to_string(m) + ", first has " + std::to_string(n));
    auto b = detail::parse_bit_rows(in, n, "second matrix");
    in.expect_trailing_blank();
    return {std::move(a), std::move(b)};
}

inline std::string render_matrix_pair(const BoolMatrix & a, const BoolMatrix & b)
{
    return render_matrix(a) + "\n" + render_matrix(b);
}

inline GraphPair parse_graph_pair(std::string_view text)
{
    detail::LineReader in(text);
    auto n = detail::parse_order(in);
    auto red = detail::parse_bit_rows(in, n, "red");
    auto sep = in.require("a blank line before the green rows");
    if (sep.find_first_not_of(" \t") != std::string_view::npos)
        throw ParseError(in.line_number(), 0, "expected a blank line before the green rows");
    auto green = detail::parse_bit_rows(in, n, "green");
    in.expect_trailing_blank();
    return GraphPair(std::move(red), std::move(green));
}

inline std::string render_graph_pair(const GraphPair & gp)
{
    std::string out = std::to_string(gp.order()) + "\n";
    detail::append_bit_rows(out, gp.red);
    out += '\n';
    detail::append_bit_rows(out, gp.green);
    return out;
}

} // namespace rectangularity
