#pragma once

#include "conversions.hpp"
#include "core.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rectangularity {

/// A failing instance of a checked property: which condition failed and at which arguments.
struct Violation {
    std::string condition;
    std::vector<Symbol> at;

    friend bool operator==(const Violation &, const Violation &) = default;
};

namespace detail {
    template <typename Pred>
    std::optional<Violation> check_all_1(std::size_t n, const char * name, Pred && holds)
    {
        for (Symbol a = 0; a < n; ++a)
            if (!holds(a))
                return Violation{name, {a}};
        return std::nullopt;
    }

    template <typename Pred>
    std::optional<Violation> check_all_2(std::size_t n, const char * name, Pred && holds)
    {
        for (Symbol a = 0; a < n; ++a)
            for (Symbol b = 0; b < n; ++b)
                if (!holds(a, b))
                    return Violation{name, {a, b}};
        return std::nullopt;
    }

    template <typename Pred>
    std::optional<Violation> check_all_3(std::size_t n, const char * name, Pred && holds)
    {
        for (Symbol a = 0; a < n; ++a)
            for (Symbol b = 0; b < n; ++b)
                for (Symbol c = 0; c < n; ++c)
                    if (!holds(a, b, c))
                        return Violation{name, {a, b, c}};
        return std::nullopt;
    }

    // Symbols present in each row and in each column of a (partial) table.
    struct LineSymbols {
        BoolMatrix rows;
        BoolMatrix cols;
    };

    template <typename CellAt>
    LineSymbols line_symbols(std::size_t n, CellAt && cell)
    {
        LineSymbols ls{BoolMatrix(n), BoolMatrix(n)};
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (auto x = cell(r, c)) {
                    ls.rows.set(r, *x);
                    ls.cols.set(c, *x);
                }
        return ls;
    }

    // pairs(x, y) = 1 iff x and y share a line; built by OR-ing each line's symbol set
    // into the rows of its members.
    inline BoolMatrix pairs_in_lines(const BoolMatrix & lines)
    {
        const auto n = lines.order();
        BoolMatrix pairs(n);
        for (std::size_t l = 0; l < n; ++l)
            for (std::size_t x = 0; x < n; ++x)
                if (lines(l, x))
                    for (std::size_t y = 0; y < n; ++y)
                        if (lines(l, y) && x != y)
                            pairs.set(x, y);
        return pairs;
    }

    template <typename CellAt>
    std::optional<Violation> pair_disjointness_violation(std::size_t n, CellAt && cell)
    {
        auto ls = line_symbols(n, cell);
        auto row_pairs = pairs_in_lines(ls.rows);
        auto col_pairs = pairs_in_lines(ls.cols);
        for (Symbol x = 0; x < n; ++x) {
            auto y = row_pairs.and_first(x, col_pairs, x);
            if (y == n)
                continue;
            Symbol r = 0, c = 0;
            for (std::size_t l = 0; l < n; ++l) {
                if (ls.rows(l, x) && ls.rows(l, y))
                    r = static_cast<Symbol>(l);
                if (ls.cols(l, x) && ls.cols(l, y))
                    c = static_cast<Symbol>(l);
            }
            return Violation{"pair shares a row and a column", {x, static_cast<Symbol>(y), r, c}};
        }
        return std::nullopt;
    }
} // namespace detail

// ---------------------------------------------------------------------------
// Defining properties

/// Counterexample (a, b, c, d) to a*b = c*d = x  =>  a*d = x, or nothing.
///
/// Uses the rectangle criterion: x is placed correctly iff its cell count equals
/// |rows containing x| * |columns containing x|.
inline std::optional<Violation> rectangularity_violation(const Groupoid & g)
{
    const auto n = g.order();
    std::vector<std::size_t> count(n, 0);
    BoolMatrix rows(n), cols(n); // rows(x, r): symbol x occurs in row r
    std::vector<std::size_t> row_n(n, 0), col_n(n, 0);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            auto x = g(r, c);
            ++count[x];
            if (!rows(x, r)) {
                rows.set(x, r);
                ++row_n[x];
            }
            if (!cols(x, c)) {
                cols.set(x, c);
                ++col_n[x];
            }
        }
    for (Symbol x = 0; x < n; ++x) {
        if (count[x] == row_n[x] * col_n[x])
            continue;
        // Some cell in rows(x) x cols(x) holds another symbol; recover a witness quadruple.
        for (Symbol a = 0; a < n; ++a) {
            if (!rows(x, a))
                continue;
            for (Symbol d = 0; d < n; ++d) {
                if (!cols(x, d) || g(a, d) == x)
                    continue;
                Symbol b = 0, c = 0;
                while (g(a, b) != x)
                    ++b;
                while (g(c, d) != x)
                    ++c;
                return Violation{"a*b=c*d implies a*d=a*b", {a, b, c, d}};
            }
        }
    }
    return std::nullopt;
}

inline bool is_rectangular(const Groupoid & g)
{
    return !rectangularity_violation(g);
}

/// Witness (x, y, row, column): distinct x, y together in that row and that column.
inline std::optional<Violation> p1_violation(const Groupoid & g)
{
    return detail::pair_disjointness_violation(g.order(), [&](std::size_t r, std::size_t c) {
        return std::optional<Symbol>(g(r, c));
    });
}

inline bool satisfies_p1(const Groupoid & g)
{
    return !p1_violation(g);
}

/// Witness (a, b, number of red-green paths) for the first pair without exactly one path.
inline std::optional<Violation> p2_violation(const GraphPair & gp)
{
    const auto n = gp.order();
    const BoolMatrix green_in = transpose(gp.green);
    for (Symbol a = 0; a < n; ++a)
        for (Symbol b = 0; b < n; ++b)
            if (auto k = gp.red.and_count(a, green_in, b); k != 1)
                return Violation{"exactly one red-green path", {a, b, static_cast<Symbol>(k)}};
    return std::nullopt;
}

inline bool satisfies_p2(const GraphPair & gp)
{
    return !p2_violation(gp);
}

/// AB = J, computed as an explicit integer matrix product.
inline bool satisfies_p4(const BoolMatrix & a, const BoolMatrix & b)
{
    if (a.order() != b.order())
        throw SizeError("matrices of orders " + std::to_string(a.order()) + " and " + std::to_string(b.order()));
    const auto n = a.order();
    std::vector<unsigned> product(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (a(i, k))
                for (std::size_t j = 0; j < n; ++j)
                    product[i * n + j] += b(k, j) ? 1U : 0U;
    return std::all_of(product.begin(), product.end(), [](unsigned v) { return v == 1; });
}

inline bool is_full(const Groupoid & g)
{
    std::vector<bool> seen(g.order(), false);
    for (auto x : g.table())
        seen[x] = true;
    return std::find(seen.begin(), seen.end(), false) == seen.end();
}

/// Every pair of distinct symbols shares some row or some column.
inline bool is_maximal(const Groupoid & g)
{
    const auto n = g.order();
    auto ls = detail::line_symbols(n, [&](std::size_t r, std::size_t c) { return std::optional<Symbol>(g(r, c)); });
    auto row_pairs = detail::pairs_in_lines(ls.rows);
    auto col_pairs = detail::pairs_in_lines(ls.cols);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (x != y && !row_pairs(x, y) && !col_pairs(x, y))
                return false;
    return true;
}

// ---------------------------------------------------------------------------
// Equational special cases. Each *_violation returns the first failing tuple in
// lexicographic order.

inline std::optional<Violation> idempotence_violation(const Groupoid & g)
{
    return detail::check_all_1(g.order(), "a*a=a", [&](Symbol a) { return g(a, a) == a; });
}

inline std::optional<Violation> associativity_violation(const Groupoid & g)
{
    return detail::check_all_3(g.order(), "(a*b)*c=a*(b*c)",
                               [&](Symbol a, Symbol b, Symbol c) { return g(g(a, b), c) == g(a, g(b, c)); });
}

inline std::optional<Violation> centrality_violation(const Groupoid & g)
{
    return detail::check_all_3(g.order(), "(a*b)*(b*c)=b",
                               [&](Symbol a, Symbol b, Symbol c) { return g(g(a, b), g(b, c)) == b; });
}

inline std::optional<Violation> undirected_eq_violation(const Groupoid & g)
{
    return detail::check_all_3(g.order(), "(a*b)*(c*a)=a",
                               [&](Symbol a, Symbol b, Symbol c) { return g(g(a, b), g(c, a)) == a; });
}

inline std::optional<Violation> partitioned_eqs_violation(const Groupoid & g)
{
    if (auto v = idempotence_violation(g))
        return v;
    return detail::check_all_3(g.order(), "(a*b)*c=a*c",
                               [&](Symbol a, Symbol b, Symbol c) { return g(g(a, b), c) == g(a, c); });
}

inline std::optional<Violation> dually_partitioned_eqs_violation(const Groupoid & g)
{
    if (auto v = idempotence_violation(g))
        return v;
    return detail::check_all_3(g.order(), "a*(b*c)=a*c",
                               [&](Symbol a, Symbol b, Symbol c) { return g(a, g(b, c)) == g(a, c); });
}

/// a*(a*b) = a*b; holds in every idempotent rectangular groupoid.
inline std::optional<Violation> left_absorption_violation(const Groupoid & g)
{
    return detail::check_all_2(g.order(), "a*(a*b)=a*b", [&](Symbol a, Symbol b) { return g(a, g(a, b)) == g(a, b); });
}

/// (a*b)*b = a*b; holds in every idempotent rectangular groupoid.
inline std::optional<Violation> right_absorption_violation(const Groupoid & g)
{
    return detail::check_all_2(g.order(), "(a*b)*b=a*b", [&](Symbol a, Symbol b) { return g(g(a, b), b) == g(a, b); });
}

inline bool is_idempotent(const Groupoid & g) { return !idempotence_violation(g); }
inline bool is_associative(const Groupoid & g) { return !associativity_violation(g); }
inline bool is_central(const Groupoid & g) { return !centrality_violation(g); }
inline bool satisfies_undirected_eq(const Groupoid & g) { return !undirected_eq_violation(g); }
inline bool satisfies_partitioned_eqs(const Groupoid & g) { return !partitioned_eqs_violation(g); }
inline bool satisfies_dually_partitioned_eqs(const Groupoid & g) { return !dually_partitioned_eqs_violation(g); }

// ---------------------------------------------------------------------------
// Matrix symmetry

/// Incidence matrices (A, B) of the graph pair of g satisfy AB = J and BA = J.
inline bool is_matrix_symmetric(const Groupoid & g)
{
    auto gp = groupoid_to_graph_pair(g);
    return satisfies_p4(gp.red, gp.green) && satisfies_p4(gp.green, gp.red);
}

/// The companion operation of a matrix-symmetric groupoid: a+b is the middle node of the
/// unique green-red path from a to b.
inline Groupoid derive_plus(const Groupoid & g)
{
    auto gp = groupoid_to_graph_pair(g);
    if (!satisfies_p4(gp.red, gp.green))
        throw PreconditionError("groupoid is not matrix symmetric: red-green path counts are not all 1");
    // The green-red paths of (R, G) are the red-green paths of (G, R).
    try {
        return graph_pair_to_groupoid(GraphPair(gp.green, gp.red));
    }
    catch (const PreconditionError & e) {
        throw PreconditionError(std::string("groupoid is not matrix symmetric: green-red ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// Partial arrays. Empty cells never take part in any condition.

/// Witness (symbol, line index, 0 for row / 1 for column).
inline std::optional<Violation> partial_latin_violation(const PartialArray & p)
{
    const auto n = p.order();
    for (Symbol l = 0; l < n; ++l)
        for (int dir = 0; dir < 2; ++dir) {
            std::vector<bool> seen(n, false);
            for (std::size_t k = 0; k < n; ++k) {
                const auto & cell = dir == 0 ? p(l, k) : p(k, l);
                if (!cell)
                    continue;
                if (seen[*cell])
                    return Violation{"symbol repeated in a line", {*cell, l, static_cast<Symbol>(dir)}};
                seen[*cell] = true;
            }
        }
    return std::nullopt;
}

inline std::optional<Violation> partial_p1_violation(const PartialArray & p)
{
    return detail::pair_disjointness_violation(p.order(), [&](std::size_t r, std::size_t c) { return p(r, c); });
}

/// Witness (i, j, k, l): equal symbols at (i,j) and (k,l) with a filled opposite corner.
inline std::optional<Violation> blackburn_violation(const PartialArray & p)
{
    const auto n = p.order();
    for (Symbol i = 0; i < n; ++i)
        for (Symbol j = 0; j < n; ++j) {
            if (!p(i, j))
                continue;
            for (Symbol k = 0; k < n; ++k)
                for (Symbol l = 0; l < n; ++l) {
                    if (i == k || j == l || p(k, l) != p(i, j))
                        continue;
                    if (p(i, l) || p(k, j))
                        return Violation{"equal symbols force empty opposite corners", {i, j, k, l}};
                }
        }
    return std::nullopt;
}

inline bool is_partial_latin(const PartialArray & p) { return !partial_latin_violation(p); }
inline bool is_partial_p1(const PartialArray & p) { return !partial_p1_violation(p); }
inline bool has_blackburn(const PartialArray & p) { return !blackburn_violation(p); }

// ---------------------------------------------------------------------------
// Congruences

/// Witness (a, a', b, b') with a ~ a', b ~ b' but a*b and a'*b' in different blocks.
inline std::optional<Violation> congruence_violation(const Groupoid & g, const Partition & p)
{
    if (p.order() != g.order())
        throw SizeError("partition of order " + std::to_string(p.order()) + " for groupoid of order "
                        + std::to_string(g.order()));
    for (const auto & x_block : p.blocks())
        for (const auto & y_block : p.blocks()) {
            const Symbol a = x_block.front(), b = y_block.front();
            const auto target = p.block_of(g(a, b));
            for (auto a2 : x_block)
                for (auto b2 : y_block)
                    if (p.block_of(g(a2, b2)) != target)
                        return Violation{"congruence", {a, a2, b, b2}};
        }
    return std::nullopt;
}

inline bool is_congruence(const Groupoid & g, const Partition & p)
{
    return !congruence_violation(g, p);
}

} // namespace rectangularity
