#pragma once

#include "core.hpp"
#include "transform.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace rectangularity {

inline constexpr std::size_t default_isotopy_bound = 6;
inline constexpr std::size_t default_canonical_bound = 9;

/// Orientation: the result h satisfies g(alpha(a), beta(b)) = gamma(h(a, b)), that is
/// h(a, b) = gamma^-1(g(alpha(a), beta(b))).
inline Groupoid apply_isotopy(const Groupoid & g, const IsotopyTriple & t)
{
    if (t.order() != g.order())
        throw SizeError("isotopy of order " + std::to_string(t.order()) + " applied to a groupoid of order "
                        + std::to_string(g.order()));
    const auto n = g.order();
    const auto gamma_inv = t.gamma.inverse();
    std::vector<Symbol> table(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            table[a * n + b] = gamma_inv(g(t.alpha(a), t.beta(b)));
    return Groupoid(n, std::move(table));
}

/// The triple undoing t: apply_isotopy(apply_isotopy(g, t), inverse(t)) = g.
inline IsotopyTriple inverse(const IsotopyTriple & t)
{
    return {t.alpha.inverse(), t.beta.inverse(), t.gamma.inverse()};
}

namespace detail {
    /// Sorted multiset of per-symbol cell counts; preserved by every isotopy.
    inline std::vector<std::size_t> symbol_histogram(const Groupoid & g)
    {
        std::vector<std::size_t> count(g.order(), 0);
        for (auto x : g.table())
            ++count[x];
        std::sort(count.begin(), count.end());
        return count;
    }

    class IsotopySearch {
    public:
        IsotopySearch(const Groupoid & g, const Groupoid & h) : g_(g), h_(h), n_(g.order()) {}

        std::optional<IsotopyTriple> run()
        {
            std::vector<Symbol> alpha(n_);
            std::iota(alpha.begin(), alpha.end(), Symbol{0});
            do {
                alpha_ = alpha;
                beta_.assign(n_, 0);
                used_cols_.assign(n_, false);
                gamma_.assign(n_, unset);
                gamma_used_.assign(n_, false);
                if (place_column(0))
                    return finish();
            } while (std::next_permutation(alpha.begin(), alpha.end()));
            return std::nullopt;
        }

    private:
        static constexpr Symbol unset = static_cast<Symbol>(-1);

        // Chooses beta(b) for column b of h; gamma is forced by h(a, b) -> g(alpha(a), beta(b)).
        bool place_column(std::size_t b)
        {
            if (b == n_)
                return true;
            for (Symbol c = 0; c < n_; ++c) {
                if (used_cols_[c])
                    continue;
                std::vector<Symbol> assigned;
                bool ok = true;
                for (std::size_t a = 0; a < n_ && ok; ++a) {
                    auto from = h_(a, b);
                    auto to = g_(alpha_[a], c);
                    if (gamma_[from] == unset) {
                        if (gamma_used_[to])
                            ok = false;
                        else {
                            gamma_[from] = to;
                            gamma_used_[to] = true;
                            assigned.push_back(from);
                        }
                    }
                    else if (gamma_[from] != to)
                        ok = false;
                }
                if (ok) {
                    used_cols_[c] = true;
                    beta_[b] = c;
                    if (place_column(b + 1))
                        return true;
                    used_cols_[c] = false;
                }
                for (auto s : assigned) {
                    gamma_used_[gamma_[s]] = false;
                    gamma_[s] = unset;
                }
            }
            return false;
        }

        IsotopyTriple finish()
        {
            // Symbols missing from h's image go to the unused targets in increasing order.
            Symbol next = 0;
            for (auto & x : gamma_)
                if (x == unset) {
                    while (gamma_used_[next])
                        ++next;
                    x = next;
                    gamma_used_[next] = true;
                }
            return {Permutation(alpha_), Permutation(beta_), Permutation(gamma_)};
        }

        const Groupoid & g_;
        const Groupoid & h_;
        std::size_t n_;
        std::vector<Symbol> alpha_, beta_, gamma_;
        std::vector<bool> used_cols_, gamma_used_;
    };
} // namespace detail

/// A triple t with apply_isotopy(g, t) = h, or nothing.
///
/// Searches alpha in lexicographic order, beta column by column in increasing order, and
/// derives gamma; the first witness in that order is returned.
inline std::optional<IsotopyTriple> are_isotopic(const Groupoid & g, const Groupoid & h,
                                                 std::size_t max_order = default_isotopy_bound)
{
    if (g.order() != h.order())
        throw SizeError("isotopy test between orders " + std::to_string(g.order()) + " and "
                        + std::to_string(h.order()));
    if (g.order() > max_order)
        throw CapacityError("isotopy search is limited to order " + std::to_string(max_order) + ", got "
                            + std::to_string(g.order()));
    if (detail::symbol_histogram(g) != detail::symbol_histogram(h))
        return std::nullopt;
    return detail::IsotopySearch(g, h).run();
}

/// Least relabelling of g together with the permutation producing it.
struct CanonicalLabeling {
    Groupoid form;
    Permutation sigma; // form = relabel(g, sigma)
};

/// Lexicographically least row-major table over all n! relabelings, with early exit on
/// the first entry exceeding the current minimum.
inline CanonicalLabeling canonical_labeling(const Groupoid & g, std::size_t max_order = default_canonical_bound)
{
    const auto n = g.order();
    if (n > max_order)
        throw CapacityError("canonical form is limited to order " + std::to_string(max_order) + ", got "
                            + std::to_string(n));
    // order[i] is the element receiving label i; sigma is its inverse.
    std::vector<Symbol> order(n), sigma(n), best_sigma(n);
    std::iota(order.begin(), order.end(), Symbol{0});
    std::vector<Symbol> best(g.table().begin(), g.table().end());
    std::iota(best_sigma.begin(), best_sigma.end(), Symbol{0});
    do {
        for (std::size_t i = 0; i < n; ++i)
            sigma[order[i]] = static_cast<Symbol>(i);
        std::size_t idx = 0;
        for (; idx < n * n; ++idx) {
            auto v = sigma[g(order[idx / n], order[idx % n])];
            if (v != best[idx]) {
                if (v > best[idx])
                    idx = n * n + 1;
                break;
            }
        }
        if (idx >= n * n)
            continue;
        for (; idx < n * n; ++idx)
            best[idx] = sigma[g(order[idx / n], order[idx % n])];
        best_sigma = sigma;
    } while (std::next_permutation(order.begin(), order.end()));
    return {Groupoid(n, std::move(best)), Permutation(std::move(best_sigma))};
}

inline Groupoid canonical_form(const Groupoid & g, std::size_t max_order = default_canonical_bound)
{
    return canonical_labeling(g, max_order).form;
}

/// sigma with sigma(a*b) = sigma(a) *' sigma(b), i.e. h = relabel(g, sigma), or nothing.
inline std::optional<Permutation> are_isomorphic(const Groupoid & g, const Groupoid & h,
                                                 std::size_t max_order = default_canonical_bound)
{
    if (g.order() != h.order())
        throw SizeError("isomorphism test between orders " + std::to_string(g.order()) + " and "
                        + std::to_string(h.order()));
    auto cg = canonical_labeling(g, max_order);
    auto ch = canonical_labeling(h, max_order);
    if (cg.form != ch.form)
        return std::nullopt;
    return ch.sigma.inverse().after(cg.sigma);
}

/// n cells, one per row and column, holding every symbol once. Depth-first, row by row,
/// columns in increasing order; the first hit is returned.
inline std::optional<Transversal> find_transversal(const Groupoid & g)
{
    const auto n = g.order();
    std::vector<bool> col_used(n, false), sym_used(n, false);
    std::vector<Transversal::Cell> cells;
    cells.reserve(n);
    auto dfs = [&](auto & self, std::size_t r) -> bool {
        if (r == n)
            return true;
        for (std::size_t c = 0; c < n; ++c) {
            auto s = g(r, c);
            if (col_used[c] || sym_used[s])
                continue;
            col_used[c] = sym_used[s] = true;
            cells.emplace_back(static_cast<Symbol>(r), static_cast<Symbol>(c));
            if (self(self, r + 1))
                return true;
            cells.pop_back();
            col_used[c] = sym_used[s] = false;
        }
        return false;
    };
    if (!dfs(dfs, 0))
        return std::nullopt;
    return Transversal(std::move(cells));
}

/// Isotopy (row of symbol i, column of symbol i, identity) built from a transversal; the
/// image groupoid is idempotent. Empty iff g has no transversal.
inline std::optional<std::pair<IsotopyTriple, Groupoid>> idempotent_isotope(const Groupoid & g)
{
    auto t = find_transversal(g);
    if (!t)
        return std::nullopt;
    const auto n = g.order();
    std::vector<Symbol> row_of(n), col_of(n);
    for (auto [r, c] : t->cells()) {
        row_of[g(r, c)] = r;
        col_of[g(r, c)] = c;
    }
    IsotopyTriple triple(Permutation(std::move(row_of)), Permutation(std::move(col_of)), Permutation::identity(n));
    auto h = apply_isotopy(g, triple);
    return std::pair{std::move(triple), std::move(h)};
}

} // namespace rectangularity
