#pragma once

#include "conversions.hpp"
#include "core.hpp"
#include "properties.hpp"

#include <algorithm>
#include <variant>

namespace rectangularity {

/// Quotient by a congruence. Block k of the result is the k-th block of p (ordered by
/// least element). The result need not be rectangular even when g is.
inline Groupoid quotient(const Groupoid & g, const Partition & p)
{
    if (auto v = congruence_violation(g, p)) {
        const auto & w = v->at;
        throw PreconditionError("partition is not a congruence: " + std::to_string(w[0]) + "~" + std::to_string(w[1])
                                + " and " + std::to_string(w[2]) + "~" + std::to_string(w[3]) + " but their products "
                                + std::to_string(g(w[0], w[2])) + " and " + std::to_string(g(w[1], w[3]))
                                + " lie in different blocks");
    }
    const auto k = p.size();
    std::vector<Symbol> table(k * k);
    for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = 0; y < k; ++y)
            table[x * k + y] = static_cast<Symbol>(p.block_of(g(p.block(x).front(), p.block(y).front())));
    return Groupoid(k, std::move(table));
}

/// Componentwise product on pairs (a, b) flattened to a * |h| + b.
inline Groupoid direct_product(const Groupoid & g, const Groupoid & h)
{
    const auto n = g.order(), m = h.order(), nm = n * m;
    std::vector<Symbol> table(nm * nm);
    for (std::size_t x = 0; x < nm; ++x)
        for (std::size_t y = 0; y < nm; ++y)
            table[x * nm + y] = static_cast<Symbol>(g(x / m, y / m) * m + h(x % m, y % m));
    return Groupoid(nm, std::move(table));
}

/// A pair of subset elements whose product leaves the subset.
struct ClosureFailure {
    Symbol left;
    Symbol right;
    Symbol product;

    friend bool operator==(const ClosureFailure &, const ClosureFailure &) = default;
};

/// The subgroupoid on `subset`, relabelled by position in the sorted subset, or the first
/// escaping product found in row-major order over the sorted subset.
inline std::variant<Groupoid, ClosureFailure> subalgebra(const Groupoid & g, std::span<const Symbol> subset)
{
    if (subset.empty())
        throw PreconditionError("subalgebra of an empty subset");
    std::vector<Symbol> elems(subset.begin(), subset.end());
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    std::vector<long> index(g.order(), -1);
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (elems[i] >= g.order())
            throw ValidationError("subset element " + std::to_string(elems[i]) + " outside the carrier");
        index[elems[i]] = static_cast<long>(i);
    }
    const auto k = elems.size();
    std::vector<Symbol> table(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            auto prod = g(elems[i], elems[j]);
            if (index[prod] < 0)
                return ClosureFailure{elems[i], elems[j], prod};
            table[i * k + j] = static_cast<Symbol>(index[prod]);
        }
    return Groupoid(k, std::move(table));
}

/// (a, b) + (c, d) = (a*c, c) on pairs flattened to a * n + b.
///
/// Always rectangular; (a, b) -> a is a surjective homomorphism onto g.
inline Groupoid square_lift(const Groupoid & g)
{
    const auto n = g.order(), nn = n * n;
    std::vector<Symbol> table(nn * nn);
    for (std::size_t x = 0; x < nn; ++x)
        for (std::size_t y = 0; y < nn; ++y) {
            const auto a = x / n, c = y / n;
            table[x * nn + y] = static_cast<Symbol>(g(a, c) * n + c);
        }
    return Groupoid(nn, std::move(table));
}

/// Relabel g by sigma: the result maps (sigma(a), sigma(b)) to sigma(a*b).
inline Groupoid relabel(const Groupoid & g, const Permutation & sigma)
{
    if (sigma.order() != g.order())
        throw SizeError("relabelling permutation has the wrong order");
    const auto n = g.order();
    std::vector<Symbol> table(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            table[sigma(a) * n + sigma(b)] = sigma(g(a, b));
    return Groupoid(n, std::move(table));
}

/// True iff f (as images of 0..|src|-1 in 0..|dst|-1) satisfies f(a*b) = f(a)*f(b).
inline bool is_homomorphism(const Groupoid & src, const Groupoid & dst, std::span<const Symbol> f)
{
    if (f.size() != src.order())
        throw SizeError("homomorphism map has the wrong domain size");
    for (std::size_t a = 0; a < src.order(); ++a)
        for (std::size_t b = 0; b < src.order(); ++b)
            if (f[src(a, b)] != dst(f[a], f[b]))
                return false;
    return true;
}

} // namespace rectangularity
