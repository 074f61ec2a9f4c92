#pragma once

#include "conversions.hpp"
#include "core.hpp"
#include "properties.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

namespace rectangularity {

namespace detail {
    inline void require_symbol(const Groupoid & g, std::size_t a)
    {
        if (a >= g.order())
            throw ValidationError("element " + std::to_string(a) + " outside 0.." + std::to_string(g.order() - 1));
    }

    inline void require_rectangular(const Groupoid & g, const char * what)
    {
        if (auto v = rectangularity_violation(g)) {
            const auto & w = v->at;
            throw PreconditionError(std::string(what) + " needs a rectangular groupoid; fails at (" + std::to_string(w[0])
                                    + "," + std::to_string(w[1]) + "," + std::to_string(w[2]) + ","
                                    + std::to_string(w[3]) + ")");
        }
    }

    template <typename Op>
    Groupoid tabulate(std::size_t n, Op && op)
    {
        std::vector<Symbol> t(n * n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                t[a * n + b] = static_cast<Symbol>(op(a, b));
        return Groupoid(n, std::move(t));
    }
} // namespace detail

inline Groupoid constant_groupoid(std::size_t n, std::size_t a)
{
    if (n == 0)
        throw SizeError("groupoid order must be at least 1");
    if (a >= n)
        throw ValidationError("constant " + std::to_string(a) + " outside 0.." + std::to_string(n - 1));
    return Groupoid(n, std::vector<Symbol>(n * n, static_cast<Symbol>(a)));
}

/// (a, b) * (c, d) = (b, c) on pairs flattened to a * m + b. Central, of order m^2.
inline Groupoid evans_central(std::size_t m)
{
    if (m == 0)
        throw SizeError("evans_central needs m >= 1");
    return detail::tabulate(m * m, [m](std::size_t x, std::size_t y) { return (x % m) * m + y / m; });
}

/// (a, b) * (c, d) = (a, d) on A x B with |A| = n, |B| = m, flattened to a * m + b.
inline Groupoid rectangular_band(std::size_t n, std::size_t m)
{
    if (n == 0 || m == 0)
        throw SizeError("rectangular_band needs n, m >= 1");
    return detail::tabulate(n * m, [m](std::size_t x, std::size_t y) { return (x / m) * m + y % m; });
}

/// Adds e = n as a clone of a: e*x = a*x, x*e = x*a, e*e = a*a.
///
/// The image is unchanged, so the result is a blow-up of g whenever it is not already
/// missing symbols. For idempotent a this is exactly e*e = a.
inline Groupoid simple_blow_up(const Groupoid & g, std::size_t a)
{
    detail::require_symbol(g, a);
    detail::require_rectangular(g, "simple_blow_up");
    const auto n = g.order();
    return detail::tabulate(n + 1, [&](std::size_t x, std::size_t y) {
        return g(x == n ? a : x, y == n ? a : y);
    });
}

/// x*e = x*a, e*e = e, e*x = a*x unless a*x = a, in which case e*x = e.
///
/// Requires a*a = a: otherwise a*a would sit in row e and column e while e*e = e, and no
/// rectangular table results.
inline Groupoid left_extension(const Groupoid & g, std::size_t a)
{
    detail::require_symbol(g, a);
    detail::require_rectangular(g, "left_extension");
    if (g(a, a) != a)
        throw PreconditionError("left_extension by " + std::to_string(a) + " needs a*a = a, got "
                                + std::to_string(g(a, a)));
    const auto n = g.order();
    return detail::tabulate(n + 1, [&](std::size_t x, std::size_t y) -> std::size_t {
        if (x == n && y == n)
            return n;
        if (x == n)
            return g(a, y) != a ? g(a, y) : n;
        return g(x, y == n ? a : y);
    });
}

/// Mirror image of left_extension under the opposite involution.
inline Groupoid right_extension(const Groupoid & g, std::size_t a)
{
    return opposite(left_extension(opposite(g), a));
}

namespace detail {
    inline void check_split_maps(const Groupoid & a, const Groupoid & b, const Mapping & f, const Mapping & g)
    {
        if (f.domain_size() != a.order() || f.codomain_size() != b.order())
            throw SizeError("f must map the " + std::to_string(a.order()) + " elements of A into the "
                            + std::to_string(b.order()) + " elements of B");
        if (g.domain_size() != b.order() || g.codomain_size() != a.order())
            throw SizeError("g must map the " + std::to_string(b.order()) + " elements of B into the "
                            + std::to_string(a.order()) + " elements of A");
        require_rectangular(a, "split extension");
        require_rectangular(b, "split extension");
    }
} // namespace detail

/// Carrier A then B (B shifted by |A|). Products stay on the side of the left factor:
/// x*y = x *_A g(y) for x in A, y in B, and x *_B f(y) for x in B, y in A. In array terms
/// the top-right block copies columns of A and the bottom-left block columns of B.
inline Groupoid left_split_extension(const Groupoid & a, const Groupoid & b, const Mapping & f, const Mapping & g)
{
    detail::check_split_maps(a, b, f, g);
    const auto na = a.order();
    return detail::tabulate(na + b.order(), [&](std::size_t x, std::size_t y) -> std::size_t {
        const bool xa = x < na, ya = y < na;
        if (xa && ya)
            return a(x, y);
        if (xa)
            return a(x, g(y - na));
        if (ya)
            return na + b(x - na, f(y));
        return na + b(x - na, y - na);
    });
}

/// Products stay on the side of the right factor: x*y = f(x) *_B y for x in A, y in B, and
/// g(x) *_A y for x in B, y in A. The off-diagonal blocks copy rows.
inline Groupoid right_split_extension(const Groupoid & a, const Groupoid & b, const Mapping & f, const Mapping & g)
{
    detail::check_split_maps(a, b, f, g);
    const auto na = a.order();
    return detail::tabulate(na + b.order(), [&](std::size_t x, std::size_t y) -> std::size_t {
        const bool xa = x < na, ya = y < na;
        if (xa && ya)
            return a(x, y);
        if (xa)
            return na + b(f(x), y - na);
        if (ya)
            return a(g(x - na), y);
        return na + b(x - na, y - na);
    });
}

// ---------------------------------------------------------------------------
// Partition construction

/// Red: reflexive cliques on the blocks of the base partition. Green: a -> b whenever a
/// lies in base block p and b is in a's block of the companion of p.
inline GraphPair partition_construction(const PartitionSystem & ps)
{
    const auto n = ps.order();
    BoolMatrix red(n), green(n);
    const auto & base = ps.base();
    for (std::size_t p = 0; p < base.size(); ++p) {
        const auto & theta = ps.companion(p);
        for (auto a : base.block(p)) {
            for (auto b : base.block(p))
                red.set(a, b);
            for (auto b : theta.block(theta.block_of(a)))
                green.set(a, b);
        }
    }
    return GraphPair(std::move(red), std::move(green));
}

namespace detail {
    inline bool is_equivalence(const BoolMatrix & m)
    {
        const auto n = m.order();
        for (std::size_t a = 0; a < n; ++a) {
            if (!m(a, a))
                return false;
            // Equivalence iff every out-neighbour has the identical neighbourhood row.
            for (std::size_t b = 0; b < n; ++b)
                if (m(a, b) && !std::equal(m.row(a).begin(), m.row(a).end(), m.row(b).begin()))
                    return false;
        }
        return true;
    }
} // namespace detail

/// Red is a union of reflexive cliques and green has a loop on every node.
inline bool is_partitioned_pair(const GraphPair & gp)
{
    for (std::size_t a = 0; a < gp.order(); ++a)
        if (!gp.green(a, a))
            return false;
    return detail::is_equivalence(gp.red);
}

inline bool is_dually_partitioned_pair(const GraphPair & gp)
{
    return is_partitioned_pair(dual_graph_pair(gp));
}

/// Recovers (base, companions) from a partitioned pair: the base blocks are the red
/// cliques, and for base block p the companion blocks are the green out-neighbourhoods
/// of p's members. Empty if the pair is not partitioned or the pieces do not form a
/// partition system.
inline std::optional<PartitionSystem> partition_system_of(const GraphPair & gp)
{
    if (!is_partitioned_pair(gp))
        return std::nullopt;
    const auto n = gp.order();
    std::vector<std::size_t> label(n);
    for (std::size_t a = 0; a < n; ++a)
        label[a] = gp.red.and_first(a, gp.red, a); // least member of a's clique
    Partition base = Partition::from_labels(label);
    std::vector<Partition> companions;
    for (const auto & block : base.blocks()) {
        std::vector<std::vector<Symbol>> classes;
        for (auto a : block) {
            std::vector<Symbol> cls;
            for (std::size_t b = 0; b < n; ++b)
                if (gp.green(a, b))
                    cls.push_back(static_cast<Symbol>(b));
            classes.push_back(std::move(cls));
        }
        try {
            companions.emplace_back(n, std::move(classes));
        }
        catch (const ValidationError &) {
            return std::nullopt;
        }
    }
    try {
        return PartitionSystem(std::move(base), std::move(companions));
    }
    catch (const Error &) {
        return std::nullopt;
    }
}

// ---------------------------------------------------------------------------
// Group constructions

namespace detail {
    inline std::vector<Symbol> group_subset(const FiniteGroup & grp, std::span<const Symbol> s, const char * name)
    {
        std::vector<Symbol> v(s.begin(), s.end());
        std::sort(v.begin(), v.end());
        if (std::adjacent_find(v.begin(), v.end()) != v.end())
            throw ValidationError(std::string(name) + " lists an element twice");
        for (auto x : v)
            if (x >= grp.order())
                throw ValidationError(std::string(name) + " element " + std::to_string(x) + " is not in the group");
        return v;
    }
} // namespace detail

/// Cayley graphs of an exact factorisation: red = {(g, gh)}, green = {(g, gk)}.
///
/// Throws PreconditionError unless every group element is hk for exactly one (h, k).
inline GraphPair group_factorization_pair(const FiniteGroup & grp, std::span<const Symbol> h_set,
                                          std::span<const Symbol> k_set)
{
    auto hs = detail::group_subset(grp, h_set, "H");
    auto ks = detail::group_subset(grp, k_set, "K");
    const auto n = grp.order();
    std::vector<std::optional<std::pair<Symbol, Symbol>>> rep(n);
    for (auto h : hs)
        for (auto k : ks) {
            auto x = grp(h, k);
            if (rep[x])
                throw PreconditionError("not an exact factorization: " + std::to_string(rep[x]->first) + "*"
                                        + std::to_string(rep[x]->second) + " = " + std::to_string(h) + "*"
                                        + std::to_string(k) + " = " + std::to_string(x));
            rep[x] = std::pair{h, k};
        }
    if (hs.size() * ks.size() != n)
        throw PreconditionError("not an exact factorization: |H||K| = " + std::to_string(hs.size() * ks.size())
                                + " but the group has order " + std::to_string(n));
    BoolMatrix red(n), green(n);
    for (std::size_t g = 0; g < n; ++g) {
        for (auto h : hs)
            red.set(g, grp(g, h));
        for (auto k : ks)
            green.set(g, grp(g, k));
    }
    return GraphPair(std::move(red), std::move(green));
}

/// Partitioned pair from the left cosets aH (base blocks) and, for each coset, the
/// classes of the equivalence generated by (ah, aht), h in H, t in T.
///
/// H must be a subgroup and T a set of left coset representatives containing the identity.
/// When T is not also a right transversal the classes fail to meet aH once each, and a
/// PreconditionError is thrown.
inline GraphPair coset_construction(const FiniteGroup & grp, std::span<const Symbol> h_subgroup,
                                    std::span<const Symbol> t_set)
{
    auto hs = detail::group_subset(grp, h_subgroup, "H");
    auto ts = detail::group_subset(grp, t_set, "T");
    const auto n = grp.order();
    std::vector<bool> in_h(n, false);
    for (auto h : hs)
        in_h[h] = true;
    if (!in_h[grp.identity()])
        throw PreconditionError("H does not contain the identity");
    for (auto x : hs) {
        if (!in_h[grp.inverse(x)])
            throw PreconditionError("H is not closed under inverses at " + std::to_string(x));
        for (auto y : hs)
            if (!in_h[grp(x, y)])
                throw PreconditionError("H is not closed: " + std::to_string(x) + "*" + std::to_string(y) + " = "
                                        + std::to_string(grp(x, y)));
    }
    if (!std::binary_search(ts.begin(), ts.end(), grp.identity()))
        throw PreconditionError("T does not contain the identity");

    // Left coset label of g: least element of gH.
    std::vector<std::size_t> coset(n);
    for (std::size_t g = 0; g < n; ++g) {
        Symbol least = static_cast<Symbol>(n);
        for (auto h : hs)
            least = std::min(least, grp(g, h));
        coset[g] = least;
    }
    std::vector<bool> hit(n, false);
    for (auto t : ts) {
        if (hit[coset[t]])
            throw PreconditionError("T meets the coset of " + std::to_string(t) + " twice");
        hit[coset[t]] = true;
    }
    if (ts.size() * hs.size() != n)
        throw PreconditionError("T misses some left coset of H");

    Partition base = Partition::from_labels(coset);
    std::vector<Partition> companions;
    for (const auto & block : base.blocks()) {
        const auto a = block.front();
        std::vector<std::size_t> parent(n);
        std::iota(parent.begin(), parent.end(), std::size_t{0});
        auto find = [&](std::size_t x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        for (auto h : hs)
            for (auto t : ts) {
                auto ah = grp(a, h);
                auto r1 = find(ah), r2 = find(grp(ah, t));
                if (r1 != r2)
                    parent[std::max(r1, r2)] = std::min(r1, r2);
            }
        std::vector<std::size_t> label(n);
        for (std::size_t x = 0; x < n; ++x)
            label[x] = find(x);
        companions.push_back(Partition::from_labels(label));
    }
    try {
        return partition_construction(PartitionSystem(std::move(base), std::move(companions)));
    }
    catch (const ValidationError & e) {
        throw PreconditionError(std::string("coset classes do not form a partition system: ") + e.what());
    }
}

} // namespace rectangularity
