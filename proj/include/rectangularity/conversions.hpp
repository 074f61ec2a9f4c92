#pragma once

// Executable forms of the equivalences between the array/groupoid, graph-pair and
// matrix-pair models.

#include "core.hpp"

#include <utility>

namespace rectangularity {

/// red = {(a, a*b)}, green = {(a*b, b)}.
inline GraphPair groupoid_to_graph_pair(const Groupoid & g)
{
    const auto n = g.order();
    BoolMatrix red(n), green(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            red.set(a, g(a, b));
            green.set(g(a, b), b);
        }
    return GraphPair(std::move(red), std::move(green));
}

/// a*b is the middle node of the unique red-green path a -> c -> b.
///
/// Throws PreconditionError naming the first pair (row-major) whose path count is not 1.
inline Groupoid graph_pair_to_groupoid(const GraphPair & gp)
{
    const auto n = gp.order();
    if (n == 0)
        throw SizeError("graph pair has no nodes");
    const BoolMatrix green_in = transpose(gp.green);
    std::vector<Symbol> table(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            auto paths = gp.red.and_count(a, green_in, b);
            if (paths != 1)
                throw PreconditionError("pair " + detail::cell_str(a, b) + " has " + std::to_string(paths)
                                        + " red-green paths, expected exactly 1");
            table[a * n + b] = static_cast<Symbol>(gp.red.and_first(a, green_in, b));
        }
    return Groupoid(n, std::move(table));
}

/// Incidence matrices (I_R, I_G). With the bitset-row storage this is the identity on data.
inline std::pair<BoolMatrix, BoolMatrix> graph_pair_to_matrices(const GraphPair & gp)
{
    return {gp.red, gp.green};
}

inline GraphPair matrices_to_graph_pair(const BoolMatrix & a, const BoolMatrix & b)
{
    if (a.order() != b.order())
        throw SizeError("matrices of orders " + std::to_string(a.order()) + " and " + std::to_string(b.order()));
    return GraphPair(a, b);
}

} // namespace rectangularity
