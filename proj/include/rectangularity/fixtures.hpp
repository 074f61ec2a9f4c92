#pragma once

// Small named tables used by the samples, the tests and the acceptance runner.

#include "core.hpp"

namespace rectangularity::fixtures {

/// Constant order-4 table.
inline Groupoid c4()
{
    return Groupoid::from_rows({{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
}

/// Pair disjoint and full, not maximal.
inline Groupoid m4a()
{
    return Groupoid::from_rows({{0, 0, 2, 2}, {1, 1, 3, 3}, {0, 0, 2, 2}, {1, 1, 3, 3}});
}

/// Maximally pair disjoint.
inline Groupoid m4b()
{
    return Groupoid::from_rows({{0, 0, 3, 3}, {1, 1, 2, 2}, {0, 0, 2, 2}, {1, 1, 3, 3}});
}

/// Central groupoid of order 4; both relations of its graph pair coincide.
inline Groupoid x4()
{
    return Groupoid::from_rows({{0, 0, 1, 1}, {2, 2, 3, 3}, {2, 2, 3, 3}, {0, 0, 1, 1}});
}

/// Two idempotent rectangular groupoids, isotopic but not isomorphic.
inline Groupoid t5a()
{
    return Groupoid::from_rows(
        {{0, 0, 0, 0, 0}, {1, 1, 2, 2, 1}, {1, 1, 2, 2, 1}, {3, 4, 3, 3, 4}, {3, 4, 3, 3, 4}});
}

inline Groupoid t5b()
{
    return Groupoid::from_rows(
        {{0, 0, 0, 0, 0}, {1, 1, 2, 2, 2}, {1, 1, 2, 2, 2}, {3, 3, 4, 3, 4}, {3, 3, 4, 3, 4}});
}

/// Idempotent rectangular groupoid whose quotient by {0,1,2,3}|{4} is not rectangular.
inline Groupoid q5()
{
    return Groupoid::from_rows(
        {{0, 0, 2, 2, 2}, {1, 1, 3, 3, 1}, {0, 0, 2, 2, 2}, {1, 1, 3, 3, 1}, {0, 0, 3, 3, 4}});
}

inline Partition q5_congruence()
{
    return Partition(5, {{0, 1, 2, 3}, {4}});
}

/// Idempotent, not rectangular.
inline Groupoid i3()
{
    return Groupoid::from_rows({{0, 2, 2}, {0, 1, 2}, {0, 1, 2}});
}

/// Partial Latin square with the Blackburn property that is not partially pair disjoint.
inline PartialArray b3()
{
    using C = PartialArray::Cell;
    return PartialArray(3, {C{}, C{0}, C{2}, C{0}, C{}, C{1}, C{2}, C{1}, C{}});
}

} // namespace rectangularity::fixtures
