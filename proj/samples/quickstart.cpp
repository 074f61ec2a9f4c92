// Walks through the main operations on a few small tables.

#include <rectangularity.hpp>

#include <iostream>

using namespace rectangularity;

int main()
{
    // A central groupoid: the red and green relations of its graph pair coincide.
    const auto x4 = fixtures::x4();
    std::cout << render_table(x4) << "rectangular: " << is_rectangular(x4) << ", central: " << is_central(x4)
              << "\n\n";

    const auto gp = groupoid_to_graph_pair(x4);
    std::cout << render_graph_pair(gp) << "P2: " << satisfies_p2(gp)
              << ", round trip: " << (graph_pair_to_groupoid(gp) == x4) << "\n\n";

    // Idempotent, isotopic, not isomorphic.
    const auto a = fixtures::t5a(), b = fixtures::t5b();
    if (auto t = are_isotopic(a, b)) {
        std::cout << "isotopy beta:";
        for (auto x : t->beta.images())
            std::cout << ' ' << x;
        std::cout << "\nisomorphic: " << are_isomorphic(a, b).has_value() << "\n\n";
    }

    // Quotients need not stay rectangular.
    const auto q = quotient(fixtures::q5(), fixtures::q5_congruence());
    std::cout << "quotient of Q5:\n" << render_table(q) << "rectangular: " << is_rectangular(q) << "\n\n";

    // Small census.
    for (std::size_t n = 1; n <= 3; ++n)
        std::cout << "order " << n << ": " << enumerate_rectangular(n, CountMode::labeled).count << " labelled, "
                  << enumerate_rectangular(n, CountMode::isomorphism).count << " up to isomorphism\n";
    std::cout << "central groupoids of order 9: " << enumerate_central(9).count << '\n';
}
