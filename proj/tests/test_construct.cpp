#include "oracles.hpp"

#include <rectangularity/construct.hpp>
#include <rectangularity/conversions.hpp>
#include <rectangularity/fixtures.hpp>
#include <rectangularity/isotopy.hpp>
#include <rectangularity/transform.hpp>

#include <gtest/gtest.h>

using namespace rectangularity;
namespace fx = rectangularity::fixtures;

namespace {

std::vector<Groupoid> rectangular_of_order(std::size_t n)
{
    std::vector<Groupoid> out;
    oracle::all_tables(n, [&](const Groupoid & g) {
        if (oracle::rectangular(g))
            out.push_back(g);
    });
    return out;
}

std::vector<Mapping> all_maps(std::size_t from, std::size_t to)
{
    std::vector<Mapping> out;
    std::vector<Symbol> img(from, 0);
    while (true) {
        out.emplace_back(to, img);
        std::size_t i = 0;
        while (i < from && ++img[i] == to)
            img[i++] = 0;
        if (i == from)
            return out;
    }
}

} // namespace

TEST(Constant, Basics)
{
    auto c = constant_groupoid(3, 1);
    EXPECT_EQ(c, Groupoid::from_rows({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}));
    EXPECT_TRUE(is_rectangular(c));
    EXPECT_THROW(constant_groupoid(0, 0), SizeError);
    EXPECT_THROW(constant_groupoid(2, 2), ValidationError);
}

TEST(Evans, CentralForSmallM)
{
    for (std::size_t m = 1; m <= 4; ++m) {
        auto g = evans_central(m);
        EXPECT_EQ(g.order(), m * m);
        EXPECT_TRUE(is_central(g)) << m;
        EXPECT_TRUE(is_rectangular(g)) << m;
    }
    EXPECT_EQ(evans_central(2), Groupoid::from_rows({{0, 0, 1, 1}, {2, 2, 3, 3}, {0, 0, 1, 1}, {2, 2, 3, 3}}));
    EXPECT_THROW(evans_central(0), SizeError);
}

TEST(Band, Identities)
{
    for (std::size_t n = 1; n <= 4; ++n)
        for (std::size_t m = 1; m <= 4; ++m) {
            auto b = rectangular_band(n, m);
            EXPECT_TRUE(is_rectangular(b));
            EXPECT_TRUE(is_idempotent(b));
            EXPECT_TRUE(is_associative(b));
            // x*y*z = x*z
            for (std::size_t x = 0; x < n * m; ++x)
                for (std::size_t y = 0; y < n * m; ++y)
                    for (std::size_t z = 0; z < n * m; ++z)
                        ASSERT_EQ(b(b(x, y), z), b(x, z));
        }
    EXPECT_THROW(rectangular_band(0, 2), SizeError);
}

TEST(Band, ImagesOfRowsAndColumns)
{
    // Row x of the band is the copy of A-class x/m; column y the B-class y%m.
    const std::size_t n = 2, m = 3;
    auto b = rectangular_band(n, m);
    for (std::size_t x = 0; x < n * m; ++x)
        for (std::size_t y = 0; y < n * m; ++y) {
            EXPECT_EQ(b(x, y) / m, x / m);
            EXPECT_EQ(b(x, y) % m, y % m);
        }
}

TEST(BlowUp, ClonesAnElement)
{
    const auto g = fx::x4();
    for (std::size_t a = 0; a < 4; ++a) {
        auto h = simple_blow_up(g, a);
        ASSERT_EQ(h.order(), 5U);
        EXPECT_TRUE(is_rectangular(h));
        const std::vector<Symbol> sub{0, 1, 2, 3};
        EXPECT_EQ(std::get<Groupoid>(subalgebra(h, sub)), g);
        for (std::size_t x = 0; x < 5; ++x) {
            const auto y = x == 4 ? a : x;
            EXPECT_EQ(h(4, x), g(a, y));
            EXPECT_EQ(h(x, 4), g(y, a));
        }
    }
    EXPECT_THROW(simple_blow_up(fx::i3(), 0), PreconditionError);
    EXPECT_THROW(simple_blow_up(g, 4), ValidationError);
}

TEST(BlowUp, PreservesRectangularityExhaustively)
{
    for (std::size_t n = 1; n <= 3; ++n)
        for (const auto & g : rectangular_of_order(n))
            for (std::size_t a = 0; a < n; ++a)
                ASSERT_TRUE(oracle::rectangular(simple_blow_up(g, a)));
}

TEST(Extension, TrivialBase)
{
    const auto trivial = Groupoid::from_rows({{0}});
    EXPECT_EQ(left_extension(trivial, 0), Groupoid::from_rows({{0, 0}, {1, 1}}));
    EXPECT_EQ(right_extension(trivial, 0), Groupoid::from_rows({{0, 1}, {0, 1}}));
}

TEST(Extension, NeedsIdempotentSymbol)
{
    EXPECT_THROW(left_extension(fx::c4(), 1), PreconditionError);
    EXPECT_THROW(right_extension(fx::c4(), 1), PreconditionError);
    EXPECT_THROW(left_extension(fx::i3(), 0), PreconditionError);
    EXPECT_NO_THROW(left_extension(fx::c4(), 0));
}

TEST(Extension, PreservesRectangularityExhaustively)
{
    for (std::size_t n = 1; n <= 3; ++n)
        for (const auto & g : rectangular_of_order(n))
            for (std::size_t a = 0; a < n; ++a) {
                if (g(a, a) != a)
                    continue;
                auto l = left_extension(g, a);
                auto r = right_extension(g, a);
                ASSERT_TRUE(oracle::rectangular(l));
                ASSERT_TRUE(oracle::rectangular(r));
                EXPECT_EQ(l(n, n), n);
                EXPECT_EQ(r, opposite(left_extension(opposite(g), a)));
            }
}

TEST(Split, RectangularForAllSmallFactors)
{
    const auto ones = rectangular_of_order(1), twos = rectangular_of_order(2);
    std::size_t checked = 0;
    for (const auto * as : {&ones, &twos})
        for (const auto * bs : {&ones, &twos})
            for (const auto & a : *as)
                for (const auto & b : *bs) {
                    for (const auto & f : all_maps(a.order(), b.order()))
                        for (const auto & g : all_maps(b.order(), a.order())) {
                            auto l = left_split_extension(a, b, f, g);
                            auto r = right_split_extension(a, b, f, g);
                            ASSERT_TRUE(oracle::rectangular(l));
                            ASSERT_TRUE(oracle::rectangular(r));
                            const std::vector<Symbol> lower{0, 1};
                            if (a.order() == 2) {
                                ASSERT_EQ(std::get<Groupoid>(subalgebra(l, lower)), a);
                            }
                            checked += 2;
                        }
                }
    EXPECT_GT(checked, 0U);
}

TEST(Split, X4IsNotASplitExtensionOfOrderTwoFactors)
{
    const auto twos = rectangular_of_order(2);
    ASSERT_EQ(twos.size(), 6U);
    const auto x4 = fx::x4();
    const auto red = groupoid_to_graph_pair(x4).red;
    const auto bb = graph_pair_to_groupoid(GraphPair(red, red));
    std::size_t isomorphic = 0, isotopic = 0, isotopic_assoc = 0, total = 0;
    const auto fs = all_maps(2, 2);
    for (const auto & a : twos)
        for (const auto & b : twos)
            for (const auto & f : fs)
                for (const auto & g : fs)
                    for (int side = 0; side < 2; ++side) {
                        auto e = side == 0 ? left_split_extension(a, b, f, g) : right_split_extension(a, b, f, g);
                        ++total;
                        if (are_isomorphic(e, x4) || are_isomorphic(e, bb))
                            ++isomorphic;
                        if (are_isotopic(x4, e)) {
                            ++isotopic;
                            if (is_associative(a) && is_associative(b))
                                ++isotopic_assoc;
                        }
                    }
    EXPECT_EQ(total, 1152U);
    EXPECT_EQ(isomorphic, 0U);
    EXPECT_EQ(isotopic, 16U);
    EXPECT_EQ(isotopic_assoc, 4U);

    // No 2-element subset of X4 is closed.
    for (Symbol x = 0; x < 4; ++x)
        for (Symbol y = x + 1; y < 4; ++y) {
            const std::vector<Symbol> s{x, y};
            EXPECT_TRUE(std::holds_alternative<ClosureFailure>(subalgebra(x4, s)));
        }
}

TEST(Split, MapSizesChecked)
{
    const auto a = Groupoid::from_rows({{0, 0}, {1, 1}});
    const auto b = Groupoid::from_rows({{0}});
    EXPECT_THROW(left_split_extension(a, b, Mapping(1, {0}), Mapping(2, {0})), SizeError);
    EXPECT_THROW(right_split_extension(a, b, Mapping(1, {0, 0}), Mapping(1, {0})), SizeError);
    EXPECT_THROW(left_split_extension(fx::i3(), b, Mapping(1, {0, 0, 0}), Mapping(3, {0})), PreconditionError);
}

TEST(PartitionConstruction, RoundTrip)
{
    Partition base(4, {{0, 1}, {2, 3}});
    PartitionSystem ps(base, {Partition(4, {{0, 2}, {1, 3}}), Partition(4, {{0, 3}, {1, 2}})});
    auto gp = partition_construction(ps);
    EXPECT_TRUE(is_partitioned_pair(gp));
    EXPECT_TRUE(satisfies_p2(gp));
    auto back = partition_system_of(gp);
    ASSERT_TRUE(back);
    EXPECT_EQ(*back, ps);
    EXPECT_TRUE(is_rectangular(graph_pair_to_groupoid(gp)));
}

TEST(PartitionConstruction, TrivialSystems)
{
    for (std::size_t n = 1; n <= 5; ++n) {
        // One base block, discrete companion.
        PartitionSystem one(Partition::single_block(n), {Partition::discrete(n)});
        auto gp = partition_construction(one);
        EXPECT_TRUE(satisfies_p2(gp));
        EXPECT_EQ(*partition_system_of(gp), one);
        // Discrete base, single-block companions.
        PartitionSystem many(Partition::discrete(n), std::vector<Partition>(n, Partition::single_block(n)));
        gp = partition_construction(many);
        EXPECT_TRUE(satisfies_p2(gp));
        EXPECT_EQ(*partition_system_of(gp), many);
    }
}

TEST(PartitionConstruction, RejectsBadSystems)
{
    Partition base(4, {{0, 1}, {2, 3}});
    EXPECT_THROW(PartitionSystem(base, {Partition(4, {{0, 1}, {2, 3}}), Partition::discrete(4)}), ValidationError);
    EXPECT_THROW(PartitionSystem(base, {Partition::discrete(4)}), SizeError);
    GraphPair not_partitioned(BoolMatrix::from_rows({"10", "11"}), BoolMatrix::identity(2));
    EXPECT_FALSE(partition_system_of(not_partitioned));
}

TEST(Factorization, Z6)
{
    auto z6 = FiniteGroup::cyclic(6);
    const std::vector<Symbol> h{0, 3}, k{0, 2, 4};
    auto gp = group_factorization_pair(z6, h, k);
    EXPECT_TRUE(satisfies_p2(gp));
    EXPECT_TRUE(is_partitioned_pair(gp));
    EXPECT_TRUE(is_rectangular(graph_pair_to_groupoid(gp)));

    const std::vector<Symbol> k2{0, 1, 2};
    EXPECT_TRUE(satisfies_p2(group_factorization_pair(z6, h, k2)));
}

TEST(Factorization, ClosureUnderLeftTranslation)
{
    auto z6 = FiniteGroup::cyclic(6);
    const std::vector<Symbol> h{0, 3}, k{0, 1, 2};
    auto gp = group_factorization_pair(z6, h, k);
    for (Symbol t = 0; t < 6; ++t)
        for (Symbol x = 0; x < 6; ++x)
            for (Symbol y = 0; y < 6; ++y) {
                EXPECT_EQ(gp.red(x, y), gp.red(z6(t, x), z6(t, y)));
                EXPECT_EQ(gp.green(x, y), gp.green(z6(t, x), z6(t, y)));
            }
}

TEST(Factorization, RejectsNonFactorizations)
{
    auto z4 = FiniteGroup::cyclic(4);
    const std::vector<Symbol> h{0, 1};
    EXPECT_THROW(group_factorization_pair(z4, h, h), PreconditionError);
    const std::vector<Symbol> small{0};
    EXPECT_THROW(group_factorization_pair(z4, small, h), PreconditionError);
    const std::vector<Symbol> bad{0, 9};
    EXPECT_THROW(group_factorization_pair(z4, bad, h), ValidationError);
}

TEST(Factorization, SymmetricGroup)
{
    // S3 = A3 * <transposition>.
    auto s3 = FiniteGroup::symmetric(3);
    std::vector<Symbol> a3, t;
    for (Symbol x = 0; x < 6; ++x)
        if (s3(x, s3(x, x)) == s3.identity())
            a3.push_back(x);
    ASSERT_EQ(a3.size(), 3U);
    for (Symbol x = 0; x < 6; ++x)
        if (x != s3.identity() && s3(x, x) == s3.identity()) {
            t = {s3.identity(), x};
            break;
        }
    ASSERT_EQ(t.size(), 2U);
    auto gp = group_factorization_pair(s3, a3, t);
    EXPECT_TRUE(satisfies_p2(gp));
}

TEST(Coset, Z4)
{
    auto z4 = FiniteGroup::cyclic(4);
    const std::vector<Symbol> h{0, 2}, t{0, 1};
    auto gp = coset_construction(z4, h, t);
    EXPECT_TRUE(is_partitioned_pair(gp));
    EXPECT_TRUE(satisfies_p2(gp));
    auto ps = partition_system_of(gp);
    ASSERT_TRUE(ps);
    EXPECT_EQ(ps->base(), Partition(4, {{0, 2}, {1, 3}}));
}

TEST(Coset, AgreesWithFactorization)
{
    auto z6 = FiniteGroup::cyclic(6);
    const std::vector<Symbol> h{0, 3}, t{0, 1, 2};
    EXPECT_EQ(coset_construction(z6, h, t), group_factorization_pair(z6, h, t));
    const std::vector<Symbol> h3{0, 2, 4}, t2{0, 3};
    EXPECT_EQ(coset_construction(z6, h3, t2), group_factorization_pair(z6, h3, t2));
}

TEST(Coset, Preconditions)
{
    auto z4 = FiniteGroup::cyclic(4);
    const std::vector<Symbol> not_subgroup{0, 1}, h{0, 2};
    const std::vector<Symbol> t{0, 1};
    EXPECT_THROW(coset_construction(z4, not_subgroup, t), PreconditionError);
    const std::vector<Symbol> no_identity{1, 2};
    EXPECT_THROW(coset_construction(z4, h, no_identity), PreconditionError);
    const std::vector<Symbol> same_coset{0, 2};
    EXPECT_THROW(coset_construction(z4, h, same_coset), PreconditionError);
    const std::vector<Symbol> too_few{0};
    EXPECT_THROW(coset_construction(z4, h, too_few), PreconditionError);
}
