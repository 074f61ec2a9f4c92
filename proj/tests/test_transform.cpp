#include "oracles.hpp"

#include <rectangularity/construct.hpp>
#include <rectangularity/fixtures.hpp>
#include <rectangularity/isotopy.hpp>
#include <rectangularity/transform.hpp>

#include <gtest/gtest.h>

using namespace rectangularity;
namespace fx = rectangularity::fixtures;

TEST(Quotient, Q5IsNotRectangular)
{
    auto q = quotient(fx::q5(), fx::q5_congruence());
    EXPECT_EQ(q, Groupoid::from_rows({{0, 0}, {0, 1}}));
    EXPECT_FALSE(is_rectangular(q));
}

TEST(Quotient, TrivialPartitions)
{
    std::mt19937 rng(8);
    for (int i = 0; i < 30; ++i) {
        auto g = oracle::random_groupoid(rng, 1 + i % 5);
        EXPECT_EQ(quotient(g, Partition::discrete(g.order())), g);
        EXPECT_EQ(quotient(g, Partition::single_block(g.order())), Groupoid::from_rows({{0}}));
    }
}

TEST(Quotient, NonCongruenceNamesQuadruple)
{
    auto g = Groupoid::from_rows({{0, 1, 2}, {2, 1, 2}, {2, 2, 2}});
    try {
        quotient(g, Partition(3, {{0, 1}, {2}}));
        FAIL() << "expected a precondition error";
    }
    catch (const PreconditionError & e) {
        EXPECT_NE(std::string(e.what()).find("0~1"), std::string::npos) << e.what();
    }
}

TEST(DirectProduct, Examples)
{
    std::mt19937 rng(3);
    const auto trivial = Groupoid::from_rows({{0}});
    for (int i = 0; i < 10; ++i) {
        auto g = oracle::random_groupoid(rng, 1 + i % 4);
        EXPECT_EQ(direct_product(trivial, g), g);
        EXPECT_EQ(direct_product(g, trivial), g);
    }
    const auto c2 = constant_groupoid(2, 0);
    auto cc = direct_product(c2, c2);
    EXPECT_EQ(cc, constant_groupoid(4, 0));
    EXPECT_TRUE(is_rectangular(cc));

    auto left = Groupoid::from_rows({{0, 0}, {1, 1}});
    auto right = Groupoid::from_rows({{0, 1}, {0, 1}});
    EXPECT_EQ(direct_product(left, right), rectangular_band(2, 2));
}

TEST(DirectProduct, PreservesRectangularity)
{
    std::vector<Groupoid> small;
    for (std::size_t n = 1; n <= 2; ++n)
        oracle::all_tables(n, [&](const Groupoid & g) {
            if (oracle::rectangular(g))
                small.push_back(g);
        });
    for (const auto & g : small)
        for (const auto & h : small)
            ASSERT_TRUE(is_rectangular(direct_product(g, h)));
}

TEST(Subalgebra, ClosureAndFailure)
{
    const std::vector<Symbol> s01{0, 1};
    auto r = subalgebra(fx::x4(), s01);
    ASSERT_TRUE(std::holds_alternative<ClosureFailure>(r));
    EXPECT_EQ(std::get<ClosureFailure>(r), (ClosureFailure{1, 0, 2}));

    const std::vector<Symbol> all{3, 2, 1, 0};
    EXPECT_EQ(std::get<Groupoid>(subalgebra(fx::x4(), all)), fx::x4());
    const std::vector<Symbol> zero{0};
    EXPECT_EQ(std::get<Groupoid>(subalgebra(fx::c4(), zero)), Groupoid::from_rows({{0}}));

    // Relabelled by position: {1, 3} in RB(2,2) shares the B-coordinate, so it is a left-zero band.
    const std::vector<Symbol> s13{1, 3};
    EXPECT_EQ(std::get<Groupoid>(subalgebra(rectangular_band(2, 2), s13)), Groupoid::from_rows({{0, 0}, {1, 1}}));

    EXPECT_THROW(subalgebra(fx::x4(), std::span<const Symbol>{}), PreconditionError);
    const std::vector<Symbol> outside{7};
    EXPECT_THROW(subalgebra(fx::x4(), outside), ValidationError);
}

TEST(SquareLift, LatinSquareOfOrderTwo)
{
    auto g = Groupoid::from_rows({{0, 1}, {1, 0}});
    auto lift = square_lift(g);
    EXPECT_EQ(lift.order(), 4U);
    EXPECT_TRUE(is_rectangular(lift));
    const std::vector<Symbol> proj{0, 0, 1, 1};
    EXPECT_TRUE(is_homomorphism(lift, g, proj));
    EXPECT_EQ(quotient(lift, Partition(4, {{0, 1}, {2, 3}})), g);
    EXPECT_EQ(square_lift(Groupoid::from_rows({{0}})), Groupoid::from_rows({{0}}));
}

TEST(Relabel, Composition)
{
    std::mt19937 rng(6);
    for (int i = 0; i < 30; ++i) {
        const std::size_t n = 1 + i % 5;
        auto g = oracle::random_groupoid(rng, n);
        Permutation s(oracle::random_permutation(rng, n)), t(oracle::random_permutation(rng, n));
        EXPECT_EQ(relabel(relabel(g, s), t), relabel(g, t.after(s)));
        EXPECT_EQ(relabel(relabel(g, s), s.inverse()), g);
        EXPECT_TRUE(is_homomorphism(g, relabel(g, s), s.images()));
    }
    EXPECT_THROW(relabel(fx::x4(), Permutation::identity(3)), SizeError);
}

TEST(Homomorphism, SizeChecked)
{
    const std::vector<Symbol> f{0};
    EXPECT_THROW(is_homomorphism(fx::x4(), fx::x4(), f), SizeError);
    const std::vector<Symbol> to_zero{0, 0, 0, 0};
    EXPECT_TRUE(is_homomorphism(fx::c4(), Groupoid::from_rows({{0}}), to_zero));
    const std::vector<Symbol> identity{0, 1, 2, 3};
    EXPECT_FALSE(is_homomorphism(fx::x4(), fx::c4(), identity));
}
