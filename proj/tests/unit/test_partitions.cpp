#include "nodal/errors.hpp"
#include "nodal/partitions.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace nodal;

TEST(Partitions, EvenRowOrderForFour) {
    auto ps = even_row_partitions(4);
    ASSERT_EQ(ps.size(), 2u);
    EXPECT_EQ(ps[0], Partition({4}));
    EXPECT_EQ(ps[1], Partition({2, 2}));
}

TEST(Partitions, EvenRowOrderForTwoAndSix) {
    EXPECT_EQ(even_row_partitions(2), std::vector<Partition>{Partition({2})});
    auto ps = even_row_partitions(6);
    ASSERT_EQ(ps.size(), 3u);
    EXPECT_EQ(ps[0], Partition({6}));
    EXPECT_EQ(ps[1], Partition({4, 2}));
    EXPECT_EQ(ps[2], Partition({2, 2, 2}));
}

TEST(Partitions, EvenRowRejectsBadWeights) {
    EXPECT_THROW(even_row_partitions(5), InvalidInput);
    EXPECT_THROW(even_row_partitions(0), InvalidInput);
    EXPECT_THROW(even_row_partitions(-2), InvalidInput);
}

TEST(Partitions, RejectsIncreasingParts) {
    EXPECT_THROW(Partition({2, 4}), InvalidInput);
    EXPECT_THROW(Partition({3, 0}), InvalidInput);
}

TEST(Partitions, HookDimensionFixtures) {
    EXPECT_EQ(hook_dimension(Partition({4, 2})), 9);
    EXPECT_EQ(hook_dimension(Partition({2, 2, 2})), 5);
    for (int m = 1; m <= 10; ++m) EXPECT_EQ(hook_dimension(Partition({m})), 1);
}

TEST(Partitions, HookDimensionMatchesTableauCount) {
    for (int m = 1; m <= 10; ++m)
        for (const auto& l : partitions_of(m)) EXPECT_EQ(hook_dimension(l), oracle::standard_tableaux(l.parts())) << l.str();
}

TEST(Partitions, DimensionIdentityUpToTwelve) {
    for (int m = 2; m <= 12; m += 2) {
        BigInt sum = 0;
        for (const auto& l : even_row_partitions(m)) sum += hook_dimension(l);
        EXPECT_EQ(sum, double_factorial(m - 1)) << "m=" << m;
    }
}

TEST(Partitions, ContentProductFixtures) {
    EXPECT_EQ(content_product(Partition({4}), 2), 8);
    EXPECT_EQ(content_product(Partition({2, 2}), 1), 0);
    EXPECT_EQ(content_product(Partition({4, 2}), -2), 0);
    EXPECT_THROW(content_product(Partition({3, 1}), 1), InvalidInput);
}

TEST(Partitions, ContentProductsForWeightSixMatchClosedForms) {
    for (int xi = -8; xi <= 8; ++xi) {
        Rational x(xi, 3);
        x.canonicalize();
        EXPECT_EQ(content_product(Partition({6}), x), x * (x + 2) * (x + 4));
        EXPECT_EQ(content_product(Partition({4, 2}), x), x * (x + 2) * (x - 1));
        EXPECT_EQ(content_product(Partition({2, 2, 2}), x), x * (x - 1) * (x - 2));
    }
}

TEST(Partitions, ContentProductIsMonicOfHalfWeightDegree) {
    // finite differences of order w/2 of a monic degree-w/2 polynomial equal (w/2)!
    for (int m = 2; m <= 12; m += 2)
        for (const auto& l : even_row_partitions(m)) {
            int deg = m / 2;
            std::vector<Rational> vals;
            for (int x = 0; x <= deg + 1; ++x) vals.push_back(content_product(l, x));
            for (int order = 0; order < deg; ++order)
                for (std::size_t i = 0; i + 1 < vals.size() - order; ++i) vals[i] = vals[i + 1] - vals[i];
            EXPECT_EQ(vals[0], Rational(factorial(deg))) << l.str();
            EXPECT_EQ(vals[1], Rational(factorial(deg))) << l.str();
        }
}

TEST(Partitions, HalfAndTranspose) {
    EXPECT_EQ(half_partition(Partition({4, 2})), Partition({2, 1}));
    EXPECT_EQ(transpose(Partition({4, 2})), Partition({2, 2, 1, 1}));
    EXPECT_EQ(transpose(Partition({1, 1, 1, 1})), Partition({4}));
    EXPECT_THROW(half_partition(Partition({3})), InvalidInput);
}

TEST(Partitions, TransposeIsAnInvolution) {
    for (int m = 1; m <= 12; ++m)
        for (const auto& l : partitions_of(m)) {
            EXPECT_EQ(transpose(transpose(l)), l);
            EXPECT_EQ(transpose(l).weight(), m);
        }
}

TEST(Partitions, HalvingInvertsDoubling) {
    for (int m = 2; m <= 12; m += 2)
        for (const auto& l : even_row_partitions(m)) EXPECT_EQ(double_partition(half_partition(l)), l);
    for (int m = 1; m <= 6; ++m)
        for (const auto& l : partitions_of(m)) EXPECT_EQ(half_partition(double_partition(l)), l);
}
