#include "nodal/errors.hpp"
#include "nodal/pairings.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace nodal;

namespace {

Pairing pr(std::vector<std::pair<int, int>> p) {
    return Pairing(std::move(p));
}

}

TEST(Pairings, EnumerationForTwo) {
    auto ps = enumerate_pairings(2);
    ASSERT_EQ(ps.size(), 3u);
    EXPECT_EQ(ps[0], pr({{1, 2}, {3, 4}}));
    EXPECT_EQ(ps[1], pr({{1, 3}, {2, 4}}));
    EXPECT_EQ(ps[2], pr({{1, 4}, {2, 3}}));
}

TEST(Pairings, CensusMatchesDoubleFactorial) {
    const std::size_t expected[] = {1, 3, 15, 105, 945};
    for (int n = 1; n <= 5; ++n) EXPECT_EQ(enumerate_pairings(n).size(), expected[n - 1]);
    EXPECT_THROW(enumerate_pairings(0), InvalidInput);
}

TEST(Pairings, EnumerationMatchesBruteForce) {
    for (int n = 1; n <= 4; ++n) {
        auto mine = enumerate_pairings(n);
        auto ref = oracle::brute_force_pairings(n);
        ASSERT_EQ(mine.size(), ref.size());
        for (std::size_t i = 0; i < ref.size(); ++i) EXPECT_EQ(mine[i].pairs(), ref[i]);
    }
}

TEST(Pairings, CanonicalFormIsUnique) {
    EXPECT_EQ(pr({{4, 1}, {3, 2}}), pr({{1, 4}, {2, 3}}));
    EXPECT_EQ(pr({{4, 1}, {3, 2}}).str(), "(1,4)(2,3)");
    EXPECT_THROW(pr({{1, 2}, {2, 3}}), InvalidInput);
    EXPECT_THROW(pr({{1, 1}}), InvalidInput);
    EXPECT_THROW(pr({{1, 5}, {2, 3}}), InvalidInput);
}

TEST(Pairings, CrossingFixtures) {
    EXPECT_EQ(crossing_number(pr({{1, 4}, {2, 5}, {3, 7}, {6, 8}})), 4);
    EXPECT_EQ(crossing_number(pr({{1, 2}, {3, 4}, {5, 7}, {6, 8}})), 1);
    EXPECT_EQ(crossing_number(pr({{1, 2}, {3, 4}, {5, 6}, {7, 8}})), 0);
}

TEST(Pairings, CrossingMatchesDefinition) {
    for (int n = 1; n <= 4; ++n)
        for (const auto& p : enumerate_pairings(n)) EXPECT_EQ(crossing_number(p), oracle::crossings_by_definition(p.pairs()));
}

TEST(Pairings, LoopFixtures) {
    auto p1 = pr({{1, 4}, {2, 5}, {3, 7}, {6, 8}});
    auto p2 = pr({{1, 2}, {3, 4}, {5, 7}, {6, 8}});
    EXPECT_EQ(loop_number(p1, p2), 2);
    EXPECT_EQ(product_cycle_count(p1, p2), 4);
    for (const auto& p : enumerate_pairings(3)) EXPECT_EQ(loop_number(p, p), 3);
    EXPECT_THROW(loop_number(p1, pr({{1, 2}})), InvalidInput);
}

TEST(Pairings, ProductHasTwiceLoopManyCyclesAndMatchesArcTracing) {
    for (int n = 1; n <= 3; ++n) {
        auto ps = enumerate_pairings(n);
        for (const auto& a : ps)
            for (const auto& b : ps) {
                int loops = oracle::arc_diagram_loops(a.pairs(), b.pairs());
                EXPECT_EQ(product_cycle_count(a, b), 2 * loops);
                EXPECT_EQ(loop_number(a, b), loops);
            }
    }
}

TEST(Pairings, LoopNumberSymmetricAndBounded) {
    for (int n = 1; n <= 4; ++n) {
        auto ps = enumerate_pairings(n);
        for (const auto& a : ps)
            for (const auto& b : ps) {
                int l = loop_number(a, b);
                EXPECT_EQ(l, loop_number(b, a));
                EXPECT_GE(l, 1);
                EXPECT_LE(l, n);
            }
    }
}

TEST(Pairings, LoopPartitionHasLoopNumberParts) {
    for (int n = 1; n <= 4; ++n) {
        auto ps = enumerate_pairings(n);
        for (const auto& a : ps)
            for (const auto& b : ps) {
                Partition lam = loop_partition(a, b);
                EXPECT_EQ(lam.weight(), n);
                EXPECT_EQ(lam.length(), loop_number(a, b));
            }
    }
}

TEST(Pairings, ActionFixtures) {
    auto p = pr({{1, 2}, {3, 4}});
    auto [fixed, s1] = act_permutation({2, 1, 3, 4}, p, ActionFlavor::Plain);
    EXPECT_EQ(fixed, p);
    EXPECT_EQ(s1, 1);
    auto [moved, s2] = act_permutation({1, 3, 2, 4}, p, ActionFlavor::Signed);
    EXPECT_EQ(moved, pr({{1, 3}, {2, 4}}));
    EXPECT_EQ(s2, -1);
    for (const auto& q : enumerate_pairings(3)) {
        auto [same, s] = act_permutation({1, 2, 3, 4, 5, 6}, q, ActionFlavor::Signed);
        EXPECT_EQ(same, q);
        EXPECT_EQ(s, 1);
    }
    EXPECT_THROW(act_permutation({1, 1, 3, 4}, p, ActionFlavor::Plain), InvalidInput);
    EXPECT_THROW(act_permutation({1, 2, 3}, p, ActionFlavor::Plain), InvalidInput);
}

TEST(Pairings, ActionIsAGroupActionWithMultiplicativeSign) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + trial % 3;
        auto g = oracle::random_permutation(rng, 2 * n);
        auto h = oracle::random_permutation(rng, 2 * n);
        auto ps = enumerate_pairings(n);
        const auto& p = ps[static_cast<std::size_t>(trial) % ps.size()];
        auto [hp, sh] = act_permutation(h, p, ActionFlavor::Signed);
        auto [ghp, sg] = act_permutation(g, hp, ActionFlavor::Signed);
        auto [direct, sgh] = act_permutation(compose(g, h), p, ActionFlavor::Signed);
        EXPECT_EQ(direct, ghp);
        EXPECT_EQ(sgh, sg * sh);
    }
}

TEST(Pairings, AdjacentTranspositionChangesCrossingsByOne) {
    for (int n = 2; n <= 4; ++n)
        for (const auto& p : enumerate_pairings(n))
            for (int i = 1; i < 2 * n; ++i) {
                if (p.partner(i) == i + 1) continue;
                Permutation tau(static_cast<std::size_t>(2 * n));
                std::iota(tau.begin(), tau.end(), 1);
                std::swap(tau[static_cast<std::size_t>(i - 1)], tau[static_cast<std::size_t>(i)]);
                auto [q, s] = act_permutation(tau, p, ActionFlavor::Plain);
                EXPECT_EQ(std::abs(crossing_number(q) - crossing_number(p)), 1) << p.str() << " i=" << i;
            }
}
