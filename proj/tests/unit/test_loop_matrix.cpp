#include "nodal/errors.hpp"
#include "nodal/loop_matrix.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

using namespace nodal;

namespace {

Vector random_vector(std::mt19937_64& rng, std::size_t len) {
    Vector v(len);
    for (auto& q : v) q = oracle::random_rational(rng);
    return v;
}

bool is_eigenvector(const Matrix& m, const Vector& v, const Rational& c) {
    return multiply(m, v) == scale(v, c);
}

}

TEST(LoopMatrix, TwoByTwoFixture) {
    auto lm = build_loop_matrix(2, 2);
    Matrix expected = Matrix::from_rows({{4, 2, 2}, {2, 4, 2}, {2, 2, 4}});
    EXPECT_EQ(lm.entries, expected);
}

TEST(LoopMatrix, DiagonalIsXToTheN) {
    for (int n = 1; n <= 4; ++n) {
        auto lm = build_loop_matrix(n, Rational(3, 2));
        for (std::size_t i = 0; i < lm.entries.rows(); ++i) EXPECT_EQ(lm.entries(i, i), power(Rational(3, 2), static_cast<unsigned>(n)));
        EXPECT_EQ(lm.entries, lm.entries.transpose());
    }
}

TEST(LoopMatrix, EntriesAreLoopPowers) {
    auto ps = enumerate_pairings(3);
    auto lm = build_loop_matrix(3, 5);
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = 0; j < ps.size(); ++j)
            EXPECT_EQ(lm.entries(i, j), power(5, static_cast<unsigned>(oracle::arc_diagram_loops(ps[i].pairs(), ps[j].pairs()))));
}

TEST(LoopMatrix, DeskCeiling) {
    unsetenv("NODAL_TRADE_MAX_N");
    EXPECT_EQ(desk_ceiling().max_n, 5);
    EXPECT_FALSE(desk_ceiling().overridden);
    EXPECT_THROW(build_loop_matrix(6, 1), ResourceLimit);
    EXPECT_THROW(build_loop_matrix(0, 1), InvalidInput);
    setenv("NODAL_TRADE_MAX_N", "6", 1);
    EXPECT_EQ(desk_ceiling().max_n, 6);
    EXPECT_TRUE(desk_ceiling().overridden);
    EXPECT_NO_THROW(require_desk_scale(6));
    unsetenv("NODAL_TRADE_MAX_N");
}

TEST(LoopMatrix, TwoSpectralStructureAtFiveSpecializations) {
    Vector line = {1, 1, 1};
    Vector plane1 = {1, -1, 0}, plane2 = {1, 0, -1};
    for (int x : {-3, 1, 2, 5, 11}) {
        auto m = build_loop_matrix(2, x).entries;
        EXPECT_TRUE(is_eigenvector(m, line, Rational(x * (x + 2))));
        EXPECT_TRUE(is_eigenvector(m, plane1, Rational(x * (x - 1))));
        EXPECT_TRUE(is_eigenvector(m, plane2, Rational(x * (x - 1))));
    }
}

TEST(LoopMatrix, EigenspaceDimensionsAndEigenvalues) {
    auto eig = eigenspace_decomposition(3);
    ASSERT_EQ(eig.blocks.size(), 3u);
    const std::size_t dims[] = {1, 9, 5};
    auto lm = build_loop_matrix(3, eig.x0);
    for (std::size_t b = 0; b < 3; ++b) {
        EXPECT_EQ(eig.blocks[b].basis.size(), dims[b]);
        EXPECT_EQ(eig.blocks[b].eigenvalue, content_product(eig.blocks[b].lambda, eig.x0));
        for (const auto& v : eig.blocks[b].basis) EXPECT_TRUE(is_eigenvector(lm.entries, v, eig.blocks[b].eigenvalue));
    }
}

TEST(LoopMatrix, EigenspacesPersistAcrossSpecializations) {
    for (int n = 1; n <= 4; ++n) {
        auto eig = eigenspace_decomposition(n);
        std::size_t total = 0;
        for (int x : {-5, -1, 0, 3, 7}) {
            auto m = build_loop_matrix(n, x).entries;
            for (const auto& blk : eig.blocks)
                for (const auto& v : blk.basis) EXPECT_TRUE(is_eigenvector(m, v, content_product(blk.lambda, x)));
        }
        for (const auto& blk : eig.blocks) {
            EXPECT_EQ(BigInt(blk.basis.size()), hook_dimension(blk.lambda));
            total += blk.basis.size();
        }
        EXPECT_EQ(BigInt(total), double_factorial(2 * n - 1));
    }
}

TEST(LoopMatrix, EigenvalueCollisionIsReported) {
    // At x0 = 1 the blocks (2,2) and (4,2) both have eigenvalue 0.
    EXPECT_THROW(eigenspace_decomposition(2, 0), EigenvalueCollision);
    EXPECT_THROW(eigenspace_decomposition(3, 1), EigenvalueCollision);
}

TEST(LoopMatrix, DeterminantFactorizationOnRandomSpecializations) {
    std::mt19937_64 rng(11);
    SpectralProjector proj(3);
    for (int trial = 0; trial < 5; ++trial) {
        Rational x = oracle::random_rational(rng);
        auto m = build_loop_matrix(3, x).entries;
        Vector v = random_vector(rng, 15);
        auto parts = proj.components(v);
        Vector reassembled(15, 0), mv(15, 0);
        for (std::size_t b = 0; b < parts.size(); ++b) {
            reassembled = add(reassembled, parts[b]);
            mv = add(mv, scale(parts[b], content_product(proj.partitions()[b], x)));
        }
        EXPECT_EQ(reassembled, v);
        EXPECT_EQ(multiply(m, v), mv);
    }
}

TEST(LoopMatrix, InvariantSubspaceDimensions) {
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 3; ++k)
            for (auto fl : {Flavor::orthogonal(k), Flavor::symplectic(k)}) {
                BigInt expected = 0;
                for (const auto& l : even_row_partitions(2 * n))
                    if (fl.admissible(l)) expected += hook_dimension(l);
                EXPECT_EQ(BigInt(invariant_subspace(n, fl).size()), expected);
            }
}

TEST(LoopMatrix, RestrictedInverseRoundtrip) {
    std::mt19937_64 rng(5);
    for (int n = 1; n <= 3; ++n) {
        SpectralProjector proj(n);
        for (int k = 1; k <= 3; ++k)
            for (auto fl : {Flavor::orthogonal(k), Flavor::symplectic(k)}) {
                auto basis = invariant_subspace(n, fl);
                PairingVector v = PairingVector::zero(n);
                for (const auto& b : basis) v.coords = add(v.coords, scale(b, oracle::random_rational(rng)));
                auto mv = apply_loop_matrix(n, fl.specialization(), v);
                EXPECT_EQ(restricted_inverse_apply(proj, fl, mv), v);
            }
    }
}

TEST(LoopMatrix, RestrictedInverseRejectsInadmissibleInput) {
    PairingVector v{2, {1, -1, 0}};
    EXPECT_THROW(restricted_inverse_apply(2, Flavor::orthogonal(1), v), DomainError);
    EXPECT_THROW(restricted_inverse_apply(2, Flavor::orthogonal(1), PairingVector{3, {}}), InvalidInput);
}
