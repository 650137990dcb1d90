#include "nodal/errors.hpp"
#include "nodal/node_trade.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace nodal;

namespace {

InvariantTensor random_invariant(std::mt19937_64& rng, int n, const BilinearSpace& sp) {
    PairingVector c = PairingVector::zero(n);
    for (auto& q : c.coords) q = oracle::random_rational(rng);
    return InvariantTensor::from_coordinates(c, sp);
}

}

TEST(NodeTrade, ContractionsAreLoopMatrixTimesCoordinates) {
    std::mt19937_64 rng(31);
    for (int n = 1; n <= 3; ++n)
        for (auto fl : {Flavor::orthogonal(2), Flavor::symplectic(1)}) {
            BilinearSpace sp(fl);
            auto omega = random_invariant(rng, n, sp);
            EXPECT_EQ(contract_with_all_diagonals(omega), apply_loop_matrix(n, fl.specialization(), omega.coordinates));
        }
}

TEST(NodeTrade, RoundtripOnSeededRandomTensors) {
    const unsigned seed = 20261016;
    std::mt19937_64 rng(seed);
    for (int n = 1; n <= 2; ++n) {
        SpectralProjector proj(n);
        for (int k = 1; k <= 3; ++k)
            for (auto fl : {Flavor::orthogonal(k), Flavor::symplectic(k)}) {
                BilinearSpace sp(fl);
                for (int trial = 0; trial < 10; ++trial) {
                    auto omega = random_invariant(rng, n, sp);
                    auto back = recover(contract_with_all_diagonals(omega), sp, proj);
                    EXPECT_EQ(back.tensor, omega.tensor) << "seed " << seed << " " << fl.name() << " n=" << n << " k=" << k;
                }
            }
    }
}

TEST(NodeTrade, SignConventionFlipsTheResult) {
    std::mt19937_64 rng(37);
    BilinearSpace sp(Flavor::symplectic(1));
    auto omega = random_invariant(rng, 2, sp);
    auto data = contract_with_all_diagonals(omega);
    auto flipped = recover(PairingVector{2, scale(data.coords, -1)}, sp, -1);
    EXPECT_EQ(flipped.tensor, omega.tensor);
    EXPECT_THROW(recover(data, sp, 2), InvalidInput);
}

TEST(NodeTrade, InconsistentContractionsAreRejected) {
    // the plane x+y+z=0 is the inadmissible block for O(1)
    BilinearSpace sp(Flavor::orthogonal(1));
    EXPECT_THROW(recover(PairingVector{2, {1, -1, 0}}, sp), InconsistentData);
    EXPECT_NO_THROW(recover(PairingVector{2, {3, 3, 3}}, sp));
}

TEST(NodeTrade, BatchRecoversEachComponent) {
    std::mt19937_64 rng(41);
    BilinearSpace sp(Flavor::orthogonal(2));
    std::vector<InvariantTensor> originals;
    std::vector<PairingVector> data;
    for (int i = 0; i < 3; ++i) {
        originals.push_back(random_invariant(rng, 2, sp));
        data.push_back(contract_with_all_diagonals(originals.back()));
    }
    auto out = recover_batch(data, sp);
    ASSERT_EQ(out.size(), 3u);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(out[i].tensor, originals[i].tensor);
}

TEST(NodeTrade, InsertionParity) {
    EXPECT_EQ(insertion_pairs(4), 2);
    EXPECT_EQ(insertion_pairs(0), 0);
    EXPECT_THROW(insertion_pairs(3), DomainError);
    EXPECT_THROW(insertion_pairs(-2), InvalidInput);
}
