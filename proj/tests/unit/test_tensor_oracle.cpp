#include "nodal/errors.hpp"
#include "nodal/tensor_oracle.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace nodal;

TEST(TensorOracle, StandardForms) {
    BilinearSpace o(Flavor::orthogonal(3));
    EXPECT_EQ(o.form(), Matrix::identity(3));
    BilinearSpace s(Flavor::symplectic(2));
    EXPECT_EQ(s.form()(0, 1), 1);
    EXPECT_EQ(s.form()(1, 0), -1);
    EXPECT_EQ(s.form()(2, 3), 1);
    EXPECT_EQ(s.form()(0, 2), 0);
    EXPECT_THROW(BilinearSpace(Flavor::orthogonal(2), Matrix::from_rows({{1, 0}, {0, 2}})), InvalidInput);
}

TEST(TensorOracle, SingleFormContractions) {
    // dim V for the orthogonal form, -dim V for the symplectic one
    for (int k = 1; k <= 3; ++k) {
        Pairing p({{1, 2}});
        BilinearSpace o(Flavor::orthogonal(k)), s(Flavor::symplectic(k));
        EXPECT_EQ(contract(form_tensor(p, o), diagonal_multivector(p, o)), k);
        EXPECT_EQ(contract(form_tensor(p, s), diagonal_multivector(p, s)), -2 * k);
    }
}

TEST(TensorOracle, OracleMatchesLoopMatrix) {
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 3; ++k) {
            EXPECT_EQ(diagonal_insertion_matrix(n, BilinearSpace(Flavor::orthogonal(k))), build_loop_matrix(n, k).entries);
            EXPECT_EQ(diagonal_insertion_matrix(n, BilinearSpace(Flavor::symplectic(k))), build_loop_matrix(n, -2 * k).entries);
        }
}

TEST(TensorOracle, OracleCeiling) {
    EXPECT_THROW(diagonal_insertion_matrix(4, BilinearSpace(Flavor::orthogonal(2))), ResourceLimit);
    EXPECT_THROW(diagonal_insertion_matrix(2, BilinearSpace(Flavor::orthogonal(7))), ResourceLimit);
}

TEST(TensorOracle, KernelFixtures) {
    auto o = invariant_map_rank(2, BilinearSpace(Flavor::orthogonal(1)));
    EXPECT_EQ(o.rank, 1u);
    ASSERT_EQ(o.kernel.size(), 2u);
    for (const auto& v : o.kernel) EXPECT_EQ(v.coords[0] + v.coords[1] + v.coords[2], 0);

    auto s = invariant_map_rank(2, BilinearSpace(Flavor::symplectic(1)));
    EXPECT_EQ(s.rank, 2u);
    ASSERT_EQ(s.kernel.size(), 1u);
    EXPECT_EQ(s.kernel[0].coords[0], s.kernel[0].coords[1]);
    EXPECT_EQ(s.kernel[0].coords[1], s.kernel[0].coords[2]);
}

TEST(TensorOracle, RanksMatchAdmissibleDimensions) {
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 3; ++k)
            for (auto fl : {Flavor::orthogonal(k), Flavor::symplectic(k)}) {
                BigInt expected = 0;
                for (const auto& l : even_row_partitions(2 * n))
                    if (fl.admissible(l)) expected += hook_dimension(l);
                EXPECT_EQ(BigInt(invariant_map_rank(n, BilinearSpace(fl)).rank), expected)
                    << fl.name() << " n=" << n << " k=" << k;
            }
}

TEST(TensorOracle, FormTensorsAreInvariant) {
    for (int n = 1; n <= 2; ++n)
        for (int k = 1; k <= 2; ++k)
            for (auto fl : {Flavor::orthogonal(k), Flavor::symplectic(k)}) {
                BilinearSpace sp(fl);
                for (const auto& p : enumerate_pairings(n)) EXPECT_TRUE(is_invariant(form_tensor(p, sp), sp));
            }
}

TEST(TensorOracle, NonInvariantTensorDetected) {
    BilinearSpace sp(Flavor::orthogonal(2));
    auto t = DenseTensor::zero(2, 2);
    t.at({0, 0}) = 1;
    EXPECT_FALSE(is_invariant(t, sp));
    BilinearSpace ss(Flavor::symplectic(1));
    auto u = DenseTensor::zero(2, 2);
    u.at({0, 0}) = 1;
    EXPECT_FALSE(is_invariant(u, ss));
}

TEST(TensorOracle, OddOrderAveragesToZero) {
    std::mt19937_64 rng(3);
    auto t = DenseTensor::zero(3, 3);
    for (auto& c : t.coeffs) c = oracle::random_rational(rng);
    EXPECT_EQ(average_over_sign(t).nonzero_count(), 0u);
    auto e = DenseTensor::zero(3, 2);
    for (auto& c : e.coeffs) c = oracle::random_rational(rng);
    EXPECT_EQ(average_over_sign(e), e);
}

TEST(TensorOracle, GeneratorsPreserveForms) {
    for (int k = 1; k <= 3; ++k)
        for (auto fl : {Flavor::orthogonal(k), Flavor::symplectic(k)}) {
            BilinearSpace sp(fl);
            auto gens = invariance_generators(sp);
            bool has_minus_id = false;
            for (const auto& g : gens) {
                EXPECT_EQ(multiply(multiply(g.transpose(), sp.form()), g), sp.form());
                if (g == [&] {
                        Matrix m = Matrix::identity(static_cast<std::size_t>(sp.dim()));
                        for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) = -1;
                        return m;
                    }())
                    has_minus_id = true;
            }
            EXPECT_TRUE(has_minus_id);
        }
}

TEST(TensorOracle, SlotPermutationActsOnForms) {
    // σ·form_tensor(P) is the form tensor of the permuted pairing (up to sign for symplectic)
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 1 + trial % 3;
        auto ps = enumerate_pairings(n);
        const auto& p = ps[static_cast<std::size_t>(trial) % ps.size()];
        auto sigma = oracle::random_permutation(rng, 2 * n);
        BilinearSpace o(Flavor::orthogonal(2));
        auto permuted = permute_slots(form_tensor(p, o), sigma);
        bool found = false;
        for (const auto& q : ps)
            if (form_tensor(q, o) == permuted) found = true;
        EXPECT_TRUE(found);
        BilinearSpace s(Flavor::symplectic(1));
        auto sp = permute_slots(form_tensor(p, s), sigma);
        bool found_s = false;
        for (const auto& q : ps) {
            auto f = form_tensor(q, s);
            if (f == sp || scale(f, -1) == sp) found_s = true;
        }
        EXPECT_TRUE(found_s);
    }
}

TEST(TensorOracle, ExpansionIsLinear) {
    std::mt19937_64 rng(23);
    BilinearSpace sp(Flavor::symplectic(2));
    PairingVector a = PairingVector::zero(2), b = PairingVector::zero(2);
    for (auto& q : a.coords) q = oracle::random_rational(rng);
    for (auto& q : b.coords) q = oracle::random_rational(rng);
    PairingVector sum{2, add(a.coords, b.coords)};
    EXPECT_EQ(expand_in_forms(sum, sp), add(expand_in_forms(a, sp), expand_in_forms(b, sp)));
}

TEST(TensorOracle, TensorIndexing) {
    auto t = DenseTensor::zero(3, 4);
    EXPECT_EQ(t.coeffs.size(), 81u);
    EXPECT_EQ(t.offset({0, 0, 0, 1}), 1u);
    EXPECT_EQ(t.offset({1, 0, 0, 0}), 27u);
    EXPECT_EQ(t.multi_index(t.offset({2, 1, 0, 2})), (std::vector<int>{2, 1, 0, 2}));
    EXPECT_THROW(t.offset({3, 0, 0, 0}), InvalidInput);
    EXPECT_THROW(DenseTensor::zero(7, 6), ResourceLimit);
}
