#pragma once

#include "nodal/linalg.hpp"
#include "nodal/loop_matrix.hpp"
#include "nodal/pairings.hpp"

#include <cstdint>
#include <vector>

namespace nodal {

// V with its standard form: identity (orthogonal) or the block form with
// ω(e_μ,f_μ) = 1 in the basis order e_1, f_1, e_2, f_2, ... (symplectic).
class BilinearSpace {
public:
    explicit BilinearSpace(Flavor flavor);
    // Only the standard form of the flavor is accepted.
    BilinearSpace(Flavor flavor, Matrix form);

    const Flavor& flavor() const noexcept { return flavor_; }
    int dim() const noexcept { return flavor_.dim(); }
    const Matrix& form() const noexcept { return form_; }
    static Matrix standard_form(const Flavor& flavor);

private:
    Flavor flavor_;
    Matrix form_;
};

// Order-m array over a dim-dimensional space; slot 0 is the most significant index.
struct DenseTensor {
    int dim = 0;
    int order = 0;
    std::vector<Rational> coeffs;

    static DenseTensor zero(int dim, int order);

    std::size_t offset(const std::vector<int>& index) const;
    std::vector<int> multi_index(std::size_t offset) const;
    Rational& at(const std::vector<int>& index) { return coeffs[offset(index)]; }
    const Rational& at(const std::vector<int>& index) const { return coeffs[offset(index)]; }
    std::size_t nonzero_count() const;

    bool operator==(const DenseTensor&) const = default;
};

constexpr std::size_t kTensorCeiling = 46656;  // 6^6

DenseTensor form_tensor(const Pairing& p, const BilinearSpace& space);
DenseTensor diagonal_multivector(const Pairing& p, const BilinearSpace& space);
Rational contract(const DenseTensor& form, const DenseTensor& vec);

Matrix diagonal_insertion_matrix(int n, const BilinearSpace& space);

struct RankReport {
    std::size_t rank = 0;
    std::vector<PairingVector> kernel;
};
RankReport invariant_map_rank(int n, const BilinearSpace& space);

// (σ·T)[i_1..i_m] = T[i_σ(1), ..., i_σ(m)]
DenseTensor permute_slots(const DenseTensor& t, const Permutation& sigma);
// (g^*T)(v_1..v_m) = T(g v_1, ..., g v_m); column j of g is the image of basis vector j.
DenseTensor pullback(const DenseTensor& t, const Matrix& g);
// Form-preserving generators used for invariance spot checks (always includes -Id).
std::vector<Matrix> invariance_generators(const BilinearSpace& space);
bool is_invariant(const DenseTensor& t, const BilinearSpace& space);
// ½(T + (−Id)^*T)
DenseTensor average_over_sign(const DenseTensor& t);

DenseTensor add(const DenseTensor& a, const DenseTensor& b);
DenseTensor scale(const DenseTensor& t, const Rational& s);
// Σ_P c_P form_tensor(P)
DenseTensor expand_in_forms(const PairingVector& c, const BilinearSpace& space);

}
