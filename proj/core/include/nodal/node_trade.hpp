#pragma once

#include "nodal/loop_matrix.hpp"
#include "nodal/tensor_oracle.hpp"

#include <vector>

namespace nodal {

struct InvariantTensor {
    int n = 0;
    BilinearSpace space;
    DenseTensor tensor;
    PairingVector coordinates;

    // Builds Ω = Σ_P c_P form_tensor(P).
    static InvariantTensor from_coordinates(const PairingVector& c, const BilinearSpace& space);
};

// Ω(Δ_P) for every pairing P, in the canonical order.
PairingVector contract_with_all_diagonals(const DenseTensor& omega, int n, const BilinearSpace& space);
PairingVector contract_with_all_diagonals(const InvariantTensor& omega);

// Solves M Ω = sign · data on the invariant subspace. `sign` is the orientation
// convention relating the observed nodal terms to Ω(Δ_P); it must be ±1.
InvariantTensor recover(const PairingVector& contractions, const BilinearSpace& space, int sign = 1);
InvariantTensor recover(const PairingVector& contractions, const BilinearSpace& space,
                        const SpectralProjector& projector, int sign = 1);

// Componentwise over a homology-valued invariant.
std::vector<InvariantTensor> recover_batch(const std::vector<PairingVector>& components,
                                           const BilinearSpace& space, int sign = 1);

// Throws DomainError for an odd number of primitive insertions (the invariant vanishes).
int insertion_pairs(int primitive_insertions);

}
