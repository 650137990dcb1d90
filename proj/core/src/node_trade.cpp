#include "nodal/node_trade.hpp"

#include "nodal/errors.hpp"

namespace nodal {

InvariantTensor InvariantTensor::from_coordinates(const PairingVector& c, const BilinearSpace& space) {
    return {c.n, space, expand_in_forms(c, space), c};
}

PairingVector contract_with_all_diagonals(const DenseTensor& omega, int n, const BilinearSpace& space) {
    if (omega.order != 2 * n || omega.dim != space.dim()) throw InvalidInput("tensor shape does not match n and space");
    auto basis = enumerate_pairings(n);
    PairingVector out = PairingVector::zero(n);
    for (std::size_t i = 0; i < basis.size(); ++i)
        out.coords[i] = contract(omega, diagonal_multivector(basis[i], space));
    return out;
}

PairingVector contract_with_all_diagonals(const InvariantTensor& omega) {
    return contract_with_all_diagonals(omega.tensor, omega.n, omega.space);
}

InvariantTensor recover(const PairingVector& contractions, const BilinearSpace& space,
                        const SpectralProjector& projector, int sign) {
    if (sign != 1 && sign != -1) throw InvalidInput("sign must be +1 or -1");
    PairingVector data = contractions;
    if (sign < 0)
        for (auto& q : data.coords) q = -q;
    PairingVector coords;
    try {
        coords = restricted_inverse_apply(projector, space.flavor(), data);
    } catch (const DomainError& e) {
        throw InconsistentData(std::string("contractions do not come from an invariant tensor: ") + e.what());
    }
    return InvariantTensor::from_coordinates(coords, space);
}

InvariantTensor recover(const PairingVector& contractions, const BilinearSpace& space, int sign) {
    return recover(contractions, space, SpectralProjector(contractions.n), sign);
}

std::vector<InvariantTensor> recover_batch(const std::vector<PairingVector>& components,
                                           const BilinearSpace& space, int sign) {
    std::vector<InvariantTensor> out;
    if (components.empty()) return out;
    SpectralProjector proj(components.front().n);
    for (const auto& c : components) out.push_back(recover(c, space, proj, sign));
    return out;
}

int insertion_pairs(int primitive_insertions) {
    if (primitive_insertions < 0) throw InvalidInput("negative insertion count");
    if (primitive_insertions % 2 != 0)
        throw DomainError("odd number of primitive insertions: the invariant vanishes, nothing to trade");
    return primitive_insertions / 2;
}

}
