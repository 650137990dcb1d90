#pragma once

#include "nodal/linalg.hpp"
#include "nodal/pairings.hpp"
#include "nodal/partitions.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nodal {

struct PairingVector {
    int n = 0;
    Vector coords;

    static PairingVector zero(int n);
    bool operator==(const PairingVector&) const = default;
};

struct LoopMatrix {
    int n = 0;
    Rational x;
    Matrix entries;
};

// Orthogonal group on a k-dimensional space, or symplectic group on a 2k-dimensional one.
struct Flavor {
    enum class Kind { Orthogonal, Symplectic };

    Kind kind = Kind::Orthogonal;
    int k = 1;

    static Flavor orthogonal(int k);
    static Flavor symplectic(int k);

    int dim() const noexcept { return kind == Kind::Orthogonal ? k : 2 * k; }
    // x at which M(n,x) is the matrix of diagonal insertions: k or -2k.
    Rational specialization() const;
    bool admissible(const Partition& lambda) const;
    std::string name() const;
};

struct DeskCeiling {
    int max_n = 5;
    bool overridden = false;
};

// Honors NODAL_TRADE_MAX_N.
DeskCeiling desk_ceiling();
void require_desk_scale(int n);

std::size_t pairing_count(int n);

LoopMatrix build_loop_matrix(int n, const Rational& x);

struct EigenBlock {
    Partition lambda;
    Rational eigenvalue;
    std::vector<Vector> basis;
};

struct EigenDecomposition {
    int n = 0;
    Rational x0;
    std::vector<EigenBlock> blocks;
};

// Smallest integer x0 >= 2n+1 with pairwise distinct content products.
Rational auto_specialization(int n);
EigenDecomposition eigenspace_decomposition(int n, const Rational& x0);
EigenDecomposition eigenspace_decomposition(int n);

std::vector<Vector> invariant_subspace(int n, const Flavor& flavor);
std::vector<Vector> invariant_subspace(const EigenDecomposition& eig, const Flavor& flavor);

// Splits vectors of CP_n into their M_lambda components via Lagrange
// interpolation polynomials in M(n,x0); no eigenbasis needed.
class SpectralProjector {
public:
    explicit SpectralProjector(int n);

    int n() const noexcept { return n_; }
    const Rational& x0() const noexcept { return x0_; }
    const std::vector<Partition>& partitions() const noexcept { return lambdas_; }

    std::vector<Vector> components(const Vector& v) const;
    Vector project(const Vector& v, std::size_t block) const;

private:
    int n_;
    Rational x0_;
    Matrix m_;
    std::vector<Partition> lambdas_;
    std::vector<Rational> eigenvalues_;
};

PairingVector apply_loop_matrix(int n, const Rational& x, const PairingVector& v);
PairingVector restricted_inverse_apply(int n, const Flavor& flavor, const PairingVector& v);
PairingVector restricted_inverse_apply(const SpectralProjector& proj, const Flavor& flavor, const PairingVector& v);

}
