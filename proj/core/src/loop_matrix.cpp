#include "nodal/loop_matrix.hpp"

#include "nodal/errors.hpp"

#include <cstdlib>

namespace nodal {

PairingVector PairingVector::zero(int n) {
    return {n, Vector(pairing_count(n))};
}

Flavor Flavor::orthogonal(int k) {
    if (k < 1) throw InvalidInput("orthogonal flavor needs k >= 1");
    return {Kind::Orthogonal, k};
}

Flavor Flavor::symplectic(int k) {
    if (k < 1) throw InvalidInput("symplectic flavor needs k >= 1");
    return {Kind::Symplectic, k};
}

Rational Flavor::specialization() const {
    return kind == Kind::Orthogonal ? Rational(k) : Rational(-2 * k);
}

bool Flavor::admissible(const Partition& lambda) const {
    return kind == Kind::Orthogonal ? lambda.length() <= k : lambda.largest() <= 2 * k;
}

std::string Flavor::name() const {
    return kind == Kind::Orthogonal ? "orthogonal" : "symplectic";
}

DeskCeiling desk_ceiling() {
    DeskCeiling c;
    if (const char* env = std::getenv("NODAL_TRADE_MAX_N"); env && *env) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1) {
            c.max_n = static_cast<int>(v);
            c.overridden = true;
        }
    }
    return c;
}

void require_desk_scale(int n) {
    if (n < 1) throw InvalidInput("n must be positive");
    auto c = desk_ceiling();
    if (n > c.max_n)
        throw ResourceLimit("n = " + std::to_string(n) + " exceeds the desk-scale ceiling n <= " +
                            std::to_string(c.max_n) + " (set NODAL_TRADE_MAX_N to override)");
}

std::size_t pairing_count(int n) {
    return double_factorial(2 * n - 1).get_ui();
}

LoopMatrix build_loop_matrix(int n, const Rational& x) {
    require_desk_scale(n);
    auto basis = enumerate_pairings(n);
    std::vector<Rational> powers(static_cast<std::size_t>(n + 1));
    for (int e = 0; e <= n; ++e) powers[static_cast<std::size_t>(e)] = power(x, static_cast<unsigned>(e));
    LoopMatrix lm{n, x, Matrix(basis.size(), basis.size())};
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i; j < basis.size(); ++j) {
            const auto& v = powers[static_cast<std::size_t>(loop_number(basis[i], basis[j]))];
            lm.entries(i, j) = v;
            lm.entries(j, i) = v;
        }
    return lm;
}

namespace {

void check_distinct(const std::vector<Partition>& lambdas, const std::vector<Rational>& values) {
    for (std::size_t a = 0; a < values.size(); ++a)
        for (std::size_t b = a + 1; b < values.size(); ++b)
            if (values[a] == values[b]) throw EigenvalueCollision(lambdas[a].str(), lambdas[b].str());
}

}

Rational auto_specialization(int n) {
    auto lambdas = even_row_partitions(2 * n);
    for (long x = 2L * n + 1;; ++x) {
        std::vector<Rational> values;
        for (const auto& l : lambdas) values.push_back(content_product(l, Rational(x)));
        try {
            check_distinct(lambdas, values);
            return Rational(x);
        } catch (const EigenvalueCollision&) {
        }
    }
}

EigenDecomposition eigenspace_decomposition(int n, const Rational& x0) {
    require_desk_scale(n);
    auto lambdas = even_row_partitions(2 * n);
    std::vector<Rational> values;
    for (const auto& l : lambdas) values.push_back(content_product(l, x0));
    check_distinct(lambdas, values);

    LoopMatrix lm = build_loop_matrix(n, x0);
    EigenDecomposition out{n, x0, {}};
    std::size_t total = 0;
    for (std::size_t b = 0; b < lambdas.size(); ++b) {
        Matrix shifted = lm.entries;
        for (std::size_t i = 0; i < shifted.rows(); ++i) shifted(i, i) -= values[b];
        auto basis = nullspace(shifted);
        if (BigInt(static_cast<unsigned long>(basis.size())) != hook_dimension(lambdas[b]))
            throw InternalConsistency("eigenspace " + lambdas[b].str() + " has dimension " +
                                      std::to_string(basis.size()) + ", expected " +
                                      to_string(hook_dimension(lambdas[b])));
        total += basis.size();
        out.blocks.push_back({lambdas[b], values[b], std::move(basis)});
    }
    if (total != lm.entries.rows()) throw InternalConsistency("eigenspaces do not span the pairing space");
    return out;
}

EigenDecomposition eigenspace_decomposition(int n) {
    return eigenspace_decomposition(n, auto_specialization(n));
}

std::vector<Vector> invariant_subspace(const EigenDecomposition& eig, const Flavor& flavor) {
    std::vector<Vector> out;
    for (const auto& block : eig.blocks)
        if (flavor.admissible(block.lambda)) out.insert(out.end(), block.basis.begin(), block.basis.end());
    return out;
}

std::vector<Vector> invariant_subspace(int n, const Flavor& flavor) {
    return invariant_subspace(eigenspace_decomposition(n), flavor);
}

SpectralProjector::SpectralProjector(int n)
    : n_(n), x0_(auto_specialization(n)), m_(build_loop_matrix(n, x0_).entries),
      lambdas_(even_row_partitions(2 * n)) {
    for (const auto& l : lambdas_) eigenvalues_.push_back(content_product(l, x0_));
}

Vector SpectralProjector::project(const Vector& v, std::size_t block) const {
    if (v.size() != m_.rows()) throw InvalidInput("vector length does not match the pairing basis");
    Vector w = v;
    for (std::size_t b = 0; b < eigenvalues_.size(); ++b) {
        if (b == block) continue;
        Vector mw = multiply(m_, w);
        Rational denom = eigenvalues_[block] - eigenvalues_[b];
        for (std::size_t i = 0; i < w.size(); ++i) w[i] = (mw[i] - eigenvalues_[b] * w[i]) / denom;
    }
    return w;
}

std::vector<Vector> SpectralProjector::components(const Vector& v) const {
    std::vector<Vector> out;
    for (std::size_t b = 0; b < lambdas_.size(); ++b) out.push_back(project(v, b));
    return out;
}

PairingVector apply_loop_matrix(int n, const Rational& x, const PairingVector& v) {
    if (v.n != n) throw InvalidInput("pairing vector has the wrong n");
    return {n, multiply(build_loop_matrix(n, x).entries, v.coords)};
}

PairingVector restricted_inverse_apply(const SpectralProjector& proj, const Flavor& flavor, const PairingVector& v) {
    if (v.n != proj.n()) throw InvalidInput("pairing vector has the wrong n");
    const Rational x = flavor.specialization();
    auto parts = proj.components(v.coords);
    PairingVector w = PairingVector::zero(v.n);
    for (std::size_t b = 0; b < parts.size(); ++b) {
        const auto& lambda = proj.partitions()[b];
        if (!flavor.admissible(lambda)) {
            if (!is_zero(parts[b]))
                throw DomainError("vector has a nonzero component in the inadmissible block " + lambda.str());
            continue;
        }
        Rational c = content_product(lambda, x);
        if (c == 0) throw InternalConsistency("zero eigenvalue on admissible block " + lambda.str());
        for (std::size_t i = 0; i < w.coords.size(); ++i) w.coords[i] += parts[b][i] / c;
    }
    return w;
}

PairingVector restricted_inverse_apply(int n, const Flavor& flavor, const PairingVector& v) {
    return restricted_inverse_apply(SpectralProjector(n), flavor, v);
}

}
