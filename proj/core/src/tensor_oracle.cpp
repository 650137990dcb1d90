#include "nodal/tensor_oracle.hpp"

#include "nodal/errors.hpp"

#include <map>

namespace nodal {

BilinearSpace::BilinearSpace(Flavor flavor) : flavor_(flavor), form_(standard_form(flavor)) {}

BilinearSpace::BilinearSpace(Flavor flavor, Matrix form) : flavor_(flavor), form_(std::move(form)) {
    if (!(form_ == standard_form(flavor_)))
        throw InvalidInput("only the standard " + flavor_.name() + " form is supported");
}

Matrix BilinearSpace::standard_form(const Flavor& flavor) {
    if (flavor.kind == Flavor::Kind::Orthogonal) return Matrix::identity(static_cast<std::size_t>(flavor.k));
    Matrix j(static_cast<std::size_t>(2 * flavor.k), static_cast<std::size_t>(2 * flavor.k));
    for (std::size_t mu = 0; mu < static_cast<std::size_t>(flavor.k); ++mu) {
        j(2 * mu, 2 * mu + 1) = 1;
        j(2 * mu + 1, 2 * mu) = -1;
    }
    return j;
}

DenseTensor DenseTensor::zero(int dim, int order) {
    std::size_t size = 1;
    for (int s = 0; s < order; ++s) {
        size *= static_cast<std::size_t>(dim);
        if (size > kTensorCeiling) throw ResourceLimit("tensor with dim^order above the 6^6 ceiling");
    }
    return {dim, order, std::vector<Rational>(size)};
}

std::size_t DenseTensor::offset(const std::vector<int>& index) const {
    if (static_cast<int>(index.size()) != order) throw InvalidInput("index has the wrong order");
    std::size_t off = 0;
    for (int i : index) {
        if (i < 0 || i >= dim) throw InvalidInput("tensor index out of range");
        off = off * static_cast<std::size_t>(dim) + static_cast<std::size_t>(i);
    }
    return off;
}

std::vector<int> DenseTensor::multi_index(std::size_t off) const {
    std::vector<int> idx(static_cast<std::size_t>(order));
    for (int s = order - 1; s >= 0; --s) {
        idx[static_cast<std::size_t>(s)] = static_cast<int>(off % static_cast<std::size_t>(dim));
        off /= static_cast<std::size_t>(dim);
    }
    return idx;
}

std::size_t DenseTensor::nonzero_count() const {
    std::size_t c = 0;
    for (const auto& q : coeffs)
        if (q != 0) ++c;
    return c;
}

namespace {

struct SlotEntry {
    int i;
    int j;
    Rational value;
};

std::vector<SlotEntry> nonzero_entries(const Matrix& m) {
    std::vector<SlotEntry> out;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) out.push_back({static_cast<int>(i), static_cast<int>(j), m(i, j)});
    return out;
}

// Product over the pairs (a<b) of the bivector with coefficient matrix `slot`
// placed in slots (a,b), times `sign`.
DenseTensor pair_product(const Pairing& p, int dim, const Matrix& slot, int sign) {
    DenseTensor t = DenseTensor::zero(dim, 2 * p.n());
    auto entries = nonzero_entries(slot);
    std::vector<int> index(static_cast<std::size_t>(2 * p.n()));
    const auto& pairs = p.pairs();
    auto rec = [&](auto&& self, std::size_t q, const Rational& acc) -> void {
        if (q == pairs.size()) {
            t.at(index) += acc;
            return;
        }
        for (const auto& e : entries) {
            index[static_cast<std::size_t>(pairs[q].first - 1)] = e.i;
            index[static_cast<std::size_t>(pairs[q].second - 1)] = e.j;
            self(self, q + 1, acc * e.value);
        }
    };
    rec(rec, 0, Rational(sign));
    return t;
}

void require_oracle_scale(int n, const BilinearSpace& space) {
    if (n < 1) throw InvalidInput("n must be positive");
    if (n > 3 || space.dim() > 6)
        throw ResourceLimit("brute-force oracle limited to n <= 3 and dim <= 6");
}

}

DenseTensor form_tensor(const Pairing& p, const BilinearSpace& space) {
    int sign = space.flavor().kind == Flavor::Kind::Symplectic && crossing_number(p) % 2 ? -1 : 1;
    return pair_product(p, space.dim(), space.form(), sign);
}

DenseTensor diagonal_multivector(const Pairing& p, const BilinearSpace& space) {
    if (space.flavor().kind == Flavor::Kind::Orthogonal)
        return pair_product(p, space.dim(), inverse(space.form()), 1);
    // ω^{-1} placed in decreasing slot order: Δ_ji, whose coefficient in slots (i,j) is J^T.
    int sign = crossing_number(p) % 2 ? -1 : 1;
    return pair_product(p, space.dim(), space.form().transpose(), sign);
}

Rational contract(const DenseTensor& form, const DenseTensor& vec) {
    if (form.dim != vec.dim || form.order != vec.order) throw InvalidInput("contract: shape mismatch");
    Rational acc = 0;
    for (std::size_t i = 0; i < form.coeffs.size(); ++i)
        if (form.coeffs[i] != 0 && vec.coeffs[i] != 0) acc += form.coeffs[i] * vec.coeffs[i];
    return acc;
}

Matrix diagonal_insertion_matrix(int n, const BilinearSpace& space) {
    require_oracle_scale(n, space);
    auto basis = enumerate_pairings(n);
    std::vector<DenseTensor> forms, diags;
    for (const auto& p : basis) {
        forms.push_back(form_tensor(p, space));
        diags.push_back(diagonal_multivector(p, space));
    }
    Matrix m(basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) m(i, j) = contract(forms[i], diags[j]);
    return m;
}

RankReport invariant_map_rank(int n, const BilinearSpace& space) {
    require_oracle_scale(n, space);
    auto basis = enumerate_pairings(n);
    const std::size_t count = basis.size();

    using SparseRow = std::map<std::size_t, Rational>;
    struct Row {
        SparseRow tensor;
        Vector combo;
    };
    std::map<std::size_t, Row> pivots;
    RankReport report;

    for (std::size_t r = 0; r < count; ++r) {
        DenseTensor t = form_tensor(basis[r], space);
        Row row{{}, Vector(count)};
        for (std::size_t i = 0; i < t.coeffs.size(); ++i)
            if (t.coeffs[i] != 0) row.tensor.emplace(i, t.coeffs[i]);
        row.combo[r] = 1;

        while (!row.tensor.empty()) {
            auto lead = row.tensor.begin();
            auto it = pivots.find(lead->first);
            if (it == pivots.end()) break;
            Rational f = lead->second / it->second.tensor.begin()->second;
            for (const auto& [key, val] : it->second.tensor) {
                Rational& slot = row.tensor[key];
                slot -= f * val;
                if (slot == 0) row.tensor.erase(key);
            }
            for (std::size_t i = 0; i < count; ++i) row.combo[i] -= f * it->second.combo[i];
        }
        if (row.tensor.empty()) {
            report.kernel.push_back({n, std::move(row.combo)});
        } else {
            std::size_t key = row.tensor.begin()->first;
            pivots.emplace(key, std::move(row));
        }
    }
    report.rank = pivots.size();
    return report;
}

DenseTensor permute_slots(const DenseTensor& t, const Permutation& sigma) {
    if (static_cast<int>(sigma.size()) != t.order || !is_permutation(sigma))
        throw InvalidInput("permute_slots needs a permutation of the slots");
    DenseTensor out = DenseTensor::zero(t.dim, t.order);
    for (std::size_t off = 0; off < out.coeffs.size(); ++off) {
        auto idx = out.multi_index(off);
        std::vector<int> src(idx.size());
        for (std::size_t s = 0; s < idx.size(); ++s) src[s] = idx[static_cast<std::size_t>(sigma[s] - 1)];
        out.coeffs[off] = t.at(src);
    }
    return out;
}

DenseTensor pullback(const DenseTensor& t, const Matrix& g) {
    if (g.rows() != static_cast<std::size_t>(t.dim) || g.cols() != g.rows())
        throw InvalidInput("pullback: matrix does not act on the tensor's space");
    DenseTensor cur = t;
    const std::size_t d = static_cast<std::size_t>(t.dim);
    std::size_t stride = cur.coeffs.size();
    for (int s = 0; s < t.order; ++s) {
        stride /= d;
        DenseTensor next = DenseTensor::zero(t.dim, t.order);
        for (std::size_t off = 0; off < cur.coeffs.size(); ++off) {
            std::size_t i = (off / stride) % d;
            std::size_t base = off - i * stride;
            Rational acc = 0;
            for (std::size_t j = 0; j < d; ++j) {
                const auto& c = cur.coeffs[base + j * stride];
                if (c != 0 && g(j, i) != 0) acc += c * g(j, i);
            }
            next.coeffs[off] = acc;
        }
        cur = std::move(next);
    }
    return cur;
}

std::vector<Matrix> invariance_generators(const BilinearSpace& space) {
    const std::size_t d = static_cast<std::size_t>(space.dim());
    std::vector<Matrix> gens;
    Matrix minus = Matrix::identity(d);
    for (std::size_t i = 0; i < d; ++i) minus(i, i) = -1;
    if (space.flavor().kind == Flavor::Kind::Orthogonal) {
        for (std::size_t i = 0; i + 1 < d; ++i) {
            Matrix g(d, d);
            for (std::size_t j = 0; j < d; ++j) g(j, j) = 1;
            g(i, i) = 0;
            g(i + 1, i + 1) = 0;
            g(i, i + 1) = 1;
            g(i + 1, i) = 1;
            gens.push_back(g);
        }
        Matrix flip = Matrix::identity(d);
        flip(0, 0) = -1;
        gens.push_back(flip);
    } else {
        for (std::size_t mu = 0; mu + 1 < d / 2; ++mu) {
            Matrix g = Matrix::identity(d);
            for (std::size_t a : {2 * mu, 2 * mu + 1}) {
                g(a, a) = 0;
                g(a + 2, a + 2) = 0;
                g(a, a + 2) = 1;
                g(a + 2, a) = 1;
            }
            gens.push_back(g);
        }
        Matrix rot = Matrix::identity(d);  // e_1 -> f_1, f_1 -> -e_1
        rot(0, 0) = 0;
        rot(1, 1) = 0;
        rot(1, 0) = 1;
        rot(0, 1) = -1;
        gens.push_back(rot);
        Matrix shear = Matrix::identity(d);  // f_1 -> f_1 + e_1
        shear(0, 1) = 1;
        gens.push_back(shear);
    }
    gens.push_back(minus);
    for (const auto& g : gens)
        if (!(multiply(multiply(g.transpose(), space.form()), g) == space.form()))
            throw InternalConsistency("invariance generator does not preserve the form");
    return gens;
}

bool is_invariant(const DenseTensor& t, const BilinearSpace& space) {
    if (t.dim != space.dim()) throw InvalidInput("tensor and space dimensions differ");
    for (const auto& g : invariance_generators(space))
        if (!(pullback(t, g) == t)) return false;
    return true;
}

DenseTensor average_over_sign(const DenseTensor& t) {
    Matrix minus = Matrix::identity(static_cast<std::size_t>(t.dim));
    for (std::size_t i = 0; i < minus.rows(); ++i) minus(i, i) = -1;
    return scale(add(t, pullback(t, minus)), Rational(1, 2));
}

DenseTensor add(const DenseTensor& a, const DenseTensor& b) {
    if (a.dim != b.dim || a.order != b.order) throw InvalidInput("tensor shape mismatch");
    DenseTensor out = a;
    for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
    return out;
}

DenseTensor scale(const DenseTensor& t, const Rational& s) {
    DenseTensor out = t;
    for (auto& c : out.coeffs) c *= s;
    return out;
}

DenseTensor expand_in_forms(const PairingVector& c, const BilinearSpace& space) {
    auto basis = enumerate_pairings(c.n);
    if (c.coords.size() != basis.size()) throw InvalidInput("pairing vector has the wrong length");
    DenseTensor out = DenseTensor::zero(space.dim(), 2 * c.n);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (c.coords[i] == 0) continue;
        DenseTensor f = form_tensor(basis[i], space);
        for (std::size_t o = 0; o < f.coeffs.size(); ++o)
            if (f.coeffs[o] != 0) out.coeffs[o] += c.coords[i] * f.coeffs[o];
    }
    return out;
}

}
