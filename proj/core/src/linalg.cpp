#include "nodal/linalg.hpp"

#include "nodal/errors.hpp"

#include <utility>

namespace nodal {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
    if (rows.empty()) return {};
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw InvalidInput("ragged matrix rows");
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Vector Matrix::row(std::size_t i) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Vector multiply(const Matrix& a, const Vector& v) {
    if (a.cols() != v.size()) throw InvalidInput("matrix-vector shape mismatch");
    Vector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Rational acc = 0;
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (v[j] != 0) acc += a(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw InvalidInput("matrix-matrix shape mismatch");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

Vector add(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw InvalidInput("vector length mismatch");
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Vector subtract(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw InvalidInput("vector length mismatch");
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Vector scale(const Vector& v, const Rational& s) {
    Vector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * s;
    return out;
}

Rational dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw InvalidInput("vector length mismatch");
    Rational acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) acc += a[i] * b[i];
    return acc;
}

namespace {

struct Echelon {
    std::vector<std::vector<BigInt>> rows;
    std::vector<std::size_t> pivots;
};

// Integer row echelon form of a rational matrix (rows scaled to clear denominators).
Echelon bareiss_echelon(const Matrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    std::vector<std::vector<BigInt>> r(m, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < m; ++i) {
        BigInt l = 1;
        for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < n; ++j) r[i][j] = a(i, j).get_num() * (l / a(i, j).get_den());
    }

    Echelon out;
    BigInt prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t p = row;
        while (p < m && r[p][col] == 0) ++p;
        if (p == m) continue;
        std::swap(r[p], r[row]);
        const BigInt& piv = r[row][col];
        for (std::size_t i = row + 1; i < m; ++i) {
            BigInt lead = r[i][col];
            for (std::size_t j = col + 1; j < n; ++j) {
                BigInt t = piv * r[i][j] - lead * r[row][j];
                mpz_divexact(r[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            r[i][col] = 0;
        }
        prev = piv;
        out.pivots.push_back(col);
        ++row;
    }
    r.resize(row);
    out.rows = std::move(r);
    return out;
}

}

std::vector<Vector> nullspace(const Matrix& a) {
    const std::size_t n = a.cols();
    Echelon e = bareiss_echelon(a);
    std::vector<char> is_pivot(n, 0);
    for (auto c : e.pivots) is_pivot[c] = 1;

    std::vector<Vector> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vector x(n);
        x[f] = 1;
        for (std::size_t k = e.pivots.size(); k-- > 0;) {
            const auto& rw = e.rows[k];
            std::size_t c = e.pivots[k];
            Rational acc = 0;
            for (std::size_t j = c + 1; j < n; ++j)
                if (x[j] != 0 && rw[j] != 0) acc += Rational(rw[j]) * x[j];
            x[c] = -acc / Rational(rw[c]);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

std::size_t rank(const Matrix& a) {
    return bareiss_echelon(a).pivots.size();
}

Matrix inverse(const Matrix& a) {
    if (a.rows() != a.cols()) throw InvalidInput("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    Matrix w = a;
    Matrix inv = Matrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && w(p, c) == 0) ++p;
        if (p == n) throw InvalidModel("singular matrix");
        if (p != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(w(p, j), w(c, j));
                std::swap(inv(p, j), inv(c, j));
            }
        Rational s = 1 / w(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            w(c, j) *= s;
            inv(c, j) *= s;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || w(i, c) == 0) continue;
            Rational f = w(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                w(i, j) -= f * w(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

std::size_t span_rank(const std::vector<Vector>& vectors) {
    if (vectors.empty()) return 0;
    return rank(Matrix::from_rows(vectors));
}

}
