#pragma once

#include "nodal/rational.hpp"

#include <cstddef>
#include <vector>

namespace nodal {

using Vector = std::vector<Rational>;

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Vector column(std::size_t j) const;
    Matrix transpose() const;

    bool operator==(const Matrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

Vector multiply(const Matrix& a, const Vector& v);
Matrix multiply(const Matrix& a, const Matrix& b);
Vector add(const Vector& a, const Vector& b);
Vector subtract(const Vector& a, const Vector& b);
Vector scale(const Vector& v, const Rational& s);
Rational dot(const Vector& a, const Vector& b);

// Kernel basis via fraction-free (Bareiss) elimination; one vector per free column,
// with that column's coordinate set to 1.
std::vector<Vector> nullspace(const Matrix& a);
std::size_t rank(const Matrix& a);
// Gauss-Jordan over the rationals; throws InvalidModel when singular.
Matrix inverse(const Matrix& a);
// Rank of a list of vectors, all of the same length.
std::size_t span_rank(const std::vector<Vector>& vectors);

}
