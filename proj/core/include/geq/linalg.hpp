#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "geq/scalar.hpp"

namespace geq {

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct SingularMatrix : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Vector {
public:
    Vector() = default;
    Vector(std::size_t dim, const PrecisionContext& ctx)
        : entries_(dim, ctx.zero()) {}
    explicit Vector(std::vector<Scalar> entries) : entries_(std::move(entries)) {}

    std::size_t dim() const { return entries_.size(); }
    Scalar& operator[](std::size_t i) { return entries_[i]; }
    const Scalar& operator[](std::size_t i) const { return entries_[i]; }

    friend Vector operator+(const Vector& a, const Vector& b);
    friend Vector operator-(const Vector& a, const Vector& b);
    friend Vector operator*(const Scalar& c, const Vector& v);

private:
    std::vector<Scalar> entries_;
};

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const PrecisionContext& ctx)
        : rows_(rows), cols_(cols), entries_(rows * cols, ctx.zero()) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    static Matrix identity(std::size_t n, const PrecisionContext& ctx);

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& c, const Matrix& m);
    friend Vector operator*(const Matrix& m, const Vector& v);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> entries_;
};

Scalar euclidean_norm(const Vector& v);
Scalar infinity_norm(const Vector& v);

/// Gaussian elimination with partial pivoting. A pivot below
/// 10^(8-digits)*max|A_ij| raises SingularMatrix.
Vector solve_linear(const Matrix& A, const Vector& b, const PrecisionContext& ctx);

}  // namespace geq
