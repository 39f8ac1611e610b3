#include "geq/linalg.hpp"

namespace geq {

Vector operator+(const Vector& a, const Vector& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("vector add: dimension mismatch");
    Vector r = a;
    for (std::size_t i = 0; i < r.dim(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vector operator-(const Vector& a, const Vector& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("vector sub: dimension mismatch");
    Vector r = a;
    for (std::size_t i = 0; i < r.dim(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vector operator*(const Scalar& c, const Vector& v) {
    Vector r = v;
    for (std::size_t i = 0; i < r.dim(); ++i) r[i] = c * v[i];
    return r;
}

Matrix Matrix::identity(std::size_t n, const PrecisionContext& ctx) {
    Matrix m(n, n, ctx);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ctx.from_long(1);
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("matrix add: shape mismatch");
    Matrix r = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
    return r;
}

Matrix operator*(const Scalar& c, const Matrix& m) {
    Matrix r = m;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = c * m.at(i, j);
    return r;
}

Vector operator*(const Matrix& m, const Vector& v) {
    if (m.cols() != v.dim()) throw DimensionMismatch("matrix-vector product: shape mismatch");
    std::vector<Scalar> out;
    out.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Scalar s = m.at(i, 0) * v[0];
        for (std::size_t j = 1; j < m.cols(); ++j) s += m.at(i, j) * v[j];
        out.push_back(std::move(s));
    }
    return Vector(std::move(out));
}

Scalar euclidean_norm(const Vector& v) {
    if (v.dim() == 0) throw DimensionMismatch("euclidean_norm: empty vector");
    Scalar s = v[0] * v[0];
    for (std::size_t i = 1; i < v.dim(); ++i) s += v[i] * v[i];
    return sqrt(s);
}

Scalar infinity_norm(const Vector& v) {
    if (v.dim() == 0) throw DimensionMismatch("infinity_norm: empty vector");
    Scalar m = abs(v[0]);
    for (std::size_t i = 1; i < v.dim(); ++i) {
        Scalar a = abs(v[i]);
        if (a > m) m = a;
    }
    return m;
}

Vector solve_linear(const Matrix& A, const Vector& b, const PrecisionContext& ctx) {
    const std::size_t n = A.rows();
    if (A.cols() != n || b.dim() != n) throw DimensionMismatch("solve_linear: shape mismatch");

    Matrix U = A;
    Vector y = b;

    Scalar amax = ctx.zero();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Scalar a = abs(U.at(i, j));
            if (a > amax) amax = a;
        }
    Scalar pivot_floor = ctx.pow10(8 - ctx.digits()) * amax;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        Scalar best = abs(U.at(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            Scalar a = abs(U.at(r, col));
            if (a > best) {
                best = a;
                piv = r;
            }
        }
        if (!(best > pivot_floor) || !best.is_finite())
            throw SingularMatrix("solve_linear: pivot below singularity threshold");
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(U.at(col, j), U.at(piv, j));
            std::swap(y[col], y[piv]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            if (U.at(r, col).is_zero()) continue;
            Scalar factor = U.at(r, col) / U.at(col, col);
            for (std::size_t j = col; j < n; ++j) U.at(r, j) -= factor * U.at(col, j);
            y[r] -= factor * y[col];
        }
    }

    Vector x(n, ctx);
    for (std::size_t i = n; i-- > 0;) {
        Scalar s = y[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= U.at(i, j) * x[j];
        x[i] = s / U.at(i, i);
    }
    return x;
}

}  // namespace geq
