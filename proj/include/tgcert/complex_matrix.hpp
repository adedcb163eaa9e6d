#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace tgcert {

using cplx = std::complex<double>;
using cvector = std::vector<cplx>;

inline bool is_finite(cplx z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

constexpr double pi_const() { return 3.14159265358979323846; }

// Dense complex matrix, row-major storage.
class Matrix {
public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, cplx{0.0, 0.0}) {}

    Matrix(std::initializer_list<std::initializer_list<cplx>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        entries_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_)
                throw std::invalid_argument("Matrix: ragged initializer");
            entries_.insert(entries_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    bool empty() const { return entries_.empty(); }

    cplx& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<cplx>& entries() const { return entries_; }
    std::vector<cplx>& entries() { return entries_; }

    cvector col(std::size_t j) const {
        cvector c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    void set_col(std::size_t j, const cvector& c) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
    }

    bool finite() const {
        return std::all_of(entries_.begin(), entries_.end(),
                           [](cplx z) { return is_finite(z); });
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<cplx> entries_;
};

inline Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix add: shape mismatch");
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows() * a.cols(); ++i)
        c.entries()[i] = a.entries()[i] + b.entries()[i];
    return c;
}

inline Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix sub: shape mismatch");
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows() * a.cols(); ++i)
        c.entries()[i] = a.entries()[i] - b.entries()[i];
    return c;
}

inline Matrix operator*(cplx s, const Matrix& a) {
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows() * a.cols(); ++i)
        c.entries()[i] = s * a.entries()[i];
    return c;
}

inline Matrix operator*(const Matrix& a, cplx s) { return s * a; }

inline Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix mul: shape mismatch");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

inline Matrix adjoint(const Matrix& a) {
    Matrix c(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            c(j, i) = std::conj(a(i, j));
    return c;
}

inline cplx trace(const Matrix& a) {
    if (!a.square()) throw std::invalid_argument("trace: matrix not square");
    cplx t = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

inline double frobenius_norm(const Matrix& a) {
    double s = 0.0;
    for (const cplx& z : a.entries()) s += std::norm(z);
    return std::sqrt(s);
}

inline double max_abs(const Matrix& a) {
    double m = 0.0;
    for (const cplx& z : a.entries()) m = std::max(m, std::abs(z));
    return m;
}

// (m + m^H)/2
inline Matrix hermitian_part(const Matrix& m) {
    if (!m.square()) throw std::invalid_argument("hermitian_part: matrix not square");
    Matrix h(m.rows(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.rows(); ++j)
            h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    return h;
}

inline cvector mat_vec(const Matrix& a, const cvector& x) {
    if (a.cols() != x.size())
        throw std::invalid_argument("mat_vec: shape mismatch");
    cvector y(a.rows(), cplx{});
    for (std::size_t i = 0; i < a.rows(); ++i) {
        cplx s = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

inline double vec_norm(const cvector& v) {
    double s = 0.0;
    for (const cplx& z : v) s += std::norm(z);
    return std::sqrt(s);
}

// Hermitian inner product, conjugate-linear in the first argument.
inline cplx vec_dot(const cvector& a, const cvector& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("vec_dot: length mismatch");
    cplx s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

// Angle in the Hermitian sense: arccos(|v1^H v2| / (||v1|| ||v2||)), in [0, pi/2].
// Invariant under nonzero complex scaling of either argument.
inline double vector_angle(const cvector& v1, const cvector& v2) {
    const double n1 = vec_norm(v1), n2 = vec_norm(v2);
    if (n1 == 0.0 || n2 == 0.0)
        throw std::domain_error("vector_angle: zero vector");
    double c = std::abs(vec_dot(v1, v2)) / (n1 * n2);
    c = std::clamp(c, 0.0, 1.0);
    return std::acos(c);
}

}  // namespace tgcert
