#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "tgcert/complex_matrix.hpp"
#include "tgcert/config.hpp"
#include "tgcert/eigenpairs.hpp"
#include "tgcert/schur.hpp"

namespace tgcert {

// Input shape outside the supported domain of an operation (e.g. the
// principal logarithm of a defective matrix larger than 2x2).
class unsupported_shape_error : public std::runtime_error {
public:
    explicit unsupported_shape_error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

struct LUForm {
    Matrix lu;                      // L (unit lower, implicit) over U, in place
    std::vector<std::size_t> perm;  // row permutation
};

inline LUForm lu_factor(const Matrix& m) {
    if (!m.square()) throw std::invalid_argument("lu_factor: matrix not square");
    const std::size_t n = m.rows();
    LUForm f{m, std::vector<std::size_t>(n)};
    for (std::size_t i = 0; i < n; ++i) f.perm[i] = i;
    const double tiny = 1e-14 * std::max(max_abs(m), std::numeric_limits<double>::min());
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(f.lu(i, k)) > std::abs(f.lu(piv, k))) piv = i;
        if (std::abs(f.lu(piv, k)) <= tiny)
            throw std::domain_error("lu_factor: matrix numerically singular");
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(f.lu(k, j), f.lu(piv, j));
            std::swap(f.perm[k], f.perm[piv]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const cplx l = f.lu(i, k) / f.lu(k, k);
            f.lu(i, k) = l;
            for (std::size_t j = k + 1; j < n; ++j) f.lu(i, j) -= l * f.lu(k, j);
        }
    }
    return f;
}

inline cvector lu_solve(const LUForm& f, const cvector& b) {
    const std::size_t n = f.perm.size();
    cvector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[f.perm[i]];
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) x[i] -= f.lu(i, j) * x[j];
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t j = i + 1; j < n; ++j) x[i] -= f.lu(i, j) * x[j];
        x[i] /= f.lu(i, i);
    }
    return x;
}

inline Matrix lu_inverse(const Matrix& m) {
    const LUForm f = lu_factor(m);
    const std::size_t n = m.rows();
    Matrix inv(n, n);
    cvector e(n, cplx{});
    for (std::size_t c = 0; c < n; ++c) {
        e[c] = 1.0;
        inv.set_col(c, lu_solve(f, e));
        e[c] = 0.0;
    }
    return inv;
}

}  // namespace detail

// e^{m t} by scaling-and-squaring over a truncated Taylor series.
inline Matrix matrix_exponential(const Matrix& m, double t, const Tolerances& tol = {}) {
    if (!m.square()) throw std::invalid_argument("matrix_exponential: matrix not square");
    const std::size_t n = m.rows();
    Matrix a = t * m;
    if (!a.finite()) throw std::range_error("matrix_exponential: non-finite scaled input");
    const double fro = frobenius_norm(a);
    int s = 0;
    if (fro > tol.expm_scale) s = static_cast<int>(std::ceil(std::log2(fro / tol.expm_scale)));
    if (s > 64) throw std::range_error("matrix_exponential: norm too large, overflow risk");
    if (s > 0) a = std::ldexp(1.0, -s) * a;

    const Matrix eye = Matrix::identity(n);
    Matrix e = eye;  // Horner evaluation of the truncated series
    for (int j = tol.expm_terms; j >= 1; --j) e = eye + (1.0 / j) * (a * e);
    for (int j = 0; j < s; ++j) {
        e = e * e;
        if (!e.finite()) throw std::range_error("matrix_exponential: overflow while squaring");
    }
    return e;
}

// m^n by repeated squaring; n = 0 gives the identity.
inline Matrix matrix_power_int(const Matrix& m, std::uint64_t n) {
    if (!m.square()) throw std::invalid_argument("matrix_power_int: matrix not square");
    Matrix result = Matrix::identity(m.rows());
    Matrix base = m;
    while (n > 0) {
        if (n & 1u) result = result * base;
        n >>= 1u;
        if (n > 0) base = base * base;
    }
    return result;
}

// Principal matrix logarithm. A 2x2 input may be defective; for the
// two-distinct-eigenvalue 2x2 case the branches are placed so that
// Im(ln l1 - ln l2) lies in [-pi, pi). Larger matrices must be
// diagonalizable.
inline Matrix matrix_log_principal(const Matrix& m, const Tolerances& tol = {}) {
    if (!m.square()) throw std::invalid_argument("matrix_log_principal: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return m;
    if (n == 1) {
        const cplx z = m(0, 0);
        if (std::abs(z) < 1e-300) throw std::domain_error("matrix_log_principal: singular input");
        Matrix r(1, 1);
        r(0, 0) = std::log(z);
        return r;
    }
    if (n == 2) {
        const SchurForm sf = schur_decompose(m, tol);
        const cplx t00 = sf.t(0, 0), t11 = sf.t(1, 1), t01 = sf.t(0, 1);
        if (std::abs(t00) < 1e-300 || std::abs(t11) < 1e-300)
            throw std::domain_error("matrix_log_principal: singular input");
        const double ctol = tol.cluster * frobenius_norm(m);
        Matrix f(2, 2);
        if (std::abs(t00 - t11) <= ctol) {
            const cplx lambda = 0.5 * (t00 + t11);
            f(0, 0) = std::log(lambda);
            f(1, 1) = f(0, 0);
            f(0, 1) = t01 / lambda;  // divided difference degenerates to d/dz ln(z)
        } else {
            cplx l1 = std::log(t00);
            const cplx l2 = std::log(t11);
            double d = (l1 - l2).imag();
            if (d >= pi_const()) l1 -= cplx{0.0, 2.0 * pi_const()};
            else if (d < -pi_const()) l1 += cplx{0.0, 2.0 * pi_const()};
            f(0, 0) = l1;
            f(1, 1) = l2;
            f(0, 1) = t01 * (l1 - l2) / (t00 - t11);
        }
        return sf.q * f * adjoint(sf.q);
    }
    const std::vector<EigenPair> pairs = eigenpairs(m, -1.0, tol);
    for (const EigenPair& p : pairs)
        if (p.chain_length > 1)
            throw unsupported_shape_error(
                "matrix_log_principal: defective input larger than 2x2");
    if (pairs.size() != n)
        throw unsupported_shape_error(
            "matrix_log_principal: could not assemble a full eigenbasis");
    Matrix v(n, n);
    for (std::size_t c = 0; c < n; ++c) v.set_col(c, pairs[c].vector);
    Matrix logd(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        if (std::abs(pairs[c].value) < 1e-300)
            throw std::domain_error("matrix_log_principal: singular input");
        logd(c, c) = std::log(pairs[c].value);
    }
    return v * logd * detail::lu_inverse(v);
}

}  // namespace tgcert
