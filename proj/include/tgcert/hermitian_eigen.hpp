#pragma once

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "tgcert/complex_matrix.hpp"

namespace tgcert {

struct HermitianEigen {
    std::vector<double> values;  // ascending
    Matrix vectors;              // unitary, column k pairs with values[k]
};

namespace detail {

inline double off_diagonal_norm(const Matrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

}  // namespace detail

// Cyclic complex Jacobi for a Hermitian matrix. Quadratic convergence makes
// this effectively exact at the sizes this library targets.
inline HermitianEigen hermitian_eigen(const Matrix& h) {
    if (!h.square()) throw std::invalid_argument("hermitian_eigen: matrix not square");
    if (!h.finite()) throw std::domain_error("hermitian_eigen: non-finite entries");
    const std::size_t n = h.rows();
    Matrix a = h;
    Matrix w = Matrix::identity(n);
    const double scale = frobenius_norm(a);
    const double stop = scale * 1e-15;

    for (int sweep = 0; sweep < 60 && detail::off_diagonal_norm(a) > stop; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx f = a(p, q);
                const double af = std::abs(f);
                if (af <= stop / (double)(n * n + 1)) continue;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * af);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const cplx sigma = (t * c) * (f / af);

                // A <- V^H A V with V = I except the (p,q) plane rotation.
                for (std::size_t i = 0; i < n; ++i) {
                    const cplx aip = a(i, p), aiq = a(i, q);
                    a(i, p) = c * aip - std::conj(sigma) * aiq;
                    a(i, q) = sigma * aip + c * aiq;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    const cplx apj = a(p, j), aqj = a(q, j);
                    a(p, j) = c * apj - sigma * aqj;
                    a(q, j) = std::conj(sigma) * apj + c * aqj;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const cplx wip = w(i, p), wiq = w(i, q);
                    w(i, p) = c * wip - std::conj(sigma) * wiq;
                    w(i, q) = sigma * wip + c * wiq;
                }
            }
        }
    }

    HermitianEigen out;
    out.values.resize(n);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i).real();
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return d[i] < d[j]; });
    out.vectors = Matrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = d[order[k]];
        out.vectors.set_col(k, w.col(order[k]));
    }
    return out;
}

// Singular values, descending. Formed through the Gram matrix of the narrow
// side; accurate for the large end of the spectrum, and the small end is only
// ever compared against coarse rank thresholds here.
inline std::vector<double> singular_values(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return {};
    const Matrix g = (m.rows() >= m.cols()) ? adjoint(m) * m : m * adjoint(m);
    HermitianEigen e = hermitian_eigen(g);
    std::vector<double> out(e.values.size());
    for (std::size_t i = 0; i < e.values.size(); ++i) {
        const double v = e.values[e.values.size() - 1 - i];
        out[i] = std::sqrt(std::max(v, 0.0));
    }
    return out;
}

// Largest singular value (2-norm).
inline double spectral_norm(const Matrix& m) {
    if (!m.finite()) throw std::domain_error("spectral_norm: non-finite entries");
    if (m.rows() == 0 || m.cols() == 0) return 0.0;
    return singular_values(m).front();
}

}  // namespace tgcert
