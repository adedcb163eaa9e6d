#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "tgcert/complex_matrix.hpp"
#include "tgcert/config.hpp"

namespace tgcert {

// QR iteration did not triangularize within the iteration cap; signals
// pathological input or a too-tight deflation tolerance.
class convergence_error : public std::runtime_error {
public:
    explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

// M = Q T Q^H with Q unitary and T upper triangular.
struct SchurForm {
    Matrix q;
    Matrix t;
};

namespace detail {

struct Givens {
    double c = 1.0;  // real by construction
    cplx s = 0.0;
};

// Unitary G = [[c, s], [-conj(s), c]] with G * (x, y)^T = (r, 0)^T.
inline Givens make_givens(cplx x, cplx y) {
    Givens g;
    const double ax = std::abs(x), ay = std::abs(y);
    const double rho = std::hypot(ax, ay);
    if (rho == 0.0 || ay == 0.0) return g;  // identity
    if (ax == 0.0) {
        g.c = 0.0;
        g.s = std::conj(y) / ay;
        return g;
    }
    g.c = ax / rho;
    g.s = (x / ax) * std::conj(y) / rho;
    return g;
}

// Roots of the trailing 2x2 block, as (closer to d, other).
inline std::pair<cplx, cplx> block_eigenvalues(cplx a, cplx b, cplx c, cplx d) {
    const cplx half_tr = 0.5 * (a + d);
    const cplx delta = 0.5 * (a - d);
    const cplx disc = std::sqrt(delta * delta + b * c);
    const cplx m1 = half_tr + disc;
    const cplx m2 = half_tr - disc;
    if (std::abs(m1 - d) <= std::abs(m2 - d)) return {m1, m2};
    return {m2, m1};
}

}  // namespace detail

inline SchurForm schur_decompose(const Matrix& m, const Tolerances& tol = {}) {
    if (!m.square()) throw std::invalid_argument("schur_decompose: matrix not square");
    if (!m.finite()) throw std::domain_error("schur_decompose: non-finite entries");
    const std::size_t n = m.rows();
    Matrix h = m;
    Matrix q = Matrix::identity(n);
    if (n <= 1) return {q, h};

    // Householder reduction to upper Hessenberg form.
    for (std::size_t k = 0; k + 2 < n; ++k) {
        double xnorm = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) xnorm += std::norm(h(i, k));
        xnorm = std::sqrt(xnorm);
        if (xnorm == 0.0) continue;
        cvector v(n - k - 1);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = h(k + 1 + i, k);
        const cplx x0 = v[0];
        const cplx phase = (x0 == cplx{}) ? cplx{1.0, 0.0} : x0 / std::abs(x0);
        const cplx alpha = -phase * xnorm;
        v[0] -= alpha;
        double vv = 0.0;
        for (const cplx& z : v) vv += std::norm(z);
        if (vv == 0.0) continue;
        const double beta = 2.0 / vv;

        // rows k+1..n-1: H <- (I - beta v v^H) H
        for (std::size_t j = k; j < n; ++j) {
            cplx dot = 0.0;
            for (std::size_t i = 0; i < v.size(); ++i) dot += std::conj(v[i]) * h(k + 1 + i, j);
            dot *= beta;
            for (std::size_t i = 0; i < v.size(); ++i) h(k + 1 + i, j) -= dot * v[i];
        }
        // cols k+1..n-1: H <- H (I - beta v v^H)
        for (std::size_t i = 0; i < n; ++i) {
            cplx dot = 0.0;
            for (std::size_t j = 0; j < v.size(); ++j) dot += h(i, k + 1 + j) * v[j];
            dot *= beta;
            for (std::size_t j = 0; j < v.size(); ++j) h(i, k + 1 + j) -= dot * std::conj(v[j]);
        }
        for (std::size_t i = 0; i < n; ++i) {
            cplx dot = 0.0;
            for (std::size_t j = 0; j < v.size(); ++j) dot += q(i, k + 1 + j) * v[j];
            dot *= beta;
            for (std::size_t j = 0; j < v.size(); ++j) q(i, k + 1 + j) -= dot * std::conj(v[j]);
        }
        for (std::size_t i = k + 2; i < n; ++i) h(i, k) = 0.0;
    }

    // Shifted QR iteration with deflation.
    const double dtol = tol.schur_deflation * frobenius_norm(m);
    const long iter_cap = static_cast<long>(tol.schur_iter_factor) * static_cast<long>(n);
    long iters = 0;
    int stall = 0;
    std::size_t hi = n - 1;
    std::vector<detail::Givens> rot(n);

    while (hi > 0) {
        if (std::abs(h(hi, hi - 1)) <= dtol) {
            h(hi, hi - 1) = 0.0;
            --hi;
            stall = 0;
            continue;
        }
        std::size_t lo = hi;
        while (lo > 0 && std::abs(h(lo, lo - 1)) > dtol) --lo;
        if (lo > 0) h(lo, lo - 1) = 0.0;

        if (hi - lo == 1) {
            // Resolve a 2x2 block directly: rotate its eigenvector to e1.
            const cplx a = h(lo, lo), b = h(lo, lo + 1);
            const cplx c = h(lo + 1, lo), d = h(lo + 1, lo + 1);
            const cplx mu = detail::block_eigenvalues(a, b, c, d).second;
            cvector v1{b, mu - a}, v2{mu - d, c};
            cvector& v = (vec_norm(v1) >= vec_norm(v2)) ? v1 : v2;
            const double vn = vec_norm(v);
            if (vn > 0.0) {
                // Unitary with first column v/||v||, applied as a similarity.
                const cplx u0 = v[0] / vn, u1 = v[1] / vn;
                for (std::size_t j = lo; j < n; ++j) {
                    const cplx r0 = h(lo, j), r1 = h(lo + 1, j);
                    h(lo, j) = std::conj(u0) * r0 + std::conj(u1) * r1;
                    h(lo + 1, j) = -u1 * r0 + u0 * r1;
                }
                for (std::size_t i = 0; i <= hi; ++i) {
                    const cplx c0 = h(i, lo), c1 = h(i, lo + 1);
                    h(i, lo) = c0 * u0 + c1 * u1;
                    h(i, lo + 1) = -c0 * std::conj(u1) + c1 * std::conj(u0);
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const cplx c0 = q(i, lo), c1 = q(i, lo + 1);
                    q(i, lo) = c0 * u0 + c1 * u1;
                    q(i, lo + 1) = -c0 * std::conj(u1) + c1 * std::conj(u0);
                }
            }
            h(lo + 1, lo) = 0.0;
            hi = lo;
            stall = 0;
            continue;
        }

        if (++iters > iter_cap)
            throw convergence_error("schur_decompose: QR iteration cap exceeded");
        cplx mu = detail::block_eigenvalues(h(hi - 1, hi - 1), h(hi - 1, hi),
                                            h(hi, hi - 1), h(hi, hi))
                      .first;
        if (++stall % 12 == 0) mu = h(hi, hi) + 0.75 * std::abs(h(hi, hi - 1));

        for (std::size_t i = lo; i <= hi; ++i) h(i, i) -= mu;
        for (std::size_t i = lo; i < hi; ++i) {
            const detail::Givens g = detail::make_givens(h(i, i), h(i + 1, i));
            rot[i] = g;
            for (std::size_t j = i; j < n; ++j) {
                const cplx r0 = h(i, j), r1 = h(i + 1, j);
                h(i, j) = g.c * r0 + g.s * r1;
                h(i + 1, j) = -std::conj(g.s) * r0 + g.c * r1;
            }
            h(i + 1, i) = 0.0;
        }
        for (std::size_t i = lo; i < hi; ++i) {
            const detail::Givens g = rot[i];
            const std::size_t rmax = std::min(i + 1, hi);
            for (std::size_t r = 0; r <= rmax; ++r) {
                const cplx c0 = h(r, i), c1 = h(r, i + 1);
                h(r, i) = g.c * c0 + std::conj(g.s) * c1;
                h(r, i + 1) = -g.s * c0 + g.c * c1;
            }
            for (std::size_t r = 0; r < n; ++r) {
                const cplx c0 = q(r, i), c1 = q(r, i + 1);
                q(r, i) = g.c * c0 + std::conj(g.s) * c1;
                q(r, i + 1) = -g.s * c0 + g.c * c1;
            }
        }
        for (std::size_t i = lo; i <= hi; ++i) h(i, i) += mu;
    }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) h(i, j) = 0.0;
    return {q, h};
}

}  // namespace tgcert
