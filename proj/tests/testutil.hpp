#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "tgcert/tgcert.hpp"

namespace testutil {

using tgcert::cplx;
using tgcert::cvector;
using tgcert::Matrix;

inline cplx random_complex(std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    const double re = g(rng);
    const double im = g(rng);
    return {re, im};
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t n, double scale = 1.0) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = scale * random_complex(rng);
    return m;
}

// Haar-ish random unitary via Gram-Schmidt on a Gaussian matrix.
inline Matrix random_unitary(std::mt19937_64& rng, std::size_t n) {
    while (true) {
        const Matrix g = random_matrix(rng, n);
        Matrix q(n, n);
        bool ok = true;
        for (std::size_t c = 0; c < n && ok; ++c) {
            cvector v = g.col(c);
            for (int pass = 0; pass < 2; ++pass) {
                for (std::size_t j = 0; j < c; ++j) {
                    const cvector pj = q.col(j);
                    const cplx proj = tgcert::vec_dot(pj, v);
                    for (std::size_t i = 0; i < n; ++i) v[i] -= proj * pj[i];
                }
            }
            const double nrm = tgcert::vec_norm(v);
            if (nrm < 1e-8) {
                ok = false;
                break;
            }
            for (cplx& z : v) z /= nrm;
            q.set_col(c, v);
        }
        if (ok) return q;
    }
}

// Random upper-triangular with diagonal real parts in [re_lo, re_hi],
// imaginary parts in [-im_max, im_max], off-diagonal scale off_scale.
inline Matrix random_stable_triangular(std::mt19937_64& rng, std::size_t n, double re_lo,
                                       double re_hi, double im_max, double off_scale) {
    std::uniform_real_distribution<double> ure(re_lo, re_hi);
    std::uniform_real_distribution<double> uim(-im_max, im_max);
    Matrix t(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        t(i, i) = cplx{ure(rng), uim(rng)};
        for (std::size_t j = i + 1; j < n; ++j) t(i, j) = off_scale * random_complex(rng);
    }
    return t;
}

// Random diagonalizable matrix with well-separated stable eigenvalues,
// conjugated by a random unitary.
inline Matrix random_stable_matrix(std::mt19937_64& rng, std::size_t n, double off_scale = 0.8) {
    while (true) {
        const Matrix t = random_stable_triangular(rng, n, -2.0, -0.15, 1.0, off_scale);
        bool separated = true;
        for (std::size_t i = 0; i < n && separated; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (std::abs(t(i, i) - t(j, j)) < 0.05) separated = false;
        if (!separated) continue;
        const Matrix u = random_unitary(rng, n);
        return u * t * tgcert::adjoint(u);
    }
}

inline Matrix showcase_matrix(double theta = 2.0 * tgcert::pi_const() / 7.0, double phi = 0.0) {
    return tgcert::upper_pair_matrix(cplx{-0.1, 0.9}, cplx{-0.4, -0.5}, theta, phi);
}

inline std::vector<cplx> sorted_eigenvalues(const Matrix& m) {
    const tgcert::SchurForm sf = tgcert::schur_decompose(m);
    std::vector<cplx> ev;
    for (std::size_t i = 0; i < m.rows(); ++i) ev.push_back(sf.t(i, i));
    std::sort(ev.begin(), ev.end(), [](cplx a, cplx b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return ev;
}

// Max |a - b| after sorting both sets: crude but effective spectrum compare.
inline double spectrum_distance(std::vector<cplx> a, std::vector<cplx> b) {
    auto key = [](cplx x, cplx y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    };
    std::sort(a.begin(), a.end(), key);
    std::sort(b.begin(), b.end(), key);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

}  // namespace testutil
