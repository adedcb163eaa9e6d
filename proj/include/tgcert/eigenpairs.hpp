#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <vector>

#include "tgcert/complex_matrix.hpp"
#include "tgcert/config.hpp"
#include "tgcert/hermitian_eigen.hpp"
#include "tgcert/schur.hpp"

namespace tgcert {

// One eigenvalue with a unit right eigenvector. chain_length > 1 marks the
// head of a numerically detected Jordan chain of that size.
struct EigenPair {
    cplx value{};
    cvector vector;
    int chain_length = 1;
};

namespace detail {

// Rotate v so its largest-modulus entry is real and positive, and ||v|| = 1.
inline void normalize_direction(cvector& v) {
    const double nrm = vec_norm(v);
    if (nrm == 0.0) return;
    std::size_t imax = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (std::abs(v[i]) > std::abs(v[imax])) imax = i;
    const double amax = std::abs(v[imax]);
    const cplx phase = (amax == 0.0) ? cplx{1.0, 0.0} : std::conj(v[imax]) / amax;
    for (cplx& z : v) z = z * phase / nrm;
}

// Eigenvector of upper-triangular t for its diagonal entry at position idx,
// by back-substitution with a guarded denominator.
inline cvector triangular_eigenvector(const Matrix& t, std::size_t idx) {
    const std::size_t n = t.rows();
    const double smin = std::numeric_limits<double>::epsilon() *
                        std::max(frobenius_norm(t), std::numeric_limits<double>::min());
    const cplx lambda = t(idx, idx);
    cvector y(n, cplx{});
    y[idx] = 1.0;
    for (std::size_t jj = idx; jj-- > 0;) {
        cplx acc = 0.0;
        for (std::size_t k = jj + 1; k <= idx; ++k) acc += t(jj, k) * y[k];
        cplx d = t(jj, jj) - lambda;
        if (std::abs(d) < smin) d = smin;
        y[jj] = -acc / d;
        double big = 0.0;
        for (std::size_t k = jj; k <= idx; ++k) big = std::max(big, std::abs(y[k]));
        if (big > 1e100)
            for (std::size_t k = jj; k <= idx; ++k) y[k] /= big;
    }
    return y;
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace detail

// Eigenpairs counted with geometric multiplicity. Eigenvalues within
// cluster_tol of each other (transitively) form one cluster; a cluster whose
// eigenvectors are numerically rank-deficient is reported as Jordan chains,
// sized by the nullity growth of powers of (M - mean*I). cluster_tol < 0
// selects the default 1e-8 * ||M||_F.
inline std::vector<EigenPair> eigenpairs(const Matrix& m, double cluster_tol = -1.0,
                                         const Tolerances& tol = {}) {
    if (!m.square()) throw std::invalid_argument("eigenpairs: matrix not square");
    const std::size_t n = m.rows();
    const SchurForm sf = schur_decompose(m, tol);
    const double ctol = (cluster_tol < 0.0) ? tol.cluster * frobenius_norm(m) : cluster_tol;

    // Eigenvectors of T mapped back through Q.
    std::vector<cvector> vecs(n);
    for (std::size_t i = 0; i < n; ++i) {
        const cvector y = detail::triangular_eigenvector(sf.t, i);
        vecs[i] = mat_vec(sf.q, y);
        detail::normalize_direction(vecs[i]);
    }

    detail::UnionFind uf(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(sf.t(i, i) - sf.t(j, j)) <= ctol) uf.unite(i, j);

    std::vector<std::vector<std::size_t>> clusters;
    std::vector<long> slot(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t root = uf.find(i);
        if (slot[root] < 0) {
            slot[root] = static_cast<long>(clusters.size());
            clusters.emplace_back();
        }
        clusters[static_cast<std::size_t>(slot[root])].push_back(i);
    }

    std::vector<EigenPair> out;
    out.reserve(n);
    for (const std::vector<std::size_t>& members : clusters) {
        const std::size_t k = members.size();
        bool defective = false;
        if (k >= 2) {
            Matrix stacked(n, k);
            for (std::size_t c = 0; c < k; ++c) stacked.set_col(c, vecs[members[c]]);
            const std::vector<double> sv = singular_values(stacked);
            defective = sv.back() < tol.defect_sigma;
        }
        if (!defective) {
            for (std::size_t idx : members) out.push_back({sf.t(idx, idx), vecs[idx], 1});
            continue;
        }

        cplx mean = 0.0;
        for (std::size_t idx : members) mean += sf.t(idx, idx);
        mean /= static_cast<double>(k);

        // Weyr characteristic from nullities of normalized powers of B.
        Matrix b = m - mean * Matrix::identity(n);
        const double bnorm = spectral_norm(b);
        if (bnorm > 0.0) b = (1.0 / bnorm) * b;
        std::vector<std::size_t> nullity{0};
        Matrix p = Matrix::identity(n);
        for (std::size_t j = 1; j <= k; ++j) {
            p = p * b;
            const double pnorm = spectral_norm(p);
            if (pnorm <= tol.defect_sigma) {
                // the product collapsed to rounding noise: this power of the
                // nilpotent part is numerically zero, so its kernel is full
                nullity.push_back(n);
                break;
            }
            p = (1.0 / pnorm) * p;
            const std::vector<double> sv = singular_values(p);
            std::size_t rank = 0;
            for (double s : sv)
                if (s > tol.defect_sigma) ++rank;
            nullity.push_back(n - rank);
            if (nullity.back() >= k) break;
        }
        std::vector<std::size_t> weyr;  // weyr[j-1] = #blocks of size >= j
        for (std::size_t j = 1; j < nullity.size(); ++j) {
            const std::size_t w = nullity[j] > nullity[j - 1] ? nullity[j] - nullity[j - 1] : 0;
            if (w == 0) break;
            weyr.push_back(w);
        }
        if (weyr.empty()) weyr.push_back(k);  // numerics degenerate: fall back to one chain
        const std::size_t n_blocks = weyr[0];

        // Kernel basis of B: eigenvectors of B^H B for its smallest eigenvalues.
        const HermitianEigen he = hermitian_eigen(adjoint(b) * b);
        std::vector<EigenPair> block_pairs;
        for (std::size_t bidx = 0; bidx < n_blocks && bidx < n; ++bidx) {
            std::size_t size = 0;
            for (std::size_t w : weyr)
                if (w >= bidx + 1) ++size;
            cvector v = he.vectors.col(bidx);
            detail::normalize_direction(v);
            block_pairs.push_back({mean, std::move(v),
                                   static_cast<int>(std::max<std::size_t>(size, 1))});
        }
        std::stable_sort(block_pairs.begin(), block_pairs.end(),
                         [](const EigenPair& a, const EigenPair& b2) {
                             return a.chain_length > b2.chain_length;
                         });
        for (EigenPair& ep : block_pairs) out.push_back(std::move(ep));
    }
    return out;
}

}  // namespace tgcert
