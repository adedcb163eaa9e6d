#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tgcert/complex_matrix.hpp"
#include "tgcert/config.hpp"
#include "tgcert/eigenpairs.hpp"
#include "tgcert/numrange.hpp"

namespace tgcert {

enum class CertKind { PairAngleExp, PairAnglePow, JordanExp, JordanPow, OffDiagonalExp };
enum class Mode { Exp, Pow };

inline const char* cert_kind_name(CertKind k) {
    switch (k) {
        case CertKind::PairAngleExp: return "pair-angle-exp";
        case CertKind::PairAnglePow: return "pair-angle-pow";
        case CertKind::JordanExp: return "jordan-exp";
        case CertKind::JordanPow: return "jordan-pow";
        case CertKind::OffDiagonalExp: return "offdiagonal-exp";
    }
    return "unknown";
}

// One sufficient-condition check on an invariant subspace. A true verdict
// certifies transient growth of the full matrix; a false verdict claims
// nothing (the conditions are sufficient, not necessary).
struct SubspaceCertificate {
    CertKind kind{};
    std::vector<std::size_t> eig_indices;
    std::optional<double> theta;      // pair-angle kinds only
    std::optional<double> threshold;  // pair-angle kinds only
    double omega_restricted = 0.0;
    bool verdict = false;
};

struct MatrixReport {
    std::vector<EigenPair> eigenpairs;
    bool stable_exp = false;  // all Re(lambda) < 0
    bool stable_pow = false;  // all 0 < |lambda| < 1
    std::vector<SubspaceCertificate> certificates;
    double omega_full = 0.0;
};

// A requested subspace failed the invariance check; carries the measured
// defect ||(I - P P^H) M P||_2.
class invariance_error : public std::runtime_error {
public:
    invariance_error(const std::string& what, double defect)
        : std::runtime_error(what), defect_(defect) {}
    double defect() const { return defect_; }

private:
    double defect_ = 0.0;
};

// Critical eigenvector angle for exponential transience of a stable pair.
inline double threshold_theta_exp(cplx lambda1, cplx lambda2) {
    if (lambda1 == lambda2)
        throw std::domain_error("threshold_theta_exp: eigenvalues must be distinct");
    if (!(lambda1.real() < 0.0) || !(lambda2.real() < 0.0))
        throw std::domain_error("threshold_theta_exp: both real parts must be negative");
    return std::atan(std::abs(lambda1 - lambda2) /
                     (2.0 * std::sqrt(lambda1.real() * lambda2.real())));
}

namespace detail {

// Principal logs of a pair, with the first branch shifted so that
// Im(ln l1 - ln l2) lies in [-pi, pi).
inline std::pair<cplx, cplx> branch_logs(cplx lambda1, cplx lambda2) {
    cplx l1 = std::log(lambda1);
    const cplx l2 = std::log(lambda2);
    const double d = (l1 - l2).imag();
    if (d >= pi_const()) l1 -= cplx{0.0, 2.0 * pi_const()};
    else if (d < -pi_const()) l1 += cplx{0.0, 2.0 * pi_const()};
    return {l1, l2};
}

inline void require_pow_eigenvalue(cplx lambda, const char* who) {
    const double a = std::abs(lambda);
    if (!(a > 0.0) || !(a < 1.0))
        throw std::domain_error(std::string(who) + ": |lambda| must lie in (0, 1)");
}

}  // namespace detail

// Critical eigenvector angle for power transience of a pair with moduli in
// (0,1), under the [-pi, pi) branch rule.
inline double threshold_theta_pow(cplx lambda1, cplx lambda2) {
    if (lambda1 == lambda2)
        throw std::domain_error("threshold_theta_pow: eigenvalues must be distinct");
    detail::require_pow_eigenvalue(lambda1, "threshold_theta_pow");
    detail::require_pow_eigenvalue(lambda2, "threshold_theta_pow");
    const auto [l1, l2] = detail::branch_logs(lambda1, lambda2);
    const double denom = 2.0 * std::sqrt(std::log(std::abs(lambda1)) *
                                         std::log(std::abs(lambda2)));
    return std::atan(std::abs(l1 - l2) / denom);
}

// Pair-of-eigenvectors certificate at angle theta, in exponential or power
// mode. Strict inequality: theta exactly at the threshold is not certified.
inline SubspaceCertificate check_pair(cplx lambda1, cplx lambda2, double theta, Mode mode) {
    if (!(theta > 0.0) || theta > pi_const() / 2.0)
        throw std::domain_error("check_pair: theta must lie in (0, pi/2]");
    SubspaceCertificate c;
    if (mode == Mode::Exp) {
        c.kind = CertKind::PairAngleExp;
        c.threshold = threshold_theta_exp(lambda1, lambda2);
        c.omega_restricted = omega_A(lambda1, lambda2, theta);
    } else {
        c.kind = CertKind::PairAnglePow;
        c.threshold = threshold_theta_pow(lambda1, lambda2);
        const auto [l1, l2] = detail::branch_logs(lambda1, lambda2);
        c.omega_restricted = omega_A(l1, l2, theta);
    }
    c.theta = theta;
    c.verdict = theta < *c.threshold;
    return c;
}

// Jordan-chain certificate. Exponential mode requires Re(lambda) < 0 and
// certifies when Re(lambda) > -cos(pi/(size+1)); power mode requires
// |lambda| in (0,1) and certifies unconditionally.
inline SubspaceCertificate check_jordan(cplx lambda, std::size_t size, Mode mode) {
    if (size < 2) throw std::domain_error("check_jordan: size must be >= 2");
    SubspaceCertificate c;
    if (mode == Mode::Exp) {
        if (!(lambda.real() < 0.0))
            throw std::domain_error("check_jordan: Re(lambda) must be negative");
        c.kind = CertKind::JordanExp;
        const double radius = std::cos(pi_const() / static_cast<double>(size + 1));
        c.omega_restricted = lambda.real() + radius;
        c.verdict = lambda.real() > -radius;
    } else {
        detail::require_pow_eigenvalue(lambda, "check_jordan");
        c.kind = CertKind::JordanPow;
        // Principal log of the Jordan block, via the terminating nilpotent
        // series ln(lambda I + N) = ln(lambda) I + sum_j (-1)^{j+1} N^j/(j lambda^j).
        Matrix logj(size, size);
        const cplx l = std::log(lambda);
        for (std::size_t i = 0; i < size; ++i) logj(i, i) = l;
        cplx lam_pow = 1.0;
        double sign = 1.0;
        for (std::size_t j = 1; j < size; ++j) {
            lam_pow *= lambda;
            const cplx entry = sign / (static_cast<double>(j) * lam_pow);
            for (std::size_t i = 0; i + j < size; ++i) logj(i, i + j) = entry;
            sign = -sign;
        }
        c.omega_restricted = numerical_abscissa(logj);
        c.verdict = true;
    }
    return c;
}

// Schur-data certificate: a stable triangular 2x2 with off-diagonal entry a
// is transient when |a| > 2 sqrt(Re l1 Re l2) (strict).
inline SubspaceCertificate check_offdiagonal(cplx a, cplx lambda1, cplx lambda2) {
    if (lambda1 == lambda2)
        throw std::domain_error("check_offdiagonal: eigenvalues must be distinct");
    if (!(lambda1.real() < 0.0) || !(lambda2.real() < 0.0))
        throw std::domain_error("check_offdiagonal: both real parts must be negative");
    const double aa = std::abs(a);
    const double theta =
        (aa == 0.0) ? pi_const() / 2.0 : std::atan(std::abs(lambda2 - lambda1) / aa);
    SubspaceCertificate c;
    c.kind = CertKind::OffDiagonalExp;
    c.theta = theta;
    c.threshold = threshold_theta_exp(lambda1, lambda2);
    c.omega_restricted = omega_A(lambda1, lambda2, theta);
    c.verdict = aa > 2.0 * std::sqrt(lambda1.real() * lambda2.real());
    return c;
}

// Compression of m onto the span of basis: P^H m P for an orthonormalization
// P of basis. Throws invariance_error when the span fails the invariance
// check ||(I - P P^H) m P||_2 <= tol.invariance * ||m||_2.
inline Matrix restrict(const Matrix& m, const std::vector<cvector>& basis,
                       const Tolerances& tol = {}) {
    if (!m.square()) throw std::invalid_argument("restrict: matrix not square");
    const std::size_t n = m.rows();
    const std::size_t k = basis.size();
    if (k == 0 || k > n) throw std::invalid_argument("restrict: bad basis size");
    Matrix p(n, k);
    for (std::size_t c = 0; c < k; ++c) {
        if (basis[c].size() != n) throw std::invalid_argument("restrict: basis length mismatch");
        cvector v = basis[c];
        for (int pass = 0; pass < 2; ++pass) {  // modified Gram-Schmidt, twice
            for (std::size_t j = 0; j < c; ++j) {
                const cvector pj = p.col(j);
                const cplx proj = vec_dot(pj, v);
                for (std::size_t i = 0; i < n; ++i) v[i] -= proj * pj[i];
            }
        }
        const double nrm = vec_norm(v);
        if (nrm < 1e-12 * std::max(vec_norm(basis[c]), 1.0))
            throw std::invalid_argument("restrict: basis numerically dependent");
        for (std::size_t i = 0; i < n; ++i) v[i] /= nrm;
        p.set_col(c, v);
    }
    const Matrix mp = m * p;
    const Matrix g = adjoint(p) * mp;
    const Matrix resid = mp - p * g;
    const double defect = spectral_norm(resid);
    const double bound = tol.invariance * spectral_norm(m);
    if (defect > bound) {
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "restrict: span not invariant (defect %.3e > bound %.3e)", defect, bound);
        throw invariance_error(buf, defect);
    }
    return g;
}

// Full scan: eigenpairs, stability classification, and every applicable
// pair-angle and Jordan certificate. Certificates are emitted only when the
// global stability hypothesis of the corresponding theorem holds.
inline MatrixReport scan(const Matrix& m, double cluster_tol = -1.0, const Tolerances& tol = {}) {
    if (!m.square()) throw std::invalid_argument("scan: matrix not square");
    MatrixReport r;
    r.eigenpairs = eigenpairs(m, cluster_tol, tol);
    r.omega_full = numerical_abscissa(m);
    r.stable_exp = !r.eigenpairs.empty();
    r.stable_pow = !r.eigenpairs.empty();
    for (const EigenPair& p : r.eigenpairs) {
        if (!(p.value.real() < 0.0)) r.stable_exp = false;
        const double a = std::abs(p.value);
        if (!(a > 0.0) || !(a < 1.0)) r.stable_pow = false;
    }
    const double ctol =
        (cluster_tol < 0.0) ? tol.cluster * frobenius_norm(m) : cluster_tol;

    const std::size_t np = r.eigenpairs.size();
    for (std::size_t i = 0; i < np; ++i) {
        for (std::size_t j = i + 1; j < np; ++j) {
            const cplx l1 = r.eigenpairs[i].value, l2 = r.eigenpairs[j].value;
            if (std::abs(l1 - l2) <= ctol) continue;  // same cluster: not a distinct pair
            double theta = vector_angle(r.eigenpairs[i].vector, r.eigenpairs[j].vector);
            theta = std::clamp(theta, 1e-12, pi_const() / 2.0);
            if (r.stable_exp) {
                SubspaceCertificate c = check_pair(l1, l2, theta, Mode::Exp);
                c.eig_indices = {i, j};
                r.certificates.push_back(std::move(c));
            }
            if (r.stable_pow) {
                SubspaceCertificate c = check_pair(l1, l2, theta, Mode::Pow);
                c.eig_indices = {i, j};
                r.certificates.push_back(std::move(c));
            }
        }
    }
    for (std::size_t i = 0; i < np; ++i) {
        const EigenPair& p = r.eigenpairs[i];
        if (p.chain_length < 2) continue;
        const std::size_t size = static_cast<std::size_t>(p.chain_length);
        if (r.stable_exp) {
            SubspaceCertificate c = check_jordan(p.value, size, Mode::Exp);
            c.eig_indices = {i};
            r.certificates.push_back(std::move(c));
        }
        if (r.stable_pow) {
            SubspaceCertificate c = check_jordan(p.value, size, Mode::Pow);
            c.eig_indices = {i};
            r.certificates.push_back(std::move(c));
        }
    }
    return r;
}

// Antieigenvalue angle of a negative real pair; coincides with the
// exponential pair threshold.
inline double antieigen_angle(double lambda1, double lambda2) {
    if (!(lambda1 < 0.0) || !(lambda2 < 0.0))
        throw std::domain_error("antieigen_angle: both values must be negative");
    if (lambda1 == lambda2)
        throw std::domain_error("antieigen_angle: values must be distinct");
    return std::asin(std::abs(lambda1 - lambda2) / std::abs(lambda1 + lambda2));
}

}  // namespace tgcert
