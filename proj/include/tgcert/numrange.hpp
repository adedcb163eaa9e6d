#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "tgcert/complex_matrix.hpp"
#include "tgcert/hermitian_eigen.hpp"

namespace tgcert {

// Elliptical numerical range of a 2x2 matrix. major_axis/minor_axis are the
// full geometric axis lengths of the boundary ellipse (the degenerate normal
// case is the segment joining the foci, reported as minor_axis = 0).
struct EllipseNR {
    cplx center{};                            // tr(M)/2
    std::array<cplx, 2> foci{};               // eigenvalues
    double major_axis = 0.0;
    double minor_axis = 0.0;
    std::array<std::array<double, 2>, 2> shape_s{};  // real symmetric shape matrix
};

// Circular numerical range of a single Jordan block.
struct DiskNR {
    cplx center{};
    double radius = 0.0;
    double omega() const { return center.real() + radius; }
};

inline EllipseNR ellipse_2x2(const Matrix& m) {
    if (m.rows() != 2 || m.cols() != 2)
        throw std::invalid_argument("ellipse_2x2: matrix must be 2x2");
    EllipseNR e;
    e.center = 0.5 * trace(m);
    Matrix m0 = m;
    m0(0, 0) -= e.center;
    m0(1, 1) -= e.center;
    const double fro2 = std::norm(m0(0, 0)) + std::norm(m0(0, 1)) +
                        std::norm(m0(1, 0)) + std::norm(m0(1, 1));
    const cplx det0 = m0(0, 0) * m0(1, 1) - m0(0, 1) * m0(1, 0);
    e.shape_s = {{{fro2 + 2.0 * det0.real(), 2.0 * det0.imag()},
                  {2.0 * det0.imag(), fro2 - 2.0 * det0.real()}}};
    const double adet = std::abs(det0);
    e.major_axis = std::sqrt(std::max(fro2 + 2.0 * adet, 0.0));
    e.minor_axis = std::sqrt(std::max(fro2 - 2.0 * adet, 0.0));
    // Eigenvalues: center +- sqrt(det(M0) negated) since tr(M0) = 0.
    const cplx d = std::sqrt(-det0);
    e.foci = {e.center + d, e.center - d};
    return e;
}

// Signed support-function violation of z against the ellipse: the maximum
// over sampled directions of the overshoot beyond the supporting half-plane.
// Nonpositive for interior points; equals the Euclidean distance to the
// ellipse (up to grid resolution) for exterior points.
inline double ellipse_violation(const EllipseNR& e, cplx z, std::size_t grid = 720) {
    const double a = 0.5 * e.major_axis;
    const double b = 0.5 * e.minor_axis;
    const cplx fdir = e.foci[0] - e.center;
    const double fabsd = std::abs(fdir);
    const cplx u = (fabsd > 0.0) ? fdir / fabsd : cplx{1.0, 0.0};
    const cplx w = std::conj(u) * (z - e.center);  // ellipse-frame coordinates
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < grid; ++j) {
        const double psi = 2.0 * pi_const() * static_cast<double>(j) / static_cast<double>(grid);
        const double cs = std::cos(psi), sn = std::sin(psi);
        const double support = std::sqrt(a * a * cs * cs + b * b * sn * sn);
        worst = std::max(worst, w.real() * cs + w.imag() * sn - support);
    }
    return worst;
}

// Numerical abscissa: largest eigenvalue of the Hermitian part.
inline double numerical_abscissa(const Matrix& m) {
    if (!m.square()) throw std::invalid_argument("numerical_abscissa: matrix not square");
    if (m.rows() == 0) throw std::invalid_argument("numerical_abscissa: empty matrix");
    const HermitianEigen he = hermitian_eigen(hermitian_part(m));
    return he.values.back();
}

// Closed-form numerical abscissa of the canonical upper-triangular pair
// matrix with eigenvector angle theta.
inline double omega_A(cplx lambda1, cplx lambda2, double theta) {
    if (!(theta > 0.0) || theta > pi_const() / 2.0)
        throw std::domain_error("omega_A: theta must lie in (0, pi/2]");
    const cplx diff = lambda1 - lambda2;
    if (diff == cplx{}) throw std::domain_error("omega_A: eigenvalues must be distinct");
    const double ct = 1.0 / std::tan(theta);
    const double inner =
        std::norm(diff) * (1.0 + 2.0 * ct * ct) + (diff * diff).real();
    return std::sqrt(std::max(inner, 0.0)) / (2.0 * std::sqrt(2.0)) +
           0.5 * (lambda1 + lambda2).real();
}

// Numerical range of a Jordan block: disk of radius cos(pi/(size+1)).
inline DiskNR jordan_disk(cplx lambda, std::size_t size) {
    if (size < 2) throw std::domain_error("jordan_disk: size must be >= 2");
    return {lambda, std::cos(pi_const() / static_cast<double>(size + 1))};
}

// k boundary points of W(m) in angular order, via support-function rotation:
// the boundary point at angle phi is the Rayleigh quotient of the top
// eigenvector of the Hermitian part of e^{-i phi} m.
inline std::vector<cplx> nr_boundary_sample(const Matrix& m, std::size_t k) {
    if (!m.square()) throw std::invalid_argument("nr_boundary_sample: matrix not square");
    if (k < 3) throw std::invalid_argument("nr_boundary_sample: need at least 3 points");
    const std::size_t n = m.rows();
    std::vector<cplx> pts;
    pts.reserve(k);
    for (std::size_t j = 0; j < k; ++j) {
        const double phi = 2.0 * pi_const() * static_cast<double>(j) / static_cast<double>(k);
        const cplx rot = std::polar(1.0, -phi);
        const HermitianEigen he = hermitian_eigen(hermitian_part(rot * m));
        const cvector x = he.vectors.col(n - 1);
        const cvector mx = mat_vec(m, x);
        pts.push_back(vec_dot(x, mx));  // x^H m x for unit x
    }
    return pts;
}

// Numerical abscissa of the principal log of a 2x2 Jordan block with
// eigenvalue lambda, |lambda| in (0,1): ln|lambda| + 1/(2|lambda|).
inline double omega_logD(cplx lambda) {
    const double a = std::abs(lambda);
    if (!(a > 0.0) || !(a < 1.0))
        throw std::domain_error("omega_logD: |lambda| must lie in (0, 1)");
    return std::log(a) + 0.5 / a;
}

}  // namespace tgcert
