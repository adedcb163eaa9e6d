#pragma once

#include <cmath>
#include <stdexcept>

#include "tgcert/complex_matrix.hpp"

namespace tgcert {

// Canonical 2x2 upper-triangular matrix with eigenvalues lambda1, lambda2
// whose eigenvectors meet at angle theta; phi sets the phase of the
// off-diagonal coupling. A = [[l1, e^{i phi} |l2 - l1| cot(theta)], [0, l2]].
inline Matrix upper_pair_matrix(cplx lambda1, cplx lambda2, double theta, double phi = 0.0) {
    if (lambda1 == lambda2)
        throw std::domain_error("upper_pair_matrix: eigenvalues must be distinct");
    if (!(theta > 0.0) || theta > pi_const() / 2.0)
        throw std::domain_error("upper_pair_matrix: theta must lie in (0, pi/2]");
    const double a = std::abs(lambda2 - lambda1) / std::tan(theta);
    Matrix m(2, 2);
    m(0, 0) = lambda1;
    m(0, 1) = std::polar(1.0, phi) * a;
    m(1, 1) = lambda2;
    return m;
}

// Single Jordan block of the given size.
inline Matrix jordan_block(cplx lambda, std::size_t size) {
    if (size == 0) throw std::domain_error("jordan_block: size must be >= 1");
    Matrix m(size, size);
    for (std::size_t i = 0; i < size; ++i) {
        m(i, i) = lambda;
        if (i + 1 < size) m(i, i + 1) = 1.0;
    }
    return m;
}

}  // namespace tgcert
