#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "tgcert/complex_matrix.hpp"
#include "tgcert/config.hpp"
#include "tgcert/hermitian_eigen.hpp"
#include "tgcert/matrix_functions.hpp"
#include "tgcert/schur.hpp"

namespace tgcert {

// One norm-vs-parameter curve from a brute-force sweep.
struct SweepCurve {
    struct Sample {
        double parameter = 0.0;
        double norm = 0.0;
    };
    std::string parameter_name;  // "t" or "n"
    std::vector<Sample> samples;
    Sample peak;
};

namespace detail {

inline void find_peak(SweepCurve& c) {
    c.peak = c.samples.front();
    for (const SweepCurve::Sample& s : c.samples)
        if (s.norm > c.peak.norm) c.peak = s;
}

// Norm sweep of e^{g s} on s = 0..s_max with steps uniform intervals, by an
// accumulated step product re-anchored periodically to a fresh exponential.
inline SweepCurve exp_curve(const Matrix& g, double s_max, std::int64_t steps,
                            const std::string& pname, const Tolerances& tol) {
    if (!(s_max > 0.0)) throw std::invalid_argument("sweep: horizon must be positive");
    if (steps < 2) throw std::invalid_argument("sweep: need at least 2 steps");
    const double ds = s_max / static_cast<double>(steps);
    const Matrix step = matrix_exponential(g, ds, tol);
    SweepCurve c;
    c.parameter_name = pname;
    c.samples.reserve(static_cast<std::size_t>(steps) + 1);
    Matrix acc = Matrix::identity(g.rows());
    for (std::int64_t j = 0; j <= steps; ++j) {
        const double s = ds * static_cast<double>(j);
        if (j > 0) {
            if (j % 256 == 0) acc = matrix_exponential(g, s, tol);  // re-anchor
            else acc = acc * step;
        }
        c.samples.push_back({s, spectral_norm(acc)});
    }
    detail::find_peak(c);
    return c;
}

}  // namespace detail

// Norms of e^{mt} on a uniform t-grid including t = 0.
inline SweepCurve sweep_exp(const Matrix& m, double t_max, std::int64_t steps,
                            const Tolerances& tol = {}) {
    if (!m.square()) throw std::invalid_argument("sweep_exp: matrix not square");
    return detail::exp_curve(m, t_max, steps, "t", tol);
}

// Norms of m^n for integer n = 0..n_max.
inline SweepCurve sweep_pow(const Matrix& m, std::int64_t n_max) {
    if (!m.square()) throw std::invalid_argument("sweep_pow: matrix not square");
    if (n_max < 1) throw std::invalid_argument("sweep_pow: n_max must be >= 1");
    SweepCurve c;
    c.parameter_name = "n";
    c.samples.reserve(static_cast<std::size_t>(n_max) + 1);
    Matrix acc = Matrix::identity(m.rows());
    for (std::int64_t n = 0; n <= n_max; ++n) {
        if (n > 0) acc = acc * m;
        c.samples.push_back({static_cast<double>(n), spectral_norm(acc)});
    }
    detail::find_peak(c);
    return c;
}

// Norms of e^{s ln(m)} on a uniform real s-grid: the continuous relaxation
// of the power sweep. Log domain/shape errors propagate.
inline SweepCurve sweep_pow_continuous(const Matrix& m, double s_max, std::int64_t steps,
                                       const Tolerances& tol = {}) {
    if (!m.square()) throw std::invalid_argument("sweep_pow_continuous: matrix not square");
    const Matrix logm = matrix_log_principal(m, tol);
    return detail::exp_curve(logm, s_max, steps, "n", tol);
}

// Forward difference (||e^{mh}|| - 1)/h; approximates the numerical
// abscissa as h -> 0+.
inline double derivative_at_zero(const Matrix& m, double h, const Tolerances& tol = {}) {
    if (!(h > 0.0) || h > 1e-4)
        throw std::domain_error("derivative_at_zero: h must lie in (0, 1e-4]");
    return (spectral_norm(matrix_exponential(m, h, tol)) - 1.0) / h;
}

// Rayleigh quotients x^H m x of seeded random complex unit vectors.
inline std::vector<cplx> rayleigh_samples(const Matrix& m, std::size_t count,
                                          std::uint64_t seed) {
    if (!m.square()) throw std::invalid_argument("rayleigh_samples: matrix not square");
    if (count < 1) throw std::invalid_argument("rayleigh_samples: count must be >= 1");
    const std::size_t n = m.rows();
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<cplx> out;
    out.reserve(count);
    for (std::size_t s = 0; s < count; ++s) {
        cvector x(n);
        double nrm2 = 0.0;
        do {
            nrm2 = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                x[i] = cplx{gauss(rng), gauss(rng)};
                nrm2 += std::norm(x[i]);
            }
        } while (nrm2 == 0.0);
        const double nrm = std::sqrt(nrm2);
        for (cplx& z : x) z /= nrm;
        out.push_back(vec_dot(x, mat_vec(m, x)));
    }
    return out;
}

// Default sweep horizon 50/|max Re lambda| for the exponential flow.
inline double default_t_max(const Matrix& m, const Tolerances& tol = {}) {
    const SchurForm sf = schur_decompose(m, tol);
    double mre = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m.rows(); ++i) mre = std::max(mre, sf.t(i, i).real());
    const double denom = std::max(std::abs(mre), 1e-3);
    return 50.0 / denom;
}

// Analogous horizon 50/|max ln|lambda|| for the (continuous) power flow.
inline double default_s_max(const Matrix& m, const Tolerances& tol = {}) {
    const SchurForm sf = schur_decompose(m, tol);
    double mln = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const double a = std::abs(sf.t(i, i));
        if (a > 0.0) mln = std::max(mln, std::log(a));
    }
    if (!std::isfinite(mln)) return 50.0;
    const double denom = std::max(std::abs(mln), 1e-3);
    return 50.0 / denom;
}

}  // namespace tgcert
