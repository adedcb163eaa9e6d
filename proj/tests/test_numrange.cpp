#include "doctest.h"

#include <random>

#include "testutil.hpp"
#include "tgcert/tgcert.hpp"

using namespace tgcert;

TEST_CASE("normal 2x2 degenerates to the focal segment") {
    Matrix m(2, 2);
    m(0, 0) = cplx{-1.0, 0.5};
    m(1, 1) = cplx{-2.0, -0.5};
    const EllipseNR e = ellipse_2x2(m);
    CHECK(e.minor_axis < 1e-12);
    CHECK(e.major_axis == doctest::Approx(std::abs(m(0, 0) - m(1, 1))).epsilon(1e-12));
    CHECK(std::abs(0.5 * (e.foci[0] + e.foci[1]) - e.center) < 1e-12);
    CHECK(testutil::spectrum_distance({e.foci[0], e.foci[1]}, {m(0, 0), m(1, 1)}) < 1e-12);
}

TEST_CASE("pair matrix: closed-form axis values and focal identity") {
    std::mt19937_64 rng(444);
    std::uniform_real_distribution<double> uth(0.1, pi_const() / 2.0);
    std::uniform_real_distribution<double> uph(0.0, 2.0 * pi_const());
    std::uniform_real_distribution<double> ure(-1.5, -0.1);
    std::uniform_real_distribution<double> uim(-1.0, 1.0);
    for (int trial = 0; trial < 300; ++trial) {
        const cplx l1{ure(rng), uim(rng)};
        const cplx l2{ure(rng), uim(rng)};
        if (std::abs(l1 - l2) < 0.05) continue;
        const double theta = uth(rng);
        const Matrix a = upper_pair_matrix(l1, l2, theta, uph(rng));
        const EllipseNR e = ellipse_2x2(a);
        const double dl = std::abs(l1 - l2);
        // doubled general-form axes equal the closed-form csc/cot values
        CHECK(std::abs(2.0 * e.major_axis - 2.0 * dl / std::sin(theta)) < 1e-10);
        CHECK(std::abs(2.0 * e.minor_axis - 2.0 * dl / std::tan(theta)) < 1e-10);
        // focal identity on the geometric semi-axes
        const double a2 = 0.25 * e.major_axis * e.major_axis;
        const double b2 = 0.25 * e.minor_axis * e.minor_axis;
        const double c2 = std::norm(e.foci[0] - e.center);
        CHECK(std::abs(a2 - b2 - c2) < 1e-9);
        // eccentricity diagnostic: minor/major = cos(theta)
        CHECK(std::abs(e.minor_axis / e.major_axis - std::cos(theta)) < 1e-10);
        // shape matrix is symmetric with eigenvalues equal to squared axes
        CHECK(e.shape_s[0][1] == e.shape_s[1][0]);
    }
}

TEST_CASE("Jordan 2x2 gives the radius-1/2 circle") {
    const Matrix d = jordan_block(cplx{-0.4, 0.2}, 2);
    const EllipseNR e = ellipse_2x2(d);
    CHECK(e.major_axis == doctest::Approx(e.minor_axis).epsilon(1e-12));
    CHECK(0.5 * e.major_axis == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(e.center - cplx{-0.4, 0.2}) < 1e-15);
}

TEST_CASE("numerical_abscissa canonical values") {
    Matrix dg(2, 2);
    dg(0, 0) = -1.0;
    dg(1, 1) = -3.0;
    CHECK(numerical_abscissa(dg) == doctest::Approx(-1.0).epsilon(1e-13));

    const Matrix d = jordan_block(cplx{-0.4, 0.2}, 2);
    CHECK(numerical_abscissa(d) == doctest::Approx(0.1).epsilon(1e-12));

    const Matrix a = testutil::showcase_matrix();
    const double om = numerical_abscissa(a);
    CHECK(om > 0.0);
    CHECK(std::abs(om - omega_A(cplx{-0.1, 0.9}, cplx{-0.4, -0.5}, 2.0 * pi_const() / 7.0)) <
          1e-10);
}

TEST_CASE("omega_A closed form matches the Hermitian-part eigenvalue") {
    std::mt19937_64 rng(555);
    std::uniform_real_distribution<double> uth(0.05, pi_const() / 2.0);
    std::uniform_real_distribution<double> uph(0.0, 2.0 * pi_const());
    std::uniform_real_distribution<double> ure(-1.5, -0.05);
    std::uniform_real_distribution<double> uim(-1.0, 1.0);
    for (int trial = 0; trial < 1000; ++trial) {
        const cplx l1{ure(rng), uim(rng)};
        const cplx l2{ure(rng), uim(rng)};
        if (std::abs(l1 - l2) < 0.02) continue;
        const double theta = uth(rng);
        const double phi = uph(rng);
        const double closed = omega_A(l1, l2, theta);
        const double direct = numerical_abscissa(upper_pair_matrix(l1, l2, theta, phi));
        CHECK(std::abs(closed - direct) < 1e-9);
    }
}

TEST_CASE("omega_A edge cases and domain errors") {
    CHECK(omega_A(cplx{-1, 0}, cplx{-3, 0}, pi_const() / 2.0) == doctest::Approx(-1.0).epsilon(1e-13));
    // monotone divergence as theta shrinks
    const cplx l1{-1.0, 0.0}, l2{-1.0, 2.0};
    double prev = omega_A(l1, l2, 0.8);
    for (double th : {0.4, 0.2, 0.1, 0.05}) {
        const double cur = omega_A(l1, l2, th);
        CHECK(cur > prev);
        prev = cur;
    }
    CHECK(omega_A(l1, l2, 0.01) > 100.0 * omega_A(l1, l2, pi_const() / 2.0) + 1.0);
    CHECK_THROWS_AS(omega_A(l1, l2, 0.0), std::domain_error);
    CHECK_THROWS_AS(omega_A(l1, l2, 1.6), std::domain_error);
    CHECK_THROWS_AS(omega_A(l1, l1, 0.5), std::domain_error);
}

TEST_CASE("jordan_disk radii and omega") {
    CHECK(jordan_disk(cplx{0, 0}, 2).radius == doctest::Approx(0.5).epsilon(1e-14));
    const DiskNR d3 = jordan_disk(cplx{-0.5, 0.0}, 3);
    CHECK(d3.radius == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-14));
    CHECK(d3.omega() == doctest::Approx(0.20711).epsilon(1e-4));
    double prev = 0.0;
    for (std::size_t size = 2; size <= 40; ++size) {
        const double r = jordan_disk(cplx{0, 0}, size).radius;
        CHECK(r > prev);
        CHECK(r < 1.0);
        prev = r;
    }
    CHECK_THROWS_AS(jordan_disk(cplx{0, 0}, 1), std::domain_error);
}

TEST_CASE("nr_boundary_sample canonical shapes") {
    // scalar multiple of the identity: a single point
    const Matrix eye2 = Matrix::identity(2);
    for (cplx p : nr_boundary_sample(eye2, 8)) CHECK(std::abs(p - cplx{1, 0}) < 1e-12);

    // 2x2 Jordan at zero: circle of radius 1/2
    const Matrix j = jordan_block(cplx{0, 0}, 2);
    for (cplx p : nr_boundary_sample(j, 90)) CHECK(std::abs(std::abs(p) - 0.5) < 1e-8);

    // pair matrix: max Re over boundary equals omega
    const Matrix a = testutil::showcase_matrix();
    double max_re = -1e300;
    for (cplx p : nr_boundary_sample(a, 360)) max_re = std::max(max_re, p.real());
    CHECK(std::abs(max_re - numerical_abscissa(a)) < 1e-6);
}

TEST_CASE("rayleigh containment in the analytic ellipse") {
    std::mt19937_64 rng(666);
    for (int trial = 0; trial < 3; ++trial) {
        const Matrix m = testutil::random_matrix(rng, 2);
        const EllipseNR e = ellipse_2x2(m);
        const std::vector<cplx> samples = rayleigh_samples(m, 10000, 42 + trial);
        for (cplx z : samples) CHECK(ellipse_violation(e, z) <= 1e-9);
    }
}

TEST_CASE("boundary points support the sampled Rayleigh quotients") {
    std::mt19937_64 rng(777);
    const Matrix m = testutil::random_matrix(rng, 4);
    const std::size_t k = 72;
    const std::vector<cplx> pts = nr_boundary_sample(m, k);
    const std::vector<cplx> samples = rayleigh_samples(m, 2000, 9);
    for (std::size_t j = 0; j < k; ++j) {
        const double phi = 2.0 * pi_const() * static_cast<double>(j) / static_cast<double>(k);
        const cplx rot = std::polar(1.0, -phi);
        const double support = (rot * pts[j]).real();
        for (cplx z : samples) CHECK((rot * z).real() <= support + 1e-9);
    }
}

TEST_CASE("omega_logD values and domain") {
    CHECK(omega_logD(cplx{0.5, 0.0}) == doctest::Approx(std::log(0.5) + 1.0).epsilon(1e-12));
    CHECK(omega_logD(cplx{0.99, 0.0}) > 0.0);
    CHECK(omega_logD(cplx{0.01, 0.0}) > 0.0);
    CHECK_THROWS_AS(omega_logD(cplx{1.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(omega_logD(cplx{0.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(omega_logD(cplx{1.5, 0.0}), std::domain_error);
}
