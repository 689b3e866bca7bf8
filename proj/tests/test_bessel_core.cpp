#include <doctest.h>

#include "bessel_radii/bessel_core.hpp"
#include "bessel_radii/errors.hpp"
#include "bessel_radii/quadrature.hpp"

#include <boost/math/special_functions/bessel.hpp>

#include <cmath>
#include <numbers>

using namespace bessel_radii;
using std::numbers::pi;

namespace {

// Plain double partial sum of J_0, sixty terms. Good to ~1e-15 for x <= 4.
double naive_j0(double x)
{
    double term = 1.0, sum = 1.0;
    const double t = x * x / 4.0;
    for (int n = 1; n < 60; ++n) {
        term *= -t / (double(n) * double(n));
        sum += term;
    }
    return sum;
}

double j_half(double x) { return std::sqrt(2.0 / (pi * x)) * std::sin(x); }
double j_minus_half(double x) { return std::sqrt(2.0 / (pi * x)) * std::cos(x); }

} // namespace

TEST_CASE("gamma matches tgamma and its special values")
{
    CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(pi)).epsilon(1e-14));
    CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-14));
    for (double x = -4.95; x < 60.0; x += 0.173) {
        const double ref = std::tgamma(x);
        CHECK(std::abs(gamma_fn(x) - ref) <= 1e-13 * std::abs(ref));
    }
    CHECK_THROWS_AS(gamma_fn(0.0), domain_error);
    CHECK_THROWS_AS(gamma_fn(-3.0), domain_error);
    CHECK(recip_gamma(-2.0) == 0.0);
}

TEST_CASE("first zero of J0 against a bisected naive series")
{
    double lo = 2.0, hi = 3.0;
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        (naive_j0(lo) * naive_j0(mid) <= 0.0 ? hi : lo) = mid;
    }
    const double root = 0.5 * (lo + hi);
    CHECK(std::abs(root - 2.404825557695773) <= 1e-10);
    CHECK(std::abs(bessel_j(0.0, root)) <= 1e-10);
    CHECK(std::abs(bessel_j_real(0.0, root)) <= 1e-10);
}

TEST_CASE("half-integer orders reduce to elementary functions")
{
    CHECK(std::abs(bessel_j(0.5, pi)) <= 1e-15);
    for (double x = 0.1; x < 30.0; x += 0.37) {
        // the complex path has no fallback; cancellation grows like e^x
        if (x < 15.0) {
            CHECK(std::abs(bessel_j(0.5, x).real() - j_half(x)) <= 1e-13);
            CHECK(std::abs(bessel_j(-0.5, x).real() - j_minus_half(x)) <= 1e-13);
        }
        CHECK(std::abs(bessel_j_real(0.5, x) - j_half(x)) <= 1e-14);
    }
    const complex z{1.3, 2.1};
    const complex ref = std::sqrt(2.0 / (pi * z)) * std::sin(z);
    CHECK(std::abs(bessel_j(0.5, z) - ref) <= 1e-13 * std::abs(ref));
}

TEST_CASE("values at the origin")
{
    CHECK(bessel_j(0.0, 0.0) == complex{1.0, 0.0});
    CHECK(bessel_j(1.0, 0.0) == complex{0.0, 0.0});
    CHECK(bessel_j(-3.0, 0.0) == complex{0.0, 0.0});
    CHECK_THROWS_AS(bessel_j(-0.5, 0.0), domain_error);
    CHECK(bessel_j_derivative(2.0, 0.0) == complex{0.0, 0.0});
    CHECK(bessel_j_derivative(1.0, 0.0).real() == doctest::Approx(0.5));
    CHECK_THROWS_AS(bessel_j_derivative(0.5, 0.0), domain_error);
}

TEST_CASE("principal branch and conjugate symmetry")
{
    for (double x : {0.7, 2.0, 5.5}) {
        const complex left = bessel_j(0.5, complex{-x, 0.0});
        const complex right = bessel_j(0.5, x);
        CHECK(std::abs(left - complex{0.0, 1.0} * right) <= 1e-14);
    }
    const complex z{2.3, -1.7};
    for (double nu : {-1.3, 0.25, 3.7}) {
        CHECK(std::abs(bessel_j(nu, std::conj(z)) - std::conj(bessel_j(nu, z))) <= 1e-13);
    }
}

TEST_CASE("negative integer order reflection")
{
    for (double x : {0.5, 3.0, 11.0}) {
        CHECK(std::abs(bessel_j(-1.0, x) + bessel_j(1.0, x)) <= 1e-15);
        CHECK(std::abs(bessel_j(-2.0, x) - bessel_j(2.0, x)) <= 1e-15);
    }
}

TEST_CASE("three-term recurrence closes on the series path")
{
    for (double nu = -1.9; nu <= 8.0; nu += 0.45) {
        for (double x = 0.25; x <= 20.0; x += 0.85) {
            const complex jm = bessel_j(nu - 1.0, x);
            const complex j0 = bessel_j(nu, x);
            const complex jp = bessel_j(nu + 1.0, x);
            const double scale = std::abs(jm) + std::abs(jp) + std::abs(2.0 * nu / x * j0) + 1e-300;
            CHECK(std::abs(jm + jp - (2.0 * nu / x) * j0) <= 1e-10 * scale);
        }
    }
}

TEST_CASE("derivative agrees with the symmetric recurrence")
{
    CHECK(std::abs(bessel_j_derivative(0.0, 1.7) + bessel_j(1.0, 1.7)) <= 1e-15);
    for (double nu = -0.8; nu <= 6.0; nu += 0.7) {
        for (complex z : {complex{0.9, 0.0}, complex{3.1, 0.4}, complex{-2.0, 1.5}}) {
            const complex d = bessel_j_derivative(nu, z);
            const complex ref = 0.5 * (bessel_j(nu - 1.0, z) - bessel_j(nu + 1.0, z));
            CHECK(std::abs(d - ref) <= 1e-12 * (std::abs(ref) + 1.0));
        }
    }
    CHECK(std::abs(bessel_j_derivative(0.3901, 1.0)) <= 1e-3);
}

TEST_CASE("real path agrees with Boost and the complex series")
{
    for (double nu : {-1.7, -0.3, 0.0, 0.39, 2.5, 9.0, 30.0}) {
        for (double x = 0.05; x < 80.0; x += 1.93) {
            const double ref = boost::math::cyl_bessel_j(nu, x);
            CHECK(std::abs(bessel_j_real(nu, x) - ref) <= 1e-13 * (std::abs(ref) + 1e-3));
            if (x < 20.0)
                CHECK(std::abs(bessel_j(nu, x).real() - bessel_j_real(nu, x)) <= 1e-11 * (std::abs(ref) + 1e-3));
        }
    }
}

TEST_CASE("entire part relates to J")
{
    const complex z{1.4, 0.6};
    for (double nu : {-1.5, 0.2, 2.0}) {
        const complex lhs = bessel_j(nu, z);
        const complex rhs = std::exp(nu * std::log(z / 2.0)) * bessel_j_entire(nu, z * z / 4.0);
        CHECK(std::abs(lhs - rhs) <= 1e-14 * std::abs(lhs));
    }
    // J_{-1}: entire part starts at n = 1
    CHECK(std::abs(bessel_j_entire(-1.0, 0.3) - (-0.3 * bessel_j_entire(1.0, 0.3))) <= 1e-15);
}

TEST_CASE("Poisson integral matches the series")
{
    CHECK(bessel_j_poisson(0.5, pi / 2.0) == doctest::Approx(2.0 / pi).epsilon(1e-13));
    CHECK(bessel_j_poisson(1.0, 0.0) == 0.0);
    for (double nu = -0.4; nu <= 10.0; nu += 0.8) {
        for (double x = 0.5; x <= 15.0; x += 1.5) {
            const double s = bessel_j_real(nu, x);
            CHECK(std::abs(bessel_j_poisson(nu, x) - s) <= 1e-11);
        }
    }
    CHECK_THROWS_AS(bessel_j_poisson(-0.5, 1.0), domain_error);
    CHECK_THROWS_AS(bessel_j_poisson(1.0, 1.0, 16), domain_error);
}

TEST_CASE("Gegenbauer rule integrates polynomials")
{
    const GaussRule r = gauss_gegenbauer(0.5, 10);  // Legendre weight
    double sum_w = 0.0, m2 = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) {
        sum_w += r.weights[i];
        m2 += r.weights[i] * r.nodes[i] * r.nodes[i];
    }
    CHECK(sum_w == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(m2 == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK_THROWS_AS(gauss_gegenbauer(-0.5, 10), domain_error);
}

TEST_CASE("J_{nu+1}(1) stays positive above the critical order")
{
    for (double nu = -1.77; nu < 10.0; nu += 0.013)
        CHECK(bessel_j_real(nu + 1.0, 1.0) > 0.0);
}

TEST_CASE("Rayleigh sums")
{
    CHECK(rayleigh_sum(0.0, 4) == doctest::Approx(1.0 / 32.0));
    CHECK(rayleigh_sum(0.5, 4) == doctest::Approx(1.0 / std::pow(pi, 4) * pi * pi * pi * pi / 90.0));
    CHECK_THROWS_AS(rayleigh_sum(-1.0, 4), domain_error);
    CHECK_THROWS_AS(rayleigh_sum(0.0, 3), domain_error);
}

TEST_CASE("series configuration is validated")
{
    SeriesConfig cfg;
    cfg.max_terms = 10;
    CHECK_THROWS_AS(bessel_j(0.0, 1.0, cfg), domain_error);
    SeriesConfig far;
    CHECK_THROWS_AS(bessel_j(0.0, complex{150.0, 0.0}, far), domain_error);
}
