#include <doctest.h>

#include "bessel_radii/bessel_core.hpp"
#include "bessel_radii/errors.hpp"
#include "bessel_radii/normalized_maps.hpp"
#include "bessel_radii/zero_finder.hpp"

#include <cmath>
#include <vector>

using namespace bessel_radii;

namespace {

const MapKind all_kinds[] = {MapKind::f, MapKind::g, MapKind::h, MapKind::phi};

// Second derivative from the order recurrence, not from the ODE.
complex j_second(double nu, complex z)
{
    return 0.25 * (bessel_j(nu - 2.0, z) - 2.0 * bessel_j(nu, z) + bessel_j(nu + 2.0, z));
}

// The quotients written directly in J on the principal branch of sqrt z.
complex quotient_via_j(MapKind kind, double nu, complex z)
{
    switch (kind) {
    case MapKind::f: {
        const complex j = bessel_j(nu, z), jp = bessel_j_derivative(nu, z);
        return 1.0 + z * j_second(nu, z) / jp + (1.0 / nu - 1.0) * z * jp / j;
    }
    case MapKind::g: {
        const complex j0 = bessel_j(nu, z), j1 = bessel_j(nu + 1.0, z), j2 = bessel_j(nu + 2.0, z);
        return 1.0 + z * (z * j2 - 3.0 * j1) / (j0 - z * j1);
    }
    case MapKind::h: {
        const complex w = std::sqrt(z);
        const complex j = bessel_j(nu, w), jp = bessel_j_derivative(nu, w), jpp = j_second(nu, w);
        const complex dini_v = (2.0 - nu) * j + w * jp;
        const complex dini_d = (3.0 - nu) * jp + w * jpp;
        return 1.0 + 0.5 * (-nu + w * dini_d / dini_v);
    }
    case MapKind::phi: {
        const complex w = std::sqrt(z);
        return w * bessel_j(nu, w) / (2.0 * bessel_j(nu + 1.0, w)) - nu;
    }
    }
    return {};
}

double first_pole(MapKind kind, double nu)
{
    switch (kind) {
    case MapKind::f:
        return bessel_derivative_zero(nu, 1);
    case MapKind::g:
        return dini_zero(1.0 - nu, nu, 1);
    case MapKind::h: {
        const double b = dini_zero(2.0 - nu, nu, 1);
        return b * b;
    }
    case MapKind::phi: {
        const double j = bessel_zero(nu + 1.0, 1);
        return j * j;
    }
    }
    return 0.0;
}

} // namespace

TEST_CASE("kind names and windows")
{
    for (MapKind k : all_kinds)
        CHECK(parse_map_kind(to_string(k)) == k);
    CHECK(parse_map_kind("PHI") == MapKind::phi);
    CHECK_THROWS_AS(parse_map_kind("q"), domain_error);
    CHECK_THROWS_AS(convexity_quotient(MapKind::f, 0.0, 0.5), domain_error);
    CHECK_THROWS_AS(convexity_quotient(MapKind::g, -1.0, 0.5), domain_error);
    CHECK_THROWS_AS(convexity_quotient(MapKind::phi, -2.0, 0.5), domain_error);
    CHECK_NOTHROW(convexity_quotient(MapKind::phi, -1.9, 0.05));
}

TEST_CASE("known boundary values")
{
    for (MapKind k : all_kinds)
        CHECK(std::abs(convexity_quotient(k, 0.7, 0.0) - 1.0) <= 1e-15);
    // g_1 and f_1 sit exactly on the convexity boundary at z = 1
    CHECK(std::abs(convexity_quotient(MapKind::g, 1.0, 1.0)) <= 1e-13);
    CHECK(std::abs(convexity_quotient(MapKind::f, 1.0, 1.0)) <= 1e-13);
    // h_{5/4} has order exactly 3/4 at z = 1
    CHECK(std::abs(convexity_quotient(MapKind::h, 1.25, 1.0) - 0.75) <= 1e-13);
    CHECK(std::abs(convexity_quotient(MapKind::phi, -1.5623, 1.0)) <= 1e-3);
}

TEST_CASE("closed forms agree with the principal-branch J route")
{
    const std::vector<complex> dirs = {{1.0, 0.0}, {0.6, 0.8}, {-0.28, 0.96}, {0.0, -1.0}, {-0.8, -0.6}};
    for (MapKind k : all_kinds) {
        for (double nu : {-1.7, -0.6, 0.3, 1.0, 2.5, 6.0}) {
            if (!in_order_window(k, nu))
                continue;
            const double pole = first_pole(k, nu);
            for (double frac : {0.1, 0.5, 0.9}) {
                for (complex d : dirs) {
                    const complex z = frac * pole * d;
                    const complex a = convexity_quotient(k, nu, z);
                    const complex b = quotient_via_j(k, nu, z);
                    INFO("kind=" << to_string(k) << " nu=" << nu << " z=" << z.real() << "," << z.imag());
                    CHECK(std::abs(a - b) <= 1e-10 * (1.0 + std::abs(a)));
                }
            }
        }
    }
}

TEST_CASE("real coefficients: conjugate symmetry and small-z behaviour")
{
    for (MapKind k : all_kinds) {
        for (double nu : {-1.5, -0.5, 0.5, 3.0}) {
            if (!in_order_window(k, nu))
                continue;
            const complex z{0.31, -0.22};
            CHECK(std::abs(convexity_quotient(k, nu, std::conj(z)) - std::conj(convexity_quotient(k, nu, z))) <=
                  1e-14);
            for (double r : {1e-4, 1e-5, 1e-6}) {
                const complex q = convexity_quotient(k, nu, complex{0.0, r});
                CHECK(std::abs(q - 1.0) <= 10.0 * r);
            }
        }
    }
}

TEST_CASE("Bessel equation at x = 1")
{
    for (double nu = -0.9; nu <= 9.0; nu += 0.45) {
        const double j = bessel_j(nu, 1.0).real();
        const double jp = bessel_j_derivative(nu, 1.0).real();
        const double jpp = j_second(nu, 1.0).real();
        CHECK(std::abs(jpp + jp + (1.0 - nu * nu) * j) <= 1e-11);
    }
}

TEST_CASE("F quotient at 1 reduces to the cubic threshold form")
{
    for (double nu = 0.4; nu <= 8.0; nu += 0.3) {
        const double j = bessel_j_real(nu, 1.0);
        const double jp = bessel_j_derivative_real(nu, 1.0);
        const double q = convexity_quotient(MapKind::f, nu, 1.0).real();
        const double jpp = j_second(nu, 1.0).real();
        CHECK(std::abs(q - (1.0 + jpp / jp + (1.0 / nu - 1.0) * jp / j)) <= 1e-11 * (1.0 + std::abs(q)));
        for (double alpha : {0.0, 0.3, 0.8}) {
            const double cubic = nu * (nu * nu - 1.0) * j * j + (1.0 - nu) * jp * jp - alpha * nu * j * jp;
            CHECK(std::abs((q - alpha) * nu * j * jp - cubic) <= 1e-12 * (1.0 + std::abs(cubic)));
        }
    }
}

TEST_CASE("phi identity holds")
{
    CHECK(phi_quotient_identity_check(0.0, 1.0) <= 1e-11);
    CHECK(phi_quotient_identity_check(-1.5, 0.25) <= 1e-11);
    CHECK(phi_quotient_identity_check(2.0, 4.0) <= 1e-11);
    CHECK(phi_quotient_identity_check(1.0, 0.0) == 0.0);
    for (double nu = -1.9; nu <= 6.0; nu += 0.4) {
        const double pole = first_pole(MapKind::phi, nu);
        for (complex d : {complex{1.0, 0.0}, complex{0.0, 1.0}, complex{-0.6, 0.8}})
            CHECK(phi_quotient_identity_check(nu, 0.8 * pole * d) <= 1e-11);
    }
}

TEST_CASE("quotients blow up at the first pole")
{
    for (MapKind k : all_kinds) {
        const double pole = first_pole(k, 1.5);
        CHECK(std::abs(convexity_quotient(k, 1.5, pole * (1.0 - 1e-10))) > 1e6);
        CHECK(std::abs(convexity_quotient(k, 1.5, pole * (1.0 - 1e-2))) < 1e4);
    }
}
