#include <doctest.h>

#include "bessel_radii/errors.hpp"
#include "bessel_radii/radius_solver.hpp"

#include <cmath>

using namespace bessel_radii;

namespace {

const MapKind all_kinds[] = {MapKind::f, MapKind::g, MapKind::h, MapKind::phi};
const double sample_orders[] = {-1.5, -0.5, 0.3, 1.0, 2.5, 6.0};

} // namespace

TEST_CASE("anchor radii")
{
    CHECK(std::abs(radius_convexity(MapKind::phi, -1.5623, 0.0).radius - 1.0) <= 2e-3);
    CHECK(std::abs(radius_convexity(MapKind::h, 1.25, 0.75).radius - 1.0) <= 1e-6);
    CHECK(std::abs(radius_convexity(MapKind::g, 1.0, 0.0).radius - 1.0) <= 1e-6);
    CHECK(std::abs(radius_convexity(MapKind::f, 1.0, 0.0).radius - 1.0) <= 1e-6);
    double prev = INFINITY;
    for (double alpha : {0.9, 0.99, 0.999, 0.9999}) {
        const double r = radius_convexity(MapKind::g, 0.5, alpha).radius;
        CHECK(r < prev);
        prev = r;
    }
    CHECK(prev < 0.02);
}

TEST_CASE("results satisfy the envelope equation below the pole")
{
    for (MapKind k : all_kinds) {
        for (double nu : sample_orders) {
            if (!in_order_window(k, nu))
                continue;
            for (double alpha : {0.0, 0.4, 0.85}) {
                const RadiusResult res = radius_convexity(k, nu, alpha);
                INFO("kind=" << to_string(k) << " nu=" << nu << " alpha=" << alpha);
                CHECK(std::abs(res.residual) <= 1e-10);
                CHECK(res.radius < res.pole);
                CHECK(res.bracket.lo <= res.radius);
                CHECK(res.radius <= res.bracket.hi);
                CHECK(lower_envelope(k, nu, res.radius - 1e-6) > alpha);
                CHECK(lower_envelope(k, nu, res.radius + 1e-6) < alpha);
                for (int i = 1; i <= 100; ++i)
                    CHECK(lower_envelope(k, nu, res.radius * i / 101.0) > alpha);
            }
        }
    }
}

TEST_CASE("radius decreases as the order of convexity increases")
{
    for (MapKind k : all_kinds) {
        const double nu = 0.75;
        double prev = INFINITY;
        for (double alpha = 0.0; alpha < 0.99; alpha += 0.1) {
            const double r = radius_convexity(k, nu, alpha).radius;
            CHECK(r < prev);
            prev = r;
        }
    }
}

TEST_CASE("starlikeness radii")
{
    CHECK(radius_starlikeness(MapKind::f, 1.0) == doctest::Approx(1.8411837813406593).epsilon(1e-12));
    const double a0 = radius_starlikeness(MapKind::g, 0.0);
    CHECK(a0 > 1.0);
    CHECK(a0 < 2.404825557695773);
    CHECK(std::abs(radius_starlikeness(MapKind::f, 0.3901) - 1.0) <= 2e-3);
    for (double nu = 0.1; nu <= 6.0; nu += 0.4) {
        CHECK(radius_convexity(MapKind::f, nu, 0.0).radius < radius_starlikeness(MapKind::f, nu));
        CHECK(radius_convexity(MapKind::g, nu, 0.0).radius < radius_starlikeness(MapKind::g, nu));
    }
    CHECK_THROWS_AS(radius_starlikeness(MapKind::h, 1.0), domain_error);
    CHECK_THROWS_AS(radius_starlikeness(MapKind::f, 0.0), domain_error);
}

TEST_CASE("invalid inputs")
{
    CHECK_THROWS_AS(radius_convexity(MapKind::g, 1.0, 1.0), domain_error);
    CHECK_THROWS_AS(radius_convexity(MapKind::g, 1.0, -0.1), domain_error);
    CHECK_THROWS_AS(radius_convexity(MapKind::f, -0.5, 0.0), domain_error);
}
