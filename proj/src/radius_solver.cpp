#include "bessel_radii/radius_solver.hpp"

#include "bessel_radii/errors.hpp"

#include <cmath>
#include <string>

namespace bessel_radii {

namespace {

constexpr double pole_guard = 1e-9;
constexpr double bisection_width = 1e-12;
constexpr int newton_steps = 5;

} // namespace

void check_alpha(double alpha)
{
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw domain_error("order alpha must lie in [0, 1), got " + std::to_string(alpha));
}

RadiusResult radius_convexity(MapKind kind, double nu, double alpha, const ExpansionConfig& cfg)
{
    check_alpha(alpha);
    check_order_window(kind, nu);
    cfg.validate();

    const double pole = first_pole(kind, nu);
    auto g = [&](double r) { return lower_envelope(kind, nu, r, cfg) - alpha; };

    double lo = 0.0;
    double hi = pole * (1.0 - pole_guard);
    if (!(g(hi) < 0.0))
        throw convergence_error("radius_convexity: envelope does not cross alpha below the pole for " +
                                std::string(to_string(kind)) + ", nu=" + std::to_string(nu));
    int iterations = 0;
    while (hi - lo > bisection_width * pole) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) > 0.0 ? lo : hi) = mid;
        ++iterations;
    }

    double r = 0.5 * (lo + hi);
    double residual = g(r);
    for (int i = 0; i < newton_steps && residual != 0.0; ++i) {
        const double slope = lower_envelope_slope(kind, nu, r, cfg);
        if (!(slope < 0.0))
            break;
        const double next = r - residual / slope;
        if (!(next > lo && next < hi))
            break;
        const double step = next - r;
        const double next_residual = g(next);
        ++iterations;
        if (std::abs(next_residual) >= std::abs(residual))
            break;
        r = next;
        residual = next_residual;
        if (std::abs(step) <= 1e-15 * r)
            break;
    }
    return {kind, nu, alpha, r, {lo, hi}, residual, iterations, pole};
}

double radius_starlikeness(MapKind kind, double nu)
{
    switch (kind) {
    case MapKind::f:
        check_order_window(kind, nu);
        return bessel_derivative_zero(nu, 1);
    case MapKind::g:
        check_order_window(kind, nu);
        return dini_zero(1.0 - nu, nu, 1);
    default:
        throw domain_error("radius of starlikeness is provided for f and g only");
    }
}

} // namespace bessel_radii
