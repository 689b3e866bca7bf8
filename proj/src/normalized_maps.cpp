#include "bessel_radii/normalized_maps.hpp"

#include "bessel_radii/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace bessel_radii {

namespace {

constexpr double singular_denominator = 1e-300;

// Numerators cancel against denominators near the convexity boundary, so the
// entire parts are summed to extended-precision tolerance.
complex entire(double nu, complex t)
{
    static const SeriesConfig cfg{1e-18, 400, 100.0};
    return bessel_j_entire(nu, t, cfg);
}

QuotientParts parts_f(double nu, complex z)
{
    const complex t = z * z / 4.0;
    const complex a0 = entire(nu, t);
    const complex a1 = entire(nu + 1.0, t);
    // z J'/J = d / a0
    const complex d = nu * a0 - (z * z / 2.0) * a1;
    const complex num = (nu * nu - z * z) * a0 * a0 + (1.0 / nu - 1.0) * d * d - a0 * d;
    return {num, a0 * d};
}

QuotientParts parts_g(double nu, complex z)
{
    const complex t = z * z / 4.0;
    const complex half_sq = z * z / 2.0;
    const complex a0 = entire(nu, t);
    const complex a1 = entire(nu + 1.0, t);
    const complex a2 = entire(nu + 2.0, t);
    return {half_sq * (half_sq * a2 - 3.0 * a1), a0 - half_sq * a1};
}

QuotientParts parts_h(double nu, complex z)
{
    const complex t = z / 4.0;
    const complex a0 = entire(nu, t);
    const complex a1 = entire(nu + 1.0, t);
    const complex a2 = entire(nu + 2.0, t);
    return {(z / 4.0) * ((z / 2.0) * a2 - 4.0 * a1), 2.0 * a0 - (z / 2.0) * a1};
}

QuotientParts parts_phi(double nu, complex z)
{
    const complex t = z / 4.0;
    const complex a1 = entire(nu + 1.0, t);
    const complex a2 = entire(nu + 2.0, t);
    return {-(z / 4.0) * a2, a1};
}

} // namespace

std::string_view to_string(MapKind kind)
{
    switch (kind) {
    case MapKind::f:
        return "f";
    case MapKind::g:
        return "g";
    case MapKind::h:
        return "h";
    case MapKind::phi:
        return "phi";
    }
    return "?";
}

MapKind parse_map_kind(std::string_view name)
{
    std::string s(name);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "f")
        return MapKind::f;
    if (s == "g")
        return MapKind::g;
    if (s == "h")
        return MapKind::h;
    if (s == "phi")
        return MapKind::phi;
    throw domain_error("unknown map kind '" + std::string(name) + "' (expected f, g, h or phi)");
}

bool in_order_window(MapKind kind, double nu)
{
    if (!std::isfinite(nu))
        return false;
    switch (kind) {
    case MapKind::f:
        return nu > 0.0;
    case MapKind::g:
    case MapKind::h:
        return nu > -1.0;
    case MapKind::phi:
        return nu > -2.0;
    }
    return false;
}

void check_order_window(MapKind kind, double nu)
{
    if (in_order_window(kind, nu))
        return;
    static constexpr const char* window[] = {"nu > 0", "nu > -1", "nu > -1", "nu > -2"};
    throw domain_error("map " + std::string(to_string(kind)) + " requires " + window[static_cast<int>(kind)] +
                       ", got nu=" + std::to_string(nu));
}

QuotientParts quotient_parts(MapKind kind, double nu, complex z)
{
    check_order_window(kind, nu);
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw domain_error("convexity quotient: argument must be finite");
    switch (kind) {
    case MapKind::f:
        return parts_f(nu, z);
    case MapKind::g:
        return parts_g(nu, z);
    case MapKind::h:
        return parts_h(nu, z);
    case MapKind::phi:
        return parts_phi(nu, z);
    }
    return {};
}

complex convexity_quotient(MapKind kind, double nu, complex z)
{
    const QuotientParts p = quotient_parts(kind, nu, z);
    if (std::abs(p.denominator) < singular_denominator)
        throw singularity_error("convexity quotient of " + std::string(to_string(kind)) +
                                " is singular near z=(" + std::to_string(z.real()) + "," +
                                std::to_string(z.imag()) + ")");
    return 1.0 + p.numerator / p.denominator;
}

double phi_quotient_identity_check(double nu, complex z)
{
    const complex q = convexity_quotient(MapKind::phi, nu, z);
    complex alt{1.0, 0.0};
    if (z != complex{0.0, 0.0}) {
        const complex w = std::sqrt(z);
        const complex j = bessel_j(nu + 1.0, w);
        if (std::abs(j) < singular_denominator)
            throw singularity_error("phi identity check: J_{nu+1}(sqrt z) vanishes");
        alt = 0.5 * (w * bessel_j_derivative(nu + 1.0, w) / j - (nu - 1.0));
    }
    return std::abs(q - alt);
}

} // namespace bessel_radii
