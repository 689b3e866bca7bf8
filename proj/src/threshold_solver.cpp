#include "bessel_radii/threshold_solver.hpp"

#include "bessel_radii/bessel_core.hpp"
#include "bessel_radii/errors.hpp"
#include "bessel_radii/radius_solver.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace bessel_radii {

namespace {

constexpr double window_top = 10.0;
constexpr double window_offset = 1e-6;
constexpr int scan_cells = 400;
constexpr double root_xtol = 1e-15;

NamedConstant solve(auto&& f, double lo, double hi)
{
    const double x = bisect(f, lo, hi, root_xtol);
    return {x, std::abs(f(x))};
}

SpecialConstants compute_constants()
{
    SpecialConstants c{};
    c.nu_star = solve([](double nu) { return bessel_j_derivative_real(nu, 1.0); }, 0.0, 1.0);
    c.nu_star_phi = solve([](double nu) { return bessel_j_real(nu + 1.0, 1.0); }, -2.0 + 1e-9, -1.0);
    c.nu_two = solve(
        [](double nu) {
            const double j = bessel_j_real(nu, 1.0);
            const double jp = bessel_j_derivative_real(nu, 1.0);
            return nu * (nu + 1.0) * j * j - jp * jp;
        },
        0.0, c.nu_star.value);
    return c;
}

} // namespace

double threshold_equation(MapKind kind, double alpha, double nu)
{
    switch (kind) {
    case MapKind::f: {
        const double j = bessel_j_real(nu, 1.0);
        const double jp = bessel_j_derivative_real(nu, 1.0);
        if (alpha == 0.0)
            return (nu - 1.0) * (nu * (nu + 1.0) * j * j - jp * jp);
        return nu * (nu * nu - 1.0) * j * j + (1.0 - nu) * jp * jp - alpha * nu * j * jp;
    }
    case MapKind::g:
        return (2.0 * nu + alpha - 2.0) * bessel_j_real(nu + 1.0, 1.0) - alpha * bessel_j_real(nu, 1.0);
    case MapKind::h:
        return (2.0 * nu + 2.0 * alpha - 4.0) * bessel_j_real(nu + 1.0, 1.0) -
               (4.0 * alpha - 3.0) * bessel_j_real(nu, 1.0);
    case MapKind::phi:
        return (2.0 * nu + 2.0 * alpha) * bessel_j_real(nu + 1.0, 1.0) - bessel_j_real(nu, 1.0);
    }
    return 0.0;
}

Bracket threshold_window(MapKind kind)
{
    switch (kind) {
    case MapKind::f:
        return {special_constants().nu_star.value + window_offset, window_top};
    case MapKind::g:
    case MapKind::h:
        return {-0.99, window_top};
    case MapKind::phi:
        return {special_constants().nu_star_phi.value + window_offset, window_top};
    }
    return {};
}

ThresholdResult critical_order(MapKind kind, double alpha)
{
    check_alpha(alpha);
    const Bracket window = threshold_window(kind);
    auto eq = [&](double nu) { return threshold_equation(kind, alpha, nu); };
    const auto cells = scan_sign_changes(eq, window.lo, window.hi, scan_cells);
    if (cells.empty())
        throw convergence_error("critical_order: no root of the " + std::string(to_string(kind)) +
                                " equation in its window for alpha=" + std::to_string(alpha));
    // past the largest root the map stays convex of order alpha
    const Bracket cell = cells.back();
    const double nu = cell.lo == cell.hi ? cell.lo : bisect(eq, cell.lo, cell.hi, root_xtol);
    if (kind == MapKind::g && alpha == 0.0 && std::abs(bessel_j_real(nu + 1.0, 1.0)) < 1e-3)
        throw convergence_error("critical_order: J_{nu+1}(1) vanishes at the G root");
    return {kind, alpha, nu, std::abs(eq(nu)), window};
}

const SpecialConstants& special_constants()
{
    static const SpecialConstants constants = compute_constants();
    return constants;
}

double auxiliary_f(double x)
{
    if (!(x > -1.0))
        throw domain_error("auxiliary_f requires x > -1");
    const double a = x + 1.0;
    return -std::numbers::ln2 - std::log(a) + 1.0 / (2.0 * a) + (3.0 * x + 5.0) / (4.0 * a * a * (x + 2.0) * (x + 3.0));
}

ConjectureEvidence conjecture_disproof(double nu_probe)
{
    if (!(nu_probe > -2.0) || !std::isfinite(nu_probe))
        throw domain_error("conjecture probe must exceed -2, got " + std::to_string(nu_probe));
    ConjectureEvidence e{};
    e.probe = nu_probe;
    e.q_at_one = convexity_quotient(MapKind::phi, nu_probe, 1.0).real();
    e.scan = boundary_min_real(MapKind::phi, nu_probe, 1.0);
    e.convex = e.scan.enclosed_poles == 0 && e.scan.min_real >= 0.0;
    e.threshold = critical_order(MapKind::phi, 0.0).nu_critical;
    e.in_disproof_window = nu_probe > -1.875 && nu_probe < e.threshold;
    return e;
}

} // namespace bessel_radii
