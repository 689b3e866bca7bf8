#include "bessel_radii/disk_verifier.hpp"

#include "bessel_radii/compensated.hpp"
#include "bessel_radii/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace bessel_radii {

BoundaryScan boundary_min_real(MapKind kind, double nu, double r, int n_samples)
{
    check_order_window(kind, nu);
    if (n_samples < 64)
        throw domain_error("boundary scan needs at least 64 samples, got " + std::to_string(n_samples));
    if (!(r > 0.0) || !std::isfinite(r))
        throw domain_error("boundary scan radius must be positive and finite");

    const double step = 2.0 * std::numbers::pi / n_samples;
    BoundaryScan scan{kind, nu, r, n_samples, INFINITY, 0.0, 0.0, 0};
    compensated_sum<double> mean;
    double winding = 0.0;
    complex first_den{};
    complex prev_den{};
    for (int i = 0; i < n_samples; ++i) {
        const double theta = i * step;
        // exact point on the negative real axis when n_samples is even
        const complex z = (2 * i == n_samples) ? complex{-r, 0.0} : std::polar(r, theta);
        const QuotientParts p = quotient_parts(kind, nu, z);
        if (std::abs(p.denominator) < 1e-300)
            throw singularity_error("boundary scan hit a pole at angle " + std::to_string(theta));
        const double re = (1.0 + p.numerator / p.denominator).real();
        mean += re;
        if (re < scan.min_real) {
            scan.min_real = re;
            scan.argmin_angle = theta;
        }
        if (i == 0)
            first_den = p.denominator;
        else
            winding += std::arg(p.denominator / prev_den);
        prev_den = p.denominator;
    }
    winding += std::arg(first_den / prev_den);
    scan.mean_real = mean.value() / n_samples;
    scan.enclosed_poles = static_cast<int>(std::lround(winding / (2.0 * std::numbers::pi)));
    return scan;
}

Certificate convexity_certificate(MapKind kind, double nu, double r, double alpha, int n_samples)
{
    const BoundaryScan scan = boundary_min_real(kind, nu, r, n_samples);
    const double margin = scan.min_real - alpha;
    return {scan.enclosed_poles == 0 && margin > 0.0, margin, scan};
}

} // namespace bessel_radii
