#pragma once

// Convexity quotients Q(z) = 1 + z f''(z)/f'(z) of the four normalized Bessel
// maps, assembled from Bessel ratios without numerical differentiation:
//
//   f_nu(z)   = (2^nu Gamma(nu+1) J_nu(z))^(1/nu)           nu > 0
//   g_nu(z)   = 2^nu Gamma(nu+1) z^(1-nu) J_nu(z)           nu > -1
//   h_nu(z)   = 2^nu Gamma(nu+1) z^(1-nu/2) J_nu(sqrt z)    nu > -1
//   phi_nu(z) = 2^nu Gamma(nu+1) z^(-nu/2) J_nu(sqrt z)     nu > -2
//
// Every quotient is written as 1 + N(z)/D(z) with N, D entire, using the
// entire part A_mu(t) = (x/2)^-mu J_mu(x), t = x^2/4. No branch of sqrt z is
// ever taken, so H and PHI are valid on the whole disk including the
// negative real axis.

#include "bessel_radii/bessel_core.hpp"

#include <string>
#include <string_view>

namespace bessel_radii {

enum class MapKind { f, g, h, phi };

std::string_view to_string(MapKind kind);
// Accepts "f", "g", "h", "phi" (case-insensitive); throws domain_error otherwise.
MapKind parse_map_kind(std::string_view name);

// Throws domain_error unless nu lies in the kind's admissible window.
void check_order_window(MapKind kind, double nu);
bool in_order_window(MapKind kind, double nu);

struct QuotientParts {
    complex numerator;
    complex denominator;  // vanishes exactly at the poles of Q
};

QuotientParts quotient_parts(MapKind kind, double nu, complex z);

// Throws singularity_error when |denominator| < 1e-300.
complex convexity_quotient(MapKind kind, double nu, complex z);

// |Q_PHI(z) - (1/2)[w J'_{nu+1}(w)/J_{nu+1}(w) - (nu-1)]| with w the principal
// square root of z; the second form goes through complex J on the principal
// branch and shares nothing with convexity_quotient beyond the series.
double phi_quotient_identity_check(double nu, complex z);

} // namespace bessel_radii
