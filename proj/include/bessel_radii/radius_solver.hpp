#pragma once

#include "bessel_radii/expansions.hpp"
#include "bessel_radii/root_bracket.hpp"

namespace bessel_radii {

struct RadiusResult {
    MapKind kind;
    double nu;
    double alpha;
    double radius;    // z-plane radius; for H and PHI the root r of the equation in r
    Bracket bracket;  // final bisection bracket
    double residual;  // lower_envelope(radius) - alpha
    int iterations;
    double pole;      // first singularity, an upper bound for the radius
};

// Radius of convexity of order alpha in [0, 1): the unique root of
// lower_envelope(r) = alpha on (0, first_pole).
RadiusResult radius_convexity(MapKind kind, double nu, double alpha, const ExpansionConfig& cfg = {});

// Radius of starlikeness: j'_{nu,1} for F (nu > 0), alpha_{nu,1} for G (nu > -1).
double radius_starlikeness(MapKind kind, double nu);

void check_alpha(double alpha);

} // namespace bessel_radii
