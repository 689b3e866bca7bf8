#pragma once

// Critical orders nu_alpha: the smallest order for which a normalized map is
// convex of order alpha on the whole unit disk. Each is the root of a
// division-free equation in J_nu(1), J_{nu+1}(1) and J'_nu(1):
//
//   F:   nu(nu^2-1) J^2 + (1-nu) J'^2 - alpha nu J J'   = 0   on (nu*, 10)
//   G:   (2nu+alpha-2) J_{nu+1} - alpha J_nu            = 0   on (-0.99, 10)
//   H:   (2nu+2alpha-4) J_{nu+1} - (4alpha-3) J_nu      = 0   on (-0.99, 10)
//   PHI: (2nu+2alpha) J_{nu+1} - J_nu                   = 0   on (nu_star_phi, 10)

#include "bessel_radii/disk_verifier.hpp"
#include "bessel_radii/normalized_maps.hpp"
#include "bessel_radii/root_bracket.hpp"

namespace bessel_radii {

struct ThresholdResult {
    MapKind kind;
    double alpha;
    double nu_critical;
    double equation_residual;
    Bracket search_window;
};

double threshold_equation(MapKind kind, double alpha, double nu);
Bracket threshold_window(MapKind kind);

// Throws domain_error for alpha outside [0, 1), convergence_error when the
// window holds no sign change.
ThresholdResult critical_order(MapKind kind, double alpha);

struct NamedConstant {
    double value;
    double residual;
};

struct SpecialConstants {
    NamedConstant nu_star;      // J'_nu(1) = 0 on (0, 1)
    NamedConstant nu_star_phi;  // J_{nu+1}(1) = 0 on (-2, -1)
    NamedConstant nu_two;       // nu(nu+1) J_nu(1)^2 - J'_nu(1)^2 = 0 on (0, nu*)
};

// Computed once and cached.
const SpecialConstants& special_constants();

// -log 2 - log(x+1) + 1/(2(x+1)) + (3x+5)/(4(x+1)^2(x+2)(x+3))
double auxiliary_f(double x);

struct ConjectureEvidence {
    double probe;
    double q_at_one;         // Q_PHI(1) = J_nu(1)/(2 J_{nu+1}(1)) - nu
    BoundaryScan scan;       // |z| = 1
    bool convex;             // no enclosed pole and boundary minimum >= 0
    bool in_disproof_window; // probe in (-1.875, nu_0(phi))
    double threshold;        // nu_0(phi)
};

// Probe must exceed -2 (domain_error otherwise).
ConjectureEvidence conjecture_disproof(double nu_probe = -1.6);

} // namespace bessel_radii
