#pragma once

// Boundary sampling of Re Q on circles |z| = r. This does not use the
// real-axis envelope; poles inside the circle are detected from the winding
// number of the quotient's entire denominator, so r may exceed the first pole.

#include "bessel_radii/normalized_maps.hpp"

namespace bessel_radii {

struct BoundaryScan {
    MapKind kind;
    double nu;
    double r;
    int n_samples;
    double min_real;
    double argmin_angle;  // radians in [0, 2 pi)
    double mean_real;     // 1 by the mean value property when no pole is enclosed
    int enclosed_poles;   // zeros of the denominator inside |z| < r
};

// Throws domain_error for n_samples < 64 or r <= 0, singularity_error when a
// sample lands on a pole.
BoundaryScan boundary_min_real(MapKind kind, double nu, double r, int n_samples = 720);

struct Certificate {
    bool holds;     // no enclosed pole and min Re Q > alpha
    double margin;  // min_real - alpha
    BoundaryScan scan;
};

Certificate convexity_certificate(MapKind kind, double nu, double r, double alpha, int n_samples = 720);

} // namespace bessel_radii
