#pragma once

// Mittag-Leffler (partial fraction) forms of the convexity quotients:
//
//   F:   1 - 2(1/nu - 1) S[j_nu](z^2) - 2 S[j'_nu](z^2)
//   G:   1 - 2 S[alpha_nu](z^2)        alpha: zeros of (1-nu)J_nu + xJ'_nu
//   H:   1 - S[beta_nu](z)             beta:  zeros of (2-nu)J_nu + xJ'_nu
//   PHI: 1 - S[j_{nu+1}](z)
//
// with S[a](w) = sum_n w / (a_n^2 - w). Sums run over the first n_terms zeros;
// the remainder is either ignored, bounded, or estimated from McMahon's
// asymptotics of the zeros (see TailMode).

#include "bessel_radii/normalized_maps.hpp"
#include "bessel_radii/zero_finder.hpp"

#include <vector>

namespace bessel_radii {

enum class TailMode {
    none,               // bare truncation, no error estimate
    mcmahon_bound,      // bare truncation; tail_bound is a rigorous-style integral bound
    mcmahon_corrected,  // truncation plus the asymptotic tail; tail_bound estimates what is left
};

struct ExpansionConfig {
    int n_terms = 200;
    TailMode tail_mode = TailMode::mcmahon_corrected;

    void validate() const;  // n_terms >= 10
};

struct ExpansionTerm {
    ZeroFamily family;
    double weight;  // coefficient in front of S
};

struct Expansion {
    std::vector<ExpansionTerm> terms;
    bool squared;  // S is evaluated at w = z^2 (F, G) or w = z (H, PHI)
};

Expansion expansion_for(MapKind kind, double nu);

// Radius in the z-plane of the first singularity of Q:
// j'_{nu,1}, alpha_{nu,1}, beta_{nu,1}^2, j_{nu+1,1}^2.
double first_pole(MapKind kind, double nu);

struct ExpansionValue {
    complex value;
    double tail_bound;  // 0 for TailMode::none
};

ExpansionValue ml_expansion(MapKind kind, double nu, complex z, const ExpansionConfig& cfg = {});
complex ml_quotient(MapKind kind, double nu, complex z, const ExpansionConfig& cfg = {});
double ml_identity_residual(MapKind kind, double nu, complex z, const ExpansionConfig& cfg = {});

// Q(r) on the positive real axis, which is the infimum of Re Q over |z| <= r.
double lower_envelope(MapKind kind, double nu, double r, const ExpansionConfig& cfg = {});
// d/dr of lower_envelope.
double lower_envelope_slope(MapKind kind, double nu, double r, const ExpansionConfig& cfg = {});

// Minimum spacing assumed between consecutive zeros beyond the table by the
// MCMAHON_BOUND tail.
inline constexpr double tail_spacing = 3.141592653589793 - 0.05;

// Hurwitz zeta(s, q) for s > 1 and q >= 1 (Euler-Maclaurin).
double hurwitz_zeta(double s, double q);

} // namespace bessel_radii
