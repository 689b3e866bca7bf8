#pragma once

// Bessel functions of the first kind J_nu for real order and real or complex
// argument, evaluated from the ascending power series.
//
// The series is summed in extended precision with compensation. For real
// arguments where the alternating series cancels badly (large x, or x close
// to a zero of J_nu) bessel_j_real() falls back to Boost.Math; the complex
// entry points never switch and are limited to |z| <= SeriesConfig::max_abs_z.

#include <complex>

namespace bessel_radii {

using complex = std::complex<double>;

struct SeriesConfig {
    double rel_tol = 1e-13;  // stop once a term drops below rel_tol * |partial sum|
    int max_terms = 200;
    double max_abs_z = 100.0;

    // Throws domain_error unless rel_tol in (0, 1e-6] and max_terms >= 30.
    void validate() const;
};

// Gamma function, Lanczos approximation (reflection below 1/2).
// Throws domain_error at the poles 0, -1, -2, ...
double gamma_fn(double x);

// 1/Gamma(x); exactly zero at the poles of Gamma.
double recip_gamma(double x);

// Entire part of J_nu:  sum_n (-t)^n / (n! Gamma(n+nu+1)),  so that
// J_nu(z) = (z/2)^nu * bessel_j_entire(nu, z*z/4).  Free of branch cuts.
complex bessel_j_entire(double nu, complex t, const SeriesConfig& cfg = {});
double bessel_j_entire(double nu, double t, const SeriesConfig& cfg = {});

// J_nu(z) with (z/2)^nu taken on the principal branch.
complex bessel_j(double nu, complex z, const SeriesConfig& cfg = {});

// J'_nu(z) from z J'_nu = nu J_nu - z J_{nu+1}. At z = 0 the value is taken
// from the series; it is singular for nu < 1 other than nu = 0.
complex bessel_j_derivative(double nu, complex z, const SeriesConfig& cfg = {});

// Real-axis J_nu(x), x >= 0, accurate to about 1e-15 relative to the local
// amplitude for any x (series where it is well conditioned, Boost otherwise).
double bessel_j_real(double nu, double x);
double bessel_j_derivative_real(double nu, double x);

// Dini combination gamma*J_nu(x) + x*J'_nu(x) = (gamma+nu) J_nu(x) - x J_{nu+1}(x).
double dini(double gamma, double nu, double x);

// Independent evaluation of J_nu(x) through the Poisson integral
//   J_nu(x) = 2 (x/2)^nu / (sqrt(pi) Gamma(nu+1/2)) * int_0^1 (1-t^2)^(nu-1/2) cos(xt) dt
// using an n_quad-point Gauss rule for the weight (1-t^2)^(nu-1/2).
// Requires nu > -1/2 and n_quad >= 32.
double bessel_j_poisson(double nu, double x, int n_quad = 64);

// Closed forms of sum_n j_{nu,n}^{-power} for power 4 and 6 (nu > -1).
double rayleigh_sum(double nu, int power);

} // namespace bessel_radii
