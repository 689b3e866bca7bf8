#include "bessel_radii/bessel_core.hpp"

#include "bessel_radii/compensated.hpp"
#include "bessel_radii/errors.hpp"
#include "bessel_radii/quadrature.hpp"

#include <boost/math/special_functions/bessel.hpp>

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace bessel_radii {

namespace {

using ldouble = long double;
using lcomplex = std::complex<long double>;

// Godfrey's coefficients for the Lanczos approximation with g = 7, n = 9:
//   Gamma(z+1) = sqrt(2 pi) (z+g+1/2)^(z+1/2) e^-(z+g+1/2) A_g(z),
//   A_g(z) = c0 + sum_{k=1..8} ck / (z+k).
// Relative error below 2e-15 on the positive axis.
constexpr double lanczos_g = 7.0;
constexpr std::array<double, 9> lanczos_coef = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

bool is_integer(double x) { return std::isfinite(x) && x == std::nearbyint(x); }

bool is_nonpositive_integer(double x) { return is_integer(x) && x <= 0.0; }

// sin(pi x) without the loss of accuracy of sin(M_PI * x) near integers.
double sin_pi(double x)
{
    const double n = std::nearbyint(x);
    const double s = std::sin(std::numbers::pi * (x - n));
    return std::fmod(std::abs(n), 2.0) == 0.0 ? s : -s;
}

ldouble lanczos_gamma(ldouble x)
{
    const ldouble z = x - 1.0L;
    ldouble a = lanczos_coef[0];
    for (std::size_t k = 1; k < lanczos_coef.size(); ++k)
        a += lanczos_coef[k] / (z + static_cast<ldouble>(k));
    const ldouble t = z + lanczos_g + 0.5L;
    const ldouble sqrt_two_pi = 2.5066282746310005024157652848110453L;
    return sqrt_two_pi * std::pow(t, z + 0.5L) * std::exp(-t) * a;
}

template <typename T>
struct SeriesResult {
    T sum{};
    ldouble max_term = 0.0L;
};

// sum_{n>=n0} (-t)^n / (n! Gamma(n+nu+1)). When nu+1 is a non-positive integer
// -m the first m+1 coefficients vanish and summation starts at n0 = m+1.
template <typename T>
SeriesResult<T> entire_series(double nu, T t, const SeriesConfig& cfg)
{
    int n0 = 0;
    T term;
    if (is_nonpositive_integer(nu + 1.0)) {
        n0 = static_cast<int>(-(nu + 1.0)) + 1;
        // 1/(n0! Gamma(n0+nu+1)) with n0+nu+1 == 1
        T power = T{1};
        ldouble fact = 1.0L;
        for (int k = 1; k <= n0; ++k) {
            power *= -t;
            fact *= static_cast<ldouble>(k);
        }
        term = power / fact;
    } else {
        term = T{static_cast<ldouble>(recip_gamma(nu + 1.0))};
    }

    compensated_sum<T> acc;
    SeriesResult<T> out;
    const ldouble eps = std::numeric_limits<ldouble>::epsilon();
    for (int k = 0; k < cfg.max_terms; ++k) {
        const int n = n0 + k;
        acc += term;
        out.max_term = std::max(out.max_term, static_cast<ldouble>(std::abs(term)));
        const ldouble denom = static_cast<ldouble>(n + 1) * (static_cast<ldouble>(n + 1) + nu);
        const T next = term * (-t) / denom;
        const ldouble floor = std::max(static_cast<ldouble>(std::abs(acc.value())), out.max_term * eps);
        const bool decreasing = std::abs(t) < std::abs(denom);
        if (decreasing && std::abs(next) <= static_cast<ldouble>(cfg.rel_tol) * floor) {
            out.sum = acc.value();
            return out;
        }
        term = next;
    }
    throw convergence_error("Bessel series did not converge within " + std::to_string(cfg.max_terms) +
                            " terms (nu=" + std::to_string(nu) + ")");
}

void check_finite_order(double nu)
{
    if (!std::isfinite(nu))
        throw domain_error("Bessel order must be finite");
}

// Value at the origin: 1 for nu=0, 0 for nu>0 or negative integers.
double value_at_origin(double nu)
{
    if (nu == 0.0)
        return 1.0;
    if (nu > 0.0 || is_integer(nu))
        return 0.0;
    throw domain_error("J_nu(0) is infinite for negative non-integer nu=" + std::to_string(nu));
}

double derivative_at_origin(double nu)
{
    if (is_integer(nu) && nu < 0.0) {
        const double m = -nu;
        const double sign = std::fmod(m, 2.0) == 0.0 ? 1.0 : -1.0;
        return sign * derivative_at_origin(m);
    }
    if (nu == 0.0 || nu > 1.0)
        return 0.0;
    if (nu == 1.0)
        return 0.5;
    throw domain_error("J'_nu(0) is singular for nu=" + std::to_string(nu));
}

// Beyond this the real series is never used; it could not pass the
// conditioning test anyway and would only waste terms.
constexpr double series_real_limit = 40.0;
// Largest tolerated ratio max|term| / |sum| for the extended-precision sum.
constexpr ldouble series_condition_limit = 1e3L;

} // namespace

void SeriesConfig::validate() const
{
    if (!(rel_tol > 0.0 && rel_tol <= 1e-6))
        throw domain_error("SeriesConfig::rel_tol must lie in (0, 1e-6]");
    if (max_terms < 30)
        throw domain_error("SeriesConfig::max_terms must be at least 30");
    if (!(max_abs_z > 0.0))
        throw domain_error("SeriesConfig::max_abs_z must be positive");
}

double gamma_fn(double x)
{
    if (!std::isfinite(x))
        throw domain_error("gamma_fn: argument must be finite");
    if (is_nonpositive_integer(x))
        throw domain_error("gamma_fn: pole at non-positive integer " + std::to_string(x));
    if (x < 0.5)
        return std::numbers::pi / (sin_pi(x) * static_cast<double>(lanczos_gamma(1.0L - x)));
    return static_cast<double>(lanczos_gamma(x));
}

double recip_gamma(double x)
{
    if (is_nonpositive_integer(x))
        return 0.0;
    return 1.0 / gamma_fn(x);
}

complex bessel_j_entire(double nu, complex t, const SeriesConfig& cfg)
{
    cfg.validate();
    check_finite_order(nu);
    const auto r = entire_series<lcomplex>(nu, lcomplex(t.real(), t.imag()), cfg);
    return {static_cast<double>(r.sum.real()), static_cast<double>(r.sum.imag())};
}

double bessel_j_entire(double nu, double t, const SeriesConfig& cfg)
{
    cfg.validate();
    check_finite_order(nu);
    return static_cast<double>(entire_series<ldouble>(nu, t, cfg).sum);
}

complex bessel_j(double nu, complex z, const SeriesConfig& cfg)
{
    cfg.validate();
    check_finite_order(nu);
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw domain_error("bessel_j: argument must be finite");
    if (std::abs(z) > cfg.max_abs_z)
        throw domain_error("bessel_j: |z| exceeds the series cap " + std::to_string(cfg.max_abs_z));

    if (is_integer(nu) && nu < 0.0) {
        const double m = -nu;
        const double sign = std::fmod(m, 2.0) == 0.0 ? 1.0 : -1.0;
        return sign * bessel_j(m, z, cfg);
    }
    if (z == complex{0.0, 0.0})
        return value_at_origin(nu);

    const lcomplex half_z = lcomplex(z.real(), z.imag()) / 2.0L;
    const lcomplex prefactor = is_integer(nu) ? std::pow(half_z, static_cast<int>(nu))
                                              : std::exp(static_cast<ldouble>(nu) * std::log(half_z));
    const auto r = entire_series<lcomplex>(nu, half_z * half_z, cfg);
    const lcomplex value = prefactor * r.sum;
    return {static_cast<double>(value.real()), static_cast<double>(value.imag())};
}

complex bessel_j_derivative(double nu, complex z, const SeriesConfig& cfg)
{
    if (z == complex{0.0, 0.0}) {
        check_finite_order(nu);
        return derivative_at_origin(nu);
    }
    return (nu / z) * bessel_j(nu, z, cfg) - bessel_j(nu + 1.0, z, cfg);
}

double bessel_j_real(double nu, double x)
{
    check_finite_order(nu);
    if (!(x >= 0.0) || !std::isfinite(x))
        throw domain_error("bessel_j_real: argument must be finite and non-negative");
    if (is_integer(nu) && nu < 0.0) {
        const double m = -nu;
        const double sign = std::fmod(m, 2.0) == 0.0 ? 1.0 : -1.0;
        return sign * bessel_j_real(m, x);
    }
    if (x == 0.0)
        return value_at_origin(nu);

    if (x <= series_real_limit) {
        SeriesConfig cfg;
        cfg.rel_tol = 1e-18;
        cfg.max_terms = 400;
        try {
            const ldouble half_x = static_cast<ldouble>(x) / 2.0L;
            const auto r = entire_series<ldouble>(nu, half_x * half_x, cfg);
            if (r.max_term <= series_condition_limit * std::abs(r.sum))
                return static_cast<double>(std::pow(half_x, static_cast<ldouble>(nu)) * r.sum);
        } catch (const convergence_error&) {
            // fall through to Boost
        }
    }
    return boost::math::cyl_bessel_j(nu, x);
}

double bessel_j_derivative_real(double nu, double x)
{
    check_finite_order(nu);
    if (x == 0.0)
        return derivative_at_origin(nu);
    return (nu / x) * bessel_j_real(nu, x) - bessel_j_real(nu + 1.0, x);
}

double dini(double gamma, double nu, double x)
{
    if (!(x >= 0.0))
        throw domain_error("dini: argument must be non-negative");
    if (x == 0.0)
        return (gamma + nu) * value_at_origin(nu);
    return (gamma + nu) * bessel_j_real(nu, x) - x * bessel_j_real(nu + 1.0, x);
}

double bessel_j_poisson(double nu, double x, int n_quad)
{
    if (!(nu > -0.5) || !std::isfinite(nu))
        throw domain_error("bessel_j_poisson: requires nu > -1/2");
    if (n_quad < 32)
        throw domain_error("bessel_j_poisson: requires at least 32 quadrature nodes");
    if (!(x >= 0.0) || !std::isfinite(x))
        throw domain_error("bessel_j_poisson: argument must be finite and non-negative");
    if (x == 0.0)
        return value_at_origin(nu);

    // With normalized weights the Beta-function mass of (1-t^2)^(nu-1/2)
    // cancels Gamma(nu+1/2), leaving (x/2)^nu / Gamma(nu+1) * sum w_i cos(x t_i).
    const GaussRule rule = gauss_gegenbauer(nu, n_quad);
    compensated_sum<double> acc;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * std::cos(x * rule.nodes[i]);
    return std::pow(x / 2.0, nu) / std::tgamma(nu + 1.0) * acc.value();
}

double rayleigh_sum(double nu, int power)
{
    if (!(nu > -1.0))
        throw domain_error("rayleigh_sum: requires nu > -1");
    const double a = nu + 1.0;
    switch (power) {
    case 4:
        return 1.0 / (16.0 * a * a * (nu + 2.0));
    case 6:
        return 1.0 / (32.0 * a * a * a * (nu + 2.0) * (nu + 3.0));
    default:
        throw domain_error("rayleigh_sum: power must be 4 or 6");
    }
}

} // namespace bessel_radii
