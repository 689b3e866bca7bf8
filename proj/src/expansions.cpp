#include "bessel_radii/expansions.hpp"

#include "bessel_radii/compensated.hpp"
#include "bessel_radii/errors.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace bessel_radii {

namespace {

using std::numbers::pi;

// Tail of sum_{n>N} w/(a_n^2 - w) from a_n ~ beta_n - c1/beta_n - c2/beta_n^3.
// With a_n^2 = beta^2 - 2c1 + d/beta^2, d = c1^2 - 2c2, s = w + 2c1 the summand
// expands as w [beta^-2 + s beta^-4 + (s^2-d) beta^-6 + (s^3-2sd) beta^-8 + ...]
// and sum beta_n^-2k = pi^-2k zeta(2k, N+1+delta).
template <typename T>
struct Tail {
    T value;
    double bound;
};

template <typename T>
Tail<T> corrected_tail(const ZeroTable& table, int n_terms, T w)
{
    const McMahon m = mcmahon(table.family, n_terms);
    const double delta = m.beta / pi - n_terms;
    const double c1 = m.c1;
    const double a_n = table.zero(n_terms);
    const double c2 = -(a_n - m.beta + c1 / m.beta) * m.beta * m.beta * m.beta;
    const double d = c1 * c1 - 2.0 * c2;

    std::array<double, 5> z{};  // z[k] = sum_{n>N} beta_n^{-2k}
    const double q = n_terms + 1 + delta;
    for (int k = 1; k <= 4; ++k)
        z[k] = hurwitz_zeta(2.0 * k, q) / std::pow(pi, 2 * k);

    const T s = w + 2.0 * c1;
    const T value = w * (z[1] + s * z[2] + (s * s - d) * z[3] + (s * s * s - 2.0 * s * d) * z[4]);
    const double aw = std::abs(w), as = std::abs(s);
    const double bound = 2.0 * aw * (2.0 * std::abs(c2) * z[3] + (as * as * as + 2.0 * as * std::abs(d)) * z[4]);
    return {value, bound};
}

// sum_{n>N} |w|/(a_n^2-|w|) <= (1/s) int_{a_N}^inf W/(x^2-W) dx when the zeros
// beyond a_N are at least s apart.
double integral_tail_bound(double a_n, double aw)
{
    if (aw == 0.0)
        return 0.0;
    const double root = std::sqrt(aw);
    return aw / (2.0 * tail_spacing * root) * std::log((a_n + root) / (a_n - root));
}

template <typename T>
T variable(const Expansion& e, T z)
{
    return e.squared ? z * z : z;
}

void check_inside(MapKind kind, double nu, double a1_sq, double aw)
{
    if (!(aw < a1_sq))
        throw singularity_error("Mittag-Leffler expansion of " + std::string(to_string(kind)) +
                                " evaluated on or beyond its first pole (nu=" + std::to_string(nu) + ")");
}

template <typename T>
Tail<T> evaluate(MapKind kind, double nu, T z, const ExpansionConfig& cfg)
{
    cfg.validate();
    check_order_window(kind, nu);
    const Expansion e = expansion_for(kind, nu);
    const T w = variable(e, z);
    const double aw = std::abs(w);

    compensated_sum<T> total;
    total += T{1.0};
    double bound = 0.0;
    for (const ExpansionTerm& term : e.terms) {
        const auto table = zero_table(term.family, cfg.n_terms);
        check_inside(kind, nu, table->zero(1) * table->zero(1), aw);
        compensated_sum<T> s;
        for (int n = 1; n <= cfg.n_terms; ++n) {
            const double a = table->zero(n);
            s += w / (a * a - w);
        }
        T sum = s.value();
        switch (cfg.tail_mode) {
        case TailMode::none:
            break;
        case TailMode::mcmahon_bound:
            bound += std::abs(term.weight) * integral_tail_bound(table->zero(cfg.n_terms), aw);
            break;
        case TailMode::mcmahon_corrected: {
            const Tail<T> t = corrected_tail(*table, cfg.n_terms, w);
            sum += t.value;
            bound += std::abs(term.weight) * t.bound;
            break;
        }
        }
        total += -term.weight * sum;
    }
    return {total.value(), bound};
}

} // namespace

void ExpansionConfig::validate() const
{
    if (n_terms < 10)
        throw domain_error("ExpansionConfig::n_terms must be at least 10, got " + std::to_string(n_terms));
}

Expansion expansion_for(MapKind kind, double nu)
{
    check_order_window(kind, nu);
    switch (kind) {
    case MapKind::f:
        return {{{bessel_family(nu), 2.0 * (1.0 / nu - 1.0)}, {bessel_prime_family(nu), 2.0}}, true};
    case MapKind::g:
        return {{{dini_family(1.0 - nu, nu), 2.0}}, true};
    case MapKind::h:
        return {{{dini_family(2.0 - nu, nu), 1.0}}, false};
    case MapKind::phi:
        return {{{bessel_family(nu + 1.0), 1.0}}, false};
    }
    return {};
}

double first_pole(MapKind kind, double nu)
{
    check_order_window(kind, nu);
    switch (kind) {
    case MapKind::f:
        return bessel_derivative_zero(nu, 1);
    case MapKind::g:
        return dini_zero(1.0 - nu, nu, 1);
    case MapKind::h: {
        const double b = dini_zero(2.0 - nu, nu, 1);
        return b * b;
    }
    case MapKind::phi: {
        const double j = bessel_zero(nu + 1.0, 1);
        return j * j;
    }
    }
    return 0.0;
}

ExpansionValue ml_expansion(MapKind kind, double nu, complex z, const ExpansionConfig& cfg)
{
    const Tail<complex> t = evaluate(kind, nu, z, cfg);
    return {t.value, t.bound};
}

complex ml_quotient(MapKind kind, double nu, complex z, const ExpansionConfig& cfg)
{
    return ml_expansion(kind, nu, z, cfg).value;
}

double ml_identity_residual(MapKind kind, double nu, complex z, const ExpansionConfig& cfg)
{
    return std::abs(convexity_quotient(kind, nu, z) - ml_quotient(kind, nu, z, cfg));
}

double lower_envelope(MapKind kind, double nu, double r, const ExpansionConfig& cfg)
{
    if (!(r >= 0.0))
        throw domain_error("lower_envelope: radius must be non-negative");
    return evaluate(kind, nu, r, cfg).value;
}

double lower_envelope_slope(MapKind kind, double nu, double r, const ExpansionConfig& cfg)
{
    cfg.validate();
    check_order_window(kind, nu);
    if (!(r >= 0.0))
        throw domain_error("lower_envelope_slope: radius must be non-negative");
    const Expansion e = expansion_for(kind, nu);
    const double w = variable(e, r);
    const double dw = e.squared ? 2.0 * r : 1.0;
    compensated_sum<double> total;
    for (const ExpansionTerm& term : e.terms) {
        const auto table = zero_table(term.family, cfg.n_terms);
        check_inside(kind, nu, table->zero(1) * table->zero(1), w);
        compensated_sum<double> s;
        // d/dw [w/(a^2-w)] = a^2/(a^2-w)^2
        for (int n = 1; n <= cfg.n_terms; ++n) {
            const double a2 = table->zero(n) * table->zero(n);
            s += a2 / ((a2 - w) * (a2 - w));
        }
        double sum = s.value();
        if (cfg.tail_mode == TailMode::mcmahon_corrected) {
            // derivative of the tail by a central difference of the smooth asymptotic model
            const double h = 1e-4 * (1.0 + w);
            sum += (corrected_tail(*table, cfg.n_terms, w + h).value -
                    corrected_tail(*table, cfg.n_terms, w - h).value) /
                   (2.0 * h);
        }
        total += -term.weight * sum * dw;
    }
    return total.value();
}

double hurwitz_zeta(double s, double q)
{
    if (!(s > 1.0) || !(q >= 1.0))
        throw domain_error("hurwitz_zeta requires s > 1 and q >= 1");
    // direct terms until the shifted argument is large, then Euler-Maclaurin
    constexpr int direct = 12;
    compensated_sum<double> acc;
    for (int k = 0; k < direct; ++k)
        acc += std::pow(q + k, -s);
    const double x = q + direct;
    acc += std::pow(x, 1.0 - s) / (s - 1.0);
    acc += 0.5 * std::pow(x, -s);
    // B_2j / (2j)!
    static constexpr std::array<double, 6> b = {1.0 / 12.0,       -1.0 / 720.0,          1.0 / 30240.0,
                                                -1.0 / 1209600.0, 1.0 / 47900160.0,      -691.0 / 1307674368000.0};
    double rising = s;                // s (s+1) ... (s+2j-2)
    double power = std::pow(x, -s - 1.0);
    for (std::size_t j = 0; j < b.size(); ++j) {
        acc += b[j] * rising * power;
        rising *= (s + 2.0 * j + 1.0) * (s + 2.0 * j + 2.0);
        power /= x * x;
    }
    return acc.value();
}

} // namespace bessel_radii
