#include "bessel_radii/report.hpp"

#include "bessel_radii/bessel_core.hpp"
#include "bessel_radii/expansions.hpp"
#include "bessel_radii/zero_finder.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace bessel_radii {

namespace {

constexpr double exact_tol = 1e-8;
constexpr double auxiliary_tol = 5e-4;

const MapKind all_kinds[] = {MapKind::f, MapKind::g, MapKind::h, MapKind::phi};

nlohmann::ordered_json number_or_null(std::optional<double> x)
{
    if (x && std::isfinite(*x))
        return *x;
    return nullptr;
}

std::string csv_number(std::optional<double> x) { return x ? format_number(*x) : std::string(); }

double max_ml_residual(int n_terms)
{
    ExpansionConfig cfg;
    cfg.n_terms = n_terms;
    double worst = 0.0;
    for (MapKind k : all_kinds) {
        for (double nu : {-1.5, -0.5, 0.5, 2.0, 6.0}) {
            if (!in_order_window(k, nu))
                continue;
            const double pole = first_pole(k, nu);
            for (int i = 0; i < 8; ++i) {
                const complex z = std::polar(0.9 * pole * (i + 1) / 8.0, 0.7 + 0.8 * i);
                worst = std::max(worst, ml_identity_residual(k, nu, z, cfg));
            }
        }
    }
    return worst;
}

double max_oracle_gap()
{
    double worst = 0.0;
    for (int i = 1; i <= 10; ++i)
        for (int j = 1; j <= 10; ++j) {
            const double nu = -0.4 + 1.04 * i, x = j;
            worst = std::max(worst, std::abs(bessel_j(nu, x).real() - bessel_j_poisson(nu, x)));
        }
    return worst;
}

// Number of violated links in nu <= j'_1 < j_1 < j'_2 < j_2 over a grid.
double interlacing_violations()
{
    int bad = 0;
    for (int i = 1; i <= 20; ++i) {
        const double nu = 0.4 * i;
        const double c[] = {nu, bessel_derivative_zero(nu, 1), bessel_zero(nu, 1), bessel_derivative_zero(nu, 2),
                            bessel_zero(nu, 2)};
        bad += !(c[0] <= c[1]);
        for (int k = 1; k < 4; ++k)
            bad += !(c[k] < c[k + 1]);
    }
    return bad;
}

// Number of (kind, nu, alpha) cases whose radius is not certified sharply.
double certification_failures(int n_terms)
{
    ExpansionConfig cfg;
    cfg.n_terms = n_terms;
    int bad = 0;
    for (MapKind k : all_kinds)
        for (double nu : {-1.2, 0.5, 3.0})
            for (double alpha : {0.0, 0.5}) {
                if (!in_order_window(k, nu))
                    continue;
                const double r = radius_convexity(k, nu, alpha, cfg).radius;
                bad += !convexity_certificate(k, nu, 0.999 * r, alpha).holds;
                bad += convexity_certificate(k, nu, 1.001 * r, alpha).holds;
            }
    return bad;
}

} // namespace

std::string_view to_string(RowStatus s)
{
    switch (s) {
    case RowStatus::pass:
        return "PASS";
    case RowStatus::fail:
        return "FAIL";
    case RowStatus::no_ref:
        return "NO_REF";
    }
    return "?";
}

ReportRow make_row(std::string quantity, double computed, std::optional<double> reference, double tolerance)
{
    ReportRow row{std::move(quantity), computed, reference, std::nullopt, tolerance, RowStatus::no_ref};
    if (reference) {
        row.abs_diff = std::abs(computed - *reference);
        row.status = *row.abs_diff <= tolerance ? RowStatus::pass : RowStatus::fail;
    }
    return row;
}

std::vector<ReportRow> reproduce_rows(double tol)
{
    const SpecialConstants& c = special_constants();
    std::vector<ReportRow> rows;
    rows.push_back(make_row("nu_star", c.nu_star.value, 0.3901, tol));
    rows.push_back(make_row("nu_two", c.nu_two.value, 0.1246, tol));
    rows.push_back(make_row("nu0_f", critical_order(MapKind::f, 0.0).nu_critical, 1.0, exact_tol));
    rows.push_back(make_row("nu0_g", critical_order(MapKind::g, 0.0).nu_critical, 1.0, exact_tol));
    rows.push_back(make_row("nu0_h", critical_order(MapKind::h, 0.0).nu_critical, -0.1438, tol));
    rows.push_back(make_row("nu34_h", critical_order(MapKind::h, 0.75).nu_critical, 1.25, exact_tol));
    rows.push_back(make_row("nu0_phi", critical_order(MapKind::phi, 0.0).nu_critical, -1.5623, tol));
    rows.push_back(make_row("nu_star_phi", c.nu_star_phi.value, -1.7744, tol));
    rows.push_back(make_row("aux_f0", auxiliary_f(0.0), 0.0151, auxiliary_tol));
    rows.push_back(make_row("q_phi_1_at_-1.6", conjecture_disproof(-1.6).q_at_one, std::nullopt, 0.0));
    return rows;
}

std::vector<ReportRow> verification_rows(int n_terms)
{
    std::vector<ReportRow> rows;
    rows.push_back(make_row("ml_identity_max_residual", max_ml_residual(n_terms), 0.0, 1e-9));
    rows.push_back(make_row("series_vs_integral_max_gap", max_oracle_gap(), 0.0, 1e-10));
    rows.push_back(make_row("interlacing_violations", interlacing_violations(), 0.0, 0.0));
    double rayleigh = 0.0;
    for (double nu : {0.0, 0.5, 1.0, 2.0}) {
        const auto t = zero_table(bessel_family(nu), 200);
        double s = 0.0;
        for (int n = 200; n >= 1; --n)
            s += std::pow(t->zero(n), -4.0);
        rayleigh = std::max(rayleigh, std::abs(s - rayleigh_sum(nu, 4)));
    }
    rows.push_back(make_row("rayleigh4_partial_gap_n200", rayleigh, 0.0, 1e-8));
    rows.push_back(make_row("radius_certification_failures", certification_failures(n_terms), 0.0, 0.0));
    return rows;
}

bool all_pass(const std::vector<ReportRow>& rows)
{
    return std::none_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.status == RowStatus::fail; });
}

std::string format_number(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

nlohmann::ordered_json to_json(const ReportRow& row)
{
    return {{"quantity", row.quantity},
            {"computed", row.computed},
            {"reference", number_or_null(row.reference)},
            {"abs_diff", number_or_null(row.abs_diff)},
            {"tolerance", row.tolerance},
            {"status", to_string(row.status)}};
}

nlohmann::ordered_json to_json(const RadiusResult& r)
{
    return {{"kind", to_string(r.kind)},
            {"nu", r.nu},
            {"alpha", r.alpha},
            {"radius", r.radius},
            {"bracket", {r.bracket.lo, r.bracket.hi}},
            {"residual", r.residual},
            {"iterations", r.iterations},
            {"pole", r.pole}};
}

nlohmann::ordered_json to_json(const ThresholdResult& t)
{
    return {{"kind", to_string(t.kind)},
            {"alpha", t.alpha},
            {"nu_critical", t.nu_critical},
            {"equation_residual", t.equation_residual},
            {"search_window", {t.search_window.lo, t.search_window.hi}}};
}

nlohmann::ordered_json to_json(const ConjectureEvidence& e)
{
    return {{"probe", e.probe},
            {"q_phi_at_1", e.q_at_one},
            {"boundary_min_real", e.scan.min_real},
            {"boundary_argmin_angle", e.scan.argmin_angle},
            {"enclosed_poles", e.scan.enclosed_poles},
            {"nu0_phi", e.threshold},
            {"in_disproof_window", e.in_disproof_window},
            {"verdict", verdict(e)}};
}

std::string rows_csv(const std::vector<ReportRow>& rows)
{
    std::ostringstream out;
    out << "quantity,computed,reference,abs_diff,tolerance,status\n";
    for (const ReportRow& r : rows)
        out << r.quantity << ',' << format_number(r.computed) << ',' << csv_number(r.reference) << ','
            << csv_number(r.abs_diff) << ',' << format_number(r.tolerance) << ',' << to_string(r.status) << '\n';
    return out.str();
}

std::string rows_text(const std::vector<ReportRow>& rows)
{
    std::ostringstream out;
    char line[256];
    std::snprintf(line, sizeof line, "%-30s %22s %10s %10s %9s  %s\n", "quantity", "computed", "reference", "|diff|",
                  "tol", "status");
    out << line;
    for (const ReportRow& r : rows) {
        char ref[32] = "-";
        if (r.reference)
            std::snprintf(ref, sizeof ref, "%.10g", *r.reference);
        char diff[32] = "-";
        if (r.abs_diff)
            std::snprintf(diff, sizeof diff, "%.2e", *r.abs_diff);
        std::snprintf(line, sizeof line, "%-30s %22.15g %10s %10s %9.1e  %s\n", r.quantity.c_str(), r.computed,
                      ref, diff, r.tolerance, std::string(to_string(r.status)).c_str());
        out << line;
    }
    return out.str();
}

std::string_view verdict(const ConjectureEvidence& e) { return e.convex ? "CONVEX" : "NOT_CONVEX"; }

} // namespace bessel_radii
