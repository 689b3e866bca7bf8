// besselradii: radii and critical orders of convexity for normalized Bessel maps.
//
// Exit codes: 0 success, 1 failed check or solver failure, 2 usage or domain error.

#include "bessel_radii/errors.hpp"
#include "bessel_radii/report.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

using namespace bessel_radii;
using json = nlohmann::ordered_json;

namespace {

struct Options {
    std::string kind = "g";
    double nu = 1.0;
    double alpha = 0.0;
    std::string format = "text";
    int terms = 200;
    double tol = 5e-5;
    std::string nu_range;
    std::string alpha_range;
};

struct Range {
    double lo, hi, step;
};

Range parse_range(const std::string& spec)
{
    Range r{};
    char tail = 0;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%lf%c", &r.lo, &r.hi, &r.step, &tail) != 3 || !(r.step > 0.0) ||
        !std::isfinite(r.lo) || !std::isfinite(r.hi))
        throw domain_error("range must be lo:hi:step with step > 0, got '" + spec + "'");
    return r;
}

std::vector<double> expand(const Range& r)
{
    std::vector<double> out;
    for (int i = 0;; ++i) {
        const double x = r.lo + i * r.step;
        if (x > r.hi + 1e-9 * r.step)
            break;
        out.push_back(x);
    }
    return out;
}

std::string scalar_text(const json& v)
{
    if (v.is_number_float())
        return format_number(v.get<double>());
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_null())
        return "";
    return v.dump();
}

// Flatten two-element arrays into <key>_lo / <key>_hi columns.
std::vector<std::pair<std::string, std::string>> flatten(const json& obj)
{
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [k, v] : obj.items()) {
        if (v.is_array() && v.size() == 2) {
            out.emplace_back(k + "_lo", scalar_text(v[0]));
            out.emplace_back(k + "_hi", scalar_text(v[1]));
        } else {
            out.emplace_back(k, scalar_text(v));
        }
    }
    return out;
}

void emit_object(const json& obj, const std::string& format)
{
    if (format == "json") {
        std::cout << obj.dump(2) << '\n';
        return;
    }
    const auto fields = flatten(obj);
    if (format == "csv") {
        for (std::size_t i = 0; i < fields.size(); ++i)
            std::cout << (i ? "," : "") << fields[i].first;
        std::cout << '\n';
        for (std::size_t i = 0; i < fields.size(); ++i)
            std::cout << (i ? "," : "") << fields[i].second;
        std::cout << '\n';
        return;
    }
    for (const auto& [k, v] : fields)
        std::cout << k << " = " << v << '\n';
}

int emit_rows(const std::vector<ReportRow>& rows, const std::string& format)
{
    if (format == "json") {
        json arr = json::array();
        for (const ReportRow& r : rows)
            arr.push_back(to_json(r));
        std::cout << arr.dump(2) << '\n';
    } else if (format == "csv") {
        std::cout << rows_csv(rows);
    } else {
        std::cout << rows_text(rows);
    }
    return all_pass(rows) ? 0 : 1;
}

ExpansionConfig expansion_config(const Options& o)
{
    ExpansionConfig cfg;
    cfg.n_terms = o.terms;
    cfg.validate();
    return cfg;
}

int cmd_radius(const Options& o)
{
    const RadiusResult r = radius_convexity(parse_map_kind(o.kind), o.nu, o.alpha, expansion_config(o));
    emit_object(to_json(r), o.format);
    return 0;
}

int cmd_threshold(const Options& o)
{
    emit_object(to_json(critical_order(parse_map_kind(o.kind), o.alpha)), o.format);
    return 0;
}

int cmd_conjecture(const Options& o)
{
    emit_object(to_json(conjecture_disproof(o.nu)), o.format);
    return 0;
}

int cmd_table(const Options& o)
{
    const MapKind kind = parse_map_kind(o.kind);
    const std::vector<double> nus = expand(parse_range(o.nu_range));
    const std::vector<double> alphas = expand(parse_range(o.alpha_range));
    const ExpansionConfig cfg = expansion_config(o);

    json rows = json::array();
    bool ok = true;
    for (double nu : nus) {
        for (double alpha : alphas) {
            json row = {{"kind", to_string(kind)}, {"nu", nu},          {"alpha", alpha},    {"radius", nullptr},
                        {"residual", nullptr},     {"certified", false}, {"status", "OK"}};
            try {
                const RadiusResult r = radius_convexity(kind, nu, alpha, cfg);
                const bool inside = convexity_certificate(kind, nu, 0.999 * r.radius, alpha).holds;
                const bool outside = convexity_certificate(kind, nu, 1.001 * r.radius, alpha).holds;
                row["radius"] = r.radius;
                row["residual"] = r.residual;
                row["certified"] = inside && !outside;
                if (!(inside && !outside)) {
                    row["status"] = "UNCERTIFIED";
                    ok = false;
                }
            } catch (const domain_error&) {
                row["status"] = "DOMAIN_ERROR";
            } catch (const std::runtime_error&) {
                row["status"] = "SOLVER_ERROR";
                ok = false;
            }
            rows.push_back(row);
        }
    }

    if (o.format == "json") {
        std::cout << rows.dump(2) << '\n';
    } else {
        const char* sep = o.format == "csv" ? "," : "\t";
        std::cout << "kind" << sep << "nu" << sep << "alpha" << sep << "radius" << sep << "residual" << sep
                  << "certified" << sep << "status\n";
        for (const json& row : rows) {
            bool first = true;
            for (const auto& [k, v] : row.items()) {
                std::cout << (first ? "" : sep) << scalar_text(v);
                first = false;
            }
            std::cout << '\n';
        }
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Radii and critical orders of convexity for normalized Bessel functions"};
    app.require_subcommand(1);
    Options o;

    const std::vector<std::string> formats = {"json", "csv", "text"};
    const std::vector<std::string> kinds = {"f", "g", "h", "phi"};
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
    };
    auto add_kind = [&](CLI::App* sub) {
        sub->add_option("--kind", o.kind, "Normalized map")->check(CLI::IsMember(kinds, CLI::ignore_case));
    };
    auto add_terms = [&](CLI::App* sub) {
        sub->add_option("--terms", o.terms, "Zeros summed in the partial fraction expansions")
            ->check(CLI::Range(10, 100000));
    };

    auto* radius = app.add_subcommand("radius", "Radius of convexity of order alpha");
    add_kind(radius);
    radius->add_option("--nu", o.nu, "Order nu")->required();
    radius->add_option("--alpha", o.alpha, "Order of convexity in [0,1)");
    add_terms(radius);
    add_format(radius);

    auto* threshold = app.add_subcommand("threshold", "Smallest order nu convex of order alpha on the unit disk");
    add_kind(threshold);
    threshold->add_option("--alpha", o.alpha, "Order of convexity in [0,1)");
    add_format(threshold);

    auto* reproduce = app.add_subcommand("reproduce", "Recompute the published constants and compare");
    reproduce->add_option("--tol", o.tol, "Tolerance for four-decimal constants")->check(CLI::PositiveNumber);
    add_format(reproduce);

    o.nu = -1.6;
    auto* conjecture = app.add_subcommand("conjecture", "Convexity evidence for phi_nu on the unit disk");
    conjecture->add_option("--nu", o.nu, "Probe order (default -1.6)");
    add_format(conjecture);

    auto* table = app.add_subcommand("table", "Grid of radii over nu and alpha");
    add_kind(table);
    table->add_option("--nu-range", o.nu_range, "lo:hi:step")->required();
    table->add_option("--alpha-range", o.alpha_range, "lo:hi:step")->required();
    add_terms(table);
    add_format(table);

    auto* verify = app.add_subcommand("verify", "Run the internal consistency checks");
    add_terms(verify);
    add_format(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (!conjecture->parsed() && radius->count("--nu") == 0)
        o.nu = 1.0;
    if (table->parsed() && o.format == "text")
        o.format = "csv";

    try {
        if (radius->parsed())
            return cmd_radius(o);
        if (threshold->parsed())
            return cmd_threshold(o);
        if (reproduce->parsed())
            return emit_rows(reproduce_rows(o.tol), o.format);
        if (conjecture->parsed())
            return cmd_conjecture(o);
        if (table->parsed())
            return cmd_table(o);
        if (verify->parsed()) {
            ExpansionConfig cfg = expansion_config(o);
            return emit_rows(verification_rows(cfg.n_terms), o.format);
        }
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
