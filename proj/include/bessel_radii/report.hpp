#pragma once

// Result rows and serialization shared by the command-line tool.

#include "bessel_radii/disk_verifier.hpp"
#include "bessel_radii/radius_solver.hpp"
#include "bessel_radii/threshold_solver.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bessel_radii {

enum class RowStatus { pass, fail, no_ref };
std::string_view to_string(RowStatus s);

struct ReportRow {
    std::string quantity;
    double computed;
    std::optional<double> reference;
    std::optional<double> abs_diff;
    double tolerance;
    RowStatus status;
};

// Builds a row; PASS iff |computed - reference| <= tolerance.
ReportRow make_row(std::string quantity, double computed, std::optional<double> reference, double tolerance);

// Published constants with their printed values. `tol` applies to the
// four-decimal constants; exact values use 1e-8, the auxiliary constant 5e-4.
std::vector<ReportRow> reproduce_rows(double tol = 5e-5);

// Internal consistency checks (closed form vs expansion, series vs integral,
// interlacing, certification). Each row's computed value is a worst-case error.
std::vector<ReportRow> verification_rows(int n_terms = 200);

bool all_pass(const std::vector<ReportRow>& rows);

// %.17g; round-trips every finite double.
std::string format_number(double x);

nlohmann::ordered_json to_json(const ReportRow& row);
nlohmann::ordered_json to_json(const RadiusResult& r);
nlohmann::ordered_json to_json(const ThresholdResult& t);
nlohmann::ordered_json to_json(const ConjectureEvidence& e);

// CSV with a header line; fields follow the JSON keys.
std::string rows_csv(const std::vector<ReportRow>& rows);
std::string rows_text(const std::vector<ReportRow>& rows);

std::string_view verdict(const ConjectureEvidence& e);  // "CONVEX" or "NOT_CONVEX"

} // namespace bessel_radii
