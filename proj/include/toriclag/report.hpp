/**
 * Machine-readable reports.  Every number is tagged: {"exact": "p/q"} for
 * exact integers and rationals, {"float": x, "tol": y} for floating-point
 * results.  See docs/report_schema.md.
 */
#pragma once

#include <string>

#include <json.hpp>

#include "toriclag/verify.hpp"

namespace toriclag::report {

using Json = nlohmann::ordered_json;

inline constexpr const char* schema_version = "1";

Json exact(const Rational& q);
Json exact(const Integer& z);
Json exact(long v);
Json floating(double x, double tol);
Json exact_vector(const RatVector& v);
Json exact_vector(const IntVector& v);
Json exact_matrix(const IntMatrix& m);

/// Reads back the value of an {"exact": ...} node.
Rational read_exact(const Json& node);

Json presentation_section(const HalfspacePresentation& p, const EnumerationOptions& opts = {});
Json vertices_section(const HalfspacePresentation& p, const EnumerationOptions& opts = {});
Json quadrics_section(const LagrangianModel& m);
Json lagrangian_section(const LagrangianModel& m);
Json family_section(const FamilyModel& f);
Json invariants_section(const FamilyModel& f, std::optional<long> bound);
Json distinguish_section(const DistinguishReport& r);

struct VerifySettings {
    std::size_t samples = 100;
    std::uint64_t seed = 1;
    double lagrangian_tol = 1e-8;
    double area_tol = 1e-6;
    std::size_t area_steps = 10000;
    std::size_t boundary_samples = 1024;
};

/// Harness results; `passed` is set to false when a tolerance is exceeded.
Json verification_section(const LagrangianModel& m, const FamilyModel* family, const VerifySettings& s, bool& passed);

/// Top-level document with schema version and command line echo.
Json document(const std::string& command);

/// Indented plain-text rendering of a report.
std::string render_text(const Json& doc);

}  // namespace toriclag::report
