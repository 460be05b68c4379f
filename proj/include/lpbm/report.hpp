// Copyright (C) 2026 The lpbm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

namespace lpbm {

enum class Verdict { Pass, Boundary, Fail };

const char* to_string(Verdict v);

/// How a point's margin is judged.
enum class PointKind {
    Inequality,  ///< lhs >= rhs expected; |margin| <= tol is Boundary
    Identity,    ///< lhs == rhs expected; |margin| <= tol is Pass
    Consistency, ///< lhs >= rhs expected; margin >= -tol is Pass (no Boundary)
};

struct ReportPoint {
    std::string label;  ///< e.g. "lambda=0.3" or "t=(0.25,1.1,1.95)"
    double lhs = 0.0;
    double lhs_err = 0.0;
    double rhs = 0.0;
    double rhs_err = 0.0;
    double margin = 0.0;  ///< lhs - rhs
    double tolerance = 0.0;
    PointKind kind = PointKind::Inequality;
    Verdict verdict = Verdict::Pass;
};

/// Outcome of one verification check.
struct Report {
    std::string check;    ///< verify operation name
    std::string id;       ///< scenario-level identifier
    std::string section;  ///< grouping for the summary table
    std::string inputs;   ///< canonical JSON of all inputs
    std::string digest;   ///< FNV-1a of `inputs`
    std::vector<ReportPoint> points;
    Verdict verdict = Verdict::Pass;
    bool gating = true;  ///< false for exploratory runs
    std::vector<std::string> notes;
};

/// Default multiplier applied to the combined error estimate.
inline constexpr double kToleranceFactor = 3.0;

/// tolerance = factor (lhs_err + rhs_err), floored at 1e-9 max(1, |lhs|, |rhs|)
/// so that exact equalities are not split by rounding.
double point_tolerance(double lhs, double lhs_err, double rhs, double rhs_err, double factor);

/// Fills margin, tolerance and verdict.
ReportPoint make_point(std::string label, double lhs, double lhs_err, double rhs, double rhs_err, double factor,
                       PointKind kind = PointKind::Inequality);

/// Sets `digest` from `inputs` and `verdict` from the points (worst wins).
void finalize(Report& report);

/// Digest of one point: the report inputs plus the point label.
std::string point_digest(const Report& report, const ReportPoint& point);

std::string report_to_json(const Report& report);
std::string reports_to_json(const std::vector<Report>& reports);
/// One row per point: check,params_digest,lhs,lhs_err,rhs,rhs_err,margin,verdict
std::string reports_to_csv(const std::vector<Report>& reports);
/// Fixed-width table grouped by section.
std::string reports_to_summary(const std::vector<Report>& reports, bool strict);

}  // namespace lpbm
