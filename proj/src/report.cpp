// Copyright (C) 2026 The lpbm Authors
// SPDX-License-Identifier: Apache-2.0

#include "lpbm/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>

#include "json.hpp"
#include "lpbm/numeric.hpp"

namespace lpbm {

using json = nlohmann::json;

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Boundary: return "boundary";
        case Verdict::Fail: return "fail";
    }
    return "?";
}

double point_tolerance(double lhs, double lhs_err, double rhs, double rhs_err, double factor) {
    const double floor = 1e-9 * std::max({1.0, std::abs(lhs), std::abs(rhs)});
    const double tol = factor * (std::abs(lhs_err) + std::abs(rhs_err));
    return std::isfinite(tol) ? std::max(tol, floor) : tol;
}

ReportPoint make_point(std::string label, double lhs, double lhs_err, double rhs, double rhs_err, double factor,
                       PointKind kind) {
    ReportPoint p;
    p.label = std::move(label);
    p.lhs = lhs;
    p.lhs_err = lhs_err;
    p.rhs = rhs;
    p.rhs_err = rhs_err;
    p.kind = kind;
    p.tolerance = point_tolerance(lhs, lhs_err, rhs, rhs_err, factor);
    if (lhs == rhs) {
        p.margin = 0.0;  // also covers equal infinities
    } else {
        p.margin = lhs - rhs;
    }
    if (std::isnan(p.margin) || std::isnan(p.tolerance)) {
        p.verdict = Verdict::Fail;
    } else if (kind == PointKind::Identity) {
        p.verdict = std::abs(p.margin) <= p.tolerance ? Verdict::Pass : Verdict::Fail;
    } else if (kind == PointKind::Consistency) {
        p.verdict = p.margin >= -p.tolerance ? Verdict::Pass : Verdict::Fail;
    } else if (p.margin < -p.tolerance) {
        p.verdict = Verdict::Fail;
    } else if (p.margin <= p.tolerance) {
        p.verdict = Verdict::Boundary;
    } else {
        p.verdict = Verdict::Pass;
    }
    return p;
}

void finalize(Report& report) {
    report.digest = fnv1a_hex(report.inputs);
    report.verdict = Verdict::Pass;
    for (const auto& p : report.points) report.verdict = std::max(report.verdict, p.verdict);
}

std::string point_digest(const Report& report, const ReportPoint& point) {
    return fnv1a_hex(report.inputs + "|" + point.label);
}

namespace {

const char* kind_name(PointKind k) {
    switch (k) {
        case PointKind::Inequality: return "inequality";
        case PointKind::Identity: return "identity";
        case PointKind::Consistency: return "consistency";
    }
    return "?";
}

json number(double v) {
    if (std::isfinite(v)) return v;
    return format_double(v);
}

json to_json(const Report& r) {
    json pts = json::array();
    for (const auto& p : r.points) {
        pts.push_back({{"label", p.label},
                       {"lhs", number(p.lhs)},
                       {"lhs_err", number(p.lhs_err)},
                       {"rhs", number(p.rhs)},
                       {"rhs_err", number(p.rhs_err)},
                       {"margin", number(p.margin)},
                       {"tolerance", number(p.tolerance)},
                       {"kind", kind_name(p.kind)},
                       {"verdict", to_string(p.verdict)}});
    }
    json inputs = r.inputs.empty() ? json::object() : json::parse(r.inputs);
    return {{"check", r.check}, {"id", r.id},           {"section", r.section}, {"inputs", inputs},
            {"digest", r.digest}, {"points", pts},      {"verdict", to_string(r.verdict)},
            {"gating", r.gating}, {"notes", r.notes}};
}

}  // namespace

std::string report_to_json(const Report& report) { return to_json(report).dump(2); }

std::string reports_to_json(const std::vector<Report>& reports) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    return json{{"schema", "lpbm-report/1"}, {"reports", arr}}.dump(2) + "\n";
}

std::string reports_to_csv(const std::vector<Report>& reports) {
    std::string out = "check,params_digest,lhs,lhs_err,rhs,rhs_err,margin,verdict\n";
    for (const auto& r : reports) {
        for (const auto& p : r.points) {
            out += r.check + "," + point_digest(r, p) + "," + format_double(p.lhs) + "," + format_double(p.lhs_err) + "," +
                   format_double(p.rhs) + "," + format_double(p.rhs_err) + "," + format_double(p.margin) + "," +
                   to_string(p.verdict) + "\n";
        }
    }
    return out;
}

std::string reports_to_summary(const std::vector<Report>& reports, bool strict) {
    std::vector<std::string> order;
    std::map<std::string, std::vector<const Report*>> by_section;
    for (const auto& r : reports) {
        if (!by_section.count(r.section)) order.push_back(r.section);
        by_section[r.section].push_back(&r);
    }
    std::ostringstream os;
    char line[256];
    int pass = 0, boundary = 0, fail = 0, failing = 0;
    for (const auto& section : order) {
        os << "[" << section << "]\n";
        for (const Report* r : by_section[section]) {
            double worst = std::numeric_limits<double>::infinity();
            for (const auto& p : r->points)
                if (p.kind == PointKind::Inequality) worst = std::min(worst, p.margin / std::max(p.tolerance, 1e-300));
            std::snprintf(line, sizeof line, "  %-36s %-32s %-9s points=%-4zu min(margin/tol)=%s%s\n", r->id.c_str(),
                          r->check.c_str(), to_string(r->verdict), r->points.size(),
                          std::isfinite(worst) ? format_double(worst).c_str() : "-", r->gating ? "" : "  (exploratory)");
            os << line;
            switch (r->verdict) {
                case Verdict::Pass: ++pass; break;
                case Verdict::Boundary: ++boundary; break;
                case Verdict::Fail: ++fail; break;
            }
            if (r->gating && (r->verdict == Verdict::Fail || (strict && r->verdict == Verdict::Boundary))) ++failing;
        }
    }
    os << "\nsections=" << order.size() << " checks=" << reports.size() << " pass=" << pass << " boundary=" << boundary
       << " fail=" << fail << (strict ? " (strict)" : "") << "\n";
    os << "overall: " << (failing == 0 ? "OK" : "FAILED") << "\n";
    return os.str();
}

}  // namespace lpbm
