// Copyright (C) 2026 The lpbm Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "lpbm/report.hpp"

using namespace lpbm;

TEST_CASE("verdict rule") {
    // tolerance 3 * (0.01 + 0.01) = 0.06
    CHECK(make_point("a", 1.1, 0.01, 1.0, 0.01, 3.0).verdict == Verdict::Pass);
    CHECK(make_point("b", 1.05, 0.01, 1.0, 0.01, 3.0).verdict == Verdict::Boundary);
    CHECK(make_point("c", 0.95, 0.01, 1.0, 0.01, 3.0).verdict == Verdict::Boundary);
    CHECK(make_point("d", 0.9, 0.01, 1.0, 0.01, 3.0).verdict == Verdict::Fail);
    CHECK(make_point("e", 9.0, 0.0, 9.0, 0.0, 3.0).verdict == Verdict::Boundary);
    CHECK(make_point("f", 1.0, 0.0, 1.0 + 1e-12, 0.0, 3.0).verdict == Verdict::Boundary);
    CHECK(make_point("g", 1.0, 0.0, 1.0 + 1e-6, 0.0, 3.0).verdict == Verdict::Fail);
    CHECK(make_point("h", std::nan(""), 0.0, 1.0, 0.0, 3.0).verdict == Verdict::Fail);
    CHECK(make_point("i", 1.0, 0.01, 1.02, 0.0, 3.0, PointKind::Identity).verdict == Verdict::Pass);
    CHECK(make_point("j", 1.0, 0.0, 1.1, 0.0, 3.0, PointKind::Identity).verdict == Verdict::Fail);
    CHECK(make_point("k", 1.0, 0.0, 1.0, 0.0, 3.0, PointKind::Consistency).verdict == Verdict::Pass);
    const auto p = make_point("l", 2.0, 0.1, 1.0, 0.2, 3.0);
    CHECK(p.margin == doctest::Approx(1.0));
    CHECK(p.tolerance == doctest::Approx(0.9));
}

TEST_CASE("report aggregation and serialization") {
    Report r;
    r.check = "check_bmi";
    r.id = "demo";
    r.section = "s1";
    r.inputs = R"({"x":1})";
    r.points.push_back(make_point("lambda=0.5", 2.0, 0.0, 1.0, 0.0, 3.0));
    r.points.push_back(make_point("lambda=0.6", 1.0, 0.0, 1.0, 0.0, 3.0));
    finalize(r);
    CHECK(r.verdict == Verdict::Boundary);
    CHECK(r.digest.size() == 16);
    CHECK(point_digest(r, r.points[0]) != point_digest(r, r.points[1]));

    const auto j = nlohmann::json::parse(reports_to_json({r}));
    CHECK(j["schema"] == "lpbm-report/1");
    CHECK(j["reports"].size() == 1);
    CHECK(j["reports"][0]["points"].size() == 2);

    const std::string csv = reports_to_csv({r});
    CHECK(csv.rfind("check,params_digest,lhs,lhs_err,rhs,rhs_err,margin,verdict\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);

    const std::string lax = reports_to_summary({r}, false);
    CHECK(lax.find("[s1]") != std::string::npos);
    CHECK(lax.find("overall: OK") != std::string::npos);
    CHECK(reports_to_summary({r}, true).find("overall: FAILED") != std::string::npos);

    Report explore = r;
    explore.gating = false;
    explore.points.push_back(make_point("bad", 0.0, 0.0, 1.0, 0.0, 3.0));
    finalize(explore);
    CHECK(explore.verdict == Verdict::Fail);
    CHECK(reports_to_summary({explore}, false).find("overall: OK") != std::string::npos);
}
