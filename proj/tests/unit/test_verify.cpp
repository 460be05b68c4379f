// Copyright (C) 2026 The lpbm Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>
#include <set>
#include <vector>

#include "doctest.h"
#include "lpbm/errors.hpp"
#include "lpbm/verify.hpp"

using namespace lpbm;

namespace {

VerifyConfig coarse() {
    VerifyConfig cfg;
    cfg.resolution = 64;
    return cfg;
}

Verdict worst(const Report& r) { return r.verdict; }

}  // namespace

TEST_CASE("lambda grid and triples") {
    CHECK(default_lambda_grid().size() == 9);
    CHECK(default_lambda_grid(true).size() == 11);
    const auto t = make_triples(0.25, 4.0, 50, 3);
    CHECK(t.size() == 50);
    for (const auto& x : t) {
        CHECK(x.t1 >= 0.25);
        CHECK(x.t2 <= 4.0);
        CHECK(x.t1 <= x.t2);
        CHECK(x.mid == doctest::Approx(0.5 * (x.t1 + x.t2)));
    }
    const auto again = make_triples(0.25, 4.0, 50, 3);
    CHECK(again[49].t1 == t[49].t1);
    CHECK_THROWS_AS(make_triples(1.0, 0.0, 5, 1), DomainError);
}

TEST_CASE("Brunn-Minkowski check on homothetic cubes is an equality") {
    const std::vector<double> l{0.5};
    const auto r = check_bmi(Body::box({1.0, 1.0}), Body::box({2.0, 2.0}), Density::lebesgue(2),
                             uniform_p(2, ExtReal(1.0)), l, coarse());
    REQUIRE(r.points.size() == 1);
    // |(A + B)/2| = 9 and M_{1/2}(4, 16) = ((2 + 4)/2)^2 = 9
    CHECK(r.points[0].lhs == doctest::Approx(9.0));
    CHECK(r.points[0].rhs == doctest::Approx(9.0));
    CHECK(r.verdict == Verdict::Boundary);
}

TEST_CASE("Brunn-Minkowski check passes on distinct bodies") {
    const Body a = Body::lq_ball(ExtReal(1.0), {1.0, 1.5});
    const Body b = Body::lq_ball(ExtReal(2.0), {1.2, 0.7});
    const std::vector<double> l{0.3, 0.7};
    const auto r = check_bmi(a, b, Density::gaussian(2), uniform_p(2, ExtReal(1.0)), l, coarse());
    CHECK(r.verdict != Verdict::Fail);
    CHECK(r.points.size() == 2);
    CHECK_THROWS_AS(check_bmi(a, b, Density::power_convex(2, ExtReal(-0.25), 1.0), uniform_p(2, ExtReal(0.0)), l,
                              coarse()),
                    DomainError);
}

TEST_CASE("m-set check with two bodies agrees with the pair check") {
    const std::vector<Body> bodies{Body::box({1.0, 1.0}), Body::box({2.0, 2.0})};
    const std::vector<double> w{0.5, 0.5};
    const auto r = check_bmi_mset(bodies, w, Density::lebesgue(2), uniform_p(2, ExtReal(1.0)), coarse());
    REQUIRE_FALSE(r.points.empty());
    CHECK(r.points.back().lhs == doctest::Approx(9.0));
    CHECK(r.verdict != Verdict::Fail);
}

TEST_CASE("inclusion and Minkowski recovery") {
    const Body a = Body::lq_ball(ExtReal(3.0), {0.8, 1.1});
    const Body b = Body::box({0.6, 1.4});
    for (double p : {0.0, 0.5, 1.0}) CHECK(check_inclusion(a, b, p, Weight(0.4), 2000, coarse()).verdict == Verdict::Pass);
    CHECK(check_plus1_is_minkowski(a, b, Weight(0.4), coarse()).verdict == Verdict::Pass);
}

TEST_CASE("Firey corollary") {
    const Body a = Body::lq_ball(ExtReal(2.0), {1.0, 1.5});
    const Body b = Body::box({1.0, 0.8});
    const std::vector<double> l{0.5};
    const auto r = check_firey_corollary(a, b, Density::lebesgue(2), 0.5, l, coarse());
    CHECK(r.verdict != Verdict::Fail);
    CHECK_THROWS_AS(check_firey_corollary(a, b, Density::power_convex(2, ExtReal(-0.5), 1.0), 0.5, l, coarse()),
                    DomainError);
}

TEST_CASE("dilation concavity checks") {
    const Body sq = Body::box({1.0, 1.0});
    const ConcavityRange range{0.25, 4.0, 10};
    const Density mu = Density::power_convex(2, ExtReal(-0.25), 1.0);
    CHECK(worst(check_power_dilation_concavity(sq, mu, 1.0, range, coarse())) != Verdict::Fail);
    CHECK(worst(check_dilation_concavity(sq, mu, 1.0, range, coarse())) != Verdict::Fail);
    CHECK_THROWS_AS(check_power_dilation_concavity(sq, Density::lebesgue(2), 1.0, range, coarse()), DomainError);
    const auto outside = check_power_dilation_concavity(sq, Density::gaussian(2), 1.0, range, coarse(), true);
    CHECK_FALSE(outside.notes.empty());
    CHECK_THROWS_AS(check_power_dilation_concavity(sq, mu, 1.0, ConcavityRange{0.01, 4.0, 10}, coarse()), DomainError);
}

TEST_CASE("Gaussian improvement") {
    const std::vector<double> l{0.25, 0.5, 0.75};
    const auto r = check_gaussian_improvement(Body::box({0.5, 0.6}), Body::box({0.7, 0.3}), 1.0, l, coarse());
    CHECK(r.verdict == Verdict::Pass);
    CHECK_THROWS_AS(check_gaussian_improvement(Body::box({1.0, 1.0}), Body::box({0.5, 0.5}), 1.0, l), DomainError);
}

TEST_CASE("(B) property and its functional form") {
    const ConcavityRange range{-1.0, 1.0, 10};
    CHECK(check_B_property(Density::gaussian(2), Body::box({1.0, 1.0}), range, coarse()).verdict != Verdict::Fail);
    CHECK(check_functional_B(Density::gaussian(1), Density::gaussian(1), range, coarse()).verdict != Verdict::Fail);
    CHECK_THROWS_AS(check_B_property(Density::power_convex(2, ExtReal(-0.25), 1.0), Body::box({1.0, 1.0}), range),
                    DomainError);
    const std::vector<double> ts{-1.0, 0.0, 1.0};
    const auto r = check_reparameterization(Density::gaussian(2), Body::box({1.0, 1.0}), ts, coarse());
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.points.size() == 3);
}

TEST_CASE("functional check on interval indicators is an equality") {
    const Density f = Density::uniform_on_body(Body::box({1.0}));
    const Density g = Density::uniform_on_body(Body::box({2.0}));
    const auto r = uhrin_functional_check(f, g, ExtReal::pos_inf(), uniform_p(1, ExtReal(1.0)), Weight(0.5));
    REQUIRE(r.points.size() == 1);
    // int h = |[-1.5, 1.5]| = 3 = M_1(2, 4)
    CHECK(r.points[0].lhs == doctest::Approx(3.0).epsilon(1e-3));
    CHECK(r.points[0].rhs == doctest::Approx(3.0).epsilon(1e-3));
    CHECK(r.verdict != Verdict::Fail);
}

TEST_CASE("lifting distances") {
    Potential v;
    v.value = [](std::span<const double> x) { return 0.5 * (x[0] * x[0] + x[1] * x[1]); };
    const std::vector<int> orders{4, 16, 64, 256};
    const std::vector<double> widths{2.0, 2.0};
    const auto out = lift_to_uniform(v, orders, widths);
    REQUIRE(out.distances.size() == 4);
    // sup over v in [0, 4] of |(1 - v/p)^p - e^-v|, scanned finely
    for (std::size_t k = 0; k < 4; ++k) {
        const double p = orders[k];
        double d = 0.0;
        for (int i = 0; i <= 400000; ++i) {
            const double s = 4.0 * i / 400000.0;
            d = std::max(d, std::abs(std::pow(std::max(0.0, 1 - s / p), p) - std::exp(-s)));
        }
        CHECK(out.distances[k] == doctest::Approx(d).epsilon(1e-3));
    }
    CHECK(out.report.verdict == Verdict::Pass);
    Potential odd;
    odd.value = [](std::span<const double> x) { return x[0] * x[0] * x[0]; };
    CHECK_THROWS_AS(lift_to_uniform(odd, orders, widths), DomainError);
}

TEST_CASE("log Brunn-Minkowski scan is exploratory") {
    LogBmScanConfig scan;
    scan.budget = 60;
    scan.restarts = 2;
    scan.directions = 120;
    const auto out = scan_log_bm(scan);
    CHECK_FALSE(out.report.gating);
    CHECK(out.evaluated > 0);
    CHECK(out.min_relative_margin > -1e-6);
}

TEST_CASE("catalog") {
    int gating = 0, exploratory = 0;
    std::set<std::string> names;
    for (const auto& c : check_catalog()) {
        (c.exploratory ? exploratory : gating)++;
        names.insert(c.name);
    }
    CHECK(gating == 12);
    CHECK(exploratory == 1);
    CHECK(names.count("check_bmi") == 1);
    CHECK(names.count("lift_to_uniform") == 1);
}
