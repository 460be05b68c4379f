// Copyright (C) 2026 The lpbm Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance gate: one PASS/FAIL line per criterion. Expected values come from
// closed forms computed here, not from the library under test.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "lpbm/body.hpp"
#include "lpbm/certify.hpp"
#include "lpbm/combine.hpp"
#include "lpbm/errors.hpp"
#include "lpbm/means.hpp"
#include "lpbm/measures.hpp"
#include "lpbm/numeric.hpp"
#include "lpbm/verify.hpp"

using namespace lpbm;

namespace {

// Pinned tolerances.
constexpr double kEqualityRel = 1e-2;       // criterion 2
constexpr double kCells = 2.0;              // criterion 4
constexpr double kOracleRel = 1e-5;         // grid measure vs erf products, criterion 6
constexpr double kEigenTol = 1e-6;          // criterion 7
constexpr double kLiftBound = 0.01;         // criterion 8
constexpr double kLiftOracleRel = 1e-3;     // criterion 8, against the 1D scan
constexpr double kIntervalRel = 1e-3;       // criterion 9
constexpr double kFunctionalBRel = 1e-3;    // criterion 10, curve vs closed form
constexpr double kMeanRel = 1e-12;          // criterion 11
constexpr double kContinuityRel = 1e-6;     // criterion 11, p -> 0

struct Outcome {
    bool ok = true;
    std::string detail;
};

struct Pair {
    const char* name;
    Body a;
    Body b;
};

Body hexagon() {
    return Body::h_polytope({{{1.0, 0.5}, 1.0}, {{0.5, 1.0}, 1.0}});
}

Body octagon() {
    return Body::h_polytope({{{1.0, 0.0}, 1.0}, {{0.0, 1.0}, 1.2}, {{1.0, 1.0}, 1.6}});
}

Body lq(double q, double r0, double r1) { return Body::lq_ball(ExtReal(q), {r0, r1}); }

std::vector<Pair> theorem_pairs() {
    const Body square = Body::box({1.0, 1.0});
    const Body l1_wide = lq(1.0, 1.0, 1.5);
    const Body ellipse = lq(2.0, 1.2, 0.7);
    const Body l3 = lq(3.0, 0.8, 1.1);
    const Body flat = Body::box({0.6, 1.4});
    return {{"square/l1", square, l1_wide},     {"ellipse/hexagon", ellipse, hexagon()},
            {"l3/octagon", l3, octagon()},      {"hexagon/octagon", hexagon(), octagon()},
            {"l1/ellipse", l1_wide, ellipse},   {"box/l3", flat, l3}};
}

std::vector<Pair> three_pairs() {
    auto all = theorem_pairs();
    all.erase(all.begin() + 3, all.end());
    return all;
}

VerifyConfig at_resolution(int n) {
    VerifyConfig cfg;
    cfg.resolution = n;
    return cfg;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// Standard Gaussian mass of [-r, r].
double gauss_interval(double r) { return std::erf(r / std::numbers::sqrt2); }

// Direct weighted power mean for finite p != 0.
double direct_mean(double p, double l, double a, double b) {
    if (p == 0.0) return std::pow(a, 1.0 - l) * std::pow(b, l);
    return std::pow((1.0 - l) * std::pow(a, p) + l * std::pow(b, p), 1.0 / p);
}

Outcome criterion1() {
    const std::vector<Density> densities{Density::lebesgue(2), Density::gaussian(2),
                                         Density::power_convex(2, ExtReal(-0.25), 1.0)};
    const std::vector<PVector> ps{{ExtReal(1.0), ExtReal(1.0)}, {ExtReal(0.5), ExtReal(0.8)},
                                  {ExtReal(0.0), ExtReal(0.0)}};
    const auto lambdas = default_lambda_grid();
    int points = 0, fails = 0, flips = 0, skipped = 0;
    for (const auto& pair : theorem_pairs()) {
        for (const auto& mu : densities) {
            for (const auto& p : ps) {
                if (mu.alpha() < alpha_lower_bound(p)) {
                    ++skipped;
                    continue;
                }
                const Report coarse = check_bmi(pair.a, pair.b, mu, p, lambdas, at_resolution(256));
                const Report fine = check_bmi(pair.a, pair.b, mu, p, lambdas, at_resolution(512));
                for (std::size_t i = 0; i < coarse.points.size(); ++i) {
                    ++points;
                    if (coarse.points[i].verdict == Verdict::Fail) ++fails;
                    if (coarse.points[i].verdict == Verdict::Pass && fine.points[i].verdict == Verdict::Fail) ++flips;
                }
            }
        }
    }
    return {fails == 0 && flips == 0 && points == 48 * 9,
            std::to_string(points) + " points, " + std::to_string(fails) + " fail at N=256, " + std::to_string(flips) +
                " pass->fail at N=512, " + std::to_string(skipped) + " inadmissible combos skipped"};
}

Outcome criterion2() {
    const std::vector<double> half{0.5};
    const Report r = check_bmi(Body::box({1.0, 1.0}), Body::box({2.0, 2.0}), Density::lebesgue(2),
                               uniform_p(2, ExtReal(1.0)), half, at_resolution(256));
    // |[-1.5, 1.5]^2| = 9, M_{1/2}(4, 16) = 9
    const double lhs = r.points.at(0).lhs, rhs = r.points.at(0).rhs;
    const double rel = std::abs(lhs - rhs) / 9.0;
    const bool ok = rel <= kEqualityRel && std::abs(lhs - 9.0) / 9.0 <= kEqualityRel &&
                    std::abs(rhs - 9.0) / 9.0 <= kEqualityRel && r.verdict != Verdict::Fail;
    return {ok, "lhs " + fmt(lhs) + ", rhs " + fmt(rhs) + ", relative margin " + fmt(rel) + ", verdict " +
                    to_string(r.verdict)};
}

Outcome criterion3() {
    int reports = 0, bad = 0;
    for (const auto& pair : three_pairs()) {
        for (double p : {0.0, 0.5, 1.0}) {
            const Report r = check_inclusion(pair.a, pair.b, p, Weight(0.4), 10000, at_resolution(256));
            ++reports;
            if (r.verdict != Verdict::Pass) ++bad;
        }
    }
    return {bad == 0, std::to_string(reports) + " runs of 10000 samples, " + std::to_string(bad) + " with escapes"};
}

Outcome criterion4() {
    const auto dirs = circle_directions(720);
    const double lambda = 0.4;
    double worst_ratio = 0.0;
    bool ok = true;
    for (const auto& pair : three_pairs()) {
        const GridSet g =
            coord_combine(pair.a, pair.b, Weight(lambda), uniform_p(2, ExtReal(1.0)), 256);
        double cell = 0.0;
        for (double h : g.cell_sizes()) cell = std::max(cell, h);
        // support of the Minkowski combination is the affine mix of operand supports
        double dist = 0.0;
        for (const auto& u : dirs) {
            const double h = (1.0 - lambda) * pair.a.support(u) + lambda * pair.b.support(u);
            dist = std::max(dist, std::abs(g.support(u) - h));
        }
        worst_ratio = std::max(worst_ratio, dist / cell);
        ok = ok && dist <= kCells * cell;
        ok = ok && check_plus1_is_minkowski(pair.a, pair.b, Weight(lambda), at_resolution(256)).verdict == Verdict::Pass;
    }
    return {ok, "worst distance " + fmt(worst_ratio) + " cells (limit " + fmt(kCells) + ")"};
}

Outcome criterion5() {
    const Body square = Body::box({1.0, 1.0});
    const Body l1 = lq(1.0, 1.0, 1.0);
    const ConcavityRange range{0.25, 4.0, 50};
    int runs = 0, fails = 0, points = 0;
    for (const Body* body : {&square, &l1}) {
        for (double p : {0.5, 1.0}) {
            const Density mu = Density::power_convex(2, ExtReal(-p / 4.0), 1.0);
            for (const Report& r : {check_power_dilation_concavity(*body, mu, p, range),
                                    check_dilation_concavity(*body, mu, p, range)}) {
                ++runs;
                points += static_cast<int>(r.points.size());
                for (const auto& pt : r.points)
                    if (pt.verdict == Verdict::Fail) ++fails;
            }
        }
    }
    return {fails == 0 && points == runs * 50,
            std::to_string(runs) + " runs, " + std::to_string(points) + " triples, " + std::to_string(fails) +
                " violations"};
}

Outcome criterion6() {
    const std::vector<std::pair<std::vector<double>, std::vector<double>>> boxes{
        {{0.5, 0.6}, {0.7, 0.3}}, {{0.4, 0.4}, {0.6, 0.5}}, {{0.2, 0.7}, {0.65, 0.3}}};
    const std::vector<double> lambdas{0.25, 0.5, 0.75};
    const double exponent = gaussian_improved_exponent(1.0, 2);
    bool ok = std::abs(exponent - 1.0 / 3.0) < 1e-15;
    int points = 0;
    double worst_oracle = 0.0;
    for (const auto& [ra, rb] : boxes) {
        const Report r = check_gaussian_improvement(Body::box(ra), Body::box(rb), 1.0, lambdas);
        ok = ok && r.verdict == Verdict::Pass;
        const double ga = gauss_interval(ra[0]) * gauss_interval(ra[1]);
        const double gb = gauss_interval(rb[0]) * gauss_interval(rb[1]);
        for (std::size_t k = 0; k < lambdas.size(); ++k) {
            const double l = lambdas[k];
            // the Minkowski combination of centered boxes is the box of mixed radii
            const double lhs = gauss_interval((1 - l) * ra[0] + l * rb[0]) * gauss_interval((1 - l) * ra[1] + l * rb[1]);
            const double rhs = direct_mean(1.0 / 3.0, l, ga, gb);
            ok = ok && lhs > rhs;
            const auto& pt = r.points.at(k);
            worst_oracle = std::max({worst_oracle, std::abs(pt.lhs - lhs) / lhs, std::abs(pt.rhs - rhs) / rhs});
            ++points;
        }
    }
    ok = ok && worst_oracle <= kOracleRel;
    return {ok, std::to_string(points) + " points, exponent " + fmt(exponent) + ", worst deviation from erf oracle " +
                    fmt(worst_oracle)};
}

Outcome criterion7() {
    Potential v;
    v.value = [](std::span<const double> x) { return 0.5 * (x[0] * x[0] + x[1] * x[1]); };
    v.gradient = [](std::span<const double> x) { return Point{x[0], x[1]}; };
    v.hessian = [](std::span<const double>) {
        SymMatrix h(2);
        h(0, 0) = 1.0;
        h(1, 1) = 1.0;
        return h;
    };
    Rng rng(2026);
    double worst = 0.0;
    const double gammas[] = {0.5, 1.0, 2.0};
    for (int i = 0; i < 100; ++i) {
        const double gamma = gammas[i % 3];
        const Point x{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
        auto eig = symmetric_eigenvalues(criterion_matrix(v, gamma, x));
        std::sort(eig.begin(), eig.end());
        std::vector<double> expect{-1.0, gamma * (x[0] * x[0] + x[1] * x[1]) - 1.0};
        std::sort(expect.begin(), expect.end());
        for (int k = 0; k < 2; ++k) worst = std::max(worst, std::abs(eig[k] - expect[k]));
    }
    bool ok = worst <= kEigenTol;
    std::string detail = "eigenvalue error " + fmt(worst);
    for (double gamma : {1.0, 2.0}) {
        const auto inside = certify_region(v, gamma, Region::ball(2, 1.0 / std::sqrt(gamma)));
        const Region outer = Region::ball(2, 2.0 / std::sqrt(gamma));
        const auto outside = certify_region(v, gamma, outer);
        const double w = outside.witness.empty() ? 0.0 : std::hypot(outside.witness[0], outside.witness[1]);
        // at the witness the largest eigenvalue is gamma |x|^2 - 1
        const bool witness_ok = outside.verdict == CertVerdict::Violated && outer.contains(outside.witness) &&
                                gamma * w * w - 1.0 > 0.0 &&
                                std::abs(outside.max_eigenvalue - (gamma * w * w - 1.0)) <= kEigenTol;
        ok = ok && inside.verdict == CertVerdict::Certified && witness_ok;
        detail += ", gamma " + fmt(gamma) + ": r=1/sqrt(gamma) " + to_string(inside.verdict) + ", r=2/sqrt(gamma) " +
                  to_string(outside.verdict) + " at |x|=" + fmt(w);
    }
    return {ok, detail};
}

Outcome criterion8() {
    Potential v;
    v.value = [](std::span<const double> x) { return 0.5 * (x[0] * x[0] + x[1] * x[1]); };
    const std::vector<int> orders{4, 16, 64, 256};
    const std::vector<double> widths{2.0, 2.0};
    const LiftResult lift = lift_to_uniform(v, orders, widths, kLiftBound);
    bool ok = lift.distances.size() == orders.size() && lift.report.verdict == Verdict::Pass;
    for (std::size_t k = 1; ok && k < lift.distances.size(); ++k) ok = lift.distances[k] < lift.distances[k - 1];
    ok = ok && lift.distances.back() < kLiftBound;
    // V ranges over [0, 4] on the box, so the sup is a 1D scan in v
    double worst = 0.0;
    for (std::size_t k = 0; k < orders.size() && k < lift.distances.size(); ++k) {
        const double p = orders[k];
        double d = 0.0;
        for (int i = 0; i <= 1000000; ++i) {
            const double s = 4.0 * i / 1e6;
            d = std::max(d, std::abs(std::pow(std::max(0.0, 1.0 - s / p), p) - std::exp(-s)));
        }
        worst = std::max(worst, std::abs(lift.distances[k] - d) / d);
    }
    ok = ok && worst <= kLiftOracleRel;
    std::string detail = "distances";
    for (double d : lift.distances) detail += " " + fmt(d);
    detail += ", worst deviation from 1D oracle " + fmt(worst);
    return {ok, detail};
}

Outcome criterion9() {
    const Density fa = Density::gaussian(2).restricted_to(Body::box({2.0, 2.0}));
    const Density fb = Density::gaussian(2).restricted_to(Body::box({1.5, 2.5}));
    const Report two = uhrin_functional_check(fa, fb, ExtReal(0.0), uniform_p(2, ExtReal(0.5)), Weight(0.5));
    const Density ia = Density::uniform_on_body(Body::box({1.0}));
    const Density ib = Density::uniform_on_body(Body::box({2.0}));
    const Report one = uhrin_functional_check(ia, ib, ExtReal::pos_inf(), uniform_p(1, ExtReal(1.0)), Weight(0.5));
    const auto& pt = one.points.at(0);
    // int h = |[-1.5, 1.5]| = 3 = M_1(|[-1, 1]|, |[-2, 2]|)
    const double rel = std::abs(pt.lhs - pt.rhs) / pt.rhs;
    const bool ok = two.verdict != Verdict::Fail && rel <= kIntervalRel && std::abs(pt.rhs - 3.0) / 3.0 <= kIntervalRel &&
                    one.verdict != Verdict::Fail;
    return {ok, std::string("2D truncated Gaussians ") + to_string(two.verdict) + " (margin " +
                    fmt(two.points.at(0).margin) + "), 1D intervals lhs " + fmt(pt.lhs) + " rhs " + fmt(pt.rhs)};
}

Outcome criterion10() {
    const ConcavityRange range{-1.0, 1.0, 40};
    const Body square = Body::box({1.0, 1.0});
    const Report b = check_B_property(Density::gaussian(2), square, range);
    const Report fb = check_functional_B(Density::gaussian(1), Density::gaussian(1), range);
    std::vector<double> ts;
    for (int i = 0; i <= 20; ++i) ts.push_back(-1.0 + 0.1 * i);
    const Report re = check_reparameterization(Density::gaussian(2), square, ts);
    const auto curve = functional_B_curve(Density::gaussian(1), Density::gaussian(1), ts);
    double worst = 0.0;
    for (const auto& cp : curve.points) {
        const double exact = 1.0 / std::sqrt(2.0 * std::numbers::pi * (1.0 + std::exp(-2.0 * cp.t)));
        worst = std::max(worst, std::abs(cp.estimate.value - exact) / exact);
    }
    const bool ok = b.verdict != Verdict::Fail && fb.verdict != Verdict::Fail && re.verdict == Verdict::Pass &&
                    worst <= kFunctionalBRel && b.points.size() == 40 && fb.points.size() == 40;
    return {ok, std::string("(B) ") + to_string(b.verdict) + ", functional (B) " + to_string(fb.verdict) +
                    ", reparameterization " + to_string(re.verdict) + " on " + std::to_string(re.points.size()) +
                    " nodes, functional curve vs closed form " + fmt(worst)};
}

Outcome criterion11() {
    Rng rng(11);
    int bad = 0;
    const int tuples = 10000;
    for (int i = 0; i < tuples; ++i) {
        const double a = std::exp(rng.uniform(-5.0, 5.0));
        const double b = std::exp(rng.uniform(-5.0, 5.0));
        const double l = rng.uniform(0.01, 0.99);
        double p = rng.uniform(-4.0, 4.0);
        double q = rng.uniform(-4.0, 4.0);
        if (p > q) std::swap(p, q);
        const double t = std::exp(rng.uniform(-3.0, 3.0));
        const Weight w(l);
        const double mp = p_mean(ExtReal(p), w, a, b), mq = p_mean(ExtReal(q), w, a, b);
        if (!(mp <= mq * (1 + kMeanRel))) ++bad;
        if (std::abs(mp - direct_mean(p, l, a, b)) > 1e-10 * mp) ++bad;
        if (std::abs(p_mean(ExtReal(p), w, t * a, t * b) - t * mp) > kMeanRel * 10 * t * mp) ++bad;
        if (p_mean(ExtReal(p), Weight(0.0), a, b) != a || p_mean(ExtReal(p), Weight(1.0), a, b) != b) ++bad;
        const double lo = std::min(a, b), hi = std::max(a, b);
        if (p_mean(ExtReal::neg_inf(), w, a, b) != lo || p_mean(ExtReal::pos_inf(), w, a, b) != hi) ++bad;
        const double g = p_mean(ExtReal(0.0), w, a, b);
        if (std::abs(p_mean(ExtReal(1e-9), w, a, b) - g) > kContinuityRel * g ||
            std::abs(p_mean(ExtReal(-1e-9), w, a, b) - g) > kContinuityRel * g)
            ++bad;
    }
    const PVector p11{ExtReal(1.0), ExtReal(1.0)};
    const ExtReal half = gamma_compose(p11, ExtReal::pos_inf());
    // 1/p_1 + 1/p_2 + 1/alpha = 0 at alpha = -1/2
    const ExtReal edge = gamma_compose(p11, ExtReal(-0.5));
    const bool ok = bad == 0 && half == ExtReal(0.5) && edge.is_neg_inf();
    return {ok, std::to_string(tuples) + " tuples, " + std::to_string(bad) + " property violations, gamma " +
                    half.to_string() + " and " + edge.to_string()};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"coordinate-wise Brunn-Minkowski suite", criterion1},
        {"equality calibration on cubes", criterion2},
        {"inclusion of +_p in the Firey combination", criterion3},
        {"p = 1 recovers the Minkowski combination", criterion4},
        {"dilation concavity for power-convex densities", criterion5},
        {"Gaussian improvement with exponent 1/3", criterion6},
        {"concavity certificate", criterion7},
        {"lifting to uniform measures", criterion8},
        {"functional form", criterion9},
        {"(B) property and functional (B)", criterion10},
        {"means kernel", criterion11},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = criteria[i].second();
        } catch (const std::exception& e) {
            out = {false, std::string("threw: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %2zu %s  %s: %s [%.1fs]\n", i + 1, out.ok ? "PASS" : "FAIL", criteria[i].first,
                    out.detail.c_str(), secs);
        std::fflush(stdout);
        if (!out.ok) ++failed;
    }
    std::printf("acceptance: %zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
