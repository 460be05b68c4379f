// Copyright (C) 2026 The lpbm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lpbm/body.hpp"
#include "lpbm/certify.hpp"
#include "lpbm/means.hpp"
#include "lpbm/measures.hpp"
#include "lpbm/report.hpp"

namespace lpbm {

struct VerifyConfig {
    int resolution = 0;        ///< coord_combine cells per axis; 0 = default_resolution(dim)
    MeasureConfig measure;     ///< operand measures; resolution 0 follows `resolution`
    int firey_directions = 0;  ///< 0 = default_firey_directions(dim)
    double tolerance_factor = kToleranceFactor;
    std::uint64_t seed = 1;
};

/// {0.1, ..., 0.9}, optionally with the endpoints 0 and 1.
std::vector<double> default_lambda_grid(bool include_endpoints = false);

struct Triple {
    double t1 = 0.0;
    double mid = 0.0;
    double t2 = 0.0;
};

/// `count` triples in [lo, hi] with t1 <= t2 and mid = (t1 + t2)/2: the first
/// half from a rank-1 lattice on the square, the rest seeded uniform.
std::vector<Triple> make_triples(double lo, double hi, int count, std::uint64_t seed);

/// mu((1-l) A +_p l B) >= M_gamma^l(mu(A), mu(B)) for each l in `lambdas`,
/// gamma = gamma_compose(p, alpha). Inadmissible (p, alpha) throws before any
/// integration.
Report check_bmi(const Body& a, const Body& b, const Density& mu, const PVector& p, std::span<const double> lambdas,
                 const VerifyConfig& cfg = {});

/// m-set form with left-associated combination and renormalized weights.
Report check_bmi_mset(std::span<const Body> bodies, std::span<const double> weights, const Density& mu,
                      const PVector& p, const VerifyConfig& cfg = {});

/// Shrunk cell centers of the +_(p..p) grid image, with random sign flips,
/// tested against the Firey body. Passes iff every sample is inside.
Report check_inclusion(const Body& a, const Body& b, double p, Weight lambda, std::size_t samples,
                       const VerifyConfig& cfg = {});

/// Support distance between +_(1..1) and the Minkowski combination, against
/// a budget of two grid cells.
Report check_plus1_is_minkowski(const Body& a, const Body& b, Weight lambda, const VerifyConfig& cfg = {});

/// mu((1-l) A oplus_p l B) >= M_gamma^l(mu(A), mu(B)), gamma = (n/p + 1/alpha)^{-1}.
/// The verdict rests on the +_(p..p) lower bound; the outer Wulff estimate at
/// two direction counts is reported alongside and must not contradict it.
Report check_firey_corollary(const Body& a, const Body& b, const Density& mu, double p,
                             std::span<const double> lambdas, const VerifyConfig& cfg = {});

struct ConcavityRange {
    double lo = 0.25;
    double hi = 4.0;
    int triples = 50;
};

/// F(t) = mu(t^{1/p} A) is gamma-concave, gamma = (n/p + 1/alpha)^{-1}, for
/// alpha in [-p/n, 0). Other alpha throw DomainError unless
/// `allow_outside_hypothesis` (then the run is labelled as such).
Report check_power_dilation_concavity(const Body& a, const Density& mu, double p, ConcavityRange range,
                                      const VerifyConfig& cfg = {}, bool allow_outside_hypothesis = false);

/// F(t) = mu(t A) is ((1-p)/n + gamma)-concave under the same hypothesis.
Report check_dilation_concavity(const Body& a, const Density& mu, double p, ConcavityRange range,
                                const VerifyConfig& cfg = {}, bool allow_outside_hypothesis = false);

/// gamma_n((1-l) A + l B) >= M_{gamma/(1+gamma n)}^l(gamma_n(A), gamma_n(B))
/// for A, B inside the ball of radius 1/sqrt(gamma).
Report check_gaussian_improvement(const Body& a, const Body& b, double gamma, std::span<const double> lambdas,
                                  const VerifyConfig& cfg = {});

/// t -> mu(e^t A) is log-concave (midpoint test). mu must be log-concave.
Report check_B_property(const Density& mu, const Body& a, ConcavityRange range, const VerifyConfig& cfg = {});

/// t -> int f(e^{-t} x) g(x) dx is log-concave (midpoint test).
Report check_functional_B(const Density& f, const Density& g, ConcavityRange range, const VerifyConfig& cfg = {});

/// mu(e^t A) against int 1_A(e^{-t} x) dmu(x), node by node.
Report check_reparameterization(const Density& mu, const Body& a, std::span<const double> t_grid,
                                const VerifyConfig& cfg = {});

/// Builds the least grid function h with h(cell of (1-l)x +_p l y) >=
/// M_alpha^l(f(x), g(y)) over input cells with f(x) g(y) > 0, and tests
/// int h >= M_gamma^l(int f, int g). Inputs use twice the output resolution.
/// `resolution` 0 picks 512 / 64 / 16 output cells for n = 1 / 2 / 3.
Report uhrin_functional_check(const Density& f, const Density& g, ExtReal alpha, const PVector& p, Weight lambda,
                              int resolution = 0, const VerifyConfig& cfg = {});

struct LiftResult {
    Report report;
    std::vector<int> orders;
    std::vector<double> distances;   ///< sup |(1 - V/p)_+^p - e^{-V}| on the box grid
    std::vector<std::string> bodies;  ///< JSON description of each K_p
};

/// Compares (1 - V/p)_+^p with e^{-V} on a 201-point-per-axis grid of the box
/// [-w, w]; expects strictly decreasing distances and a final distance below
/// `final_bound`. V is checked to be even and convex on samples, and K_p for
/// midpoint convexity.
LiftResult lift_to_uniform(const Potential& v, std::span<const int> orders, std::span<const double> half_widths,
                           double final_bound = 0.01, const VerifyConfig& cfg = {});

struct LogBmScanConfig {
    int harmonics = 3;        ///< support h = c_0 + sum_k (a_k cos 2k t + b_k sin 2k t)
    int directions = 360;     ///< full-circle directions for Wulff polygons
    int restarts = 6;
    int budget = 600;         ///< total margin evaluations
    double coefficient_scale = 0.12;
    bool unconditional_only = false;
    std::vector<double> lambdas{0.25, 0.5, 0.75};
    int rotation_steps = 16;  ///< square rotated against square on [0, pi/4]
};

struct LogBmScanResult {
    Report report;
    double min_relative_margin = 0.0;
    std::vector<double> best_a;
    std::vector<double> best_b;
    double best_lambda = 0.5;
    int evaluated = 0;
    int rejected = 0;
};

/// Random restarts plus coordinate descent on the relative margin of
/// |(1-l) A oplus_0 l B| >= |A|^{1-l} |B|^l over symmetric planar bodies.
/// Exploratory: the report is never gating.
LogBmScanResult scan_log_bm(const LogBmScanConfig& scan, const VerifyConfig& cfg = {});

/// Verify checks in listing order with their anchor formulas.
struct CheckInfo {
    const char* name;
    const char* anchor;
    const char* statement;
    bool exploratory;
};
std::span<const CheckInfo> check_catalog();

}  // namespace lpbm
