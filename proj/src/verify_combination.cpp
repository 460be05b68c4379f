// Copyright (C) 2026 The lpbm Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <optional>

#include "detail/verify_util.hpp"
#include "lpbm/combine.hpp"
#include "lpbm/errors.hpp"

namespace lpbm {

using detail::json;

namespace {

void require_lambdas(std::span<const double> lambdas) {
    if (lambdas.empty()) throw DomainError("lambda grid must be non-empty");
    for (double l : lambdas) (void)Weight(l);
}

void note_gamma(Report& r, ExtReal gamma) {
    r.notes.push_back("gamma = " + gamma.to_string());
    if (gamma.is_neg_inf())
        r.notes.push_back("boundary exponent: gamma = -inf, the right-hand side is the minimum of the measures");
}

}  // namespace

Report check_bmi(const Body& a, const Body& b, const Density& mu, const PVector& p, std::span<const double> lambdas,
                 const VerifyConfig& cfg) {
    const int n = a.dim();
    if (b.dim() != n || mu.dim() != n) throw DomainError("check_bmi: dimension mismatch");
    require_lambdas(lambdas);
    const ExtReal gamma = gamma_compose(p, mu.alpha());

    Report r;
    r.check = "check_bmi";
    r.inputs = json{{"check", r.check},
                    {"a", json::parse(a.describe())},
                    {"b", json::parse(b.describe())},
                    {"density", json::parse(mu.describe())},
                    {"p", detail::pvec_json(p)},
                    {"lambdas", std::vector<double>(lambdas.begin(), lambdas.end())},
                    {"config", detail::verify_config_json(cfg, n)}}
                   .dump();
    note_gamma(r, gamma);

    const auto mcfg = detail::measure_config(cfg, n);
    const auto ma = measure(a, mu, mcfg);
    const auto mb = measure(b, mu, mcfg);
    const int res = detail::grid_resolution(cfg, n);
    for (double l : lambdas) {
        const Weight w(l);
        const auto lhs = measure(coord_combine(a, b, w, p, res), mu);
        const auto [rhs, rhs_err] = detail::mean_with_error(gamma, w, ma.value, ma.abs_error, mb.value, mb.abs_error);
        r.points.push_back(make_point(detail::label("lambda", l), lhs.value, lhs.abs_error, rhs, rhs_err,
                                      cfg.tolerance_factor));
    }
    finalize(r);
    return r;
}

Report check_bmi_mset(std::span<const Body> bodies, std::span<const double> weights, const Density& mu,
                      const PVector& p, const VerifyConfig& cfg) {
    if (bodies.size() < 2) throw DomainError("check_bmi_mset: need at least two bodies");
    if (weights.size() != bodies.size()) throw DomainError("check_bmi_mset: one weight per body required");
    const int n = bodies.front().dim();
    for (const auto& body : bodies)
        if (body.dim() != n) throw DomainError("check_bmi_mset: dimension mismatch");
    double wsum = 0.0;
    for (double w : weights) {
        (void)Weight(w);
        wsum += w;
    }
    if (std::abs(wsum - 1.0) > 1e-12) throw DomainError("check_bmi_mset: weights must sum to 1");
    const ExtReal gamma = gamma_compose(p, mu.alpha());

    Report r;
    r.check = "check_bmi_mset";
    json descr = json::array();
    for (const auto& body : bodies) descr.push_back(json::parse(body.describe()));
    r.inputs = json{{"check", r.check},
                    {"bodies", descr},
                    {"weights", std::vector<double>(weights.begin(), weights.end())},
                    {"density", json::parse(mu.describe())},
                    {"p", detail::pvec_json(p)},
                    {"config", detail::verify_config_json(cfg, n)}}
                   .dump();
    note_gamma(r, gamma);

    const auto mcfg = detail::measure_config(cfg, n);
    const int res = detail::grid_resolution(cfg, n);
    std::vector<double> values;
    std::vector<double> errors;
    for (const auto& body : bodies) {
        const auto m = measure(body, mu, mcfg);
        values.push_back(m.value);
        errors.push_back(m.abs_error);
    }

    // Left association: C_k = (1 - l_k) C_{k-1} +_p l_k A_k with
    // l_k = w_k / (w_1 + ... + w_k); the power means nest the same way.
    Body acc = bodies.front();
    double prefix = weights.front();
    std::optional<GridSet> grid;
    for (std::size_t k = 1; k < bodies.size(); ++k) {
        prefix += weights[k];
        const double lk = prefix > 0.0 ? std::clamp(weights[k] / prefix, 0.0, 1.0) : 0.0;
        grid = coord_combine(acc, bodies[k], Weight(lk), p, res);
        acc = Body::grid(*grid);
    }
    const auto lhs = measure(*grid, mu);

    const double rhs = p_mean_m(gamma, weights, values);
    std::vector<double> up(values), dn(values);
    for (std::size_t k = 0; k < values.size(); ++k) {
        up[k] += errors[k];
        dn[k] = std::max(dn[k] - errors[k], 0.0);
    }
    double rhs_err = std::max(p_mean_m(gamma, weights, up) - rhs, rhs - p_mean_m(gamma, weights, dn));
    if (!std::isfinite(rhs_err)) rhs_err = 0.0;
    r.points.push_back(make_point("m=" + std::to_string(bodies.size()), lhs.value, lhs.abs_error, rhs, rhs_err,
                                  cfg.tolerance_factor));
    r.notes.push_back("intermediate combinations are grid sets; errors compound over " +
                      std::to_string(bodies.size() - 1) + " steps");
    finalize(r);
    return r;
}

Report check_inclusion(const Body& a, const Body& b, double p, Weight lambda, std::size_t samples,
                       const VerifyConfig& cfg) {
    const int n = a.dim();
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("check_inclusion: p must lie in [0,1]");
    if (samples == 0) throw DomainError("check_inclusion: sample count must be positive");
    const int res = detail::grid_resolution(cfg, n);
    const int dirs = detail::firey_directions(cfg, n);

    Report r;
    r.check = "check_inclusion";
    r.inputs = json{{"check", r.check},
                    {"a", json::parse(a.describe())},
                    {"b", json::parse(b.describe())},
                    {"p", p},
                    {"lambda", lambda.value()},
                    {"samples", samples},
                    {"config", detail::verify_config_json(cfg, n)}}
                   .dump();

    const GridSet grid = coord_combine(a, b, lambda, uniform_p(n, ExtReal(p)), res);
    const Body firey = firey_combine(a, b, lambda, ExtReal(p), dirs);
    std::vector<std::size_t> cells;
    for (std::size_t flat = 0; flat < grid.cell_count(); ++flat)
        if (grid.marked(flat)) cells.push_back(flat);
    if (cells.empty()) throw NumericalError("check_inclusion: the grid image is empty");

    Rng rng(cfg.seed);
    std::size_t inside = 0;
    Point x(static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < samples; ++k) {
        const Point c = grid.cell_center(cells[rng.index(cells.size())]);
        for (int i = 0; i < n; ++i) {
            const auto ui = static_cast<std::size_t>(i);
            const double shrunk = std::max(c[ui] - grid.cell_size(i), 0.0);
            x[ui] = rng.uniform() < 0.5 ? -shrunk : shrunk;
        }
        if (firey.contains(x)) ++inside;
    }
    const double frac = static_cast<double>(inside) / static_cast<double>(samples);
    r.points.push_back(make_point("inside_fraction", frac, 0.0, 1.0, 0.0, cfg.tolerance_factor, PointKind::Identity));
    r.notes.push_back(std::to_string(inside) + " of " + std::to_string(samples) + " samples inside; " +
                      std::to_string(cells.size()) + " marked cells; " + std::to_string(dirs) + " directions");
    finalize(r);
    return r;
}

Report check_plus1_is_minkowski(const Body& a, const Body& b, Weight lambda, const VerifyConfig& cfg) {
    const int n = a.dim();
    const int res = detail::grid_resolution(cfg, n);
    Report r;
    r.check = "check_plus1_is_minkowski";
    r.inputs = json{{"check", r.check},
                    {"a", json::parse(a.describe())},
                    {"b", json::parse(b.describe())},
                    {"lambda", lambda.value()},
                    {"config", detail::verify_config_json(cfg, n)}}
                   .dump();

    const GridSet grid = coord_combine(a, b, lambda, uniform_p(n, ExtReal(1.0)), res);
    const Body sum = minkowski_combine(a, b, lambda);
    const auto dirs = octant_directions(n, n == 2 ? 512 : 1024);
    const double dist = hausdorff_distance(Body::grid(grid), sum, dirs);
    double cell = 0.0;
    for (double h : grid.cell_sizes()) cell = std::max(cell, h);
    r.points.push_back(
        make_point("hausdorff<=2cells", 2.0 * cell, 0.0, dist, 0.0, cfg.tolerance_factor, PointKind::Consistency));
    r.notes.push_back("support distance " + format_double(dist) + ", cell size " + format_double(cell));
    finalize(r);
    return r;
}

Report check_firey_corollary(const Body& a, const Body& b, const Density& mu, double p,
                             std::span<const double> lambdas, const VerifyConfig& cfg) {
    const int n = a.dim();
    if (b.dim() != n || mu.dim() != n) throw DomainError("check_firey_corollary: dimension mismatch");
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("check_firey_corollary: p must lie in [0,1]");
    require_lambdas(lambdas);
    const ExtReal alpha = mu.alpha();
    const ExtReal bound(-p / n);
    if (alpha < bound && !(alpha.is_finite() && alpha.value() >= bound.value() - 1e-12))
        throw DomainError("check_firey_corollary: alpha = " + alpha.to_string() + " is below -p/n = " + bound.to_string());
    const ExtReal gamma = gamma_compose(uniform_p(n, ExtReal(p)), alpha);

    const int res = detail::grid_resolution(cfg, n);
    const int d1 = detail::firey_directions(cfg, n);
    // In the plane 4(d-1)+1 equiangular directions contain the d coarse ones.
    const int d2 = n == 2 ? 4 * (d1 - 1) + 1 : 2 * d1;

    Report r;
    r.check = "check_firey_corollary";
    r.inputs = json{{"check", r.check},
                    {"a", json::parse(a.describe())},
                    {"b", json::parse(b.describe())},
                    {"density", json::parse(mu.describe())},
                    {"p", p},
                    {"lambdas", std::vector<double>(lambdas.begin(), lambdas.end())},
                    {"directions", {d1, d2}},
                    {"config", detail::verify_config_json(cfg, n)}}
                   .dump();
    note_gamma(r, gamma);
    r.notes.push_back("verdict rests on the +_(p..p) lower bound; outer Wulff estimates are upper-biased");

    const auto mcfg = detail::measure_config(cfg, n);
    const auto ma = measure(a, mu, mcfg);
    const auto mb = measure(b, mu, mcfg);
    for (double l : lambdas) {
        const Weight w(l);
        const auto [rhs, rhs_err] = detail::mean_with_error(gamma, w, ma.value, ma.abs_error, mb.value, mb.abs_error);
        const auto lower = measure(coord_combine(a, b, w, uniform_p(n, ExtReal(p)), res), mu);
        const auto outer1 = measure(firey_combine(a, b, w, ExtReal(p), d1), mu, mcfg);
        const auto outer2 = measure(firey_combine(a, b, w, ExtReal(p), d2), mu, mcfg);
        const auto lab = detail::label("lambda", l);
        r.points.push_back(make_point(lab, lower.value, lower.abs_error, rhs, rhs_err, cfg.tolerance_factor));
        r.points.push_back(make_point(lab + ",outer,dirs=" + std::to_string(d1), outer1.value, outer1.abs_error, rhs,
                                      rhs_err, cfg.tolerance_factor));
        r.points.push_back(make_point(lab + ",outer,dirs=" + std::to_string(d2), outer2.value, outer2.abs_error, rhs,
                                      rhs_err, cfg.tolerance_factor));
        // More directions can only shrink the outer body.
        r.points.push_back(make_point(lab + ",outer_trend", outer1.value, outer1.abs_error, outer2.value,
                                      outer2.abs_error, cfg.tolerance_factor, PointKind::Consistency));
        // Outer bodies contain the lower-bound body.
        r.points.push_back(make_point(lab + ",outer>=lower", outer2.value, outer2.abs_error, lower.value,
                                      lower.abs_error, cfg.tolerance_factor, PointKind::Consistency));
    }
    finalize(r);
    return r;
}

}  // namespace lpbm
