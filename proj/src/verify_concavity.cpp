// Copyright (C) 2026 The lpbm Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "detail/verify_util.hpp"
#include "lpbm/combine.hpp"
#include "lpbm/errors.hpp"

namespace lpbm {

using detail::json;

namespace {

using CurveFn = std::function<std::vector<CurvePoint>(std::span<const double>)>;

std::map<double, MeasureEstimate> evaluate_at_triples(const std::vector<Triple>& triples, const CurveFn& curve) {
    std::vector<double> ts;
    for (const auto& t : triples) {
        ts.push_back(t.t1);
        ts.push_back(t.mid);
        ts.push_back(t.t2);
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    std::map<double, MeasureEstimate> out;
    for (const auto& cp : curve(ts)) out.emplace(cp.t, cp.estimate);
    return out;
}

void add_midpoint_points(Report& r, const std::vector<Triple>& triples, const std::map<double, MeasureEstimate>& f,
                         ExtReal exponent, double factor) {
    const Weight half(0.5);
    for (const auto& t : triples) {
        const auto& f1 = f.at(t.t1);
        const auto& fm = f.at(t.mid);
        const auto& f2 = f.at(t.t2);
        const auto [rhs, rhs_err] = detail::mean_with_error(exponent, half, f1.value, f1.abs_error, f2.value, f2.abs_error);
        r.points.push_back(make_point(detail::triple_label(t), fm.value, fm.abs_error, rhs, rhs_err, factor));
    }
}

json range_json(const ConcavityRange& range) {
    return {{"lo", range.lo}, {"hi", range.hi}, {"triples", range.triples}};
}

/// Shared hypothesis handling for the two dilation statements; returns gamma.
ExtReal dilation_gamma(const Density& mu, double p, int n, const ConcavityRange& range, bool allow_outside,
                       Report& r) {
    if (!(p > 0.0 && p <= 1.0)) throw DomainError(r.check + ": p must lie in (0,1]");
    if (!(range.lo > 0.0) || range.hi < range.lo) throw DomainError(r.check + ": t range must satisfy 0 < lo <= hi");
    if (range.lo < 0.05 * range.hi)
        throw DomainError(r.check + ": t range must start at or above 0.05 t_max (F is not resolved near t = 0)");
    const ExtReal alpha = mu.alpha();
    const double bound = -p / n;
    const bool inside = alpha.is_finite() && alpha.value() < 0.0 && alpha.value() >= bound - 1e-12;
    if (!inside) {
        if (!allow_outside)
            throw DomainError(r.check + ": alpha = " + alpha.to_string() + " outside the hypothesis [-p/n, 0) = [" +
                              format_double(bound) + ", 0)");
        r.notes.push_back("run outside the hypothesis alpha in [-p/n, 0) (alpha = " + alpha.to_string() + ")");
    }
    return gamma_compose(uniform_p(n, ExtReal(p)), alpha);
}

}  // namespace

Report check_power_dilation_concavity(const Body& a, const Density& mu, double p, ConcavityRange range,
                                      const VerifyConfig& cfg, bool allow_outside_hypothesis) {
    const int n = a.dim();
    if (mu.dim() != n) throw DomainError("check_power_dilation_concavity: dimension mismatch");
    Report r;
    r.check = "check_power_dilation_concavity";
    const ExtReal gamma = dilation_gamma(mu, p, n, range, allow_outside_hypothesis, r);
    r.inputs = json{{"check", r.check},
                    {"a", json::parse(a.describe())},
                    {"density", json::parse(mu.describe())},
                    {"p", p},
                    {"range", range_json(range)},
                    {"outside_hypothesis", allow_outside_hypothesis},
                    {"config", detail::verify_config_json(cfg, n)}}
                   .dump();
    r.notes.push_back("gamma = " + gamma.to_string());

    const auto triples = make_triples(range.lo, range.hi, range.triples, cfg.seed);
    const auto mcfg = detail::measure_config(cfg, n);
    const CurveTransform tr{CurveKind::DilateTPow, p};
    const auto values = evaluate_at_triples(
        triples, [&](std::span<const double> ts) { return measure_curve(a, mu, tr, ts, mcfg); });
    add_midpoint_points(r, triples, values, gamma, cfg.tolerance_factor);
    finalize(r);
    return r;
}

Report check_dilation_concavity(const Body& a, const Density& mu, double p, ConcavityRange range,
                                const VerifyConfig& cfg, bool allow_outside_hypothesis) {
    const int n = a.dim();
    if (mu.dim() != n) throw DomainError("check_dilation_concavity: dimension mismatch");
    Report r;
    r.check = "check_dilation_concavity";
    const ExtReal gamma = dilation_gamma(mu, p, n, range, allow_outside_hypothesis, r);
    const ExtReal order = ExtReal((1.0 - p) / n) + gamma;
    r.inputs = json{{"check", r.check},
                    {"a", json::parse(a.describe())},
                    {"density", json::parse(mu.describe())},
                    {"p", p},
                    {"range", range_json(range)},
                    {"outside_hypothesis", allow_outside_hypothesis},
                    {"config", detail::verify_config_json(cfg, n)}}
                   .dump();
    r.notes.push_back("concavity order (1-p)/n + gamma = " + order.to_string());
    if (mu.alpha().is_finite() && mu.alpha().value() >= -1.0 / n) {
        const auto cmp = exponent_compare(p, mu.alpha(), n);
        r.notes.push_back(std::string("compared with the s-concavity order ") + cmp.s_exponent.to_string() + ": " +
                          (cmp.holds ? "at least as strong" : "weaker"));
    }

    const auto triples = make_triples(range.lo, range.hi, range.triples, cfg.seed);
    const auto mcfg = detail::measure_config(cfg, n);
    const CurveTransform tr{CurveKind::DilateT, 1.0};
    const auto values = evaluate_at_triples(
        triples, [&](std::span<const double> ts) { return measure_curve(a, mu, tr, ts, mcfg); });
    add_midpoint_points(r, triples, values, order, cfg.tolerance_factor);
    finalize(r);
    return r;
}

Report check_gaussian_improvement(const Body& a, const Body& b, double gamma, std::span<const double> lambdas,
                                  const VerifyConfig& cfg) {
    const int n = a.dim();
    if (b.dim() != n) throw DomainError("check_gaussian_improvement: dimension mismatch");
    const double exponent = gaussian_improved_exponent(gamma, n);
    const double radius = 1.0 / std::sqrt(gamma);
    for (const Body* body : {&a, &b}) {
        if (body->out_radius() > radius * (1.0 + 1e-12))
            throw DomainError("check_gaussian_improvement: operand out-radius " + format_double(body->out_radius()) +
                              " exceeds 1/sqrt(gamma) = " + format_double(radius));
    }
    if (lambdas.empty()) throw DomainError("check_gaussian_improvement: lambda grid must be non-empty");

    Report r;
    r.check = "check_gaussian_improvement";
    r.inputs = json{{"check", r.check},
                    {"a", json::parse(a.describe())},
                    {"b", json::parse(b.describe())},
                    {"gamma", gamma},
                    {"lambdas", std::vector<double>(lambdas.begin(), lambdas.end())},
                    {"config", detail::verify_config_json(cfg, n)}}
                   .dump();
    r.notes.push_back("exponent gamma/(1+gamma n) = " + format_double(exponent));

    const Density mu = Density::gaussian(n);
    const auto mcfg = detail::measure_config(cfg, n);
    const auto ma = measure(a, mu, mcfg);
    const auto mb = measure(b, mu, mcfg);
    for (double l : lambdas) {
        const Weight w(l);
        const auto lhs = measure(minkowski_combine(a, b, w), mu, mcfg);
        const auto [rhs, rhs_err] = detail::mean_with_error(ExtReal(exponent), w, ma.value, ma.abs_error, mb.value,
                                                             mb.abs_error);
        r.points.push_back(make_point(detail::label("lambda", l), lhs.value, lhs.abs_error, rhs, rhs_err,
                                      cfg.tolerance_factor));
    }
    finalize(r);
    return r;
}

Report check_B_property(const Density& mu, const Body& a, ConcavityRange range, const VerifyConfig& cfg) {
    const int n = a.dim();
    if (mu.dim() != n) throw DomainError("check_B_property: dimension mismatch");
    if (mu.alpha() < ExtReal(0.0)) throw DomainError("check_B_property: the measure must be log-concave (alpha >= 0)");
    if (range.hi < range.lo) throw DomainError("check_B_property: empty t range");
    Report r;
    r.check = "check_B_property";
    r.inputs = json{{"check", r.check},
                    {"a", json::parse(a.describe())},
                    {"density", json::parse(mu.describe())},
                    {"range", range_json(range)},
                    {"config", detail::verify_config_json(cfg, n)}}
                   .dump();
    const auto triples = make_triples(range.lo, range.hi, range.triples, cfg.seed);
    const auto mcfg = detail::measure_config(cfg, n);
    const CurveTransform tr{CurveKind::DilateExpT, 1.0};
    const auto values = evaluate_at_triples(
        triples, [&](std::span<const double> ts) { return measure_curve(a, mu, tr, ts, mcfg); });
    add_midpoint_points(r, triples, values, ExtReal(0.0), cfg.tolerance_factor);
    finalize(r);
    return r;
}

Report check_functional_B(const Density& f, const Density& g, ConcavityRange range, const VerifyConfig& cfg) {
    const int n = f.dim();
    if (g.dim() != n) throw DomainError("check_functional_B: dimension mismatch");
    if (f.alpha() < ExtReal(0.0) || g.alpha() < ExtReal(0.0))
        throw DomainError("check_functional_B: f and g must be log-concave (alpha >= 0)");
    if (range.hi < range.lo) throw DomainError("check_functional_B: empty t range");
    Report r;
    r.check = "check_functional_B";
    r.inputs = json{{"check", r.check},
                    {"f", json::parse(f.describe())},
                    {"g", json::parse(g.describe())},
                    {"range", range_json(range)},
                    {"config", detail::verify_config_json(cfg, n)}}
                   .dump();
    const auto triples = make_triples(range.lo, range.hi, range.triples, cfg.seed);
    const auto mcfg = detail::measure_config(cfg, n);
    double trunc = 0.0;
    const auto values = evaluate_at_triples(triples, [&](std::span<const double> ts) {
        auto curve = functional_B_curve(f, g, ts, mcfg);
        trunc = curve.truncation_threshold;
        return curve.points;
    });
    r.notes.push_back("integrands truncated where they drop below " + format_double(trunc) + " of their peak");
    add_midpoint_points(r, triples, values, ExtReal(0.0), cfg.tolerance_factor);
    finalize(r);
    return r;
}

Report check_reparameterization(const Density& mu, const Body& a, std::span<const double> t_grid,
                                const VerifyConfig& cfg) {
    const int n = a.dim();
    if (mu.dim() != n) throw DomainError("check_reparameterization: dimension mismatch");
    Report r;
    r.check = "check_reparameterization";
    r.inputs = json{{"check", r.check},
                    {"a", json::parse(a.describe())},
                    {"density", json::parse(mu.describe())},
                    {"t", std::vector<double>(t_grid.begin(), t_grid.end())},
                    {"config", detail::verify_config_json(cfg, n)}}
                   .dump();
    const auto mcfg = detail::measure_config(cfg, n);
    const auto direct = measure_curve(a, mu, {CurveKind::DilateExpT, 1.0}, t_grid, mcfg);
    const auto functional = functional_B_curve(Density::uniform_on_body(a), mu, t_grid, mcfg);
    for (std::size_t k = 0; k < direct.size(); ++k) {
        const auto& g = functional.points[k].estimate;
        const auto& f = direct[k].estimate;
        r.points.push_back(make_point(detail::label("t", direct[k].t), g.value, g.abs_error, f.value, f.abs_error,
                                      cfg.tolerance_factor, PointKind::Identity));
    }
    finalize(r);
    return r;
}

}  // namespace lpbm
