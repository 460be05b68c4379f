// Copyright (C) 2026 The lpbm Authors
// SPDX-License-Identifier: Apache-2.0

#include "lpbm/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "json.hpp"
#include "lpbm/errors.hpp"

namespace lpbm {

using json = nlohmann::json;

const char* to_string(DensityFamily family) {
    switch (family) {
        case DensityFamily::Lebesgue: return "lebesgue";
        case DensityFamily::Gaussian: return "gaussian";
        case DensityFamily::PowerConvex: return "power_convex";
        case DensityFamily::UniformOnBody: return "uniform_on_body";
        case DensityFamily::Custom: return "custom";
    }
    return "?";
}

struct Density::State {
    int dim = 0;
    ExtReal alpha;
    DensityFamily family = DensityFamily::Custom;
    std::function<double(std::span<const double>)> eval;
    std::optional<Potential> potential;
    std::optional<std::vector<double>> exact_extent;
    std::function<std::optional<std::vector<double>>(double)> truncation;
    std::optional<Body> restriction;
    json description;
};

namespace {

void require_dim(int dim) {
    if (dim < 1 || dim > 4) throw DomainError("density dimension must be 1..4");
}

std::optional<std::vector<double>> min_extent(std::optional<std::vector<double>> a,
                                              const std::optional<std::vector<double>>& b) {
    if (!a) return b;
    if (!b) return a;
    for (std::size_t i = 0; i < a->size(); ++i) (*a)[i] = std::min((*a)[i], (*b)[i]);
    return a;
}

}  // namespace

Density Density::lebesgue(int dim) {
    require_dim(dim);
    auto s = std::make_shared<State>();
    s->dim = dim;
    s->alpha = ExtReal::pos_inf();
    s->family = DensityFamily::Lebesgue;
    s->eval = [](std::span<const double>) { return 1.0; };
    s->truncation = [](double) { return std::optional<std::vector<double>>{}; };
    s->description = {{"family", "lebesgue"}, {"dim", dim}};
    return Density(std::move(s));
}

Density Density::gaussian(int dim) {
    require_dim(dim);
    auto s = std::make_shared<State>();
    s->dim = dim;
    s->alpha = ExtReal(0.0);
    s->family = DensityFamily::Gaussian;
    const double log_norm = 0.5 * dim * std::log(2.0 * std::numbers::pi);
    const double norm = std::exp(-log_norm);
    s->eval = [norm](std::span<const double> x) { return norm * std::exp(-0.5 * dot(x, x)); };
    Potential v;
    v.value = [log_norm](std::span<const double> x) { return 0.5 * dot(x, x) + log_norm; };
    v.gradient = [](std::span<const double> x) { return Point(x.begin(), x.end()); };
    v.hessian = [dim](std::span<const double>) {
        SymMatrix h(dim);
        for (int i = 0; i < dim; ++i) h(i, i) = 1.0;
        return h;
    };
    s->potential = std::move(v);
    s->truncation = [dim](double tau) {
        return std::optional<std::vector<double>>(std::vector<double>(static_cast<std::size_t>(dim), std::sqrt(-2.0 * std::log(tau))));
    };
    s->description = {{"family", "gaussian"}, {"dim", dim}};
    return Density(std::move(s));
}

Density Density::power_convex(int dim, ExtReal alpha, double beta) {
    require_dim(dim);
    if (!alpha.is_finite() || !(alpha.value() < 0.0))
        throw DomainError("power_convex: alpha must be a finite negative number, got " + alpha.to_string());
    if (!(beta > 0.0) || !std::isfinite(beta)) throw DomainError("power_convex: beta must be positive");
    auto s = std::make_shared<State>();
    s->dim = dim;
    s->alpha = alpha;
    s->family = DensityFamily::PowerConvex;
    const double e = 1.0 / alpha.value();
    s->eval = [e, beta](std::span<const double> x) {
        double l1 = 0.0;
        for (double v : x) l1 += std::abs(v);
        return std::pow(1.0 + beta * l1, e);
    };
    const double a = alpha.value();
    s->truncation = [dim, a, beta](double tau) {
        return std::optional<std::vector<double>>(std::vector<double>(static_cast<std::size_t>(dim), (std::pow(tau, a) - 1.0) / beta));
    };
    s->description = {{"family", "power_convex"}, {"dim", dim}, {"alpha", alpha.to_string()}, {"beta", beta}};
    return Density(std::move(s));
}

Density Density::uniform_on_body(Body body) {
    require_dim(body.dim());
    auto s = std::make_shared<State>();
    s->dim = body.dim();
    s->alpha = ExtReal::pos_inf();
    s->family = DensityFamily::UniformOnBody;
    s->eval = [body](std::span<const double> x) { return body.contains(x) ? 1.0 : 0.0; };
    s->exact_extent = body.octant_extent();
    const auto ext = *s->exact_extent;
    s->truncation = [ext](double) { return std::optional<std::vector<double>>(ext); };
    s->description = {{"family", "uniform_on_body"}, {"body", json::parse(body.describe())}};
    return Density(std::move(s));
}

Density Density::custom(int dim, ExtReal alpha, std::function<double(std::span<const double>)> eval, std::string name,
                        std::vector<double> extent) {
    require_dim(dim);
    if (!eval) throw DomainError("custom density: evaluation callback required");
    if (!extent.empty() && extent.size() != static_cast<std::size_t>(dim))
        throw DomainError("custom density: extent must have one entry per axis");
    auto s = std::make_shared<State>();
    s->dim = dim;
    s->alpha = alpha;
    s->family = DensityFamily::Custom;
    s->eval = std::move(eval);
    if (!extent.empty()) s->exact_extent = extent;
    auto ext = s->exact_extent;
    s->truncation = [ext](double) { return ext; };
    s->description = {{"family", "custom"}, {"dim", dim}, {"name", std::move(name)}, {"alpha", alpha.to_string()}};
    if (!extent.empty()) s->description["extent"] = extent;
    return Density(std::move(s));
}

Density Density::restricted_to(Body body) const {
    if (body.dim() != dim()) throw DomainError("restricted_to: dimension mismatch");
    auto s = std::make_shared<State>(*s_);
    auto inner = s_->eval;
    s->eval = [inner, body](std::span<const double> x) { return body.contains(x) ? inner(x) : 0.0; };
    const auto body_ext = body.octant_extent();
    s->exact_extent = min_extent(s_->exact_extent, body_ext);
    auto base_trunc = s_->truncation;
    s->truncation = [base_trunc, body_ext](double tau) { return min_extent(base_trunc(tau), body_ext); };
    s->restriction = body;
    s->potential.reset();
    s->description = {{"family", s_->description["family"]},
                      {"base", s_->description},
                      {"restricted_to", json::parse(body.describe())}};
    return Density(std::move(s));
}

int Density::dim() const { return s_->dim; }
ExtReal Density::alpha() const { return s_->alpha; }
DensityFamily Density::family() const { return s_->family; }
double Density::operator()(std::span<const double> x) const {
    if (x.size() != static_cast<std::size_t>(s_->dim)) throw DomainError("density: dimension mismatch");
    return s_->eval(x);
}
const Potential* Density::potential() const { return s_->potential ? &*s_->potential : nullptr; }
std::optional<std::vector<double>> Density::exact_extent() const { return s_->exact_extent; }
std::optional<std::vector<double>> Density::truncation_extent(double rel_threshold) const {
    if (!(rel_threshold > 0.0 && rel_threshold < 1.0)) throw DomainError("truncation threshold must lie in (0,1)");
    return s_->truncation(rel_threshold);
}
std::string Density::describe() const { return s_->description.dump(); }

int default_resolution(int dim) {
    switch (dim) {
        case 1: return 4096;
        case 2: return 256;
        case 3: return 64;
        default: return 16;
    }
}

namespace {

bool is_plain_lebesgue(const Density& d) { return d.family() == DensityFamily::Lebesgue && !d.exact_extent(); }

/// Cell-center integral of density over body on the octant box [0, ext]
/// split into n^dim cells. Columns along the last axis are found by binary
/// search on membership, which is exact for downward-closed traces.
double grid_integral(const Body& body, const Density& density, const std::vector<double>& ext, int n) {
    const int dim = body.dim();
    std::vector<double> h(ext.size());
    double cell = 1.0;
    for (std::size_t i = 0; i < ext.size(); ++i) {
        h[i] = ext[i] / n;
        cell *= h[i];
    }
    const bool lebesgue = is_plain_lebesgue(density);
    const int last = dim - 1;
    const auto ul = static_cast<std::size_t>(last);

    std::size_t columns = 1;
    for (int i = 0; i < last; ++i) columns *= static_cast<std::size_t>(n);
    std::vector<double> partial(columns, 0.0);
    std::vector<double> column_values(static_cast<std::size_t>(n));
    Point x(static_cast<std::size_t>(dim));
    int prev_count = n;

    for (std::size_t c = 0; c < columns; ++c) {
        std::size_t rem = c;
        for (int i = 0; i < last; ++i) {
            const auto k = rem % static_cast<std::size_t>(n);
            rem /= static_cast<std::size_t>(n);
            x[static_cast<std::size_t>(i)] = (static_cast<double>(k) + 0.5) * h[static_cast<std::size_t>(i)];
        }
        // Counts only shrink along axis 0 inside a row; restart at each row.
        const int hi_start = (dim >= 2 && c % static_cast<std::size_t>(n) != 0) ? prev_count : n;
        int lo = 0;
        int hi = hi_start;
        while (lo < hi) {
            const int mid = (lo + hi) / 2;
            x[ul] = (mid + 0.5) * h[ul];
            if (body.contains(x))
                lo = mid + 1;
            else
                hi = mid;
        }
        const int count = lo;
        prev_count = count;
        if (count == 0) continue;
        if (lebesgue) {
            partial[c] = count * cell;
            continue;
        }
        for (int k = 0; k < count; ++k) {
            x[ul] = (k + 0.5) * h[ul];
            column_values[static_cast<std::size_t>(k)] = density(x);
        }
        partial[c] = pairwise_sum(std::span<const double>(column_values.data(), static_cast<std::size_t>(count))) * cell;
    }
    return std::ldexp(pairwise_sum(partial), dim);
}

MeasureEstimate monte_carlo(const Body& body, const Density& density, const std::vector<double>& ext,
                            const MeasureConfig& cfg) {
    const int dim = body.dim();
    Rng rng(cfg.seed);
    double box = 1.0;
    for (double e : ext) box *= e;
    const std::uint64_t m = std::max<std::uint64_t>(cfg.mc_samples, 2);
    Point x(static_cast<std::size_t>(dim));
    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::uint64_t k = 0; k < m; ++k) {
        for (int i = 0; i < dim; ++i) x[static_cast<std::size_t>(i)] = rng.uniform() * ext[static_cast<std::size_t>(i)];
        const double v = body.contains(x) ? density(x) : 0.0;
        sum += v;
        sum_sq += v * v;
    }
    const double mean = sum / static_cast<double>(m);
    const double var = std::max(0.0, sum_sq / static_cast<double>(m) - mean * mean);
    const double scale = std::ldexp(box, dim);
    MeasureEstimate out;
    out.value = scale * mean;
    out.abs_error = 3.0 * scale * std::sqrt(var / static_cast<double>(m));
    out.method = MeasureMethod::MonteCarlo;
    out.samples = m;
    out.seed = cfg.seed;
    return out;
}

}  // namespace

MeasureEstimate measure(const Body& body, const Density& density, const MeasureConfig& cfg) {
    if (body.dim() != density.dim()) throw DomainError("measure: body and density dimensions differ");
    MeasureEstimate out;
    const int n = cfg.resolution > 0 ? cfg.resolution : default_resolution(body.dim());
    if (n < 4) throw DomainError("measure: resolution must be >= 4");
    out.resolution = n;
    out.seed = cfg.seed;
    if (body.degenerate()) return out;

    auto ext = body.octant_extent();
    for (double e : ext)
        if (!std::isfinite(e)) throw DomainError("measure: body is unbounded");
    if (auto de = density.exact_extent())
        for (std::size_t i = 0; i < ext.size(); ++i) ext[i] = std::min(ext[i], (*de)[i]);

    if (body.dim() >= 4) {
        auto mc = monte_carlo(body, density, ext, cfg);
        mc.resolution = 0;
        return mc;
    }
    out.value = grid_integral(body, density, ext, n);
    out.abs_error = std::abs(out.value - grid_integral(body, density, ext, n / 2));
    return out;
}

MeasureEstimate measure(const GridSet& grid, const Density& density) {
    if (grid.dim() != density.dim()) throw DomainError("measure: grid and density dimensions differ");
    auto integrate = [&](const GridSet& g) {
        const bool lebesgue = is_plain_lebesgue(density);
        if (lebesgue) return g.volume();
        std::vector<double> vals;
        vals.reserve(g.marked_count());
        for (std::size_t flat = 0; flat < g.cell_count(); ++flat)
            if (g.marked(flat)) vals.push_back(density(g.cell_center(flat)));
        return std::ldexp(pairwise_sum(vals) * g.cell_volume(), g.dim());
    };
    MeasureEstimate out;
    out.resolution = grid.resolution();
    out.value = integrate(grid);
    out.abs_error = grid.resolution() >= 4 ? std::abs(out.value - integrate(grid.coarsened())) : out.value;
    return out;
}

double CurveTransform::scale(double t) const {
    switch (kind) {
        case CurveKind::DilateT:
            if (t < 0.0) throw DomainError("dilate_t: t must be >= 0");
            return t;
        case CurveKind::DilateTPow:
            if (!(t > 0.0)) throw DomainError("dilate_t_pow: t must be > 0");
            if (!(p > 0.0)) throw DomainError("dilate_t_pow: exponent p must be > 0");
            return std::pow(t, 1.0 / p);
        case CurveKind::DilateExpT: return std::exp(t);
    }
    return t;
}

namespace {

void require_sorted(std::span<const double> t_grid) {
    if (t_grid.empty()) throw DomainError("t grid must be non-empty");
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        if (!std::isfinite(t_grid[i])) throw DomainError("t grid must be finite");
        if (i > 0 && t_grid[i] < t_grid[i - 1]) throw DomainError("t grid must be sorted ascending");
    }
}

}  // namespace

std::vector<CurvePoint> measure_curve(const Body& body, const Density& density, CurveTransform transform,
                                      std::span<const double> t_grid, const MeasureConfig& cfg) {
    require_sorted(t_grid);
    for (double t : t_grid) (void)transform.scale(t);
    std::vector<CurvePoint> out;
    out.reserve(t_grid.size());
    for (double t : t_grid) out.push_back({t, measure(dilate(body, transform.scale(t)), density, cfg)});
    return out;
}

namespace {

double functional_integral(const Density& f, const Density& g, double shrink, const std::vector<double>& box, int n) {
    const int dim = f.dim();
    std::vector<double> h(box.size());
    double cell = 1.0;
    for (std::size_t i = 0; i < box.size(); ++i) {
        h[i] = box[i] / n;
        cell *= h[i];
    }
    std::size_t cells = 1;
    for (int i = 0; i < dim; ++i) cells *= static_cast<std::size_t>(n);
    std::vector<double> vals(cells);
    Point x(static_cast<std::size_t>(dim));
    Point y(static_cast<std::size_t>(dim));
    for (std::size_t c = 0; c < cells; ++c) {
        std::size_t rem = c;
        for (int i = 0; i < dim; ++i) {
            const auto k = rem % static_cast<std::size_t>(n);
            rem /= static_cast<std::size_t>(n);
            const auto ui = static_cast<std::size_t>(i);
            x[ui] = (static_cast<double>(k) + 0.5) * h[ui];
            y[ui] = shrink * x[ui];
        }
        const double gv = g(x);
        vals[c] = gv == 0.0 ? 0.0 : f(y) * gv;
    }
    return std::ldexp(pairwise_sum(vals) * cell, dim);
}

}  // namespace

FunctionalCurve functional_B_curve(const Density& f, const Density& g, std::span<const double> t_grid,
                                   const MeasureConfig& cfg) {
    if (f.dim() != g.dim()) throw DomainError("functional_B_curve: dimension mismatch");
    if (f.dim() > 3) throw Unsupported("functional_B_curve: dimension must be <= 3");
    require_sorted(t_grid);
    FunctionalCurve out;
    const auto fe = f.truncation_extent(out.truncation_threshold);
    const auto ge = g.truncation_extent(out.truncation_threshold);
    if (!fe && !ge) throw DomainError("functional_B_curve: integrand diverges (neither function decays)");
    const double inf = std::numeric_limits<double>::infinity();
    out.f_extent = fe ? *fe : std::vector<double>(static_cast<std::size_t>(f.dim()), inf);
    out.g_extent = ge ? *ge : std::vector<double>(static_cast<std::size_t>(f.dim()), inf);
    const int n = cfg.resolution > 0 ? cfg.resolution : default_resolution(f.dim());
    if (n < 4) throw DomainError("functional_B_curve: resolution must be >= 4");
    for (double t : t_grid) {
        std::vector<double> box(out.f_extent.size());
        for (std::size_t i = 0; i < box.size(); ++i) box[i] = std::min(std::exp(t) * out.f_extent[i], out.g_extent[i]);
        const double shrink = std::exp(-t);
        MeasureEstimate e;
        e.resolution = n;
        e.value = functional_integral(f, g, shrink, box, n);
        e.abs_error = std::abs(e.value - functional_integral(f, g, shrink, box, n / 2));
        out.points.push_back({t, e});
    }
    return out;
}

}  // namespace lpbm
