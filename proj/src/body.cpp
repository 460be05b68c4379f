// Copyright (C) 2026 The lpbm Authors
// SPDX-License-Identifier: Apache-2.0

#include "lpbm/body.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "json.hpp"
#include "lpbm/errors.hpp"

namespace lpbm {

using json = nlohmann::json;

const char* to_string(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::LqBall: return "LqBall";
        case FamilyTag::HPolytope: return "HPolytope";
        case FamilyTag::GridSet: return "GridSet";
        case FamilyTag::WulffSet: return "WulffSet";
        case FamilyTag::Dilate: return "Dilate";
        case FamilyTag::Sum: return "Sum";
    }
    return "?";
}

// ---------------------------------------------------------------- GridSet

GridSet::GridSet(int dim, int resolution, std::vector<double> cell_size)
    : dim_(dim), n_(resolution), h_(std::move(cell_size)) {
    if (dim < 1 || dim > 4) throw Unsupported("GridSet: dimension must be 1..4");
    if (resolution < 2) throw DomainError("GridSet: resolution must be >= 2");
    if (h_.size() != static_cast<std::size_t>(dim)) throw DomainError("GridSet: cell size per axis required");
    for (double h : h_)
        if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("GridSet: cell sizes must be positive");
    std::size_t cells = 1;
    for (int i = 0; i < dim; ++i) cells *= static_cast<std::size_t>(resolution);
    marks_.assign(cells, 0);
}

std::size_t GridSet::flat_index(std::span<const int> idx) const {
    std::size_t flat = 0;
    for (int i = dim_ - 1; i >= 0; --i) flat = flat * static_cast<std::size_t>(n_) + static_cast<std::size_t>(idx[i]);
    return flat;
}

std::vector<int> GridSet::unflatten(std::size_t flat) const {
    std::vector<int> idx(static_cast<std::size_t>(dim_));
    for (int i = 0; i < dim_; ++i) {
        idx[static_cast<std::size_t>(i)] = static_cast<int>(flat % static_cast<std::size_t>(n_));
        flat /= static_cast<std::size_t>(n_);
    }
    return idx;
}

bool GridSet::marked_at(std::span<const int> idx) const {
    for (int i = 0; i < dim_; ++i)
        if (idx[i] < 0 || idx[i] >= n_) return false;
    return marks_[flat_index(idx)] != 0;
}

Point GridSet::cell_center(std::size_t flat) const {
    Point c(static_cast<std::size_t>(dim_));
    for (int i = 0; i < dim_; ++i) {
        const auto k = flat % static_cast<std::size_t>(n_);
        flat /= static_cast<std::size_t>(n_);
        c[static_cast<std::size_t>(i)] = (static_cast<double>(k) + 0.5) * h_[static_cast<std::size_t>(i)];
    }
    return c;
}

bool GridSet::contains(std::span<const double> x) const {
    if (x.size() != static_cast<std::size_t>(dim_)) throw DomainError("GridSet: dimension mismatch");
    std::size_t flat = 0;
    for (int i = dim_ - 1; i >= 0; --i) {
        const double v = std::abs(x[static_cast<std::size_t>(i)]) / h_[static_cast<std::size_t>(i)];
        if (!(v < n_)) return false;
        flat = flat * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
    }
    return marks_[flat] != 0;
}

std::size_t GridSet::marked_count() const {
    return static_cast<std::size_t>(std::count(marks_.begin(), marks_.end(), std::uint8_t{1}));
}

double GridSet::cell_volume() const {
    double v = 1.0;
    for (double h : h_) v *= h;
    return v;
}

double GridSet::volume() const {
    return std::ldexp(static_cast<double>(marked_count()) * cell_volume(), dim_);
}

void GridSet::enforce_downward_closure() {
    const auto n = static_cast<std::size_t>(n_);
    std::size_t stride = 1;
    for (int axis = 0; axis < dim_; ++axis) {
        const std::size_t block = stride * n;
        for (std::size_t base = 0; base < marks_.size(); base += block) {
            for (std::size_t off = 0; off < stride; ++off) {
                std::uint8_t acc = 0;
                for (std::size_t k = n; k-- > 0;) {
                    auto& m = marks_[base + off + k * stride];
                    acc |= m;
                    m = acc;
                }
            }
        }
        stride = block;
    }
}

bool GridSet::is_downward_closed() const {
    GridSet copy = *this;
    copy.enforce_downward_closure();
    return copy.marks_ == marks_;
}

GridSet GridSet::coarsened() const {
    const int nc = n_ / 2;
    std::vector<double> hc(h_);
    for (auto& h : hc) h *= 2.0;
    GridSet out(dim_, nc, std::move(hc));
    std::vector<int> fine(static_cast<std::size_t>(dim_));
    for (std::size_t flat = 0; flat < out.marks_.size(); ++flat) {
        auto idx = out.unflatten(flat);
        for (int i = 0; i < dim_; ++i) fine[static_cast<std::size_t>(i)] = 2 * idx[static_cast<std::size_t>(i)] + 1;
        out.marks_[flat] = marks_[flat_index(fine)];
    }
    return out;
}

std::vector<std::size_t> GridSet::maximal_cells() const {
    std::vector<std::size_t> out;
    for (std::size_t flat = 0; flat < marks_.size(); ++flat) {
        if (!marks_[flat]) continue;
        auto idx = unflatten(flat);
        bool maximal = true;
        for (int i = 0; i < dim_ && maximal; ++i) {
            auto nb = idx;
            nb[static_cast<std::size_t>(i)] += 1;
            if (marked_at(nb)) maximal = false;
        }
        if (maximal) out.push_back(flat);
    }
    return out;
}

double GridSet::support(std::span<const double> u) const {
    double best = 0.0;
    for (std::size_t flat : maximal_cells()) best = std::max(best, abs_dot(cell_center(flat), u));
    return best;
}

std::vector<double> GridSet::extent() const {
    std::vector<double> ext(static_cast<std::size_t>(dim_), 0.0);
    for (std::size_t flat = 0; flat < marks_.size(); ++flat) {
        if (!marks_[flat]) continue;
        auto idx = unflatten(flat);
        for (int i = 0; i < dim_; ++i) {
            const auto ui = static_cast<std::size_t>(i);
            ext[ui] = std::max(ext[ui], (idx[ui] + 1) * h_[ui]);
        }
    }
    return ext;
}

double GridSet::out_radius() const {
    double r = 0.0;
    for (std::size_t flat = 0; flat < marks_.size(); ++flat) {
        if (!marks_[flat]) continue;
        auto idx = unflatten(flat);
        double s = 0.0;
        for (int i = 0; i < dim_; ++i) {
            const auto ui = static_cast<std::size_t>(i);
            const double c = (idx[ui] + 1) * h_[ui];
            s += c * c;
        }
        r = std::max(r, std::sqrt(s));
    }
    return r;
}

// ---------------------------------------------------------------- BodyModel defaults

double BodyModel::support(std::span<const double>) const {
    throw Unsupported(std::string("support oracle not available for ") + to_string(family()));
}

double BodyModel::radial(std::span<const double> d) const {
    const double dn = norm2(d);
    if (!(dn > 0.0)) throw DomainError("radial: zero direction");
    Point x(d.begin(), d.end());
    auto member = [&](double r) {
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = r * d[i];
        return contains(x);
    };
    double lo = 0.0;
    double hi = 1.01 * out_radius() / dn + 1e-300;
    int grow = 0;
    while (member(hi)) {
        hi *= 2.0;
        if (++grow > 60) throw NumericalError("radial: body appears unbounded");
    }
    for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (member(mid) ? lo : hi) = mid;
    }
    return lo;
}

namespace {

// ---------------------------------------------------------------- LqBall

class LqBallModel final : public BodyModel {
public:
    LqBallModel(ExtReal q, std::vector<double> radii) : q_(q), r_(std::move(radii)) {
        if (r_.empty() || r_.size() > 4) throw DomainError("LqBall: dimension must be 1..4");
        if (q_ < ExtReal(1.0)) throw DomainError("LqBall: q must be >= 1, got " + q_.to_string());
        for (double r : r_)
            if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("LqBall: radii must be positive");
        if (q_.is_finite()) {
            qv_ = q_.value();
            conj_ = qv_ == 1.0 ? std::numeric_limits<double>::infinity() : qv_ / (qv_ - 1.0);
        }
        out_radius_ = compute_out_radius();
    }

    int dim() const override { return static_cast<int>(r_.size()); }

    bool contains(std::span<const double> x) const override {
        return gauge(x) <= 1.0;
    }

    bool has_support() const override { return true; }

    double support(std::span<const double> u) const override {
        // Dual norm of r o u with exponent q' = q/(q-1).
        if (q_.is_pos_inf()) {
            double s = 0.0;
            for (std::size_t i = 0; i < r_.size(); ++i) s += r_[i] * std::abs(u[i]);
            return s;
        }
        if (std::isinf(conj_)) {
            double m = 0.0;
            for (std::size_t i = 0; i < r_.size(); ++i) m = std::max(m, r_[i] * std::abs(u[i]));
            return m;
        }
        double m = 0.0;
        for (std::size_t i = 0; i < r_.size(); ++i) m = std::max(m, r_[i] * std::abs(u[i]));
        if (m == 0.0) return 0.0;
        double s = 0.0;
        for (std::size_t i = 0; i < r_.size(); ++i) s += std::pow(r_[i] * std::abs(u[i]) / m, conj_);
        return m * std::pow(s, 1.0 / conj_);
    }

    double radial(std::span<const double> d) const override { return 1.0 / gauge(d); }
    double out_radius() const override { return out_radius_; }
    FamilyTag family() const override { return FamilyTag::LqBall; }

    std::string describe() const override {
        return json{{"family", "lq_ball"}, {"q", q_.to_string()}, {"radii", r_}}.dump();
    }

private:
    double gauge(std::span<const double> x) const {
        if (x.size() != r_.size()) throw DomainError("LqBall: dimension mismatch");
        if (q_.is_pos_inf()) {
            double m = 0.0;
            for (std::size_t i = 0; i < r_.size(); ++i) m = std::max(m, std::abs(x[i]) / r_[i]);
            return m;
        }
        double m = 0.0;
        for (std::size_t i = 0; i < r_.size(); ++i) m = std::max(m, std::abs(x[i]) / r_[i]);
        if (m == 0.0) return 0.0;
        double s = 0.0;
        for (std::size_t i = 0; i < r_.size(); ++i) s += std::pow(std::abs(x[i]) / r_[i] / m, qv_);
        return m * std::pow(s, 1.0 / qv_);
    }

    double compute_out_radius() const {
        // Tight Euclidean radius via Hoelder: for q > 2 the extremal point
        // spreads over all axes, for q <= 2 it sits on the longest axis.
        if (q_.is_pos_inf()) {
            double s = 0.0;
            for (double r : r_) s += r * r;
            return std::sqrt(s);
        }
        if (qv_ <= 2.0) return *std::max_element(r_.begin(), r_.end());
        const double e = 2.0 * qv_ / (qv_ - 2.0);
        const double rmax = *std::max_element(r_.begin(), r_.end());
        double s = 0.0;
        for (double r : r_) s += std::pow(r / rmax, e);
        return rmax * std::pow(s, (qv_ - 2.0) / (2.0 * qv_));
    }

    ExtReal q_;
    std::vector<double> r_;
    double qv_ = 0.0;
    double conj_ = 1.0;
    double out_radius_ = 0.0;
};

// ---------------------------------------------------------------- HPolytope

bool solve_small(std::vector<double> a, std::vector<double> b, int n, std::vector<double>& x) {
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a[static_cast<std::size_t>(r * n + col)]) > std::abs(a[static_cast<std::size_t>(piv * n + col)]))
                piv = r;
        if (std::abs(a[static_cast<std::size_t>(piv * n + col)]) < 1e-12) return false;
        if (piv != col) {
            for (int k = 0; k < n; ++k)
                std::swap(a[static_cast<std::size_t>(piv * n + k)], a[static_cast<std::size_t>(col * n + k)]);
            std::swap(b[static_cast<std::size_t>(piv)], b[static_cast<std::size_t>(col)]);
        }
        for (int r = col + 1; r < n; ++r) {
            const double f = a[static_cast<std::size_t>(r * n + col)] / a[static_cast<std::size_t>(col * n + col)];
            for (int k = col; k < n; ++k) a[static_cast<std::size_t>(r * n + k)] -= f * a[static_cast<std::size_t>(col * n + k)];
            b[static_cast<std::size_t>(r)] -= f * b[static_cast<std::size_t>(col)];
        }
    }
    x.assign(static_cast<std::size_t>(n), 0.0);
    for (int r = n - 1; r >= 0; --r) {
        double s = b[static_cast<std::size_t>(r)];
        for (int k = r + 1; k < n; ++k) s -= a[static_cast<std::size_t>(r * n + k)] * x[static_cast<std::size_t>(k)];
        x[static_cast<std::size_t>(r)] = s / a[static_cast<std::size_t>(r * n + r)];
    }
    return true;
}

class HPolytopeModel final : public BodyModel {
public:
    explicit HPolytopeModel(std::vector<Body::Halfspace> hs) : hs_(std::move(hs)) {
        if (hs_.empty()) throw DomainError("HPolytope: at least one halfspace required");
        n_ = static_cast<int>(hs_.front().normal.size());
        if (n_ < 1 || n_ > 4) throw DomainError("HPolytope: dimension must be 1..4");
        std::vector<bool> covered(static_cast<std::size_t>(n_), false);
        for (auto& h : hs_) {
            if (h.normal.size() != static_cast<std::size_t>(n_)) throw DomainError("HPolytope: inconsistent normal dimension");
            if (!(h.offset > 0.0)) throw DomainError("HPolytope: offsets must be positive (origin in the interior)");
            for (std::size_t i = 0; i < h.normal.size(); ++i) {
                h.normal[i] = std::abs(h.normal[i]);
                if (h.normal[i] > 0.0) covered[i] = true;
            }
        }
        if (std::find(covered.begin(), covered.end(), false) != covered.end())
            throw DomainError("HPolytope: unbounded (some axis is never constrained)");
        enumerate_octant_vertices();
    }

    int dim() const override { return n_; }

    bool contains(std::span<const double> x) const override {
        for (const auto& h : hs_)
            if (abs_dot(h.normal, x) > h.offset) return false;
        return true;
    }

    bool has_support() const override { return true; }

    double support(std::span<const double> u) const override {
        double best = 0.0;
        for (const auto& v : vertices_) best = std::max(best, abs_dot(v, u));
        return best;
    }

    double radial(std::span<const double> d) const override {
        double r = std::numeric_limits<double>::infinity();
        for (const auto& h : hs_) {
            const double s = abs_dot(h.normal, d);
            if (s > 0.0) r = std::min(r, h.offset / s);
        }
        return r;
    }

    double out_radius() const override {
        double r = 0.0;
        for (const auto& v : vertices_) r = std::max(r, norm2(v));
        return r;
    }

    FamilyTag family() const override { return FamilyTag::HPolytope; }

    std::string describe() const override {
        json hs = json::array();
        for (const auto& h : hs_) hs.push_back({{"normal", h.normal}, {"offset", h.offset}});
        return json{{"family", "h_polytope"}, {"halfspaces", hs}}.dump();
    }

private:
    // Vertices of the positive-octant trace {x >= 0, <|u_j|, x> <= c_j}; the
    // support of the unconditional body is attained there.
    void enumerate_octant_vertices() {
        const int m = static_cast<int>(hs_.size());
        const int rows = m + n_;
        auto row = [&](int r, std::vector<double>& a, double& b) {
            a.assign(static_cast<std::size_t>(n_), 0.0);
            if (r < m) {
                a = hs_[static_cast<std::size_t>(r)].normal;
                b = hs_[static_cast<std::size_t>(r)].offset;
            } else {
                a[static_cast<std::size_t>(r - m)] = -1.0;
                b = 0.0;
            }
        };
        std::vector<int> pick(static_cast<std::size_t>(n_));
        std::iota(pick.begin(), pick.end(), 0);
        std::vector<double> a, x, rowv;
        std::vector<double> bvec;
        while (true) {
            a.clear();
            bvec.clear();
            for (int r : pick) {
                double b = 0.0;
                row(r, rowv, b);
                a.insert(a.end(), rowv.begin(), rowv.end());
                bvec.push_back(b);
            }
            if (solve_small(a, bvec, n_, x)) {
                bool feasible = true;
                for (double xi : x) feasible = feasible && xi >= -1e-10;
                for (const auto& h : hs_) feasible = feasible && dot(h.normal, x) <= h.offset * (1.0 + 1e-10) + 1e-14;
                if (feasible) {
                    for (auto& xi : x) xi = std::max(xi, 0.0);
                    vertices_.push_back(x);
                }
            }
            int k = n_ - 1;
            while (k >= 0 && pick[static_cast<std::size_t>(k)] == rows - n_ + k) --k;
            if (k < 0) break;
            ++pick[static_cast<std::size_t>(k)];
            for (int j = k + 1; j < n_; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
        if (vertices_.empty()) throw NumericalError("HPolytope: vertex enumeration failed");
    }

    std::vector<Body::Halfspace> hs_;
    int n_ = 0;
    std::vector<Point> vertices_;
};

// ---------------------------------------------------------------- Grid

class GridBodyModel final : public BodyModel {
public:
    explicit GridBodyModel(GridSet g) : g_(std::move(g)), maximal_(g_.maximal_cells()), out_radius_(g_.out_radius()) {}

    int dim() const override { return g_.dim(); }
    bool contains(std::span<const double> x) const override { return g_.contains(x); }
    bool has_support() const override { return true; }

    double support(std::span<const double> u) const override {
        double best = 0.0;
        for (std::size_t flat : maximal_) best = std::max(best, abs_dot(g_.cell_center(flat), u));
        return best;
    }

    double out_radius() const override { return out_radius_; }
    FamilyTag family() const override { return FamilyTag::GridSet; }

    std::string describe() const override {
        return json{{"family", "grid_set"},
                    {"resolution", g_.resolution()},
                    {"cell_size", g_.cell_sizes()},
                    {"marked", g_.marked_count()}}
            .dump();
    }

    const GridSet* as_grid() const override { return &g_; }

private:
    GridSet g_;
    std::vector<std::size_t> maximal_;
    double out_radius_;
};

// ---------------------------------------------------------------- Dilate

class DilateModel final : public BodyModel {
public:
    DilateModel(Body base, double t) : base_(std::move(base)), t_(t) {}

    int dim() const override { return base_.dim(); }

    bool contains(std::span<const double> x) const override {
        if (t_ == 0.0) return std::all_of(x.begin(), x.end(), [](double v) { return v == 0.0; });
        Point y(x.begin(), x.end());
        for (auto& v : y) v /= t_;
        return base_.contains(y);
    }

    bool has_support() const override { return base_.has_support(); }
    double support(std::span<const double> u) const override { return t_ * base_.support(u); }
    double radial(std::span<const double> d) const override { return t_ * base_.radial(d); }
    double out_radius() const override { return t_ * base_.out_radius(); }
    FamilyTag family() const override { return FamilyTag::Dilate; }
    bool degenerate() const override { return t_ == 0.0; }

    std::string describe() const override {
        return json{{"family", "dilate"}, {"t", t_}, {"of", json::parse(base_.describe())}}.dump();
    }

private:
    Body base_;
    double t_;
};

}  // namespace

// ---------------------------------------------------------------- Body

Body::Body(std::shared_ptr<const BodyModel> model) : model_(std::move(model)) {
    if (!model_) throw DomainError("Body: null model");
}

Body Body::lq_ball(ExtReal q, std::vector<double> radii) {
    return Body(std::make_shared<LqBallModel>(q, std::move(radii)));
}

Body Body::box(std::vector<double> radii) { return lq_ball(ExtReal::pos_inf(), std::move(radii)); }

Body Body::h_polytope(std::vector<Halfspace> halfspaces) {
    return Body(std::make_shared<HPolytopeModel>(std::move(halfspaces)));
}

Body Body::grid(GridSet grid) { return Body(std::make_shared<GridBodyModel>(std::move(grid))); }

int Body::dim() const { return model_->dim(); }

bool Body::contains(std::span<const double> x) const {
    if (x.size() != static_cast<std::size_t>(dim())) throw DomainError("Body::contains: dimension mismatch");
    return model_->contains(x);
}

bool Body::has_support() const { return model_->has_support(); }

double Body::support(std::span<const double> u) const {
    if (u.size() != static_cast<std::size_t>(dim())) throw DomainError("Body::support: dimension mismatch");
    return model_->support(u);
}

double Body::radial(std::span<const double> d) const {
    if (d.size() != static_cast<std::size_t>(dim())) throw DomainError("Body::radial: dimension mismatch");
    if (degenerate()) return 0.0;
    return model_->radial(d);
}

double Body::out_radius() const { return model_->out_radius(); }
FamilyTag Body::family() const { return model_->family(); }
bool Body::unconditional() const { return true; }
bool Body::degenerate() const { return model_->degenerate(); }
std::string Body::describe() const { return model_->describe(); }
const GridSet* Body::as_grid() const { return model_->as_grid(); }

std::vector<double> Body::octant_extent() const {
    if (const GridSet* g = as_grid()) return g->extent();
    const int n = dim();
    std::vector<double> ext(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Point e(static_cast<std::size_t>(n), 0.0);
        e[static_cast<std::size_t>(i)] = 1.0;
        ext[static_cast<std::size_t>(i)] = radial(e);
    }
    return ext;
}

Body dilate(const Body& body, double t) {
    if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("dilate: factor must be a finite non-negative number");
    return Body(std::make_shared<DilateModel>(body, t));
}

// ---------------------------------------------------------------- sampling

SampleResult sample_points(const Body& body, std::size_t count, SampleMode mode, std::uint64_t seed) {
    Rng rng(seed);
    const int n = body.dim();
    const double radius = body.out_radius();
    if (!(radius > 0.0) || !std::isfinite(radius)) throw DomainError("sample_points: body needs a finite out-radius");
    SampleResult out;
    out.points.reserve(count);
    Point d(static_cast<std::size_t>(n));
    auto random_direction = [&] {
        double s = 0.0;
        do {
            s = 0.0;
            for (auto& v : d) {
                v = rng.normal();
                s += v * v;
            }
        } while (s == 0.0);
        s = std::sqrt(s);
        for (auto& v : d) v /= s;
    };

    const std::uint64_t budget = 1000 * static_cast<std::uint64_t>(std::max<std::size_t>(count, 1));
    if (mode == SampleMode::Interior) {
        Point x(static_cast<std::size_t>(n));
        while (out.points.size() < count) {
            if (out.attempts >= budget)
                throw NumericalError("sample_points: rejection sampling exhausted (body too thin for its out-radius)");
            ++out.attempts;
            random_direction();
            const double r = radius * std::pow(rng.uniform(), 1.0 / n);
            for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = r * d[static_cast<std::size_t>(i)];
            if (body.contains(x)) out.points.push_back(x);
        }
        return out;
    }

    Point x(static_cast<std::size_t>(n));
    Point y(static_cast<std::size_t>(n));
    while (out.points.size() < count) {
        if (out.attempts >= budget) throw NumericalError("sample_points: boundary search failed repeatedly");
        ++out.attempts;
        random_direction();
        double r = body.radial(d);
        // Pull strictly inside so the closed-form radial survives rounding.
        double lo = r * (1.0 - 1e-10);
        for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = lo * d[static_cast<std::size_t>(i)];
        if (!body.contains(x)) {
            lo = body.model().BodyModel::radial(d);
            for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = lo * d[static_cast<std::size_t>(i)];
            if (!body.contains(x)) continue;
        }
        for (int i = 0; i < n; ++i) y[static_cast<std::size_t>(i)] = (1.0 + 1e-6) * x[static_cast<std::size_t>(i)];
        if (body.contains(y)) continue;
        out.points.push_back(x);
    }
    return out;
}

double hausdorff_distance(const Body& a, const Body& b, std::span<const Point> directions) {
    if (a.dim() != b.dim()) throw DomainError("hausdorff_distance: dimension mismatch");
    double d = 0.0;
    for (const auto& u : directions) d = std::max(d, std::abs(a.support(u) - b.support(u)));
    return d;
}

}  // namespace lpbm
