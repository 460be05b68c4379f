// Copyright (C) 2026 The lpbm Authors
// SPDX-License-Identifier: Apache-2.0

#include "lpbm/combine.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "json.hpp"
#include "detail/axis_lookup.hpp"
#include "lpbm/errors.hpp"

namespace lpbm {

using json = nlohmann::json;

const char* to_string(CombinationKind kind) {
    switch (kind) {
        case CombinationKind::CoordPlusP: return "coord_plus_p";
        case CombinationKind::FireyOPlusP: return "firey_oplus_p";
        case CombinationKind::Minkowski: return "minkowski";
    }
    return "?";
}

std::vector<Point> octant_boundary_samples(const Body& body, int per_face) {
    const int n = body.dim();
    if (n > 3) throw Unsupported("octant_boundary_samples: dimension > 3");
    if (per_face < 1) throw DomainError("octant_boundary_samples: per_face must be positive");
    std::vector<Point> out;
    if (n == 1) {
        const Point d{1.0};
        out.push_back({body.radial(d)});
        return out;
    }
    const int m = per_face;
    Point d(static_cast<std::size_t>(n));
    for (int face = 0; face < n; ++face) {
        // Enumerate the (m+1)^(n-1) grid on the remaining coordinates.
        std::vector<int> j(static_cast<std::size_t>(n - 1), 0);
        while (true) {
            int k = 0;
            for (int i = 0; i < n; ++i) {
                if (i == face) {
                    d[static_cast<std::size_t>(i)] = 1.0;
                } else {
                    d[static_cast<std::size_t>(i)] = static_cast<double>(j[static_cast<std::size_t>(k)]) / m;
                    ++k;
                }
            }
            const double r = body.radial(d);
            Point x(d);
            for (auto& v : x) v *= r;
            out.push_back(std::move(x));
            int pos = 0;
            while (pos < n - 1 && ++j[static_cast<std::size_t>(pos)] > m) j[static_cast<std::size_t>(pos++)] = 0;
            if (pos == n - 1) break;
        }
    }
    return out;
}

GridSet coord_combine(const Body& a, const Body& b, Weight lambda, const PVector& p, int resolution) {
    const int n = a.dim();
    if (b.dim() != n) throw DomainError("coord_combine: operand dimensions differ");
    if (p.size() != static_cast<std::size_t>(n)) throw DomainError("coord_combine: exponent vector length must equal the dimension");
    if (n > 3) throw Unsupported("coord_combine: deterministic image construction supports dimension <= 3");
    if (resolution < 2) throw DomainError("coord_combine: resolution must be >= 2");

    const auto ext_a = a.octant_extent();
    const auto ext_b = b.octant_extent();
    std::vector<double> h(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        const double ext = p_mean(p[ui], lambda, ext_a[ui], ext_b[ui]);
        if (!(ext > 0.0)) throw DomainError("coord_combine: combined extent vanishes along an axis");
        h[ui] = ext / resolution;
    }
    GridSet out(n, resolution, h);

    const int per_face = n == 2 ? 2 * resolution : resolution;
    const auto sa = octant_boundary_samples(a, per_face);
    const auto sb = octant_boundary_samples(b, per_face);

    std::vector<detail::AxisLookup> axes;
    axes.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) axes.emplace_back(p[static_cast<std::size_t>(i)], lambda, h[static_cast<std::size_t>(i)], resolution, 0.5);

    // Forwarded coordinates, laid out sample-major.
    auto forward_all = [&](const std::vector<Point>& s) {
        std::vector<double> f(s.size() * static_cast<std::size_t>(n));
        for (std::size_t k = 0; k < s.size(); ++k)
            for (int i = 0; i < n; ++i)
                f[k * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] =
                    axes[static_cast<std::size_t>(i)].kernel.forward(s[k][static_cast<std::size_t>(i)]);
        return f;
    };
    const auto fa = forward_all(sa);
    const auto fb = forward_all(sb);

    std::vector<int> idx(static_cast<std::size_t>(n));
    for (std::size_t ka = 0; ka < sa.size(); ++ka) {
        for (std::size_t kb = 0; kb < sb.size(); ++kb) {
            bool inside = true;
            for (int i = 0; i < n && inside; ++i) {
                const auto ui = static_cast<std::size_t>(i);
                const auto& ax = axes[ui];
                const double s = ax.kernel.combine(fa[ka * static_cast<std::size_t>(n) + ui], fb[kb * static_cast<std::size_t>(n) + ui]);
                const int k = ax.index(s);
                if (k < 0) inside = false;
                idx[ui] = k;
            }
            if (inside) out.mark(out.flat_index(idx));
        }
    }
    out.enforce_downward_closure();
    return out;
}

int default_firey_directions(int dim) { return dim == 2 ? 256 : 512; }

namespace {

/// Body cut out by octant halfspaces <|x|, u_k> <= g_k.
class HalfspaceEnvelope {
public:
    HalfspaceEnvelope(std::vector<Point> dirs, std::vector<double> g) : dirs_(std::move(dirs)), g_(std::move(g)) {}

    bool contains(std::span<const double> x) const {
        for (std::size_t k = 0; k < dirs_.size(); ++k)
            if (abs_dot(x, dirs_[k]) > g_[k]) return false;
        return true;
    }

    double radial(std::span<const double> d) const {
        double r = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < dirs_.size(); ++k) {
            const double s = abs_dot(d, dirs_[k]);
            if (s > 0.0) r = std::min(r, g_[k] / s);
        }
        return r;
    }

    /// The envelope sits inside the box spanned by the axis constraints.
    double box_radius() const {
        const std::size_t n = dirs_.front().size();
        std::vector<double> half(n, std::numeric_limits<double>::infinity());
        for (std::size_t k = 0; k < dirs_.size(); ++k)
            for (std::size_t i = 0; i < n; ++i)
                if (dirs_[k][i] > 0.0) half[i] = std::min(half[i], g_[k] / dirs_[k][i]);
        return norm2(half);
    }

    std::size_t size() const { return dirs_.size(); }

private:
    std::vector<Point> dirs_;
    std::vector<double> g_;
};

class WulffModel final : public BodyModel {
public:
    WulffModel(const Body& a, const Body& b, Weight lambda, ExtReal p, int count)
        : n_(a.dim()), env_(make(a, b, lambda, p, count)), lambda_(lambda.value()), p_(p) {
        describe_ = json{{"family", "wulff"},
                         {"p", p_.to_string()},
                         {"lambda", lambda_},
                         {"directions", env_.size()},
                         {"a", json::parse(a.describe())},
                         {"b", json::parse(b.describe())}}
                        .dump();
        radius_ = env_.box_radius();
    }

    int dim() const override { return n_; }
    bool contains(std::span<const double> x) const override { return env_.contains(x); }
    double radial(std::span<const double> d) const override { return env_.radial(d); }
    double out_radius() const override { return radius_; }
    FamilyTag family() const override { return FamilyTag::WulffSet; }
    std::string describe() const override { return describe_; }

private:
    static HalfspaceEnvelope make(const Body& a, const Body& b, Weight lambda, ExtReal p, int count) {
        auto dirs = octant_directions(a.dim(), count);
        std::vector<double> g(dirs.size());
        for (std::size_t k = 0; k < dirs.size(); ++k) g[k] = p_mean(p, lambda, a.support(dirs[k]), b.support(dirs[k]));
        return HalfspaceEnvelope(std::move(dirs), std::move(g));
    }

    int n_;
    HalfspaceEnvelope env_;
    double lambda_;
    ExtReal p_;
    std::string describe_;
    double radius_ = 0.0;
};

class SumModel final : public BodyModel {
public:
    SumModel(Body a, Body b, Weight lambda)
        : a_(std::move(a)), b_(std::move(b)), w0_(lambda.complement()), w1_(lambda.value()), env_(make()) {}

    int dim() const override { return a_.dim(); }
    bool contains(std::span<const double> x) const override { return env_.contains(x); }
    bool has_support() const override { return true; }
    double support(std::span<const double> u) const override { return w0_ * a_.support(u) + w1_ * b_.support(u); }
    double radial(std::span<const double> d) const override { return env_.radial(d); }
    double out_radius() const override { return w0_ * a_.out_radius() + w1_ * b_.out_radius(); }
    FamilyTag family() const override { return FamilyTag::Sum; }

    std::string describe() const override {
        return json{{"family", "minkowski"},
                    {"lambda", w1_},
                    {"a", json::parse(a_.describe())},
                    {"b", json::parse(b_.describe())}}
            .dump();
    }

private:
    HalfspaceEnvelope make() const {
        const int n = a_.dim();
        auto dirs = octant_directions(n, n == 2 ? 2048 : 1024);
        std::vector<double> g(dirs.size());
        for (std::size_t k = 0; k < dirs.size(); ++k) g[k] = support(dirs[k]);
        return HalfspaceEnvelope(std::move(dirs), std::move(g));
    }

    Body a_;
    Body b_;
    double w0_;
    double w1_;
    HalfspaceEnvelope env_;
};

void require_support(const Body& a, const Body& b, const char* who) {
    if (!a.has_support() || !b.has_support())
        throw Unsupported(std::string(who) + ": both operands need a support oracle");
    if (a.dim() != b.dim()) throw DomainError(std::string(who) + ": operand dimensions differ");
}

}  // namespace

Body firey_combine(const Body& a, const Body& b, Weight lambda, ExtReal p, int direction_count) {
    require_support(a, b, "firey_combine");
    if (direction_count < 2) throw DomainError("firey_combine: need at least two directions");
    return Body(std::make_shared<WulffModel>(a, b, lambda, p, direction_count));
}

Body minkowski_combine(const Body& a, const Body& b, Weight lambda) {
    require_support(a, b, "minkowski_combine");
    return Body(std::make_shared<SumModel>(a, b, lambda));
}

}  // namespace lpbm
