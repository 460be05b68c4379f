// Copyright (C) 2026 The lpbm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "lpbm/ext_real.hpp"
#include "lpbm/numeric.hpp"

namespace lpbm {

enum class FamilyTag { LqBall, HPolytope, GridSet, WulffSet, Dilate, Sum };

const char* to_string(FamilyTag tag);

/// Unconditional set on a uniform positive-octant grid.
///
/// Cell k along axis i covers [k h_i, (k+1) h_i); a cell is marked when its
/// center belongs to the represented set. The full set is recovered by sign
/// symmetry. Cells are stored with axis 0 varying fastest.
class GridSet {
public:
    GridSet(int dim, int resolution, std::vector<double> cell_size);

    int dim() const noexcept { return dim_; }
    int resolution() const noexcept { return n_; }
    double cell_size(int axis) const { return h_.at(static_cast<std::size_t>(axis)); }
    const std::vector<double>& cell_sizes() const noexcept { return h_; }
    std::size_t cell_count() const noexcept { return marks_.size(); }

    bool marked(std::size_t flat) const { return marks_[flat] != 0; }
    void mark(std::size_t flat) { marks_[flat] = 1; }
    bool marked_at(std::span<const int> idx) const;
    std::size_t flat_index(std::span<const int> idx) const;
    std::vector<int> unflatten(std::size_t flat) const;
    Point cell_center(std::size_t flat) const;

    /// Membership of the unconditional set: the cell containing |x| is marked.
    bool contains(std::span<const double> x) const;

    std::size_t marked_count() const;
    /// Lebesgue volume of the full (sign-symmetric) set.
    double volume() const;
    double cell_volume() const;

    /// One backward OR-sweep per axis.
    void enforce_downward_closure();
    bool is_downward_closed() const;

    /// Same set seen on the half-resolution grid: a coarse cell is marked when
    /// its center (a fine-cell corner) lies in the set.
    GridSet coarsened() const;

    /// max over marked cell centers of <c, |u|>.
    double support(std::span<const double> u) const;
    /// Per-axis octant extent of the union of marked cells.
    std::vector<double> extent() const;
    double out_radius() const;

    /// Marked cells whose +e_i neighbour is unmarked (or outside) for every i.
    std::vector<std::size_t> maximal_cells() const;

private:
    int dim_;
    int n_;
    std::vector<double> h_;
    std::vector<std::uint8_t> marks_;
};

class BodyModel;

/// Unconditional convex body given by oracles.
///
/// Immutable value type; copies share the underlying model. Membership takes
/// any point of R^n, support any nonzero direction (not necessarily unit).
class Body {
public:
    explicit Body(std::shared_ptr<const BodyModel> model);

    /// {x : sum_i (|x_i|/r_i)^q <= 1}, q in [1, +inf].
    static Body lq_ball(ExtReal q, std::vector<double> radii);
    /// Axis-aligned box [-r_1, r_1] x ... (the q = +inf ball).
    static Body box(std::vector<double> radii);

    struct Halfspace {
        Point normal;
        double offset;
    };
    /// Intersection of <eps o u_j, x> <= c_j over all sign vectors eps.
    /// Requires c_j > 0 and every axis constrained by some normal.
    static Body h_polytope(std::vector<Halfspace> halfspaces);
    static Body grid(GridSet grid);

    int dim() const;
    bool contains(std::span<const double> x) const;
    bool has_support() const;
    /// h(u) = max_{x in K} <x, u>; throws Unsupported when no oracle exists.
    double support(std::span<const double> u) const;
    /// sup{ r >= 0 : r d in K } for d != 0.
    double radial(std::span<const double> d) const;
    double out_radius() const;
    FamilyTag family() const;
    bool unconditional() const;
    /// True for the zero dilate (a point).
    bool degenerate() const;
    /// max over the body of x_i, for each axis i.
    std::vector<double> octant_extent() const;
    /// Canonical JSON description (used for report digests).
    std::string describe() const;

    /// Non-null when this body was built from a grid.
    const GridSet* as_grid() const;

    const BodyModel& model() const { return *model_; }

private:
    std::shared_ptr<const BodyModel> model_;
};

/// Abstract oracle set behind Body. Implementations live in body.cpp and
/// combine.cpp.
class BodyModel {
public:
    virtual ~BodyModel() = default;
    virtual int dim() const = 0;
    virtual bool contains(std::span<const double> x) const = 0;
    virtual bool has_support() const { return false; }
    virtual double support(std::span<const double> u) const;
    /// Default: bisection on `contains` along the ray.
    virtual double radial(std::span<const double> d) const;
    virtual double out_radius() const = 0;
    virtual FamilyTag family() const = 0;
    virtual bool degenerate() const { return false; }
    virtual std::string describe() const = 0;
    virtual const GridSet* as_grid() const { return nullptr; }
};

/// x / t scaling: membership(x) = K.membership(x/t); t = 0 gives the origin.
Body dilate(const Body& body, double t);

enum class SampleMode { Boundary, Interior };

struct SampleResult {
    std::vector<Point> points;
    std::uint64_t attempts = 0;  ///< proposals drawn (interior mode: rejection denominator)
};

/// Seeded sampling. Interior mode: rejection from the enclosing ball of radius
/// out_radius. Boundary mode: uniform random direction, radial bisection; the
/// returned x satisfies contains(x) and !contains((1+1e-6) x).
/// Throws NumericalError when rejection exceeds 1000 * count proposals.
SampleResult sample_points(const Body& body, std::size_t count, SampleMode mode, std::uint64_t seed);

/// max over `directions` of |h_A(u) - h_B(u)|.
double hausdorff_distance(const Body& a, const Body& b, std::span<const Point> directions);

}  // namespace lpbm
