// Copyright (C) 2026 The lpbm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lpbm/body.hpp"
#include "lpbm/ext_real.hpp"
#include "lpbm/numeric.hpp"

namespace lpbm {

/// Potential V with optional closed-form derivatives (density e^{-V}).
struct Potential {
    std::function<double(std::span<const double>)> value;
    std::function<Point(std::span<const double>)> gradient;   ///< may be empty
    std::function<SymMatrix(std::span<const double>)> hessian;  ///< may be empty
};

enum class DensityFamily { Lebesgue, Gaussian, PowerConvex, UniformOnBody, Custom };

const char* to_string(DensityFamily family);

/// Unconditional alpha-concave density on R^n.
///
/// Immutable; copies share state. `restricted_to` multiplies by the indicator
/// of an unconditional convex body, which keeps the concavity order.
class Density {
public:
    static Density lebesgue(int dim);
    /// Standard Gaussian (2 pi)^{-n/2} e^{-|x|^2/2}, alpha = 0.
    static Density gaussian(int dim);
    /// (1 + beta sum_i |x_i|)^{1/alpha}, alpha < 0, beta > 0.
    static Density power_convex(int dim, ExtReal alpha, double beta);
    /// Indicator of an unconditional convex body, alpha = +inf.
    static Density uniform_on_body(Body body);
    /// User-supplied unconditional density; `extent` bounds its octant support
    /// when finite (empty means unbounded support).
    static Density custom(int dim, ExtReal alpha, std::function<double(std::span<const double>)> eval,
                          std::string name, std::vector<double> extent = {});

    Density restricted_to(Body body) const;

    int dim() const;
    ExtReal alpha() const;
    DensityFamily family() const;
    double operator()(std::span<const double> x) const;
    const Potential* potential() const;

    /// Octant half-widths outside of which the density vanishes exactly.
    std::optional<std::vector<double>> exact_extent() const;
    /// Octant half-widths outside of which the density is below
    /// `rel_threshold` times its value at the origin. Empty when the density
    /// never decays (Lebesgue).
    std::optional<std::vector<double>> truncation_extent(double rel_threshold) const;

    std::string describe() const;

    struct State;

private:
    explicit Density(std::shared_ptr<const State> s) : s_(std::move(s)) {}
    std::shared_ptr<const State> s_;
};

enum class MeasureMethod { Grid, MonteCarlo };

struct MeasureConfig {
    int resolution = 0;  ///< cells per axis; 0 picks 4096 / 256 / 64 for n = 1 / 2 / 3
    std::uint64_t mc_samples = 2'000'000;
    std::uint64_t seed = 0x5eed;
};

int default_resolution(int dim);

struct MeasureEstimate {
    double value = 0.0;
    double abs_error = 0.0;  ///< |v(N) - v(N/2)| on grids, 3 sigma for Monte Carlo
    MeasureMethod method = MeasureMethod::Grid;
    int resolution = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

/// mu(S) by cell-center integration over the positive octant, times 2^n.
/// Dimension >= 4 falls back to Monte Carlo in the octant box.
MeasureEstimate measure(const Body& body, const Density& density, const MeasureConfig& cfg = {});
/// mu of a grid set: cell-center rule on the grid itself, error against the
/// coarsened grid.
MeasureEstimate measure(const GridSet& grid, const Density& density);

enum class CurveKind { DilateT, DilateTPow, DilateExpT };

struct CurveTransform {
    CurveKind kind = CurveKind::DilateT;
    double p = 1.0;  ///< exponent for DilateTPow: the body is scaled by t^{1/p}

    double scale(double t) const;
};

struct CurvePoint {
    double t = 0.0;
    MeasureEstimate estimate;
};

/// F(t) = mu(s(t) A) on `t_grid` (sorted ascending); every point uses the same
/// resolution. DilateT needs t >= 0 (t = 0 gives the origin, measure 0) and
/// DilateTPow needs t > 0.
std::vector<CurvePoint> measure_curve(const Body& body, const Density& density, CurveTransform transform,
                                      std::span<const double> t_grid, const MeasureConfig& cfg = {});

struct FunctionalCurve {
    std::vector<CurvePoint> points;
    double truncation_threshold = 1e-12;
    std::vector<double> f_extent;  ///< truncation half-widths used for f
    std::vector<double> g_extent;  ///< truncation half-widths used for g
};

/// G(t) = int f(e^{-t} x) g(x) dx on a truncated octant box, times 2^n.
/// f and g must be unconditional; both unbounded is rejected as divergent.
FunctionalCurve functional_B_curve(const Density& f, const Density& g, std::span<const double> t_grid,
                                   const MeasureConfig& cfg = {});

}  // namespace lpbm
