// Copyright (C) 2026 The lpbm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "lpbm/ext_real.hpp"

namespace lpbm {

/// One exponent per coordinate for the coordinate-wise combination.
using PVector = std::vector<ExtReal>;

inline PVector uniform_p(int n, ExtReal p) { return PVector(static_cast<std::size_t>(n), p); }

/// Weighted power mean M_p^lambda(a, b) of non-negative numbers.
///
/// Limit orders: p = 0 is the weighted geometric mean, -inf the minimum and
/// +inf the maximum. lambda in {0, 1} returns the matching endpoint for every
/// p. For p <= 0 a zero argument forces the result to 0 when 0 < lambda < 1.
/// Throws DomainError on negative or NaN inputs.
double p_mean(ExtReal p, Weight lambda, double a, double b);

/// m-term power mean. Weights must be in [0,1] and sum to 1 within 1e-12;
/// zero-weight entries are ignored (so the endpoint identities carry over).
double p_mean_m(ExtReal p, std::span<const double> weights, std::span<const double> values);

/// Lower admissibility bound -(sum_i 1/p_i)^{-1} for the density exponent.
/// Equals 0 as soon as one p_i is 0.
ExtReal alpha_lower_bound(std::span<const ExtReal> p);

/// gamma = (sum_i 1/p_i + 1/alpha)^{-1} with the conventions
///   - some p_i = 0 or alpha = 0       => gamma = 0
///   - alpha = +inf                    => contributes 0 to the sum
///   - sum within 1e-12 of 0 (boundary) => gamma = -inf
/// Each p_i must lie in [0, 1]; alpha below `alpha_lower_bound(p)` throws
/// DomainError naming the bound.
ExtReal gamma_compose(std::span<const ExtReal> p, ExtReal alpha);

/// Borell's correspondence between measure concavity s and density concavity
/// alpha = s / (1 - s n). Defined for s <= 1/n; s = 1/n maps to +inf and
/// s = -inf to -1/n.
ExtReal s_to_alpha(ExtReal s, int n);
/// Inverse map s = alpha / (1 + alpha n), alpha >= -1/n.
ExtReal alpha_to_s(ExtReal alpha, int n);

struct ExponentComparison {
    bool holds = false;            ///< dilation exponent >= s-concavity exponent
    ExtReal gamma;                 ///< gamma_compose((p,...,p), alpha)
    ExtReal dilation_exponent;     ///< (1 - p)/n + gamma
    ExtReal s_exponent;            ///< alpha / (1 + alpha n)
};

/// Compares the concavity order obtained for t -> mu(tA) through the
/// power-dilation route against the order given directly by s-concavity.
/// Requires p in (0,1] and alpha >= -p/n.
ExponentComparison exponent_compare(double p, ExtReal alpha, int n);

/// Precomputed form of M_p^lambda for inner loops that evaluate the same mean
/// on many pairs. `forward` maps a value into the additive domain, `combine`
/// mixes two forwarded values and `inverse` maps back, so that
/// inverse(combine(forward(a), forward(b))) == p_mean(p, lambda, a, b).
class MeanKernel {
public:
    MeanKernel(ExtReal p, Weight lambda);

    double forward(double a) const noexcept;
    double combine(double fa, double fb) const noexcept;
    double inverse(double s) const noexcept;
    double operator()(double a, double b) const noexcept { return inverse(combine(forward(a), forward(b))); }

    /// True when larger means correspond to larger combined values.
    bool increasing() const noexcept { return increasing_; }

private:
    enum class Mode { Identity, Square, Log, Power, Min, Max, Left, Right };
    Mode mode_ = Mode::Identity;
    double p_ = 1.0;
    double inv_p_ = 1.0;
    double w0_ = 0.5;
    double w1_ = 0.5;
    bool increasing_ = true;
};

}  // namespace lpbm
