// Copyright (C) 2026 The lpbm Authors
// SPDX-License-Identifier: Apache-2.0

#include "lpbm/means.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "lpbm/errors.hpp"

namespace lpbm {

namespace {

constexpr double kLogDomainThreshold = 1e-8;
constexpr double kWeightSumTol = 1e-12;
constexpr double kBoundaryTol = 1e-12;

void require_nonneg(double v, const char* what) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
        throw DomainError(std::string("p_mean: ") + what + " must be a finite non-negative number, got " +
                          std::to_string(v));
    }
}

}  // namespace

double p_mean(ExtReal p, Weight lambda, double a, double b) {
    require_nonneg(a, "a");
    require_nonneg(b, "b");
    const double l = lambda.value();
    if (l == 0.0) return a;
    if (l == 1.0) return b;
    if (p.is_neg_inf()) return std::min(a, b);
    if (p.is_pos_inf()) return std::max(a, b);

    const double q = p.value();
    const double wa = 1.0 - l;
    if (q <= 0.0 && (a == 0.0 || b == 0.0)) return 0.0;
    if (q == 0.0) return std::exp(wa * std::log(a) + l * std::log(b));

    if (std::abs(q) < kLogDomainThreshold) {
        if (a == 0.0 || b == 0.0) {
            // q > 0 here: M = w^{1/q} * other, which underflows for tiny q.
            const double other = a == 0.0 ? b : a;
            const double w = a == 0.0 ? l : wa;
            if (other == 0.0) return 0.0;
            return std::exp(std::log(w) / q + std::log(other));
        }
        const double s = wa * std::expm1(q * std::log(a)) + l * std::expm1(q * std::log(b));
        return std::exp(std::log1p(s) / q);
    }

    // Scale so that both ratios raised to q stay <= 1.
    const double c = q > 0.0 ? std::max(a, b) : std::min(a, b);
    if (c == 0.0) return 0.0;
    const double s = wa * std::pow(a / c, q) + l * std::pow(b / c, q);
    return c * std::pow(s, 1.0 / q);
}

double p_mean_m(ExtReal p, std::span<const double> weights, std::span<const double> values) {
    if (weights.size() != values.size() || weights.empty()) {
        throw DomainError("p_mean_m: weights and values must be non-empty and of equal length");
    }
    double wsum = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0 && w <= 1.0)) throw DomainError("p_mean_m: weight outside [0,1]: " + std::to_string(w));
        wsum += w;
    }
    if (std::abs(wsum - 1.0) > kWeightSumTol) {
        throw DomainError("p_mean_m: weights sum to " + std::to_string(wsum) + ", expected 1");
    }
    for (double v : values) require_nonneg(v, "value");

    // Active entries only: zero weights do not participate, mirroring the
    // endpoint identities of the two-term mean.
    double vmin = std::numeric_limits<double>::infinity();
    double vmax = 0.0;
    bool any_zero = false;
    std::size_t active = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (weights[i] == 0.0) continue;
        ++active;
        vmin = std::min(vmin, values[i]);
        vmax = std::max(vmax, values[i]);
        any_zero = any_zero || values[i] == 0.0;
    }
    if (active == 1) {
        for (std::size_t i = 0; i < values.size(); ++i)
            if (weights[i] != 0.0) return values[i];
    }
    if (p.is_neg_inf()) return vmin;
    if (p.is_pos_inf()) return vmax;
    const double q = p.value();
    if (q <= 0.0 && any_zero) return 0.0;

    if (q == 0.0 || std::abs(q) < kLogDomainThreshold) {
        if (q == 0.0) {
            double acc = 0.0;
            for (std::size_t i = 0; i < values.size(); ++i)
                if (weights[i] != 0.0) acc += weights[i] * std::log(values[i]);
            return std::exp(acc);
        }
        if (any_zero) {
            // q > 0 tiny with zeros present: sum of w_i v_i^q over non-zero entries
            // dominates; fall through to the scaled formula, which stays exact here.
        } else {
            double s = 0.0;
            for (std::size_t i = 0; i < values.size(); ++i)
                if (weights[i] != 0.0) s += weights[i] * std::expm1(q * std::log(values[i]));
            return std::exp(std::log1p(s) / q);
        }
    }

    const double c = q > 0.0 ? vmax : vmin;
    if (c == 0.0) return 0.0;
    double s = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i)
        if (weights[i] != 0.0) s += weights[i] * std::pow(values[i] / c, q);
    if (std::abs(q) < kLogDomainThreshold) return std::exp(std::log(c) + std::log(s) / q);
    return c * std::pow(s, 1.0 / q);
}

ExtReal alpha_lower_bound(std::span<const ExtReal> p) {
    if (p.empty()) throw DomainError("exponent vector must be non-empty");
    ExtReal sum(0.0);
    for (ExtReal pi : p) {
        if (!pi.is_finite() || pi.value() < 0.0 || pi.value() > 1.0) {
            throw DomainError("coordinate exponent " + pi.to_string() + " outside [0,1]");
        }
        sum = sum + pi.recip();
    }
    return -sum.recip();
}

ExtReal gamma_compose(std::span<const ExtReal> p, ExtReal alpha) {
    const ExtReal bound = alpha_lower_bound(p);
    if (alpha.is_neg_inf() ||
        (alpha.is_finite() && bound.is_finite() && alpha.value() < bound.value() - kBoundaryTol)) {
        throw DomainError("density exponent alpha = " + alpha.to_string() +
                          " is below the admissibility bound -(sum_i 1/p_i)^{-1} = " + bound.to_string());
    }
    double sum = 0.0;
    for (ExtReal pi : p) {
        if (pi.is_zero()) return ExtReal(0.0);
        sum += 1.0 / pi.value();
    }
    if (alpha.is_zero()) return ExtReal(0.0);
    const double total = sum + (alpha.is_pos_inf() ? 0.0 : 1.0 / alpha.value());
    if (std::abs(total) <= kBoundaryTol) return ExtReal::neg_inf();
    return ExtReal(1.0 / total);
}

ExtReal s_to_alpha(ExtReal s, int n) {
    if (n < 1) throw DomainError("dimension must be positive");
    const double nn = n;
    if (s.is_neg_inf()) return ExtReal(-1.0 / nn);
    if (s.is_pos_inf() || s.value() > 1.0 / nn + 1e-15) {
        throw DomainError("s = " + s.to_string() + " exceeds 1/n = " + std::to_string(1.0 / nn));
    }
    const double denom = 1.0 - s.value() * nn;
    if (std::abs(denom) <= 1e-15) return ExtReal::pos_inf();
    return ExtReal(s.value() / denom);
}

ExtReal alpha_to_s(ExtReal alpha, int n) {
    if (n < 1) throw DomainError("dimension must be positive");
    const double nn = n;
    if (alpha.is_pos_inf()) return ExtReal(1.0 / nn);
    if (alpha.is_neg_inf() || alpha.value() < -1.0 / nn - 1e-15) {
        throw DomainError("alpha = " + alpha.to_string() + " is below -1/n = " + std::to_string(-1.0 / nn));
    }
    const double denom = 1.0 + alpha.value() * nn;
    if (std::abs(denom) <= 1e-15) return ExtReal::neg_inf();
    return ExtReal(alpha.value() / denom);
}

ExponentComparison exponent_compare(double p, ExtReal alpha, int n) {
    if (!(p > 0.0 && p <= 1.0)) throw DomainError("exponent_compare: p must lie in (0,1]");
    ExponentComparison out;
    out.gamma = gamma_compose(uniform_p(n, ExtReal(p)), alpha);
    out.dilation_exponent = ExtReal((1.0 - p) / n) + out.gamma;
    out.s_exponent = alpha_to_s(alpha, n);
    if (out.dilation_exponent.is_finite() && out.s_exponent.is_finite()) {
        out.holds = out.dilation_exponent.value() >= out.s_exponent.value() - kBoundaryTol;
    } else {
        out.holds = out.dilation_exponent >= out.s_exponent;
    }
    return out;
}

MeanKernel::MeanKernel(ExtReal p, Weight lambda) : w0_(lambda.complement()), w1_(lambda.value()) {
    if (lambda.value() == 0.0) {
        mode_ = Mode::Left;
    } else if (lambda.value() == 1.0) {
        mode_ = Mode::Right;
    } else if (p.is_pos_inf()) {
        mode_ = Mode::Max;
    } else if (p.is_neg_inf()) {
        mode_ = Mode::Min;
    } else if (p.value() == 1.0) {
        mode_ = Mode::Identity;
    } else if (p.value() == 0.5) {
        mode_ = Mode::Square;
    } else if (p.value() == 0.0) {
        mode_ = Mode::Log;
    } else {
        mode_ = Mode::Power;
        p_ = p.value();
        inv_p_ = 1.0 / p_;
        increasing_ = p_ > 0.0;
    }
}

double MeanKernel::forward(double a) const noexcept {
    switch (mode_) {
        case Mode::Square: return std::sqrt(a);
        case Mode::Log: return std::log(a);
        case Mode::Power: return std::pow(a, p_);
        default: return a;
    }
}

double MeanKernel::combine(double fa, double fb) const noexcept {
    switch (mode_) {
        case Mode::Left: return fa;
        case Mode::Right: return fb;
        case Mode::Min: return std::min(fa, fb);
        case Mode::Max: return std::max(fa, fb);
        default: return w0_ * fa + w1_ * fb;
    }
}

double MeanKernel::inverse(double s) const noexcept {
    switch (mode_) {
        case Mode::Square: return s * s;
        case Mode::Log: return std::exp(s);
        case Mode::Power: return std::pow(s, inv_p_);
        default: return s;
    }
}

}  // namespace lpbm
