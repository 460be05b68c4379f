// Copyright (C) 2026 The lpbm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace lpbm {

/// A point of the extended real line [-inf, +inf].
///
/// Exponents (means, concavity orders, Borell parameters) live in this type so
/// that infinite orders never travel as IEEE sentinels through the public API.
/// Construction from a plain double only accepts finite values; use
/// `pos_inf()` / `neg_inf()` or `from_double()` for the infinite points.
class ExtReal {
public:
    enum class Kind : std::uint8_t { Finite, PosInf, NegInf };

    constexpr ExtReal() noexcept = default;
    ExtReal(double v);  // NOLINT(google-explicit-constructor): finite values only, throws otherwise

    static constexpr ExtReal pos_inf() noexcept { return ExtReal(Kind::PosInf); }
    static constexpr ExtReal neg_inf() noexcept { return ExtReal(Kind::NegInf); }
    /// Maps IEEE +-inf onto the infinite points; NaN is rejected.
    static ExtReal from_double(double v);
    /// Accepts "inf", "+inf", "-inf" (also "infinity") or a decimal number.
    static ExtReal parse(std::string_view text);

    constexpr Kind kind() const noexcept { return kind_; }
    constexpr bool is_finite() const noexcept { return kind_ == Kind::Finite; }
    constexpr bool is_pos_inf() const noexcept { return kind_ == Kind::PosInf; }
    constexpr bool is_neg_inf() const noexcept { return kind_ == Kind::NegInf; }
    constexpr bool is_zero() const noexcept { return kind_ == Kind::Finite && value_ == 0.0; }

    /// Finite value; throws DomainError on an infinite point.
    double value() const;
    /// IEEE image, for internal numerics only.
    double to_double() const noexcept;

    /// 0 -> +inf, +inf -> 0, -inf -> 0, x -> 1/x.
    ExtReal recip() const noexcept;

    ExtReal operator-() const noexcept;
    /// Throws DomainError on +inf + -inf.
    friend ExtReal operator+(ExtReal a, ExtReal b);
    friend ExtReal operator-(ExtReal a, ExtReal b) { return a + (-b); }

    friend std::strong_ordering operator<=>(ExtReal a, ExtReal b) noexcept;
    friend bool operator==(ExtReal a, ExtReal b) noexcept { return (a <=> b) == 0; }

    /// "inf", "-inf" or a round-trippable decimal.
    std::string to_string() const;

private:
    constexpr explicit ExtReal(Kind k) noexcept : kind_(k) {}

    Kind kind_ = Kind::Finite;
    double value_ = 0.0;
};

/// Convex-combination weight in [0, 1].
class Weight {
public:
    explicit Weight(double lambda);

    double value() const noexcept { return value_; }
    double complement() const noexcept { return 1.0 - value_; }

private:
    double value_;
};

}  // namespace lpbm
