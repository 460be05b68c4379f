// Copyright (C) 2026 The lpbm Authors
// SPDX-License-Identifier: Apache-2.0

#include "lpbm/ext_real.hpp"

#include <cctype>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "lpbm/errors.hpp"

namespace lpbm {

ExtReal::ExtReal(double v) : value_(v) {
    if (!std::isfinite(v)) {
        throw DomainError("ExtReal: non-finite double " + std::to_string(v) +
                          " (use ExtReal::pos_inf()/neg_inf())");
    }
    if (v == 0.0) value_ = 0.0;  // fold -0
}

ExtReal ExtReal::from_double(double v) {
    if (std::isnan(v)) throw DomainError("ExtReal: NaN");
    if (v == std::numeric_limits<double>::infinity()) return pos_inf();
    if (v == -std::numeric_limits<double>::infinity()) return neg_inf();
    return ExtReal(v);
}

ExtReal ExtReal::parse(std::string_view text) {
    std::string s(text);
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "inf" || s == "+inf" || s == "infinity" || s == "+infinity") return pos_inf();
    if (s == "-inf" || s == "-infinity") return neg_inf();
    if (s.empty()) throw DomainError("ExtReal: empty string");
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v)) {
        throw DomainError("ExtReal: cannot parse '" + std::string(text) + "'");
    }
    return ExtReal(v);
}

double ExtReal::value() const {
    if (kind_ != Kind::Finite) throw DomainError("ExtReal: value() of " + to_string());
    return value_;
}

double ExtReal::to_double() const noexcept {
    switch (kind_) {
        case Kind::PosInf: return std::numeric_limits<double>::infinity();
        case Kind::NegInf: return -std::numeric_limits<double>::infinity();
        default: return value_;
    }
}

ExtReal ExtReal::recip() const noexcept {
    if (kind_ != Kind::Finite) return ExtReal();
    if (value_ == 0.0) return pos_inf();
    return ExtReal(1.0 / value_);
}

ExtReal ExtReal::operator-() const noexcept {
    switch (kind_) {
        case Kind::PosInf: return neg_inf();
        case Kind::NegInf: return pos_inf();
        default: return ExtReal(-value_);
    }
}

ExtReal operator+(ExtReal a, ExtReal b) {
    using K = ExtReal::Kind;
    if ((a.kind_ == K::PosInf && b.kind_ == K::NegInf) || (a.kind_ == K::NegInf && b.kind_ == K::PosInf)) {
        throw DomainError("ExtReal: inf + -inf is undefined");
    }
    if (a.kind_ != K::Finite) return a;
    if (b.kind_ != K::Finite) return b;
    return ExtReal::from_double(a.value_ + b.value_);
}

std::strong_ordering operator<=>(ExtReal a, ExtReal b) noexcept {
    auto rank = [](ExtReal x) {
        return x.kind_ == ExtReal::Kind::NegInf ? 0 : (x.kind_ == ExtReal::Kind::Finite ? 1 : 2);
    };
    if (const int ra = rank(a), rb = rank(b); ra != rb || ra != 1) return ra <=> rb;
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string ExtReal::to_string() const {
    if (kind_ == Kind::PosInf) return "inf";
    if (kind_ == Kind::NegInf) return "-inf";
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, value_);
    return std::string(buf, res.ptr);
}

Weight::Weight(double lambda) : value_(lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw DomainError("weight must lie in [0,1], got " + std::to_string(lambda));
    }
}

}  // namespace lpbm
