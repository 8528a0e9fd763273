#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "credit/error.hpp"

namespace credit {

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator; every operation is exact (no rounding). Decimal rendering
/// and floating-point views exist only as presentation-layer conversions.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long n) : value_(n) {} // NOLINT: implicit by design, mirrors integer literals
    Rational(long num, long den);

    /// Parses "a/b", an integer literal, or a decimal literal ("0.05" becomes
    /// exactly 1/20 by base-10 conversion, never a binary-float round trip).
    /// Throws Error("invalid-rational") on anything else.
    static Rational from_string(std::string_view text);

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
    Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
    Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

    Rational abs() const;
    Rational reciprocal() const;

    std::string numerator_str() const { return value_.get_num().get_str(); }
    std::string denominator_str() const { return value_.get_den().get_str(); }

    /// "7/30", or just "3" when the denominator is 1.
    std::string to_fraction_string() const;

    /// Fixed-point decimal with `places` digits, round-half-even ("0.500000").
    std::string to_decimal_string(int places = 6) const;

    double to_double() const { return value_.get_d(); }

    /// Two-term conversion: hi = double(value), then the exact residual is
    /// added in long double, giving ~106 effective mantissa bits.
    long double to_long_double() const;

    /// LCM of the denominators of `values` (as an integer-valued Rational);
    /// returns 1 for an empty span. Used for common-denominator rendering.
    static Rational common_denominator(std::span<const Rational> values);

    const mpq_class& raw() const { return value_; }

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}

    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace credit
