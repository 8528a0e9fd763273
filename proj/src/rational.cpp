#include "credit/rational.hpp"

#include <cctype>
#include <ostream>

namespace credit {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

[[noreturn]] void throw_invalid(std::string_view text) {
    throw Error("invalid-rational",
                "cannot parse '" + std::string(text) + "' as a fraction or decimal");
}

} // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw Error("invalid-rational", "denominator must be nonzero");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
    // trim surrounding whitespace
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw_invalid(text);

    std::string_view body = text;
    bool negative = false;
    if (body.front() == '+' || body.front() == '-') {
        negative = body.front() == '-';
        body.remove_prefix(1);
        if (body.empty()) throw_invalid(text);
    }

    mpq_class value;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        std::string_view num = body.substr(0, slash);
        std::string_view den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) throw_invalid(text);
        mpz_class d(std::string(den), 10);
        if (d == 0) throw Error("invalid-rational", "denominator must be nonzero in '" + std::string(text) + "'");
        value = mpq_class(mpz_class(std::string(num), 10), d);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = body.substr(0, dot);
        std::string_view frac_part = body.substr(dot + 1);
        if (int_part.empty() && frac_part.empty()) throw_invalid(text);
        if (!int_part.empty() && !all_digits(int_part)) throw_invalid(text);
        if (!frac_part.empty() && !all_digits(frac_part)) throw_invalid(text);
        mpz_class scaled(0);
        std::string digits;
        digits.reserve(int_part.size() + frac_part.size());
        digits.append(int_part);
        digits.append(frac_part);
        if (!digits.empty()) scaled = mpz_class(digits, 10);
        mpz_class den(1);
        for (size_t i = 0; i < frac_part.size(); ++i) den *= 10;
        value = mpq_class(scaled, den);
    } else {
        if (!all_digits(body)) throw_invalid(text);
        value = mpq_class(mpz_class(std::string(body), 10));
    }
    value.canonicalize();
    if (negative) value = -value;
    return Rational(std::move(value));
}

Rational Rational::operator-() const {
    Rational r(*this);
    r.value_ = -r.value_;
    return r;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw Error("invalid-rational", "division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::abs() const {
    return sign() < 0 ? -*this : *this;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw Error("invalid-rational", "reciprocal of zero");
    return Rational(mpq_class(value_.get_den(), value_.get_num()));
}

std::string Rational::to_fraction_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_decimal_string(int places) const {
    // scaled = value * 10^places, rounded half-to-even to an integer
    mpz_class pow10(1);
    for (int i = 0; i < places; ++i) pow10 *= 10;
    mpz_class num = value_.get_num() * pow10;
    const mpz_class& den = value_.get_den();

    bool negative = num < 0;
    mpz_class mag = negative ? mpz_class(-num) : num;
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), mag.get_mpz_t(), den.get_mpz_t());
    mpz_class twice = r * 2;
    if (twice > den || (twice == den && mpz_odd_p(q.get_mpz_t()))) q += 1;

    std::string digits = q.get_str();
    if (static_cast<int>(digits.size()) <= places) {
        digits.insert(0, places + 1 - digits.size(), '0');
    }
    std::string out;
    if (negative && q != 0) out += '-';
    out += digits.substr(0, digits.size() - places);
    if (places > 0) {
        out += '.';
        out += digits.substr(digits.size() - places);
    }
    return out;
}

long double Rational::to_long_double() const {
    double hi = value_.get_d();
    mpq_class residual = value_ - mpq_class(hi); // exact: doubles embed in Q
    return static_cast<long double>(hi) + static_cast<long double>(residual.get_d());
}

Rational Rational::common_denominator(std::span<const Rational> values) {
    mpz_class l(1);
    for (const Rational& v : values) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.value_.get_den().get_mpz_t());
    }
    return Rational(mpq_class(l));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_fraction_string();
}

} // namespace credit
