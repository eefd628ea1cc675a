#pragma once

#include <cassert>
#include <compare>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/gmp.hpp>

#include "boole/errors.hpp"

namespace boole {

/// Unbounded signed integer. The sign is zero exactly when the magnitude is.
using BigInteger = boost::multiprecision::mpz_int;

/**
 * Exact signed rational number kept in canonical form.
 *
 * Every constructor and arithmetic operator leaves the value reduced with a
 * strictly positive denominator, so `==` on the stored pair is value
 * equality. Zero is always 0/1.
 */
class Rational {
public:
    Rational() : num_(0), den_(1) {}

    template <std::integral I>
    Rational(I value) : num_(value), den_(1) {}

    Rational(BigInteger value) : num_(std::move(value)), den_(1) {}

    /// Throws std::domain_error when `den` is zero.
    Rational(BigInteger num, BigInteger den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("rational: zero denominator");
        normalize();
    }

    const BigInteger& numerator() const noexcept { return num_; }
    const BigInteger& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_integer() const noexcept { return den_ == 1; }
    int sign() const noexcept { return num_.sign(); }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational& operator+=(const Rational& rhs) {
        num_ = num_ * rhs.den_ + rhs.num_ * den_;
        den_ *= rhs.den_;
        normalize();
        return *this;
    }

    Rational& operator-=(const Rational& rhs) {
        num_ = num_ * rhs.den_ - rhs.num_ * den_;
        den_ *= rhs.den_;
        normalize();
        return *this;
    }

    Rational& operator*=(const Rational& rhs) {
        num_ *= rhs.num_;
        den_ *= rhs.den_;
        normalize();
        return *this;
    }

    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& rhs) {
        if (rhs.is_zero()) throw std::domain_error("rational: division by zero");
        // rhs may alias *this
        BigInteger rn = rhs.num_;
        num_ *= rhs.den_;
        den_ *= rn;
        normalize();
        return *this;
    }

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) {
        return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
    }

    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        const BigInteger l = lhs.num_ * rhs.den_;
        const BigInteger r = rhs.num_ * lhs.den_;
        if (l < r) return std::strong_ordering::less;
        if (r < l) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// Adopts num/den without reducing. Caller guarantees canonical form.
    static Rational from_canonical(BigInteger num, BigInteger den) {
        Rational r;
        r.num_ = std::move(num);
        r.den_ = std::move(den);
        assert(r.is_canonical());
        return r;
    }

    /// True when the stored pair is reduced with a positive denominator.
    bool is_canonical() const {
        if (den_ <= 0) return false;
        if (num_.is_zero()) return den_ == 1;
        return boost::multiprecision::gcd(abs(num_), den_) == 1;
    }

private:
    void normalize() {
        if (den_.sign() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_.is_zero()) {
            den_ = 1;
        } else if (den_ != 1) {
            BigInteger g = boost::multiprecision::gcd(abs(num_), den_);
            if (g != 1) {
                num_ /= g;
                den_ /= g;
            }
        }
        assert(is_canonical());
    }

    BigInteger num_;
    BigInteger den_;
};

/// Canonical reduced num/den. Throws std::domain_error when `den` is zero.
inline Rational rat(BigInteger num, BigInteger den) { return Rational(std::move(num), std::move(den)); }

/// x^m with 0^0 = 1.
inline Rational rat_pow(const Rational& x, unsigned m) {
    // Powers of a reduced fraction stay reduced.
    return Rational::from_canonical(pow(x.numerator(), m), pow(x.denominator(), m));
}

inline BigInteger int_pow(const BigInteger& x, unsigned m) { return pow(x, m); }

inline BigInteger factorial(unsigned n) {
    BigInteger r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

/// C(n, k), zero when k > n.
inline BigInteger binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInteger r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;  // exact: r is C(n, i+1) here
    }
    return r;
}

/// 1! * 2! * ... * n!
inline BigInteger superfactorial(unsigned n) {
    BigInteger r = 1;
    BigInteger f = 1;
    for (unsigned i = 1; i <= n; ++i) {
        f *= i;
        r *= f;
    }
    return r;
}

/// Canonical "p/q" form, integers included ("3/1").
inline std::string to_string(const Rational& x) {
    return x.numerator().str() + "/" + x.denominator().str();
}

/// Short form: "p" for integers, "p/q" otherwise.
inline std::string to_display_string(const Rational& x) {
    if (x.is_integer()) return x.numerator().str();
    return to_string(x);
}

inline std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << to_display_string(x); }

namespace detail {

inline BigInteger parse_unsigned_digits(std::string_view digits, std::string_view whole) {
    if (digits.empty()) throw ParseError("malformed rational '" + std::string(whole) + "'");
    for (char c : digits) {
        if (c < '0' || c > '9') throw ParseError("malformed rational '" + std::string(whole) + "'");
    }
    return BigInteger(std::string(digits));
}

}  // namespace detail

/**
 * Parses "p/q" or "p", with an optional leading '-' on p. The denominator
 * must be an unsigned nonzero digit string. Non-reduced input is accepted and
 * reduced.
 */
inline Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    BigInteger num = detail::parse_unsigned_digits(body.substr(0, slash), text);
    BigInteger den = 1;
    if (slash != std::string_view::npos) {
        den = detail::parse_unsigned_digits(body.substr(slash + 1), text);
        if (den.is_zero()) throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    if (negative) num = -num;
    return Rational(std::move(num), std::move(den));
}

}  // namespace boole
