#ifndef SPINL_EXACT_RATIONAL_HPP
#define SPINL_EXACT_RATIONAL_HPP

#include <compare>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace spinl::exact {

using BigInt = mpz_class;

/// Arbitrary-precision signed rational, always in lowest terms with a
/// positive denominator. Zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(const BigInt& value) : value_(value) {}
    /// Throws std::domain_error if `den` is zero.
    Rational(const BigInt& num, const BigInt& den);

    /// Parses "a" or "a/b" in base 10.
    static Rational parse(const std::string& text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// Integer power; negative exponents invert (throws on 0^-n).
    Rational pow(long exponent) const;
    Rational abs() const;

    /// "n" for integers, "n/d" otherwise.
    std::string str() const;

    const mpq_class& raw() const { return value_; }

private:
    explicit Rational(mpq_class value) : value_(std::move(value)) {}

    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// 2^e as an exact rational, e of either sign.
Rational pow2(long e);

/// n! for n >= 0.
BigInt factorial(long n);

/// C(n, k); zero outside 0 <= k <= n.
BigInt binomial(long n, long k);

} // namespace spinl::exact

#endif
