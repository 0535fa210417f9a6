#include "spinl/exact/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace spinl::exact {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(BigInt(text));
        }
        return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    }
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::pow(long exponent) const {
    if (exponent < 0) {
        if (is_zero()) {
            throw std::domain_error("Rational: zero to a negative power");
        }
        return Rational(1) / pow(-exponent);
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(num, den);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

std::string Rational::str() const { return value_.get_str(10); }

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

Rational pow2(long e) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? Rational(BigInt(1), p) : Rational(p);
}

BigInt factorial(long n) {
    if (n < 0) {
        throw std::domain_error("factorial of a negative integer");
    }
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    BigInt c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return c;
}

} // namespace spinl::exact
