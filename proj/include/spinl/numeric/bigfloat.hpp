#ifndef SPINL_NUMERIC_BIGFLOAT_HPP
#define SPINL_NUMERIC_BIGFLOAT_HPP

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <mpfr.h>

#include "spinl/exact/rational.hpp"

namespace spinl::numeric {

/// Working precision, stored in bits; constructed from decimal digits.
class Precision {
public:
    static Precision decimal(int digits);
    static Precision from_bits(mpfr_prec_t bits);

    mpfr_prec_t bits() const { return bits_; }
    /// Decimal digits represented (floor(bits * log10 2)).
    int digits() const;
    /// This precision plus `extra` decimal digits.
    Precision widened(int extra) const;

    friend bool operator==(Precision, Precision) = default;

private:
    explicit Precision(mpfr_prec_t bits) : bits_(bits) {}
    mpfr_prec_t bits_;
};

/// Binary floating-point value owning its precision.  Binary operations round
/// to the larger of the operand precisions; nothing reads or writes MPFR's
/// global default precision.
class BigFloat {
public:
    explicit BigFloat(Precision p);  // zero
    BigFloat(long value, Precision p);
    BigFloat(double value, Precision p);
    BigFloat(const exact::Rational& value, Precision p);
    BigFloat(const exact::BigInt& value, Precision p);
    /// Decimal or scientific notation; throws std::invalid_argument.
    static BigFloat parse(std::string_view text, Precision p);
    static BigFloat pi(Precision p);

    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    Precision precision() const { return Precision::from_bits(mpfr_get_prec(value_)); }
    /// Same value rounded to precision p.
    BigFloat rounded(Precision p) const;

    BigFloat operator-() const;
    BigFloat& operator+=(const BigFloat& rhs);
    BigFloat& operator-=(const BigFloat& rhs);
    BigFloat& operator*=(const BigFloat& rhs);
    BigFloat& operator/=(const BigFloat& rhs);
    BigFloat& operator*=(long rhs);
    BigFloat& operator/=(long rhs);

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(BigFloat a, long b) { return a *= b; }
    friend BigFloat operator*(long b, BigFloat a) { return a *= b; }
    friend BigFloat operator/(BigFloat a, long b) { return a /= b; }

    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
    friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);
    friend std::partial_ordering operator<=>(const BigFloat& a, long b);

    bool is_zero() const { return mpfr_zero_p(value_) != 0; }
    bool is_finite() const { return mpfr_number_p(value_) != 0; }
    int sign() const { return mpfr_sgn(value_); }
    /// True when the value is an integer; `out` receives it if it fits in long.
    bool is_integer(long* out = nullptr) const;

    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
    /// Scientific notation with `significant` digits, e.g. "1.0353620568e-06".
    std::string to_scientific(int significant) const;
    /// Shortest of fixed or scientific with `significant` digits (like %g).
    std::string to_string(int significant) const;

    mpfr_srcptr get() const { return value_; }
    mpfr_ptr get() { return value_; }

private:
    mpfr_t value_;
};

std::ostream& operator<<(std::ostream& os, const BigFloat& x);

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat cosh(const BigFloat& x);
BigFloat acosh(const BigFloat& x);
BigFloat pow(const BigFloat& x, const BigFloat& y);
BigFloat pow(const BigFloat& x, long n);
/// Gamma function.
BigFloat gamma(const BigFloat& x);
/// Riemann zeta at real x != 1.
BigFloat zeta(const BigFloat& x);
BigFloat max(const BigFloat& a, const BigFloat& b);

/// |a - b| / |b|  (|a - b| when b is zero).
BigFloat relative_difference(const BigFloat& a, const BigFloat& b);

/// Number of leading significant decimal digits on which a and b agree,
/// floor(-log10(|a-b|/|b|)), capped at the precision of the arguments.
int agreeing_digits(const BigFloat& a, const BigFloat& b);

} // namespace spinl::numeric

#endif
