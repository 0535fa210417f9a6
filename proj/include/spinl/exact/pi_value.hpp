#ifndef SPINL_EXACT_PI_VALUE_HPP
#define SPINL_EXACT_PI_VALUE_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "spinl/exact/rational.hpp"

namespace spinl::exact {

struct PiMonomial {
    Rational coeff;
    int exponent = 0;

    friend bool operator==(const PiMonomial&, const PiMonomial&) = default;
};

/// Exact value  sum_i q_i * pi^{e_i}.  Monomials are kept sorted by strictly
/// increasing exponent with no zero coefficients; the empty sum is zero.
/// Distinct exponents are never merged into anything else.
class PiValue {
public:
    PiValue() = default;
    PiValue(const Rational& q) : PiValue(q, 0) {}
    PiValue(const Rational& q, int exponent);

    /// pi^e with coefficient 1.
    static PiValue pi_power(int exponent) { return PiValue(Rational(1), exponent); }

    const std::vector<PiMonomial>& monomials() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }

    /// The single monomial; throws std::logic_error when the value is zero or
    /// has more than one distinct pi exponent.
    const PiMonomial& as_monomial() const;

    PiValue operator-() const;
    PiValue& operator+=(const PiValue& rhs);
    PiValue& operator-=(const PiValue& rhs);
    PiValue& operator*=(const PiValue& rhs);
    PiValue& operator*=(const Rational& rhs);
    /// Division by a Rational only (dividing by a pi-sum is not closed).
    PiValue& operator/=(const Rational& rhs);

    friend PiValue operator+(PiValue a, const PiValue& b) { return a += b; }
    friend PiValue operator-(PiValue a, const PiValue& b) { return a -= b; }
    friend PiValue operator*(PiValue a, const PiValue& b) { return a *= b; }
    friend PiValue operator*(PiValue a, const Rational& b) { return a *= b; }
    friend PiValue operator*(const Rational& b, PiValue a) { return a *= b; }
    friend PiValue operator/(PiValue a, const Rational& b) { return a /= b; }

    friend bool operator==(const PiValue&, const PiValue&) = default;

    std::string str() const;

private:
    void add_monomial(const Rational& coeff, int exponent);

    std::vector<PiMonomial> terms_;
};

std::ostream& operator<<(std::ostream& os, const PiValue& v);

} // namespace spinl::exact

#endif
