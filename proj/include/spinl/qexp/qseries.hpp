#ifndef SPINL_QEXP_QSERIES_HPP
#define SPINL_QEXP_QSERIES_HPP

#include <span>
#include <vector>

#include "spinl/exact/rational.hpp"

namespace spinl::qexp {

using exact::BigInt;
using exact::Rational;

/// Truncated q-expansion  sum_{n=0}^{N} a(n) q^n  with exact coefficients.
/// Arithmetic between two series keeps the smaller precision.
class QSeries {
public:
    /// The zero series to precision N (N >= 0).
    explicit QSeries(int precision);
    /// Precision is coeffs.size() - 1; coeffs must be non-empty.
    explicit QSeries(std::vector<Rational> coeffs);
    static QSeries from_integers(std::span<const BigInt> coeffs);

    int precision() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of q^n; throws std::out_of_range beyond the precision.
    const Rational& at(int n) const;
    const Rational& operator[](int n) const { return coeffs_[n]; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    /// Coefficient of q^n as an integer; throws if it is not integral.
    BigInt integer_at(int n) const;

    QSeries truncated(int precision) const;
    /// f(m z): the coefficient of q^{m n} is a(n).
    QSeries dilated(int m) const;

    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    /// Schoolbook Cauchy product.
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const Rational& c, const QSeries& f);

    friend bool operator==(const QSeries&, const QSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

} // namespace spinl::qexp

#endif
