#include "spinl/qexp/qseries.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace spinl::qexp {

QSeries::QSeries(int precision) {
    if (precision < 0) {
        throw std::invalid_argument("QSeries: negative precision");
    }
    coeffs_.resize(static_cast<std::size_t>(precision) + 1);
}

QSeries::QSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw std::invalid_argument("QSeries: empty coefficient list");
    }
}

QSeries QSeries::from_integers(std::span<const BigInt> coeffs) {
    std::vector<Rational> q;
    q.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        q.emplace_back(c);
    }
    return QSeries(std::move(q));
}

const Rational& QSeries::at(int n) const {
    if (n < 0 || n > precision()) {
        throw std::out_of_range("QSeries: coefficient " + std::to_string(n) +
                                " beyond precision " + std::to_string(precision()));
    }
    return coeffs_[n];
}

BigInt QSeries::integer_at(int n) const {
    const Rational& c = at(n);
    if (!c.is_integer()) {
        throw std::domain_error("QSeries: coefficient " + std::to_string(n) + " is not integral");
    }
    return c.numerator();
}

QSeries QSeries::truncated(int precision) const {
    if (precision > this->precision()) {
        throw std::out_of_range("QSeries: cannot extend precision by truncation");
    }
    return QSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + precision + 1));
}

QSeries QSeries::dilated(int m) const {
    if (m < 1) {
        throw std::invalid_argument("QSeries: dilation factor must be positive");
    }
    QSeries r(precision());
    for (int n = 0; n * m <= precision(); ++n) {
        r.coeffs_[n * m] = coeffs_[n];
    }
    return r;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.precision(), b.precision()));
    for (int n = 0; n <= r.precision(); ++n) {
        r.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
    }
    return r;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.precision(), b.precision()));
    for (int n = 0; n <= r.precision(); ++n) {
        r.coeffs_[n] = a.coeffs_[n] - b.coeffs_[n];
    }
    return r;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    const int N = std::min(a.precision(), b.precision());
    QSeries r(N);
    for (int i = 0; i <= N; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (int j = 0; i + j <= N; ++j) {
            if (!b.coeffs_[j].is_zero()) {
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
    }
    return r;
}

QSeries operator*(const Rational& c, const QSeries& f) {
    QSeries r(f.precision());
    for (int n = 0; n <= f.precision(); ++n) {
        r.coeffs_[n] = c * f.coeffs_[n];
    }
    return r;
}

} // namespace spinl::qexp
