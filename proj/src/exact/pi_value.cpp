#include "spinl/exact/pi_value.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace spinl::exact {

PiValue::PiValue(const Rational& q, int exponent) {
    if (!q.is_zero()) {
        terms_.push_back({q, exponent});
    }
}

const PiMonomial& PiValue::as_monomial() const {
    if (terms_.size() != 1) {
        throw std::logic_error("PiValue: expected a single pi-monomial, got " + str());
    }
    return terms_.front();
}

void PiValue::add_monomial(const Rational& coeff, int exponent) {
    if (coeff.is_zero()) {
        return;
    }
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                               [](const PiMonomial& m, int e) { return m.exponent < e; });
    if (it != terms_.end() && it->exponent == exponent) {
        it->coeff += coeff;
        if (it->coeff.is_zero()) {
            terms_.erase(it);
        }
    } else {
        terms_.insert(it, {coeff, exponent});
    }
}

PiValue PiValue::operator-() const {
    PiValue r = *this;
    for (auto& m : r.terms_) {
        m.coeff = -m.coeff;
    }
    return r;
}

PiValue& PiValue::operator+=(const PiValue& rhs) {
    for (const auto& m : rhs.terms_) {
        add_monomial(m.coeff, m.exponent);
    }
    return *this;
}

PiValue& PiValue::operator-=(const PiValue& rhs) {
    for (const auto& m : rhs.terms_) {
        add_monomial(-m.coeff, m.exponent);
    }
    return *this;
}

PiValue& PiValue::operator*=(const PiValue& rhs) {
    PiValue product;
    for (const auto& a : terms_) {
        for (const auto& b : rhs.terms_) {
            product.add_monomial(a.coeff * b.coeff, a.exponent + b.exponent);
        }
    }
    *this = std::move(product);
    return *this;
}

PiValue& PiValue::operator*=(const Rational& rhs) {
    if (rhs.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& m : terms_) {
        m.coeff *= rhs;
    }
    return *this;
}

PiValue& PiValue::operator/=(const Rational& rhs) {
    for (auto& m : terms_) {
        m.coeff /= rhs;
    }
    return *this;
}

std::string PiValue::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i) os << " + ";
        os << "(" << terms_[i].coeff << ")";
        if (terms_[i].exponent != 0) os << "*pi^" << terms_[i].exponent;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const PiValue& v) { return os << v.str(); }

} // namespace spinl::exact
