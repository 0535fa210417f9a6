#include "spinl/numeric/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

namespace spinl::numeric {

namespace {

constexpr double kLog2Of10 = 3.321928094887362;

mpfr_prec_t max_prec(const BigFloat& a, const BigFloat& b) {
    return std::max(mpfr_get_prec(a.get()), mpfr_get_prec(b.get()));
}

std::string format(const char* spec, int digits, mpfr_srcptr x) {
    char* buf = nullptr;
    if (mpfr_asprintf(&buf, spec, digits, x) < 0 || buf == nullptr) {
        throw std::runtime_error("BigFloat: formatting failed");
    }
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

} // namespace

Precision Precision::decimal(int digits) {
    if (digits < 1) {
        throw std::invalid_argument("precision must be at least one decimal digit");
    }
    return Precision(static_cast<mpfr_prec_t>(std::ceil(digits * kLog2Of10)) + 4);
}

Precision Precision::from_bits(mpfr_prec_t bits) {
    return Precision(std::max<mpfr_prec_t>(bits, MPFR_PREC_MIN));
}

int Precision::digits() const {
    return static_cast<int>(std::floor((bits_ - 4) / kLog2Of10));
}

Precision Precision::widened(int extra) const {
    return Precision(bits_ + static_cast<mpfr_prec_t>(std::ceil(extra * kLog2Of10)));
}

BigFloat::BigFloat(Precision p) {
    mpfr_init2(value_, p.bits());
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(long value, Precision p) {
    mpfr_init2(value_, p.bits());
    mpfr_set_si(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(double value, Precision p) {
    mpfr_init2(value_, p.bits());
    mpfr_set_d(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const exact::Rational& value, Precision p) {
    mpfr_init2(value_, p.bits());
    mpfr_set_q(value_, value.raw().get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const exact::BigInt& value, Precision p) {
    mpfr_init2(value_, p.bits());
    mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

BigFloat BigFloat::parse(std::string_view text, Precision p) {
    BigFloat out(p);
    const std::string s(text);
    char* end = nullptr;
    if (!s.empty()) mpfr_strtofr(out.value_, s.c_str(), &end, 10, MPFR_RNDN);
    if (s.empty() || end != s.c_str() + s.size()) {
        throw std::invalid_argument("BigFloat: cannot parse '" + s + "'");
    }
    return out;
}

BigFloat BigFloat::pi(Precision p) {
    BigFloat out(p);
    mpfr_const_pi(out.value_, MPFR_RNDN);
    return out;
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    mpfr_swap(value_, other.value_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::rounded(Precision p) const {
    BigFloat out(p);
    mpfr_set(out.value_, value_, MPFR_RNDN);
    return out;
}

BigFloat BigFloat::operator-() const {
    BigFloat out(*this);
    mpfr_neg(out.value_, out.value_, MPFR_RNDN);
    return out;
}

#define SPINL_COMPOUND(op, fn)                                        \
    BigFloat& BigFloat::operator op(const BigFloat& rhs) {            \
        if (mpfr_get_prec(rhs.value_) > mpfr_get_prec(value_)) {      \
            mpfr_prec_round(value_, mpfr_get_prec(rhs.value_), MPFR_RNDN); \
        }                                                             \
        fn(value_, value_, rhs.value_, MPFR_RNDN);                    \
        return *this;                                                 \
    }

SPINL_COMPOUND(+=, mpfr_add)
SPINL_COMPOUND(-=, mpfr_sub)
SPINL_COMPOUND(*=, mpfr_mul)
SPINL_COMPOUND(/=, mpfr_div)
#undef SPINL_COMPOUND

BigFloat& BigFloat::operator*=(long rhs) {
    mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator/=(long rhs) {
    mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
    return *this;
}

#define SPINL_BINARY(op, fn)                                          \
    BigFloat operator op(const BigFloat& a, const BigFloat& b) {      \
        BigFloat out(Precision::from_bits(max_prec(a, b)));           \
        fn(out.value_, a.value_, b.value_, MPFR_RNDN);                \
        return out;                                                   \
    }

SPINL_BINARY(+, mpfr_add)
SPINL_BINARY(-, mpfr_sub)
SPINL_BINARY(*, mpfr_mul)
SPINL_BINARY(/, mpfr_div)
#undef SPINL_BINARY

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
    if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
    const int c = mpfr_cmp(a.value_, b.value_);
    return c < 0 ? std::partial_ordering::less
                 : c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent;
}

std::partial_ordering operator<=>(const BigFloat& a, long b) {
    if (mpfr_nan_p(a.value_)) return std::partial_ordering::unordered;
    const int c = mpfr_cmp_si(a.value_, b);
    return c < 0 ? std::partial_ordering::less
                 : c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent;
}

bool BigFloat::is_integer(long* out) const {
    if (!mpfr_integer_p(value_)) return false;
    if (out != nullptr && mpfr_fits_slong_p(value_, MPFR_RNDN)) {
        *out = mpfr_get_si(value_, MPFR_RNDN);
    }
    return true;
}

std::string BigFloat::to_scientific(int significant) const {
    return format("%.*Re", std::max(significant, 1) - 1, value_);
}

std::string BigFloat::to_string(int significant) const {
    return format("%.*Rg", std::max(significant, 1), value_);
}

std::ostream& operator<<(std::ostream& os, const BigFloat& x) {
    return os << x.to_string(x.precision().digits());
}

#define SPINL_UNARY(name, fn)                                         \
    BigFloat name(const BigFloat& x) {                                \
        BigFloat out(x.precision());                                  \
        fn(out.get(), x.get(), MPFR_RNDN);                            \
        return out;                                                   \
    }

SPINL_UNARY(abs, mpfr_abs)
SPINL_UNARY(sqrt, mpfr_sqrt)
SPINL_UNARY(exp, mpfr_exp)
SPINL_UNARY(log, mpfr_log)
SPINL_UNARY(cosh, mpfr_cosh)
SPINL_UNARY(acosh, mpfr_acosh)
SPINL_UNARY(gamma, mpfr_gamma)
SPINL_UNARY(zeta, mpfr_zeta)
#undef SPINL_UNARY

BigFloat pow(const BigFloat& x, const BigFloat& y) {
    BigFloat out(Precision::from_bits(max_prec(x, y)));
    mpfr_pow(out.get(), x.get(), y.get(), MPFR_RNDN);
    return out;
}

BigFloat pow(const BigFloat& x, long n) {
    BigFloat out(x.precision());
    mpfr_pow_si(out.get(), x.get(), n, MPFR_RNDN);
    return out;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

BigFloat relative_difference(const BigFloat& a, const BigFloat& b) {
    BigFloat d = abs(a - b);
    if (!b.is_zero()) d /= abs(b);
    return d;
}

int agreeing_digits(const BigFloat& a, const BigFloat& b) {
    const int cap = std::max(a.precision().digits(), b.precision().digits());
    const BigFloat rel = relative_difference(a, b);
    if (rel.is_zero()) return cap;
    const double lg = -std::log10(rel.to_double());
    if (!std::isfinite(lg)) {
        // below double range: fall back to the MPFR exponent
        const long e2 = mpfr_get_exp(rel.get());
        return std::min(cap, static_cast<int>(std::floor(-e2 * 0.30102999566398120)));
    }
    return std::clamp(static_cast<int>(std::floor(lg)), 0, cap);
}

} // namespace spinl::numeric
