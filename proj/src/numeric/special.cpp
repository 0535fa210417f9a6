#include "spinl/numeric/special.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace spinl::numeric {

namespace {

constexpr int kGuardDigits = 8;

// Argument beyond which the asymptotic series of K_0, K_1 reaches precision p:
// its smallest term is about e^{-2x}.
double asymptotic_threshold(Precision p) {
    return 0.5 * static_cast<double>(p.bits()) * std::log(2.0) + 8.0;
}

// sqrt(pi / 2x) e^{-x} sum_k a_k(nu) / x^k for nu = 0, 1.
bool bessel_k01_asymptotic(const BigFloat& x, Precision wp, BigFloat& k0, BigFloat& k1) {
    BigFloat s0(1L, wp), s1(1L, wp);
    BigFloat t0(1L, wp), t1(1L, wp);
    const BigFloat eps = pow(BigFloat(2L, wp), -static_cast<long>(wp.bits()));
    BigFloat prev0 = t0;
    for (long k = 1; k < 10000; ++k) {
        const long odd = (2 * k - 1) * (2 * k - 1);
        t0 *= (0 - odd);
        t0 /= 8 * k;
        t0 /= x;
        t1 *= (4 - odd);
        t1 /= 8 * k;
        t1 /= x;
        if (abs(t0) > abs(prev0) && k > 2) return false;  // diverging before converging
        s0 += t0;
        s1 += t1;
        if (abs(t0) < eps && abs(t1) < eps) {
            const BigFloat pre = sqrt(BigFloat::pi(wp) / (2L * x)) * exp(-x);
            k0 = pre * s0;
            k1 = pre * s1;
            return true;
        }
        prev0 = t0;
    }
    return false;
}

// Trapezoidal rule on int_0^inf e^{-x cosh t} cosh(nu t) dt for nu = 0, 1.
// The integrand is analytic in the strip |Im t| < d with d chosen so that
// Re(cosh t) stays >= 1 - 1/x; the discretization error is then about
// exp(-2 pi d / h).
void bessel_k01_trapezoid(const BigFloat& x, Precision wp, BigFloat& k0, BigFloat& k1) {
    const double xd = x.to_double();
    const double target = static_cast<double>(wp.bits()) * std::log(2.0) + 10.0;
    const double d = xd <= 1.0 / (1.0 - std::cos(M_PI / 4)) ? M_PI / 4 : std::acos(1.0 - 1.0 / xd);
    const double h = 2.0 * M_PI * d / (target + 5.0);
    // truncate where x (cosh t - 1) - t exceeds the target
    double tmax = std::acosh(1.0 + target / xd);
    for (int it = 0; it < 8; ++it) {
        tmax = std::acosh(1.0 + (target + tmax) / xd);
    }
    const long steps = static_cast<long>(std::ceil(tmax / h)) + 1;

    const BigFloat hb(h, wp);
    const BigFloat eh = exp(hb);
    BigFloat up(1L, wp);  // e^{j h}
    BigFloat sum0(wp), sum1(wp);
    // scale out e^{-x} so node values stay near 1 for large x
    for (long j = 0; j <= steps; ++j) {
        const BigFloat down = BigFloat(1L, wp) / up;
        const BigFloat c = (up + down) / 2L;
        const BigFloat f = exp(-x * (c - BigFloat(1L, wp)));
        const BigFloat w = j == 0 ? BigFloat(0.5, wp) : BigFloat(1L, wp);
        sum0 += w * f;
        sum1 += w * f * c;
        up *= eh;
    }
    const BigFloat scale = hb * exp(-x);
    k0 = sum0 * scale;
    k1 = sum1 * scale;
}

// Steed's continued fraction for K_0 and K_1 (Temme's CF2), effective for x >= 2.
bool bessel_k01_continued_fraction(const BigFloat& x, Precision wp, BigFloat& k0, BigFloat& k1) {
    const BigFloat one(1L, wp);
    const BigFloat eps = pow(BigFloat(2L, wp), -static_cast<long>(wp.bits()));
    BigFloat b = (one + x) * 2L;
    BigFloat d = one / b;
    BigFloat h = d;
    BigFloat delh = d;
    BigFloat q1(wp), q2 = one;
    const BigFloat a1(0.25, wp);
    BigFloat q = a1, c = a1;
    BigFloat a = -a1;
    BigFloat s = one + q * delh;
    for (long i = 1; i < 100000; ++i) {
        a -= BigFloat(2L * i, wp);
        c = -a * c / (i + 1);
        const BigFloat qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += BigFloat(2L, wp);
        d = one / (b + a * d);
        delh = (b * d - one) * delh;
        h += delh;
        const BigFloat dels = q * delh;
        s += dels;
        if (abs(dels) < eps * abs(s)) {
            h *= a1;
            k0 = sqrt(BigFloat::pi(wp) / (2L * x)) * exp(-x) / s;
            k1 = k0 * (x + BigFloat(0.5, wp) - h) / x;
            return true;
        }
    }
    return false;
}

} // namespace

BigFloat incomplete_gamma_int(long s, const BigFloat& x, Precision p) {
    if (s < 1) {
        throw std::domain_error("incomplete_gamma_int: s must be a positive integer");
    }
    if (x.sign() < 0) {
        throw std::domain_error("incomplete_gamma_int: x must be nonnegative");
    }
    const Precision wp = p.widened(kGuardDigits);
    const BigFloat xw = x.rounded(wp);
    // (s-1)! sum_{j<s} x^j / j!
    BigFloat term(1L, wp);
    BigFloat sum(1L, wp);
    for (long j = 1; j < s; ++j) {
        term *= xw;
        term /= j;
        sum += term;
    }
    BigFloat fact(1L, wp);
    for (long j = 2; j < s; ++j) fact *= j;
    return (fact * sum * exp(-xw)).rounded(p);
}

BigFloat incomplete_gamma(const BigFloat& a, const BigFloat& x, Precision p) {
    long n = 0;
    if (a.is_integer(&n) && n >= 1) {
        return incomplete_gamma_int(n, x, p);
    }
    if (x.sign() < 0) {
        throw std::domain_error("incomplete_gamma: x must be nonnegative");
    }
    const Precision wp = p.widened(kGuardDigits);
    BigFloat out(wp);
    mpfr_gamma_inc(out.get(), a.rounded(wp).get(), x.rounded(wp).get(), MPFR_RNDN);
    return out.rounded(p);
}

std::vector<BigFloat> bessel_k_sequence(int nu_max, const BigFloat& x, Precision p) {
    if (nu_max < 0) {
        throw std::domain_error("bessel_k: order must be nonnegative");
    }
    if (!(x >= BigFloat(kBesselMinArg, x.precision())) || !(x <= BigFloat(kBesselMaxArg, x.precision()))) {
        throw std::domain_error("bessel_k: argument " + x.to_string(8) + " outside [1e-6, 1e4]");
    }
    // the upward recurrence adds positive terms, so it is stable
    const Precision wp = p.widened(kGuardDigits);
    const BigFloat xw = x.rounded(wp);
    BigFloat k0(wp), k1(wp);
    const double xd = xw.to_double();
    const bool done = (xd >= asymptotic_threshold(wp) && bessel_k01_asymptotic(xw, wp, k0, k1)) ||
                      (xd >= 2.0 && bessel_k01_continued_fraction(xw, wp, k0, k1));
    if (!done) bessel_k01_trapezoid(xw, wp, k0, k1);
    std::vector<BigFloat> out;
    out.reserve(static_cast<std::size_t>(nu_max) + 1);
    out.push_back(k0);
    if (nu_max >= 1) out.push_back(k1);
    for (int nu = 1; nu < nu_max; ++nu) {
        out.push_back(out[nu - 1] + BigFloat(2L * nu, wp) / xw * out[nu]);
    }
    for (auto& v : out) v = v.rounded(p);
    return out;
}

BigFloat bessel_k(int nu, const BigFloat& x, Precision p) {
    return bessel_k_sequence(nu, x, p).back();
}

} // namespace spinl::numeric
