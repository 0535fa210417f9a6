#include "spinl/qexp/forms.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "spinl/exact/special_values.hpp"

namespace spinl::qexp {

namespace {

constexpr int kLemmaPrecisionLimit = 1000;

void require_precision(int N) {
    if (N < 1) {
        throw std::invalid_argument("q-expansion precision must be >= 1, got " + std::to_string(N));
    }
}

// tau(0..N) from the eta product, multiplying in (1 - q^n)^24 as a sparse
// binomial for each n.
std::vector<BigInt> delta_integers(int N) {
    std::vector<BigInt> binom24(25);
    for (int j = 0; j <= 24; ++j) {
        binom24[j] = exact::binomial(24, j);
        if (j % 2) binom24[j] = -binom24[j];
    }
    // eta^24 / q up to q^{N-1}
    std::vector<BigInt> c(static_cast<std::size_t>(N), 0);
    c[0] = 1;
    for (int n = 1; n < N; ++n) {
        for (int i = N - 1; i >= n; --i) {
            BigInt acc = c[i];
            for (int j = 1; j <= 24 && n * j <= i; ++j) {
                acc += binom24[j] * c[i - n * j];
            }
            c[i] = acc;
        }
    }
    std::vector<BigInt> tau(static_cast<std::size_t>(N) + 1, 0);
    for (int n = 1; n <= N; ++n) {
        tau[n] = c[n - 1];
    }
    return tau;
}

std::vector<BigInt> g20_integers(int N) {
    const auto tau = delta_integers(N);
    std::vector<BigInt> e8(static_cast<std::size_t>(N) + 1);
    e8[0] = 1;
    for (int n = 1; n <= N; ++n) {
        e8[n] = 480 * divisor_sigma(7, n);
    }
    std::vector<BigInt> b(static_cast<std::size_t>(N) + 1, 0);
    for (int n = 1; n <= N; ++n) {
        BigInt acc = 0;
        for (int k = 1; k <= n; ++k) {
            acc += tau[k] * e8[n - k];
        }
        b[n] = acc;
    }
    return b;
}

BigInt ipow(long base, unsigned long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), e);
    return r;
}

// Coefficients at p^0..p^order of a Hecke eigenform of weight k, read from
// `coeffs` where available and continued by the Hecke recursion.  Returns
// false in `consistent` if the two sources disagree anywhere they overlap.
std::vector<BigInt> prime_power_coeffs(const std::vector<BigInt>& coeffs, int p, int k,
                                       int order, bool& consistent) {
    const int N = static_cast<int>(coeffs.size()) - 1;
    const BigInt pk1 = ipow(p, static_cast<unsigned long>(k - 1));
    std::vector<BigInt> out(static_cast<std::size_t>(order) + 1);
    out[0] = 1;
    if (order >= 1) out[1] = coeffs.at(static_cast<std::size_t>(p));
    long pe = p;
    for (int e = 2; e <= order; ++e) {
        BigInt rec = out[1] * out[e - 1] - pk1 * out[e - 2];
        if (pe <= N / p) {
            pe *= p;
            if (coeffs[pe] != rec) {
                consistent = false;
            }
            out[e] = coeffs[pe];
        } else {
            out[e] = rec;
        }
    }
    return out;
}

} // namespace

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

BigInt divisor_sigma(int k, long n) {
    if (n < 1) {
        throw std::invalid_argument("divisor_sigma: n must be positive");
    }
    BigInt s = 0;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            s += ipow(d, static_cast<unsigned long>(k));
            if (d * d != n) s += ipow(n / d, static_cast<unsigned long>(k));
        }
    }
    return s;
}

QSeries delta_qexp(int N) {
    require_precision(N);
    return QSeries::from_integers(delta_integers(N));
}

QSeries eisenstein_qexp(int k, int N) {
    if (k < 4 || k % 2 != 0) {
        throw std::invalid_argument("eisenstein_qexp: weight must be even and >= 4, got " +
                                    std::to_string(k));
    }
    require_precision(N);
    const Rational scale = -Rational(2L * k) / exact::bernoulli(k);
    std::vector<Rational> c(static_cast<std::size_t>(N) + 1);
    c[0] = Rational(1);
    for (int n = 1; n <= N; ++n) {
        c[n] = scale * Rational(divisor_sigma(k - 1, n));
    }
    return QSeries(std::move(c));
}

QSeries g2p_qexp(int p, int N) {
    if (!is_prime(p)) {
        throw std::invalid_argument("g2p_qexp: p must be prime, got " + std::to_string(p));
    }
    require_precision(N);
    std::vector<Rational> c(static_cast<std::size_t>(N) + 1);
    c[0] = Rational(BigInt(p - 1), BigInt(24));
    for (int n = 1; n <= N; ++n) {
        long s = 0;
        for (long d = 1; d <= n; ++d) {
            if (n % d == 0 && d % p != 0) s += d;
        }
        c[n] = Rational(s);
    }
    return QSeries(std::move(c));
}

QSeries g20_qexp(int N) {
    require_precision(N);
    return QSeries::from_integers(g20_integers(N));
}

QSeries hecke_tp(const QSeries& f, int p, int k) {
    if (!is_prime(p)) {
        throw std::invalid_argument("hecke_tp: p must be prime, got " + std::to_string(p));
    }
    const int out = f.precision() / p;
    if (out < 1) {
        throw std::invalid_argument("hecke_tp: input precision " + std::to_string(f.precision()) +
                                    " too small for T_" + std::to_string(p));
    }
    const Rational pk1 = Rational(ipow(p, static_cast<unsigned long>(k - 1)));
    std::vector<Rational> c(static_cast<std::size_t>(out) + 1);
    for (int n = 0; n <= out; ++n) {
        c[n] = f[n * p];
        if (n % p == 0) {
            c[n] += pk1 * f[n / p];
        }
    }
    return QSeries(std::move(c));
}

RankinCoeffs::RankinCoeffs(std::vector<BigInt> values) : values_(std::move(values)) {
    if (values_.empty()) {
        throw std::invalid_argument("RankinCoeffs: empty");
    }
}

const BigInt& RankinCoeffs::at(int n) const {
    if (n < 1 || n > precision()) {
        throw std::out_of_range("RankinCoeffs: index " + std::to_string(n) + " outside 1.." +
                                std::to_string(precision()));
    }
    return values_[static_cast<std::size_t>(n) - 1];
}

RankinCoeffs rankin_coeffs(int N) {
    require_precision(N);
    const auto tau = delta_integers(N);
    const auto b = g20_integers(N);
    std::vector<BigInt> A(static_cast<std::size_t>(N));
    for (int n = 1; n <= N; ++n) {
        BigInt acc = 0;
        for (long d = 1; d * d <= n; ++d) {
            if (n % (d * d) == 0) {
                const long m = n / (d * d);
                acc += ipow(d, 30) * tau[m] * b[m];
            }
        }
        A[n - 1] = acc;
    }
    return RankinCoeffs(std::move(A));
}

bool lemma1_local_check(int p, int order) {
    if (!is_prime(p)) {
        throw std::invalid_argument("lemma1_local_check: p must be prime");
    }
    if (order < 0) {
        throw std::invalid_argument("lemma1_local_check: negative order");
    }
    long limit = 1;
    for (int e = 0; e < order && limit * p <= kLemmaPrecisionLimit; ++e) {
        limit *= p;
    }
    if (order >= 1 && limit < p) {
        throw std::invalid_argument("lemma1_local_check: q-expansion precision " +
                                    std::to_string(kLemmaPrecisionLimit) +
                                    " cannot supply tau(p) for p = " + std::to_string(p));
    }
    const int N = static_cast<int>(std::max<long>(limit, 1));
    const auto tau = delta_integers(N);
    const auto b = g20_integers(N);

    bool consistent = true;
    const auto tp = prime_power_coeffs(tau, p, 12, order, consistent);
    const auto bp = prime_power_coeffs(b, p, 20, order, consistent);
    if (!consistent) {
        return false;
    }

    // Denominator prod_{i,j} (1 - alpha_i beta_j X) = 1 - c1 X + c2 X^2 - c3 X^3 + c4 X^4.
    const BigInt a = order >= 1 ? tp[1] : BigInt(0);
    const BigInt bb = order >= 1 ? bp[1] : BigInt(0);
    const BigInt e2 = ipow(p, 11);
    const BigInt f2 = ipow(p, 19);
    const BigInt c1 = a * bb;
    const BigInt c2 = a * a * f2 + bb * bb * e2 - 2 * e2 * f2;
    const BigInt c3 = a * bb * e2 * f2;
    const BigInt c4 = e2 * e2 * f2 * f2;
    const std::vector<BigInt> den{1, -c1, c2, -c3, c4};
    std::vector<BigInt> num(static_cast<std::size_t>(order) + 1, 0);
    num[0] = 1;
    if (order >= 2) num[2] = -(e2 * f2);

    // Power-series division num / den (den[0] = 1 keeps it integral).
    std::vector<BigInt> rhs(static_cast<std::size_t>(order) + 1, 0);
    for (int k = 0; k <= order; ++k) {
        BigInt acc = num[k];
        for (int j = 1; j <= 4 && j <= k; ++j) {
            acc -= den[j] * rhs[k - j];
        }
        rhs[k] = acc;
    }
    for (int k = 0; k <= order; ++k) {
        if (tp[k] * bp[k] != rhs[k]) {
            return false;
        }
    }
    return true;
}

} // namespace spinl::qexp
