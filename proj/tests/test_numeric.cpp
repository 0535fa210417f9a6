#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "spinl/numeric/bigfloat.hpp"
#include "spinl/numeric/lfunction.hpp"
#include "spinl/numeric/petersson.hpp"
#include "spinl/numeric/quadrature.hpp"
#include "spinl/numeric/special.hpp"
#include "spinl/numeric/verify.hpp"
#include "spinl/qexp/forms.hpp"

using namespace spinl;
using numeric::BigFloat;
using numeric::Precision;

namespace {

const Precision P30 = Precision::decimal(30);
const Precision P50 = Precision::decimal(50);

BigFloat bf(const char* text, Precision p = P50) { return BigFloat::parse(text, p); }

double rel(const BigFloat& a, const BigFloat& b) { return numeric::relative_difference(a, b).to_double(); }

// tau(n) for n <= N from (n - 1) tau(n) = -24 sum_{k<n} sigma_1(k) tau(n - k),
// the logarithmic derivative of Delta against E_2.  Fits in 128 bits for
// N <= 10^4.
std::vector<__int128> tau_by_sigma_recurrence(int N) {
    std::vector<__int128> sigma(N + 1, 0), tau(N + 1, 0);
    for (int d = 1; d <= N; ++d) {
        for (int m = d; m <= N; m += d) sigma[m] += d;
    }
    tau[1] = 1;
    for (int n = 2; n <= N; ++n) {
        __int128 acc = 0;
        for (int k = 1; k < n; ++k) acc += sigma[k] * tau[n - k];
        tau[n] = -24 * acc / (n - 1);
    }
    return tau;
}

BigFloat from_int128(__int128 v, Precision p) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    std::string digits;
    do {
        digits.insert(digits.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    } while (u != 0);
    if (neg) digits.insert(digits.begin(), '-');
    return BigFloat::parse(digits, p);
}

// sum_{n<=N} a(n) n^{-s}
BigFloat direct_sum(const std::vector<BigFloat>& a, long s, Precision p) {
    BigFloat total(p);
    for (std::size_t n = 1; n < a.size(); ++n) {
        total += a[n] / pow(BigFloat(static_cast<long>(n), p), s);
    }
    return total;
}

} // namespace

TEST_CASE("incomplete gamma, integer parameter") {
    // Gamma(1, x) = e^-x
    const BigFloat x = bf("2.5", P30);
    CHECK(rel(numeric::incomplete_gamma_int(1, x, P30), exp(-x)) < 1e-29);
    // Gamma(3, 1) = 2 e^-1 (1 + 1 + 1/2) = 5/e
    const BigFloat five_over_e = bf("1.83939720585721160797761885080730433722905565515883917253918");
    CHECK(rel(numeric::incomplete_gamma_int(3, BigFloat(1L, P50), P50), five_over_e) < 1e-49);
    // small x tends to (s-1)!
    CHECK(rel(numeric::incomplete_gamma_int(6, bf("1e-40"), P30), BigFloat(120L, P30)) < 1e-29);
}

TEST_CASE("incomplete gamma agrees with quadrature") {
    auto f = [](const BigFloat& t) { return t * t * exp(-t); };
    auto r = numeric::integrate_tanh_sinh(f, BigFloat(1L, P30), BigFloat(200L, P30), P30, bf("1e-28", P30));
    CHECK(r.converged);
    CHECK(rel(r.value, numeric::incomplete_gamma_int(3, BigFloat(1L, P30), P30)) < 1e-27);
}

TEST_CASE("incomplete gamma, half-integer parameter") {
    const BigFloat v = numeric::incomplete_gamma(bf("2.5"), BigFloat(3L, P50), P50);
    CHECK(rel(v, bf("0.407069175871302998434239174728110744495690367454095742313874")) < 1e-48);
}

TEST_CASE("bessel K reference values") {
    CHECK(rel(numeric::bessel_k(0, BigFloat(1L, P50), P50),
              bf("0.42102443824070833333562737921260903613621974822666047229897")) < 1e-48);
    CHECK(rel(numeric::bessel_k(11, BigFloat(3L, P50), P50),
              bf("16795.4282807062473254074015819785340974474830009370131438024")) < 1e-47);
    CHECK(rel(numeric::bessel_k(1, BigFloat(10L, P50), P50),
              bf("0.0000186487734538255845968168581223716746816668801026340541215151")) < 1e-48);
}

TEST_CASE("bessel K matches its integral representation") {
    // K_0(1) = int_0^inf e^{-cosh t} dt, with the tail beyond t = 6 below 1e-80.
    auto f = [](const BigFloat& t) { return exp(-cosh(t)); };
    auto r = numeric::integrate_tanh_sinh(f, BigFloat(0L, P30), BigFloat(6L, P30), P30, bf("1e-28", P30));
    CHECK(rel(r.value, numeric::bessel_k(0, BigFloat(1L, P30), P30)) < 1e-27);
}

TEST_CASE("bessel K recurrence and asymptotics") {
    const BigFloat x(3L, P30);
    auto k = numeric::bessel_k_sequence(6, x, P30);
    const BigFloat residual = k[6] - (k[4] + BigFloat(10L, P30) / x * k[5]);
    CHECK(abs(residual / k[6]).to_double() < 1e-27);

    // K_0(50) sqrt(2 x / pi) e^x = 1 - 1/(8x) + O(x^-2)
    const BigFloat fifty(50L, P30);
    const BigFloat scaled = numeric::bessel_k(0, fifty, P30) * sqrt(2L * fifty / BigFloat::pi(P30)) * exp(fifty);
    CHECK(std::abs(scaled.to_double() - (1.0 - 1.0 / 400)) < 1e-4);

    CHECK_THROWS_AS(numeric::bessel_k(0, bf("1e-7", P30), P30), std::domain_error);
    CHECK_THROWS_AS(numeric::bessel_k(0, BigFloat(20000L, P30), P30), std::domain_error);
}

TEST_CASE("L(s, Delta) against direct summation") {
    const int N = 10000;
    const auto tau = tau_by_sigma_recurrence(N);
    CHECK(tau[2] == -24);
    CHECK(tau[12] == -370944);
    std::vector<BigFloat> a(N + 1, BigFloat(P30));
    for (int n = 1; n <= N; ++n) a[n] = from_int128(tau[n], P30);

    // Tail beyond 10^4 is below d(n) n^{-5.5} summed, about 1e-17 relative.
    auto delta = qexp::delta_qexp(20);
    const BigFloat v11 = numeric::l_degree2(delta, 12, 11L, 30, 20);
    CHECK(rel(v11, direct_sum(a, 11, P30)) < 1e-15);
    const BigFloat v16 = numeric::l_degree2(delta, 12, 16L, 30, 20);
    CHECK(rel(v16, direct_sum(a, 16, P30)) < 1e-28);
}

TEST_CASE("L(s, g20) against direct summation") {
    const int N = 400;
    auto g = qexp::g20_qexp(N);
    std::vector<BigFloat> a(N + 1, BigFloat(P30));
    for (int n = 1; n <= N; ++n) a[n] = BigFloat(g.integer_at(n), P30);
    const BigFloat v = numeric::l_degree2(g, 20, 19L, 30, 25);
    CHECK(rel(v, direct_sum(a, 19, P30)) < 1e-12);
}

TEST_CASE("degree-2 values are stable in the number of terms") {
    auto delta = qexp::delta_qexp(40);
    const BigFloat s = bf("8.25", P30);
    const BigFloat a = numeric::l_degree2(delta, 12, s, 30, 20);
    const BigFloat b = numeric::l_degree2(delta, 12, s, 30, 30);
    CHECK(rel(a, b) < 1e-29);
    CHECK_THROWS_AS(numeric::l_degree2(delta, 12, s, 30, 3), numeric::InsufficientTerms);
}

TEST_CASE("degree-2 functional equation residuals") {
    std::vector<BigFloat> ts;
    for (const char* t : {"7.3", "6", "2.125", "9.9", "11.5"}) ts.push_back(bf(t, P30));
    const auto delta = numeric::delta_lfunction(20);
    for (const auto& r : numeric::functional_eq_residuals(delta, ts, 30, 20)) CHECK(r.to_double() < 1e-20);

    std::vector<BigFloat> us;
    for (const char* t : {"10", "3.5", "12.75", "16.2", "19"}) us.push_back(bf(t, P30));
    const auto g20 = numeric::g20_lfunction(25);
    for (const auto& r : numeric::functional_eq_residuals(g20, us, 30, 25)) CHECK(r.to_double() < 1e-20);
}

TEST_CASE("kernel Mellin transform is Gamma(s) Gamma(s - 11)") {
    for (long s0 : {13L, 15L, 17L}) {
        CAPTURE(s0);
        const BigFloat s(s0, P30);
        const BigFloat m = numeric::kernel_mellin_transform(11, s, 30);
        CHECK(rel(m, gamma(s) * gamma(s - BigFloat(11L, P30))) < 1e-22);
    }
}

TEST_CASE("degree-4 L-value against direct summation") {
    // |A(n)| <= d(n)^2 n^15, so at s = 28 the tail past 200 is below 1e-27.
    const int N = 200;
    const auto A = qexp::rankin_coeffs(N);
    std::vector<BigFloat> a(N + 1, BigFloat(P30));
    for (int n = 1; n <= N; ++n) a[n] = BigFloat(A.at(n), P30);
    numeric::RankinL4Evaluator ev(numeric::rankin_lfunction(A), 30, 150);
    const BigFloat s(28L, P30);
    CHECK(rel(ev.value(s), direct_sum(a, 28, P30)) < 1e-24);
    CHECK(ev.tail_bound(s) < abs(ev.completed(s)) * bf("1e-30", P30));
    CHECK_THROWS(ev.value(BigFloat(11L, P30)));
}

TEST_CASE("petersson norms") {
    const auto d = numeric::petersson_norm(12, 4, 30);
    CHECK(d.l_used == 8);
    // Agreement with the 15-digit value used for the published tables.
    CHECK(rel(d.value, bf("1.035362056804320948209596804e-6")) < 1e-15);

    const auto g4 = numeric::petersson_norm(20, 4, 30);
    const auto g6 = numeric::petersson_norm(20, 6, 30);
    const auto g8 = numeric::petersson_norm(20, 8, 30);
    CHECK(g4.l_used == 16);
    CHECK(g8.l_used == 12);
    CHECK(rel(g4.value, g6.value) < 1e-20);
    CHECK(rel(g4.value, g8.value) < 1e-20);
    CHECK(rel(g6.value, g8.value) < 1e-20);
    CHECK(rel(g4.value, bf("8.265541531659703069998511729e-6")) < 1e-15);

    CHECK_THROWS_AS(numeric::petersson_norm(12, 6, 30), std::invalid_argument);
    CHECK_THROWS_AS(numeric::petersson_norm(20, 10, 30), std::invalid_argument);
}

TEST_CASE("evaluation is deterministic") {
    auto delta = qexp::delta_qexp(20);
    const BigFloat s = bf("9.75", P30);
    CHECK(numeric::l_degree2(delta, 12, s, 30, 20) == numeric::l_degree2(delta, 12, s, 30, 20));
}

TEST_CASE("verify rejects bad parameters") {
    CHECK_THROWS_AS(numeric::verify_tables(14, 150, numeric::NormSource::Reference), std::invalid_argument);
    CHECK_THROWS_AS(numeric::verify_tables(30, 0, numeric::NormSource::Reference), std::invalid_argument);
}
