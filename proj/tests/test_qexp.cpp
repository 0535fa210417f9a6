#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "spinl/exact/special_values.hpp"
#include "spinl/qexp/forms.hpp"
#include "spinl/qexp/qseries.hpp"

#include "oracles.hpp"

using namespace spinl;
using exact::BigInt;
using exact::Rational;
using qexp::QSeries;

namespace {

long tau_small(int n) {
    static const long v[] = {0, 1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643,
                             -115920, 534612, -370944, -577738, 401856, 1217160};
    return v[n];
}

} // namespace

TEST_CASE("delta leading coefficients") {
    auto d = qexp::delta_qexp(6);
    CHECK(d.precision() == 6);
    CHECK(d[0].is_zero());
    CHECK(d[1] == Rational(1));
    CHECK(d[2] == Rational(-24));
    CHECK(d[3] == Rational(252));
    CHECK(d[4] == Rational(-1472));
    CHECK(d[5] == Rational(4830));
    CHECK(d[6] == Rational(-6048));
    CHECK(qexp::delta_qexp(1)[1] == Rational(1));
}

TEST_CASE("two delta expansion routes agree to precision 200") {
    CHECK(qexp::delta_qexp(200) == oracle::delta_by_pentagonal(200));
}

TEST_CASE("eisenstein series") {
    auto e8 = qexp::eisenstein_qexp(8, 10);
    // -16/B_8 with B_8 = -1/30.
    CHECK(e8[0] == Rational(1));
    CHECK(e8[1] == Rational(480));
    CHECK(e8[2] == Rational(480 * 129));
    CHECK(qexp::eisenstein_qexp(4, 5)[0] == Rational(1));
    CHECK(qexp::eisenstein_qexp(4, 5)[1] == Rational(240));
    CHECK_THROWS_AS(qexp::eisenstein_qexp(5, 5), std::invalid_argument);
    CHECK_THROWS_AS(qexp::eisenstein_qexp(2, 5), std::invalid_argument);
}

TEST_CASE("E4^3 - E6^2 = 1728 Delta") {
    auto e4 = qexp::eisenstein_qexp(4, 60);
    auto e6 = qexp::eisenstein_qexp(6, 60);
    CHECK(e4 * e4 * e4 - e6 * e6 == Rational(1728) * qexp::delta_qexp(60));
}

TEST_CASE("G_{2,p} coefficients") {
    auto g = qexp::g2p_qexp(2, 8);
    CHECK(g[0] == Rational::parse("1/24"));
    CHECK(g[1] == Rational(1));
    CHECK(g[2] == Rational(1));
    CHECK(g[3] == Rational(4));
    CHECK(g[4] == Rational(1));
    CHECK(g[5] == Rational(6));
    CHECK(qexp::g2p_qexp(3, 4)[0] == Rational::parse("1/12"));
    CHECK(qexp::g2p_qexp(3, 4)[3] == Rational(1));
}

TEST_CASE("g20 coefficients") {
    static const char* b[] = {"1", "456", "50652", "-316352", "-2377410", "23097312", "-16917544",
                              "-383331840", "1403363637", "-1084098960", "-16212108",
                              "-16023861504", "50421615062", "-7714400064", "-120420571320"};
    auto g = qexp::g20_qexp(15);
    CHECK(g[0].is_zero());
    for (int n = 1; n <= 15; ++n) CHECK(g.integer_at(n) == BigInt(b[n - 1]));
    CHECK(g == qexp::eisenstein_qexp(8, 15) * qexp::delta_qexp(15));
}

TEST_CASE("hecke T2 eigenvalues") {
    auto d = qexp::delta_qexp(160);
    auto t2d = qexp::hecke_tp(d, 2, 12);
    CHECK(t2d.precision() == 80);
    CHECK(t2d[1] == Rational(-24));
    CHECK(t2d[2] == Rational(576));
    CHECK(t2d == Rational(-24) * d.truncated(80));

    auto g = qexp::g20_qexp(160);
    CHECK(qexp::hecke_tp(g, 2, 20) == Rational(456) * g.truncated(80));
    CHECK_THROWS_AS(qexp::hecke_tp(qexp::delta_qexp(1), 2, 12), std::invalid_argument);
}

TEST_CASE("multiplicativity of tau and b") {
    const int N = 200;
    auto d = qexp::delta_qexp(N);
    auto g = qexp::g20_qexp(N);
    for (int m = 2; m <= N; ++m) {
        for (int n = m + 1; m * n <= N; ++n) {
            if (std::gcd(m, n) != 1) continue;
            CHECK(d[m * n] == d[m] * d[n]);
            CHECK(g[m * n] == g[m] * g[n]);
        }
    }
}

TEST_CASE("hecke recursion at prime powers") {
    auto d = qexp::delta_qexp(729);
    auto g = qexp::g20_qexp(729);
    for (long p : {2L, 3L, 5L}) {
        long pk = p;
        for (int k = 1; k <= 4 && pk * p <= 729; ++k, pk *= p) {
            const int prev = static_cast<int>(pk / p);
            CHECK(d[pk * p] == d[p] * d[pk] - Rational(p).pow(11) * d[prev]);
            CHECK(g[pk * p] == g[p] * g[pk] - Rational(p).pow(19) * g[prev]);
        }
    }
}

TEST_CASE("rankin coefficients") {
    static const char* a[] = {"1", "-10944", "12764304", "1539411968", "-11482890300",
                              "-139692542976", "283267356736", "-44134904365056", "46408678295058",
                              "125668751443200", "-8667187482096", "19649522340790272",
                              "-29130483042689756", "-3100077952118784", "-146571102587851200"};
    auto A = qexp::rankin_coeffs(200);
    for (int n = 1; n <= 15; ++n) CHECK(A.at(n) == BigInt(a[n - 1]));
    for (int m = 2; m <= 200; ++m) {
        for (int n = m + 1; m * n <= 200; ++n) {
            if (std::gcd(m, n) == 1) CHECK(A.at(m * n) == A.at(m) * A.at(n));
        }
    }
    // Squarefree n: A(n) = tau(n) b(n).
    auto g = qexp::g20_qexp(15);
    for (int n : {1, 2, 3, 5, 6, 7, 10, 11, 13, 14, 15}) {
        CHECK(A.at(n) == BigInt(tau_small(n)) * g.integer_at(n));
    }
    CHECK_THROWS(A.at(201));
}

TEST_CASE("local factor identity") {
    CHECK(qexp::lemma1_local_check(2, 0));
    CHECK(qexp::lemma1_local_check(2, 8));
    CHECK(qexp::lemma1_local_check(3, 6));
    CHECK(qexp::lemma1_local_check(3, 8));
    CHECK(qexp::lemma1_local_check(5, 8));
    CHECK(qexp::lemma1_local_check(7, 10));
}
