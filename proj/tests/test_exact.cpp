#include <doctest.h>

#include <stdexcept>

#include "spinl/exact/pi_value.hpp"
#include "spinl/exact/rational.hpp"
#include "spinl/exact/special_values.hpp"

using namespace spinl::exact;

namespace {

Rational q(const char* text) { return Rational::parse(text); }

// Akiyama-Tanigawa, independent of the library's recurrence.
Rational bernoulli_oracle(int n) {
    std::vector<Rational> a(n + 1);
    for (int m = 0; m <= n; ++m) {
        a[m] = Rational(BigInt(1), BigInt(m + 1));
        for (int j = m; j >= 1; --j) a[j - 1] = Rational(j) * (a[j - 1] - a[j]);
    }
    // Akiyama-Tanigawa yields B_1 = +1/2.
    return n == 1 ? -a[0] : a[0];
}

} // namespace

TEST_CASE("rational arithmetic stays in lowest terms") {
    CHECK(q("6/8") == q("3/4"));
    CHECK(q("-3/-6").str() == "1/2");
    CHECK(q("4/-6").str() == "-2/3");
    CHECK((q("1/6") + q("1/3")).str() == "1/2");
    CHECK((q("2/3") * q("3/2")).is_integer());
    CHECK(q("0").is_zero());
    CHECK(q("2/3").pow(-2) == q("9/4"));
    CHECK(pow2(-3) == q("1/8"));
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
    CHECK_THROWS_AS(q("1") / q("0"), std::domain_error);
    CHECK_THROWS(q("1/2x"));
}

TEST_CASE("factorial and binomial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(binomial(30, 15) == 155117520);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(5, -1) == 0);
}

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == q("1"));
    CHECK(bernoulli(1) == q("-1/2"));
    CHECK(bernoulli(2) == q("1/6"));
    CHECK(bernoulli(8) == q("-1/30"));
    CHECK(bernoulli(12) == q("-691/2730"));
    for (int n = 3; n <= 31; n += 2) CHECK(bernoulli(n).is_zero());
    for (int n = 0; n <= 40; ++n) CHECK(bernoulli(n) == bernoulli_oracle(n));
}

TEST_CASE("zeta at even positive integers") {
    CHECK(zeta_exact(2) == PiValue(q("1/6"), 2));
    CHECK(zeta_exact(4) == PiValue(q("1/90"), 4));
    CHECK(zeta_exact(12) == PiValue(q("691/638512875"), 12));
}

TEST_CASE("zeta at non-positive integers") {
    CHECK(zeta_exact(0) == PiValue(q("-1/2")));
    CHECK(zeta_exact(-1) == PiValue(q("-1/12")));
    CHECK(zeta_exact(-7) == PiValue(q("1/240")));
    CHECK(zeta_exact(-6).is_zero());
    CHECK(zeta_exact(-11) == PiValue(q("691/32760")));
}

TEST_CASE("zeta reflection zeta(1-n) = -B_n / n") {
    for (int n = 2; n <= 30; n += 2) {
        CHECK(zeta_exact(1 - n) == PiValue(-bernoulli(n) / Rational(n)));
    }
}

TEST_CASE("zeta rejects odd positive arguments") {
    CHECK_THROWS_AS(zeta_exact(1), std::domain_error);
    CHECK_THROWS_AS(zeta_exact(3), std::domain_error);
}

TEST_CASE("falling ratio") {
    CHECK(falling_ratio(11, 2) == 90);
    CHECK(falling_ratio(3, 5) == 0);
    CHECK(falling_ratio(7, 0) == 1);
    CHECK(falling_ratio(-2, 2) == 12);  // (-3)(-4)
}

TEST_CASE("gamma pole ratio") {
    CHECK(gamma_pole_ratio(-7, -7, 2) == q("1/2"));
    CHECK(gamma_pole_ratio(-7, -4, 2) == q("-1/420"));
    CHECK(gamma_pole_ratio(0, -1, 1) == q("-1"));
    CHECK(gamma_pole_ratio(0, 0, 1) == q("1"));
}

TEST_CASE("gamma zeta pole limit") {
    // Numerator Gamma pole: zeta(x) times the pole ratio.
    CHECK(gamma_zeta_pole_limit(-7, -7) == q("1/240") * q("1/2"));
    // zeta pole at 1 against a Gamma pole: residue 1/2 times (-y)! (-1)^y.
    CHECK(gamma_zeta_pole_limit(1, 0) == q("1/2"));
    CHECK(gamma_zeta_pole_limit(1, -3) == q("-3"));
    CHECK(gamma_zeta_pole_limit(3, -2).is_zero());
}

TEST_CASE("pi values keep exponents apart") {
    PiValue a(q("1/2"), 3);
    PiValue b(q("1/3"), 5);
    auto sum = a + b;
    CHECK(sum.monomials().size() == 2);
    CHECK_FALSE(sum.is_monomial());
    CHECK_THROWS_AS(sum.as_monomial(), std::logic_error);
    CHECK((sum - b) == a);
    CHECK((a * b).as_monomial().exponent == 8);
    CHECK((a * b).as_monomial().coeff == q("1/6"));
    CHECK((a - a).is_zero());
    CHECK((a / q("1/2")) == PiValue::pi_power(3));
}
