#include "spinl/exact/special_values.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace spinl::exact {

Rational bernoulli(int n) {
    if (n < 0) {
        throw std::domain_error("bernoulli: negative index");
    }
    thread_local std::vector<Rational> cache{Rational(1), Rational(BigInt(-1), BigInt(2))};
    while (static_cast<int>(cache.size()) <= n) {
        const long m = static_cast<long>(cache.size());
        if (m % 2 == 1) {
            cache.emplace_back(0);
            continue;
        }
        Rational acc;
        for (long k = 0; k < m; ++k) {
            if (!cache[k].is_zero()) {
                acc += Rational(binomial(m + 1, k)) * cache[k];
            }
        }
        cache.push_back(-acc / Rational(m + 1));
    }
    return cache[n];
}

PiValue zeta_exact(int n) {
    if (n >= 2 && n % 2 == 0) {
        // (-1)^{n/2+1} B_n (2 pi)^n / (2 n!)
        Rational c = bernoulli(n) * pow2(n) / Rational(BigInt(2 * factorial(n)));
        if ((n / 2) % 2 == 0) {
            c = -c;
        }
        return PiValue(c, n);
    }
    if (n == 0) {
        return PiValue(Rational(BigInt(-1), BigInt(2)));
    }
    if (n < 0) {
        if (n % 2 == 0) {
            return PiValue();
        }
        return PiValue(-bernoulli(1 - n) / Rational(1 - n));
    }
    throw std::domain_error("zeta_exact: no closed form at n = " + std::to_string(n));
}

BigInt falling_ratio(long a, long i) {
    if (i < 0) {
        throw std::domain_error("falling_ratio: negative length");
    }
    BigInt p = 1;
    for (long j = 1; j <= i; ++j) {
        p *= a - j;
        if (p == 0) {
            break;
        }
    }
    return p;
}

Rational gamma_pole_ratio(long x, long y, long c) {
    if (x > 0 || y > 0 || c < 1) {
        throw std::domain_error("gamma_pole_ratio: requires x <= 0, y <= 0, c >= 1");
    }
    // Gamma(z) ~ (-1)^n / (n! (z + n)) near z = -n.
    Rational r(factorial(-y), factorial(-x) * c);
    return (x - y) % 2 == 0 ? r : -r;
}

Rational gamma_zeta_pole_limit(long x, long y) {
    if (x % 2 == 0) {
        throw std::domain_error("gamma_zeta_pole_limit: x must be odd");
    }
    if (y > 0) {
        throw std::domain_error("gamma_zeta_pole_limit: y must be a pole (y <= 0)");
    }
    if (x <= -1) {
        return zeta_exact(static_cast<int>(x)).as_monomial().coeff * gamma_pole_ratio(x, y, 2);
    }
    if (x == 1) {
        // zeta(1 + 2 eps) ~ 1/(2 eps),  1/Gamma(y + eps) ~ (-1)^{-y} (-y)! eps
        Rational r(factorial(-y), BigInt(2));
        return (-y) % 2 == 0 ? r : -r;
    }
    return Rational(0);
}

} // namespace spinl::exact
