#ifndef SPINL_EXACT_SPECIAL_VALUES_HPP
#define SPINL_EXACT_SPECIAL_VALUES_HPP

#include "spinl/exact/pi_value.hpp"
#include "spinl/exact/rational.hpp"

namespace spinl::exact {

/// Bernoulli number B_n with B_1 = -1/2, from the recurrence
/// sum_{k=0}^{n} C(n+1, k) B_k = 0.  Results are cached per thread.
Rational bernoulli(int n);

/// zeta(n) in closed form for n even >= 2 (a rational times pi^n) and for
/// n <= 0 (rational).  Odd n >= 3 and the pole n = 1 throw std::domain_error.
PiValue zeta_exact(int n);

/// prod_{j=1}^{i} (a - j), the continuation of Gamma(a)/Gamma(a-i) to all
/// integers a.  The empty product (i = 0) is 1.
BigInt falling_ratio(long a, long i);

/// lim_{eps->0} Gamma(x + c*eps) / Gamma(y + eps) for x, y <= 0 and c >= 1,
/// i.e. (1/c) (-1)^{x-y} (-y)! / (-x)!.
Rational gamma_pole_ratio(long x, long y, long c);

/// lim_{eps->0} Gamma(x + 2 eps) zeta(x + 2 eps) / Gamma(y + eps) for odd x
/// and y <= 0.  This is the ratio that appears in the constant term of the
/// non-holomorphic Eisenstein series at integer points where the denominator
/// Gamma sits at a pole:
///   x <= -1 : Gamma pole in the numerator, zeta(x) rational;
///   x == 1  : zeta pole in the numerator (residue 1), Gamma(1) = 1;
///   x >= 3  : numerator finite, so the limit is 0.
Rational gamma_zeta_pole_limit(long x, long y);

} // namespace spinl::exact

#endif
