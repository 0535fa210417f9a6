#ifndef SPINL_NUMERIC_SPECIAL_HPP
#define SPINL_NUMERIC_SPECIAL_HPP

#include <vector>

#include "spinl/numeric/bigfloat.hpp"

namespace spinl::numeric {

/// Upper incomplete gamma Gamma(s, x) for integer s >= 1 and x >= 0, by the
/// finite sum (s-1)! e^{-x} sum_{j<s} x^j / j!.
BigFloat incomplete_gamma_int(long s, const BigFloat& x, Precision p);

/// Upper incomplete gamma Gamma(a, x), x >= 0.  Positive integer a goes
/// through incomplete_gamma_int; other a through MPFR.
BigFloat incomplete_gamma(const BigFloat& a, const BigFloat& x, Precision p);

/// Smallest and largest argument accepted by bessel_k.
inline constexpr double kBesselMinArg = 1e-6;
inline constexpr double kBesselMaxArg = 1e4;

/// K_0(x), ..., K_nu_max(x) for x in [kBesselMinArg, kBesselMaxArg]; throws
/// std::domain_error outside.  K_0 and K_1 come from the large-x asymptotic
/// series when it reaches the working precision, from Steed's continued
/// fraction for x >= 2, and from the trapezoidal rule on
/// int_0^inf e^{-x cosh t} cosh(nu t) dt below that; higher orders from the
/// (stable) upward recurrence.
std::vector<BigFloat> bessel_k_sequence(int nu_max, const BigFloat& x, Precision p);

/// Modified Bessel function of the second kind K_nu(x), integer nu >= 0.
BigFloat bessel_k(int nu, const BigFloat& x, Precision p);

} // namespace spinl::numeric

#endif
