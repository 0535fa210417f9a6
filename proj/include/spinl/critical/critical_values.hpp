#ifndef SPINL_CRITICAL_CRITICAL_VALUES_HPP
#define SPINL_CRITICAL_CRITICAL_VALUES_HPP

#include <span>
#include <string_view>
#include <vector>

#include "spinl/exact/pi_value.hpp"

namespace spinl::critical {

using exact::PiValue;
using exact::Rational;

/// Polynomial with exact coefficients, coeffs[j] multiplying y^j.
struct Polynomial {
    std::vector<Rational> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

/// W(y, alpha, -r) = sum_{i=0}^{r} (-1)^i C(r,i) Gamma(alpha)/Gamma(alpha-i) y^{r-i}.
Polynomial whittaker_closed_form(long alpha, long r);

/// One piece of a Fourier coefficient of a nearly holomorphic form:
///   coefficient * P(4 pi m y) * (4 pi y)^{y_power}
/// where P is `poly` and m is `source_index` (the q-index whose Whittaker
/// function produced the polynomial; irrelevant for constant polynomials).
struct ProjectionTerm {
    PiValue coefficient;
    Polynomial poly;
    int source_index = 1;
    int y_power = 0;
};

/// Coefficient of q^n of the holomorphic projection to weight k, given the
/// q^n-coefficient of the nearly holomorphic form as a sum of terms:
///   (1/(k-2)!) int_0^inf  sum(terms)  e^{-Z} Z^{k-2} dZ,   Z = 4 pi n y.
/// Every monomial integral must be a convergent Gamma(j + k - 1) with
/// j + k - 1 >= 1; throws std::domain_error otherwise.
PiValue holomorphic_projection(std::span<const ProjectionTerm> terms, int weight, int n);

/// Constants of the Fourier expansion of (4 pi y)^{s-11} E_{10,2}(z, s-11, xi).
struct CConstants {
    PiValue c0p;   // coefficient of (4 pi y)^{2-s}
    PiValue c0pp;  // coefficient of (4 pi y)^{s-11}
    PiValue c1;    // q^1 Whittaker coefficient
    PiValue c2;    // q^2 Whittaker coefficient
};

/// s in 3..10.
CConstants c_constants(int s);

struct ProjectionCoeffs {
    int s = 0;
    PiValue a1;
    PiValue a2;
};

/// First two Fourier coefficients of Hol(G_{2,2} (4 pi y)^{s-11} E_{10,2}),
/// s in 3..10.  Both are single pi-monomials of exponent 2s - 12.
ProjectionCoeffs projection_coeffs(int s);

/// Constants of (4 pi y)^{s-19} E_{8,1}(z, s-19).
struct DConstants {
    PiValue d0p;   // coefficient of (4 pi y)^{12-s}
    PiValue d0pp;  // coefficient of (4 pi y)^{s-19}
};

/// s in 12..19.
DConstants d_constants(int s);

enum class PeterssonFactors { DeltaDelta, G20G20, Both };

std::string_view to_string(PeterssonFactors f);

/// value = rational * pi^pi_exponent * (Petersson norms named by the factors).
struct CriticalValueResult {
    int s = 0;
    Rational rational;
    int pi_exponent = 0;
    PeterssonFactors petersson_factors = PeterssonFactors::Both;

    friend bool operator==(const CriticalValueResult&, const CriticalValueResult&) = default;
};

/// L(s-9, Delta) L(s-10, Delta) / <Delta, Delta>, s in 12..19.
CriticalValueResult two_delta_product(int s);

/// L(s, Delta x g20) / <g20, g20>, s in 12..19.
CriticalValueResult rankin_g20_value(int s);

/// L(s, F12, spin) / (<Delta, Delta> <g20, g20>), s in 12..19.
CriticalValueResult main_identity(int s);

/// 1 - tau(2) 2^{1-s} + 2^11 2^{2-2s}, the Euler factor at 2 of L(s, Delta)
/// that separates L(s, Delta x G_{2,2}) from L(s, Delta) L(s-1, Delta);
/// tau(2) is read from the Delta q-expansion.
Rational euler_factor_at_two(int s);

inline constexpr int kFirstCritical = 12;
inline constexpr int kLastCritical = 19;

} // namespace spinl::critical

#endif
