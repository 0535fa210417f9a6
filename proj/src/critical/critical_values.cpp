#include "spinl/critical/critical_values.hpp"

#include <stdexcept>
#include <string>

#include "spinl/exact/special_values.hpp"
#include "spinl/qexp/forms.hpp"

namespace spinl::critical {

using exact::BigInt;
using exact::factorial;
using exact::pow2;

namespace {

void require_range(int s, int lo, int hi, const char* what) {
    if (s < lo || s > hi) {
        throw std::out_of_range(std::string(what) + ": s = " + std::to_string(s) +
                                " outside " + std::to_string(lo) + ".." + std::to_string(hi));
    }
}

Rational fact(long n) { return Rational(factorial(n)); }

Polynomial constant_polynomial() { return Polynomial{{Rational(1)}}; }

// W(4 pi m y, s-1, s-11) / Gamma(s-1), the Whittaker factor of the q^m
// coefficient of E_{10,2}(z, s-11, xi).
Polynomial normalized_whittaker(int s) {
    Polynomial w = whittaker_closed_form(s - 1, 11 - s);
    const Rational g = fact(s - 2);
    for (auto& c : w.coeffs) c /= g;
    return w;
}

// Terms of the q^j coefficient of (4 pi y)^{s-11} E_{10,2}(z, s-11, xi), j <= 2.
std::vector<ProjectionTerm> eisenstein_level2_terms(const CConstants& c, int s, int j) {
    if (j == 0) {
        return {ProjectionTerm{c.c0p, constant_polynomial(), 1, 2 - s},
                ProjectionTerm{c.c0pp, constant_polynomial(), 1, s - 11}};
    }
    const PiValue& cj = j == 1 ? c.c1 : c.c2;
    return {ProjectionTerm{cj, normalized_whittaker(s), j, s - 11}};
}

CriticalValueResult to_result(int s, const PiValue& v, PeterssonFactors f) {
    const auto& m = v.as_monomial();
    return CriticalValueResult{s, m.coeff, m.exponent, f};
}

} // namespace

Polynomial whittaker_closed_form(long alpha, long r) {
    if (r < 0) {
        throw std::domain_error("whittaker_closed_form: r must be nonnegative");
    }
    Polynomial p;
    p.coeffs.resize(static_cast<std::size_t>(r) + 1);
    for (long i = 0; i <= r; ++i) {
        Rational term(BigInt(exact::binomial(r, i) * exact::falling_ratio(alpha, i)));
        p.coeffs[r - i] = i % 2 ? -term : term;
    }
    return p;
}

PiValue holomorphic_projection(std::span<const ProjectionTerm> terms, int weight, int n) {
    if (n < 1 || weight < 2) {
        throw std::domain_error("holomorphic_projection: need n >= 1 and weight >= 2");
    }
    PiValue total;
    for (const auto& t : terms) {
        if (t.coefficient.is_zero()) continue;
        Rational moment;
        const Rational ratio(BigInt(t.source_index), BigInt(n));
        for (int j = 0; j <= t.poly.degree(); ++j) {
            const Rational& pj = t.poly.coeffs[j];
            if (pj.is_zero()) continue;
            const long gamma_arg = j + t.y_power + weight - 1;
            if (gamma_arg < 1) {
                throw std::domain_error("holomorphic_projection: divergent moment Gamma(" +
                                        std::to_string(gamma_arg) + ")");
            }
            // P(m/n Z) (Z/n)^{y_power} against e^{-Z} Z^{k-2}
            moment += pj * ratio.pow(j) * Rational(n).pow(-t.y_power) * fact(gamma_arg - 1);
        }
        total += t.coefficient * moment;
    }
    return total / fact(weight - 2);
}

CConstants c_constants(int s) {
    require_range(s, 3, 10, "c_constants");
    const int e = 2 * s - 12;
    CConstants c;
    // -2 pi^{2s-12} Gamma(2s-13) zeta(2s-13) / (Gamma(s-11) Gamma(s-1))
    c.c0p = PiValue(Rational(-2) * exact::gamma_zeta_pole_limit(2 * s - 13, s - 11) / fact(s - 2), e);
    c.c0pp = (Rational(2) - pow2(13 - 2 * s)) * exact::zeta_exact(2 * s - 12);
    c.c1 = PiValue(Rational(2), e);
    c.c2 = PiValue(Rational(2) - pow2(2 * s - 12), e);
    return c;
}

ProjectionCoeffs projection_coeffs(int s) {
    require_range(s, 3, 10, "projection_coeffs");
    const CConstants c = c_constants(s);
    const qexp::QSeries g22 = qexp::g2p_qexp(2, 2);

    ProjectionCoeffs out;
    out.s = s;
    for (int n = 1; n <= 2; ++n) {
        // q^n coefficient of G_{2,2} * (4 pi y)^{s-11} E_{10,2}
        std::vector<ProjectionTerm> terms;
        for (int j = 0; j <= n; ++j) {
            const Rational& g = g22[n - j];
            for (auto t : eisenstein_level2_terms(c, s, j)) {
                t.coefficient *= g;
                terms.push_back(std::move(t));
            }
        }
        (n == 1 ? out.a1 : out.a2) = holomorphic_projection(terms, 12, n);
    }
    // Exactly one pi power survives.
    (void)out.a1.as_monomial();
    (void)out.a2.as_monomial();
    return out;
}

DConstants d_constants(int s) {
    require_range(s, 12, 19, "d_constants");
    const int e = 2 * s - 30;
    DConstants d;
    // 2 (2 pi)^{2s-30} Gamma(2s-31) zeta(2s-31) / (Gamma(s-11) Gamma(s-19))
    d.d0p = PiValue(Rational(2) * pow2(e) * exact::gamma_zeta_pole_limit(2 * s - 31, s - 19) /
                        fact(s - 12),
                    e);
    d.d0pp = Rational(2) * exact::zeta_exact(2 * s - 30);
    return d;
}

Rational euler_factor_at_two(int s) {
    const qexp::QSeries delta = qexp::delta_qexp(2);
    return Rational(1) - delta.at(2) * pow2(1 - s) + pow2(11) * pow2(2 - 2 * s);
}

CriticalValueResult two_delta_product(int s) {
    require_range(s, kFirstCritical, kLastCritical, "two_delta_product");
    const int sp = s - 9;
    const ProjectionCoeffs pc = projection_coeffs(sp);
    const qexp::QSeries delta = qexp::delta_qexp(4);

    // Hol(F) = alpha Delta(z) + beta Delta(2z), matched on q and q^2.
    const PiValue alpha = pc.a1 / delta.at(1);
    const PiValue beta = pc.a2 - alpha * delta.at(2);

    // <Delta(z), Delta(2z)> = 2^-6 [SL2 : Gamma0(2)]^-1 2^-5 lambda_2 <Delta, Delta>
    const Rational lambda2 = qexp::hecke_tp(delta, 2, 12).at(1) / delta.at(1);
    const Rational trace_ratio = pow2(-11) * lambda2 / Rational(3);

    // L(s', Delta x G_{2,2}) = (3/2) (4 pi)^11 / Gamma(s') (alpha + beta * trace_ratio) <Delta,Delta>
    const PiValue prefactor(Rational(3) * pow2(22) / (Rational(2) * fact(sp - 1)), 11);
    const PiValue rankin = prefactor * (alpha + beta * trace_ratio);
    return to_result(s, rankin / euler_factor_at_two(sp), PeterssonFactors::DeltaDelta);
}

CriticalValueResult rankin_g20_value(int s) {
    require_range(s, kFirstCritical, kLastCritical, "rankin_g20_value");
    const DConstants d = d_constants(s);
    const Rational tau1 = qexp::delta_qexp(1).at(1);

    // q^1 coefficient of Delta (4 pi y)^{s-19} E_{8,1}: tau(1) times the constant term.
    const std::vector<ProjectionTerm> terms{
        ProjectionTerm{d.d0p * tau1, constant_polynomial(), 1, 12 - s},
        ProjectionTerm{d.d0pp * tau1, constant_polynomial(), 1, s - 19}};
    const PiValue b1 = holomorphic_projection(terms, 20, 1);

    // (4 pi)^19 / (2 Gamma(s)) B_1(s)
    const PiValue prefactor(pow2(38) / (Rational(2) * fact(s - 1)), 19);
    return to_result(s, prefactor * b1, PeterssonFactors::G20G20);
}

CriticalValueResult main_identity(int s) {
    require_range(s, kFirstCritical, kLastCritical, "main_identity");
    const auto a = two_delta_product(s);
    const auto b = rankin_g20_value(s);
    return CriticalValueResult{s, a.rational * b.rational, a.pi_exponent + b.pi_exponent,
                               PeterssonFactors::Both};
}

std::string_view to_string(PeterssonFactors f) {
    switch (f) {
    case PeterssonFactors::DeltaDelta: return "delta_delta";
    case PeterssonFactors::G20G20: return "g20_g20";
    case PeterssonFactors::Both: return "both";
    }
    return "?";
}

} // namespace spinl::critical
