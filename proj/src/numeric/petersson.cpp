#include "spinl/numeric/petersson.hpp"

#include <stdexcept>
#include <string>

#include "spinl/exact/special_values.hpp"
#include "spinl/numeric/lfunction.hpp"

namespace spinl::numeric {

namespace {

constexpr int kGuardDigits = 10;

exact::Rational eisenstein_alpha(int j) {
    return exact::Rational(-2L * j) / exact::bernoulli(j);
}

} // namespace

PeterssonNorm petersson_norm(int k, int r, int digits) {
    const bool valid = (k == 12 && r == 4) || (k == 20 && (r == 4 || r == 6 || r == 8));
    if (!valid) {
        throw std::invalid_argument("petersson_norm: unsupported (k, r) = (" + std::to_string(k) + ", " +
                                    std::to_string(r) + ")");
    }
    const int l = k - r;
    const int wd = digits + kGuardDigits;
    const Precision wp = Precision::decimal(wd);
    const LFunctionSpec f = k == 12 ? delta_lfunction(degree2_terms_for(wd))
                                    : g20_lfunction(degree2_terms_for(wd));
    const int M = f.available();

    const BigFloat l_edge = l_degree2(f, BigFloat(static_cast<long>(k - 1), wp), wd, M);
    const BigFloat l_mid = l_degree2(f, BigFloat(static_cast<long>(l), wp), wd, M);

    const exact::Rational ratio =
        eisenstein_alpha(r) / (eisenstein_alpha(l) + eisenstein_alpha(r) - eisenstein_alpha(k));
    const BigFloat four_pi = BigFloat::pi(wp) * 4L;
    BigFloat value = pow(four_pi, static_cast<long>(1 - k)) *
                     BigFloat(exact::factorial(k - 2), wp) / zeta(BigFloat(static_cast<long>(l), wp)) *
                     BigFloat(ratio, wp) * l_edge * l_mid;
    return PeterssonNorm{k, value.rounded(Precision::decimal(digits)), l};
}

} // namespace spinl::numeric
