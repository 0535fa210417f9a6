#ifndef SPINL_NUMERIC_PETERSSON_HPP
#define SPINL_NUMERIC_PETERSSON_HPP

#include "spinl/numeric/bigfloat.hpp"

namespace spinl::numeric {

struct PeterssonNorm {
    int k = 0;
    BigFloat value;
    int l_used = 0;
};

/// <f_k, f_k> for the normalized eigenform of weight k (Delta for 12, g20
/// for 20) by Rankin's formula with l = k - r:
///   (4 pi)^{1-k} (k-2)! / zeta(l) * alpha_r / (alpha_l + alpha_r - alpha_k) * L(k-1, f) L(l, f),
/// alpha_j = -2j / B_j.  Accepted pairs: (12, 4), (20, 4), (20, 6), (20, 8);
/// others throw std::invalid_argument.
PeterssonNorm petersson_norm(int k, int r, int digits);

} // namespace spinl::numeric

#endif
