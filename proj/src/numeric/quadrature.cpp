#include "spinl/numeric/quadrature.hpp"

#include <stdexcept>

namespace spinl::numeric {

TanhSinhRule::TanhSinhRule(const BigFloat& a, const BigFloat& b, Precision p)
    : a_(a.rounded(p)), b_(b.rounded(p)), p_(p) {
    if (!(a_ < b_)) {
        throw std::invalid_argument("TanhSinhRule: need a < b");
    }
}

BigFloat TanhSinhRule::step(int level) const {
    return pow(BigFloat(2L, p_), -static_cast<long>(level));
}

std::vector<QuadratureNode> TanhSinhRule::level_nodes(int level) const {
    if (level < 0) {
        throw std::invalid_argument("TanhSinhRule: negative level");
    }
    const BigFloat half = (b_ - a_) / 2L;
    const BigFloat mid = (a_ + b_) / 2L;
    const BigFloat half_pi = BigFloat::pi(p_) / 2L;
    const BigFloat cutoff = pow(BigFloat(2L, p_), -static_cast<long>(p_.bits()) - 20);
    const BigFloat h = step(level);
    const long stride = level == 0 ? 1 : 2;

    std::vector<QuadratureNode> out;
    if (level == 0) {
        out.push_back({mid, half * half_pi});
    }
    for (long k = 1;; k += stride) {
        const BigFloat t = h * k;
        const BigFloat u = half_pi * (exp(t) - exp(-t)) / 2L;  // pi/2 sinh t
        const BigFloat e2u = exp(2L * u);
        // distance from the nearer endpoint: half (1 - tanh u) = half * 2 / (e^{2u} + 1)
        const BigFloat delta = half * 2L / (e2u + BigFloat(1L, p_));
        // weight half (pi/2) cosh t / cosh^2 u, with cosh^2 u = (e^{2u} + 2 + e^{-2u}) / 4
        const BigFloat cosh_t = (exp(t) + exp(-t)) / 2L;
        const BigFloat cosh2u = (e2u + BigFloat(2L, p_) + BigFloat(1L, p_) / e2u) / 4L;
        const BigFloat w = half * half_pi * cosh_t / cosh2u;
        if (w < cutoff * half || delta.is_zero()) break;
        out.push_back({a_ + delta, w});
        out.push_back({b_ - delta, w});
    }
    return out;
}

QuadratureResult integrate_tanh_sinh(const std::function<BigFloat(const BigFloat&)>& f,
                                     const BigFloat& a, const BigFloat& b, Precision p,
                                     const BigFloat& rel_tol, int max_level) {
    const TanhSinhRule rule(a, b, p);
    BigFloat raw(p);  // sum of weight * f over all nodes so far
    QuadratureResult r{BigFloat(p), BigFloat(p), 0, false};
    BigFloat previous(p);
    for (int level = 0; level <= max_level; ++level) {
        for (const auto& node : rule.level_nodes(level)) {
            raw += node.weight * f(node.x);
        }
        const BigFloat estimate = raw * rule.step(level);
        r.level = level;
        if (level > 0) {
            r.last_difference = abs(estimate - previous);
            if (level >= 3 && r.last_difference <= rel_tol * abs(estimate)) {
                r.value = estimate;
                r.converged = true;
                return r;
            }
        }
        previous = estimate;
        r.value = estimate;
    }
    return r;
}

} // namespace spinl::numeric
