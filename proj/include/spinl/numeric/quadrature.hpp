#ifndef SPINL_NUMERIC_QUADRATURE_HPP
#define SPINL_NUMERIC_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "spinl/numeric/bigfloat.hpp"

namespace spinl::numeric {

struct QuadratureNode {
    BigFloat x;
    BigFloat weight;  // excludes the step length
};

/// Tanh-sinh nodes on a finite interval [a, b]:
///   x(t) = (a+b)/2 + (b-a)/2 tanh(pi/2 sinh t),  t = k 2^-level.
/// Nodes near an endpoint are formed from their distance to it, so no
/// precision is lost where they cluster.
class TanhSinhRule {
public:
    TanhSinhRule(const BigFloat& a, const BigFloat& b, Precision p);

    /// Nodes first appearing at `level`: all k at level 0, odd k afterwards.
    /// The tails are cut where weights drop below 2^-(bits + 20).
    std::vector<QuadratureNode> level_nodes(int level) const;

    /// 2^-level at the rule's precision.
    BigFloat step(int level) const;

    Precision precision() const { return p_; }

private:
    BigFloat a_;
    BigFloat b_;
    Precision p_;
};

struct QuadratureResult {
    BigFloat value;
    BigFloat last_difference;  // |S_level - S_(level-1)|
    int level = 0;
    bool converged = false;
};

/// Tanh-sinh on [a, b], halving the step until consecutive estimates differ
/// by at most rel_tol |S| (never before level 3) or max_level is reached.
QuadratureResult integrate_tanh_sinh(const std::function<BigFloat(const BigFloat&)>& f,
                                     const BigFloat& a, const BigFloat& b, Precision p,
                                     const BigFloat& rel_tol, int max_level = 12);

} // namespace spinl::numeric

#endif
