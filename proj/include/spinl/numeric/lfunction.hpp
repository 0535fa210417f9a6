#ifndef SPINL_NUMERIC_LFUNCTION_HPP
#define SPINL_NUMERIC_LFUNCTION_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "spinl/numeric/bigfloat.hpp"
#include "spinl/qexp/forms.hpp"

namespace spinl::numeric {

using exact::BigInt;

/// Thrown when the requested number of Dirichlet coefficients cannot reach
/// the requested accuracy.
class InsufficientTerms : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when a quadrature does not settle within its level budget.
class QuadratureFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Self-dual L-function with
///   Lambda(s) = N^{s/2} prod_j Gamma_R(s + mu_j) L(s),  Lambda(s) = sign Lambda(weight - s),
/// Gamma_R(s) = pi^{-s/2} Gamma(s/2).
struct LFunctionSpec {
    std::string name;
    std::vector<int> gamma_shifts;
    long conductor = 1;
    int weight = 0;
    int sign = 1;
    std::shared_ptr<const std::vector<BigInt>> coefficients;  // a(n) at index n-1

    int available() const { return coefficients ? static_cast<int>(coefficients->size()) : 0; }
    /// a(n), 1 <= n <= available(); throws std::out_of_range.
    const BigInt& coefficient(int n) const;
    /// 2 for Gamma_C(s), 4 for Gamma_C(s) Gamma_C(s - 11).
    int degree() const { return static_cast<int>(gamma_shifts.size()); }
};

LFunctionSpec delta_lfunction(int M);
LFunctionSpec g20_lfunction(int M);
LFunctionSpec rankin_lfunction(int M);
LFunctionSpec rankin_lfunction(const qexp::RankinCoeffs& coeffs);

/// Coefficient count after which degree-2 tails drop below 10^-D.
int degree2_terms_for(int digits);

/// (2 pi)^{-s} Gamma(s) L(s) for a degree-2 spec of weight k, split at c:
///   sum_{n<=M} a(n) [(2 pi n)^{-s} Gamma(s, 2 pi n c) + sign (2 pi n)^{s-k} Gamma(k-s, 2 pi n / c)].
/// Throws InsufficientTerms when the bound on the omitted terms exceeds
/// 10^-D |value|.
BigFloat completed_degree2(const LFunctionSpec& f, const BigFloat& s, int digits, int M,
                           double split = 1.0);

/// L(s, f) for a level-one eigenform of weight k in {12, 20} given by its
/// q-expansion (at least M coefficients).
BigFloat l_degree2(const qexp::QSeries& form, int k, const BigFloat& s, int digits, int M);
BigFloat l_degree2(const qexp::QSeries& form, int k, long s, int digits, int M);
BigFloat l_degree2(const LFunctionSpec& f, const BigFloat& s, int digits, int M);

/// phi_nu(x) = 2 x^{-nu/2} K_nu(2 sqrt x), whose Mellin transform is
/// Gamma(s) Gamma(s - nu).
BigFloat mellin_kernel(int nu, const BigFloat& x, Precision p);

/// int_0^inf phi_nu(t) t^{s0-1} dt by tanh-sinh on [0, 1] and [1, T].
BigFloat kernel_mellin_transform(int nu, const BigFloat& s0, int digits);

/// Completed Rankin L-function of Delta x g20,
///   Lambda(s) = 4 (2 pi)^{11-2s} Gamma(s) Gamma(s-11) L(s)
///             = 4 (2 pi)^11 sum_{n<=M} A(n) [c^s F(s, a_n c) + sign c^{s-31} F(31-s, a_n / c)],
/// a_n = 4 pi^2 n, F(s, a) = int_1^inf phi_11(a t) t^{s-1} dt.
/// Quadrature nodes and kernel values for every n are computed once, so
/// evaluating at many s costs one weighted sum per n.  Valid for real s in
/// [0, 31].
class RankinL4Evaluator {
public:
    RankinL4Evaluator(const LFunctionSpec& f, int digits, int M, double split = 1.0);

    BigFloat completed(const BigFloat& s) const;
    BigFloat value(const BigFloat& s) const;
    /// Bound on the omitted terms n > M of completed(s).
    BigFloat tail_bound(const BigFloat& s) const;

    int terms() const { return M_; }
    int digits() const { return digits_; }

private:
    struct NodeTable {
        std::vector<BigFloat> log_t;
        std::vector<BigFloat> weighted_phi;  // step * weight * phi(a t)
    };

    NodeTable build_table(const BigFloat& a) const;
    BigFloat moment(const NodeTable& table, const BigFloat& s) const;  // F(s, a)
    BigFloat completed_unchecked(const BigFloat& s) const;

    LFunctionSpec f_;
    int digits_;
    int M_;
    Precision wp_;
    BigFloat c_;
    std::vector<NodeTable> scaled_up_;    // a_n c
    std::vector<NodeTable> scaled_down_;  // a_n / c (aliases scaled_up_ when c = 1)
};

/// L(s, Delta x g20) from M Rankin coefficients.
BigFloat l_rankin4(const qexp::RankinCoeffs& coeffs, const BigFloat& s, int digits, int M);
BigFloat l_rankin4(const qexp::RankinCoeffs& coeffs, long s, int digits, int M);

/// |Lambda(t) - sign Lambda(w - t)|, the left side summed with split point
/// 6/5 and the right with split point 1, so the residual measures the
/// functional equation rather than the symmetry of a single formula.
BigFloat functional_eq_residual(const LFunctionSpec& f, const BigFloat& t, int digits, int M);

/// Residuals at several points, sharing the degree-4 node tables.
std::vector<BigFloat> functional_eq_residuals(const LFunctionSpec& f, const std::vector<BigFloat>& ts,
                                              int digits, int M);

} // namespace spinl::numeric

#endif
