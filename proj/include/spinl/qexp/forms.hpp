#ifndef SPINL_QEXP_FORMS_HPP
#define SPINL_QEXP_FORMS_HPP

#include <vector>

#include "spinl/qexp/qseries.hpp"

namespace spinl::qexp {

bool is_prime(long n);

/// sigma_k(n) = sum_{d | n} d^k.
BigInt divisor_sigma(int k, long n);

/// Ramanujan's Delta = q prod_{n>=1} (1 - q^n)^24 to precision N.
QSeries delta_qexp(int N);

/// Normalized Eisenstein series E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n,
/// for even k >= 4.
QSeries eisenstein_qexp(int k, int N);

/// G_{2,p}(z) = G_2(z) - p G_2(pz): constant term (p-1)/24 and coefficient
/// sum_{d | n, p does not divide d} d.
QSeries g2p_qexp(int p, int N);

/// The normalized weight-20 cusp eigenform E_8 * Delta.
QSeries g20_qexp(int N);

/// Level-one Hecke operator T_p on a weight-k series:
/// (T_p f)(n) = a(np) + p^{k-1} a(n/p).  The result has precision
/// floor(N/p); throws std::invalid_argument when that is below 1.
QSeries hecke_tp(const QSeries& f, int p, int k);

/// Dirichlet coefficients of L(s, Delta x g20),
/// A(n) = sum_{d^2 | n} d^30 tau(n/d^2) b(n/d^2).
class RankinCoeffs {
public:
    explicit RankinCoeffs(std::vector<BigInt> values);

    int precision() const { return static_cast<int>(values_.size()); }
    /// A(n) for 1 <= n <= precision.
    const BigInt& at(int n) const;
    const std::vector<BigInt>& values() const { return values_; }

private:
    std::vector<BigInt> values_;  // values_[n-1] = A(n)
};

RankinCoeffs rankin_coeffs(int N);

/// Checks Shimura's local identity at p for Delta and g20:
///   sum_k tau(p^k) b(p^k) X^k
///     = (1 - p^30 X^2) / prod (1 - alpha_i beta_j X)
/// up to X^order.  The right side is expanded from the elementary symmetric
/// functions alpha+alpha' = tau(p), alpha alpha' = p^11, beta+beta' = b(p),
/// beta beta' = p^19 alone.  The left side reads tau(p^k), b(p^k) from the
/// q-expansions up to precision min(p^order, 1000) and continues beyond it
/// with the Hecke recursion seeded by tau(p), b(p).
bool lemma1_local_check(int p, int order);

} // namespace spinl::qexp

#endif
