#ifndef SPINL_TESTS_ORACLES_HPP
#define SPINL_TESTS_ORACLES_HPP

#include <vector>

#include "spinl/qexp/qseries.hpp"

namespace spinl::oracle {

// Delta to precision N from Euler's pentagonal series
//   prod (1 - q^n) = sum_k (-1)^k q^{k(3k-1)/2}, k over all integers,
// raised to the 24th power by squaring.
inline qexp::QSeries delta_by_pentagonal(int N) {
    using exact::Rational;
    std::vector<Rational> euler(N);
    for (long k = 0;; ++k) {
        bool any = false;
        for (long m : {k * (3 * k - 1) / 2, k * (3 * k + 1) / 2}) {
            if (m > N - 1) continue;
            euler[m] = Rational(k % 2 == 0 ? 1 : -1);
            any = true;
        }
        if (!any) break;
    }
    const qexp::QSeries eta(euler);
    qexp::QSeries p8 = eta * eta;
    p8 = p8 * p8;
    p8 = p8 * p8;
    const qexp::QSeries p24 = p8 * p8 * p8;
    std::vector<Rational> shifted(N + 1);
    for (int n = 1; n <= N; ++n) shifted[n] = p24[n - 1];
    return qexp::QSeries(shifted);
}

} // namespace spinl::oracle

#endif
