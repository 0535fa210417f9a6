#include "spinl/numeric/lfunction.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "spinl/numeric/quadrature.hpp"
#include "spinl/numeric/special.hpp"

namespace spinl::numeric {

namespace {

constexpr int kGuardDigits = 15;
constexpr int kMaxLevel = 10;
constexpr double kLn10 = 2.302585092994046;
constexpr double kSplitForResidual = 1.2;
// Rankin evaluator: F(s, a) is needed for s - 1 in [-1, 30].
constexpr double kLowestMoment = -1.0;
constexpr double kHighestMoment = 30.0;

std::shared_ptr<const std::vector<BigInt>> share(std::vector<BigInt> v) {
    return std::make_shared<const std::vector<BigInt>>(std::move(v));
}

std::vector<BigInt> integers_of(const qexp::QSeries& f, int M) {
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(M));
    for (int n = 1; n <= M; ++n) out.push_back(f.integer_at(n));
    return out;
}

void require_terms(const LFunctionSpec& f, int M) {
    if (M < 1 || M > f.available()) {
        throw std::invalid_argument(f.name + ": coefficient count " + std::to_string(M) +
                                    " outside 1.." + std::to_string(f.available()));
    }
}

double log_abs(const BigFloat& x) {
    if (x.is_zero()) return -INFINITY;
    return log(abs(x)).to_double();
}

// Target for omitted terms: 10^-D relative to |value|.
void check_tail(const std::string& who, double log_tail, const BigFloat& value, int digits, int M) {
    const double allowed = log_abs(value) - digits * kLn10;
    if (!(log_tail <= allowed)) {
        throw InsufficientTerms(who + ": " + std::to_string(M) + " coefficients leave a tail near 1e" +
                                std::to_string(static_cast<int>(std::ceil(log_tail / kLn10))) +
                                ", above the 1e-" + std::to_string(digits) + " target");
    }
}

// log of sum_{j>=1} exp(-rate (sqrt(M+j) - sqrt M)) ((M+j)/M)^power
double log_tail_factor(int M, double rate, double power) {
    double total = 0.0;
    for (int j = 1; j < 100000; ++j) {
        const double n = M + j;
        const double term = std::exp(-rate * (std::sqrt(n) - std::sqrt(M)) + power * std::log(n / M));
        total += term;
        if (term < 1e-20 * total && j > 5) break;
    }
    return std::log(total);
}

// log of the integrand envelope m ln t - (nu/2 + 1/4) ln(a t) - 2 sqrt(a t)
double envelope(double t, double a, double m) {
    return m * std::log(t) - 5.75 * std::log(a * t) - 2.0 * std::sqrt(a * t);
}

// T beyond which t^m phi_11(a t) is 10^-(D+10) below its maximum on [1, inf).
double upper_cutoff(double a, double m, int digits) {
    const double peak_t = std::max(1.0, (m - 5.75) * (m - 5.75) / a);
    const double peak = envelope(peak_t, a, m);
    const double drop = (digits + 10) * kLn10;
    double T = peak_t * 1.05 + 0.05;
    while (envelope(T, a, m) > peak - drop) T *= 1.05;
    return T;
}

} // namespace

const BigInt& LFunctionSpec::coefficient(int n) const {
    if (n < 1 || n > available()) {
        throw std::out_of_range(name + ": coefficient " + std::to_string(n) + " not available");
    }
    return (*coefficients)[static_cast<std::size_t>(n) - 1];
}

LFunctionSpec delta_lfunction(int M) {
    return LFunctionSpec{"L(s, Delta)", {0, 1}, 1, 12, 1,
                         share(integers_of(qexp::delta_qexp(M), M))};
}

LFunctionSpec g20_lfunction(int M) {
    return LFunctionSpec{"L(s, g20)", {0, 1}, 1, 20, 1, share(integers_of(qexp::g20_qexp(M), M))};
}

LFunctionSpec rankin_lfunction(const qexp::RankinCoeffs& coeffs) {
    return LFunctionSpec{"L(s, Delta x g20)", {0, 1, -11, -10}, 1, 31, 1, share(coeffs.values())};
}

LFunctionSpec rankin_lfunction(int M) { return rankin_lfunction(qexp::rankin_coeffs(M)); }

int degree2_terms_for(int digits) {
    // |a(n)| (2 pi n)^{-1} e^{-2 pi n} with |a(n)| <= 2 n^{10}: ask for ~40 nats of slack
    return static_cast<int>(std::ceil(((digits + 10) * kLn10 + 40.0) / (2.0 * M_PI))) + 2;
}

namespace {

// completed_degree2 at guard precision, tail checked against 10^-digits
BigFloat degree2_sum(const LFunctionSpec& f, const BigFloat& s, int digits, int M, double split) {
    if (f.degree() != 2) {
        throw std::invalid_argument("completed_degree2: " + f.name + " is not of degree 2");
    }
    require_terms(f, M);
    if (!(split > 0.0)) {
        throw std::invalid_argument("completed_degree2: split point must be positive");
    }
    const Precision wp = Precision::decimal(digits).widened(kGuardDigits);
    const int k = f.weight;
    const BigFloat sw = s.rounded(wp);
    const BigFloat ks = BigFloat(static_cast<long>(k), wp) - sw;
    const BigFloat two_pi = BigFloat::pi(wp) * 2L;
    const BigFloat c(split, wp);

    BigFloat sum(wp);
    for (int n = 1; n <= M; ++n) {
        const BigInt& a = f.coefficient(n);
        if (a == 0) continue;
        const BigFloat x = two_pi * static_cast<long>(n);
        BigFloat term = pow(x, -sw) * incomplete_gamma(sw, x * c, wp);
        BigFloat dual = pow(x, -ks) * incomplete_gamma(ks, x / c, wp);
        term += f.sign > 0 ? dual : -dual;
        sum += BigFloat(a, wp) * term;
    }

    // Omitted terms: |a(n)| <= d(n) n^{(k-1)/2} <= 2 n^{k/2}, and
    // Gamma(b, x) <= 2 x^{b-1} e^{-x} once x >= 2(b-1).
    const double sd = s.to_double();
    const double cmin = std::min(split, 1.0 / split);
    const double x_next = 2.0 * M_PI * (M + 1) * cmin;
    if (x_next < 2.0 * (std::max(sd, k - sd) - 1.0)) {
        throw InsufficientTerms(f.name + ": " + std::to_string(M) +
                                " coefficients are too few for the tail estimate at s = " + s.to_string(8));
    }
    const double n1 = M + 1;
    const double log_first = std::log(2.0) + 0.5 * k * std::log(n1) + std::log(4.0) -
                             std::log(2.0 * M_PI * n1) - 2.0 * M_PI * n1 * cmin +
                             std::abs(std::log(split)) * std::max(std::abs(sd - 1.0), std::abs(k - sd - 1.0));
    const double ratio = std::exp(-2.0 * M_PI * cmin + 0.5 * k * std::log((n1 + 1) / n1));
    const double log_tail = log_first - std::log1p(-ratio);
    check_tail(f.name, log_tail, sum, digits, M);
    return sum;
}

} // namespace

BigFloat completed_degree2(const LFunctionSpec& f, const BigFloat& s, int digits, int M,
                           double split) {
    return degree2_sum(f, s, digits, M, split).rounded(Precision::decimal(digits));
}

BigFloat l_degree2(const LFunctionSpec& f, const BigFloat& s, int digits, int M) {
    const Precision wp = Precision::decimal(digits).widened(kGuardDigits);
    const BigFloat sw = s.rounded(wp);
    long si = 0;
    if (sw.is_integer(&si) && si <= 0) {
        throw std::domain_error("l_degree2: Gamma(s) has a pole at s = " + std::to_string(si));
    }
    const BigFloat lambda = degree2_sum(f, sw, digits, M, 1.0);
    const BigFloat two_pi = BigFloat::pi(wp) * 2L;
    return (lambda * pow(two_pi, sw) / gamma(sw)).rounded(Precision::decimal(digits));
}

BigFloat l_degree2(const qexp::QSeries& form, int k, const BigFloat& s, int digits, int M) {
    if (k != 12 && k != 20) {
        throw std::invalid_argument("l_degree2: weight must be 12 or 20");
    }
    if (form.precision() < M) {
        throw std::invalid_argument("l_degree2: q-expansion has " + std::to_string(form.precision()) +
                                    " coefficients, " + std::to_string(M) + " requested");
    }
    const LFunctionSpec f{k == 12 ? "L(s, Delta)" : "L(s, g20)", {0, 1}, 1, k, 1,
                          share(integers_of(form, M))};
    return l_degree2(f, s, digits, M);
}

BigFloat l_degree2(const qexp::QSeries& form, int k, long s, int digits, int M) {
    return l_degree2(form, k, BigFloat(s, Precision::decimal(digits)), digits, M);
}

BigFloat mellin_kernel(int nu, const BigFloat& x, Precision p) {
    const BigFloat z = sqrt(x) * 2L;
    const BigFloat k = bessel_k(nu, z, p);
    return k * exp(log(x) * BigFloat(-0.5 * nu, p)) * 2L;
}

BigFloat kernel_mellin_transform(int nu, const BigFloat& s0, int digits) {
    if (!(s0 > static_cast<long>(nu))) {
        throw std::domain_error("kernel_mellin_transform: needs s0 > nu for convergence");
    }
    const Precision wp = Precision::decimal(digits).widened(kGuardDigits);
    const BigFloat s = s0.rounded(wp);
    const BigFloat sm1 = s - BigFloat(1L, wp);
    const BigFloat tol = pow(BigFloat(10L, wp), -static_cast<long>(digits + 5));
    auto integrand = [&](const BigFloat& t) { return mellin_kernel(nu, t, wp) * exp(log(t) * sm1); };

    // [0, t0]: phi_nu(t) = Gamma(nu) t^{-nu} (1 + O(t)), integrated in closed form
    const BigFloat t0 = BigFloat::parse("1e-12", wp);
    BigFloat gamma_nu(1L, wp);
    for (long j = 2; j < nu; ++j) gamma_nu *= j;
    const BigFloat p0 = s - BigFloat(static_cast<long>(nu), wp);
    const BigFloat head = gamma_nu * exp(log(t0) * p0) / p0;

    const auto low = integrate_tanh_sinh(integrand, t0, BigFloat(1L, wp), wp, tol, kMaxLevel);
    const double T = upper_cutoff(1.0, std::max(s.to_double() - 1.0, 0.0), digits + 5);
    const auto high = integrate_tanh_sinh(integrand, BigFloat(1L, wp), BigFloat(T, wp), wp, tol, kMaxLevel);
    if (!low.converged || !high.converged) {
        throw QuadratureFailure("kernel_mellin_transform: tanh-sinh did not converge");
    }
    return (head + low.value + high.value).rounded(Precision::decimal(digits));
}

RankinL4Evaluator::RankinL4Evaluator(const LFunctionSpec& f, int digits, int M, double split)
    : f_(f),
      digits_(digits),
      M_(M),
      wp_(Precision::decimal(digits).widened(kGuardDigits)),
      c_(split, Precision::decimal(digits).widened(kGuardDigits)) {
    if (f.degree() != 4 || f.weight != 31) {
        throw std::invalid_argument("RankinL4Evaluator: " + f.name + " is not the degree-4 Rankin product");
    }
    require_terms(f, M);
    if (!(split > 0.0)) {
        throw std::invalid_argument("RankinL4Evaluator: split point must be positive");
    }
    const BigFloat four_pi2 = BigFloat::pi(wp_) * BigFloat::pi(wp_) * 4L;
    for (int n = 1; n <= M; ++n) {
        const BigFloat a = four_pi2 * static_cast<long>(n);
        scaled_up_.push_back(build_table(a * c_));
        if (split != 1.0) scaled_down_.push_back(build_table(a / c_));
    }
}

RankinL4Evaluator::NodeTable RankinL4Evaluator::build_table(const BigFloat& a) const {
    const double T = upper_cutoff(a.to_double(), kHighestMoment, digits_ + kGuardDigits / 3);
    const TanhSinhRule rule(BigFloat(1L, wp_), BigFloat(T, wp_), wp_);
    const BigFloat tol = pow(BigFloat(10L, wp_), -static_cast<long>(digits_ + 5));
    const BigFloat lo(kLowestMoment, wp_), hi(kHighestMoment, wp_);

    NodeTable table;
    std::vector<BigFloat> raw;  // weight * phi, step applied at the end
    BigFloat sum_lo(wp_), sum_hi(wp_);
    BigFloat prev_lo(wp_), prev_hi(wp_);
    double prev_change = 1.0;
    for (int level = 0; level <= kMaxLevel; ++level) {
        for (const auto& node : rule.level_nodes(level)) {
            const BigFloat log_t = log(node.x);
            const BigFloat w = node.weight * mellin_kernel(11, a * node.x, wp_);
            sum_lo += w * exp(log_t * lo);
            sum_hi += w * exp(log_t * hi);
            table.log_t.push_back(log_t);
            raw.push_back(w);
        }
        const BigFloat h = rule.step(level);
        const BigFloat m_lo = sum_lo * h;
        const BigFloat m_hi = sum_hi * h;
        // Once the rule converges quadratically (each change about the square
        // of the previous one), the error left after this level is about
        // change^2.
        const double change = std::max(relative_difference(m_lo, prev_lo).to_double(),
                                        relative_difference(m_hi, prev_hi).to_double());
        const bool quadratic = change <= std::pow(prev_change, 1.5);
        if (level >= 3 && quadratic && change * change <= tol.to_double()) {
            table.weighted_phi.reserve(raw.size());
            for (auto& w : raw) table.weighted_phi.push_back(w * h);
            return table;
        }
        prev_lo = m_lo;
        prev_hi = m_hi;
        prev_change = change;
    }
    throw QuadratureFailure("RankinL4Evaluator: tanh-sinh did not converge for a = " + a.to_string(10));
}

BigFloat RankinL4Evaluator::moment(const NodeTable& table, const BigFloat& s) const {
    const BigFloat sm1 = s - BigFloat(1L, wp_);
    BigFloat sum(wp_);
    for (std::size_t j = 0; j < table.log_t.size(); ++j) {
        sum += table.weighted_phi[j] * exp(table.log_t[j] * sm1);
    }
    return sum;
}

BigFloat RankinL4Evaluator::completed_unchecked(const BigFloat& s) const {
    const BigFloat sw = s.rounded(wp_);
    if (sw < 0L || sw > 31L) {
        throw std::domain_error("RankinL4Evaluator: s = " + s.to_string(8) + " outside [0, 31]");
    }
    const BigFloat dual = BigFloat(31L, wp_) - sw;
    const auto& down = scaled_down_.empty() ? scaled_up_ : scaled_down_;
    const BigFloat c_up = pow(c_, sw);
    const BigFloat c_down = pow(c_, -dual);
    BigFloat sum(wp_);
    for (int n = 1; n <= M_; ++n) {
        const BigInt& A = f_.coefficient(n);
        if (A == 0) continue;
        BigFloat term = c_up * moment(scaled_up_[n - 1], sw);
        BigFloat other = c_down * moment(down[n - 1], dual);
        term += f_.sign > 0 ? other : -other;
        sum += BigFloat(A, wp_) * term;
    }
    const BigFloat two_pi = BigFloat::pi(wp_) * 2L;
    return sum * pow(two_pi, 11L) * 4L;
}

BigFloat RankinL4Evaluator::tail_bound(const BigFloat& s) const {
    // |A(n)| <= n^15 d(n)^3 <= n^15 (2 sqrt n)^3, and F(s, a) shrinks at least
    // like e^{-2 (sqrt a' - sqrt a)} as a grows to a'.
    const BigFloat sw = s.rounded(wp_);
    const BigFloat dual = BigFloat(31L, wp_) - sw;
    const auto& down = scaled_down_.empty() ? scaled_up_ : scaled_down_;
    const BigFloat at_M = pow(c_, sw) * moment(scaled_up_[M_ - 1], sw) +
                          pow(c_, -dual) * moment(down[M_ - 1], dual);
    const double cmin = std::min(c_.to_double(), 1.0 / c_.to_double());
    const double rate = 4.0 * M_PI * std::sqrt(cmin);
    const double log_coeff = 16.5 * std::log(static_cast<double>(M_)) + 3.0 * std::log(2.0);
    const double log_bound = log_abs(at_M) + log_coeff + 11.0 * std::log(2.0 * M_PI) + std::log(4.0) +
                             log_tail_factor(M_, rate, 16.5);
    BigFloat out(wp_);
    mpfr_set_d(out.get(), log_bound, MPFR_RNDN);
    return exp(out);
}

BigFloat RankinL4Evaluator::completed(const BigFloat& s) const {
    BigFloat lambda = completed_unchecked(s);
    check_tail(f_.name, log_abs(tail_bound(s)), lambda, digits_, M_);
    return lambda.rounded(Precision::decimal(digits_));
}

BigFloat RankinL4Evaluator::value(const BigFloat& s) const {
    const BigFloat sw = s.rounded(wp_);
    long si = 0;
    if (sw.is_integer(&si) && si <= 11) {
        throw std::domain_error("RankinL4Evaluator: Gamma(s - 11) has a pole at s = " + std::to_string(si));
    }
    BigFloat lambda = completed_unchecked(sw);
    check_tail(f_.name, log_abs(tail_bound(sw)), lambda, digits_, M_);
    const BigFloat two_pi = BigFloat::pi(wp_) * 2L;
    const BigFloat factor = pow(two_pi, BigFloat(11L, wp_) - sw * 2L) * gamma(sw) *
                            gamma(sw - BigFloat(11L, wp_)) * 4L;
    return (lambda / factor).rounded(Precision::decimal(digits_));
}

BigFloat l_rankin4(const qexp::RankinCoeffs& coeffs, const BigFloat& s, int digits, int M) {
    if (coeffs.precision() < M) {
        throw std::invalid_argument("l_rankin4: only " + std::to_string(coeffs.precision()) +
                                    " coefficients supplied, " + std::to_string(M) + " requested");
    }
    const RankinL4Evaluator ev(rankin_lfunction(coeffs), digits, M);
    return ev.value(s);
}

BigFloat l_rankin4(const qexp::RankinCoeffs& coeffs, long s, int digits, int M) {
    return l_rankin4(coeffs, BigFloat(s, Precision::decimal(digits)), digits, M);
}

std::vector<BigFloat> functional_eq_residuals(const LFunctionSpec& f, const std::vector<BigFloat>& ts,
                                              int digits, int M) {
    const Precision wp = Precision::decimal(digits).widened(kGuardDigits);
    const BigFloat w(static_cast<long>(f.weight), wp);
    std::optional<RankinL4Evaluator> split, plain;
    if (f.degree() != 2) {
        split.emplace(f, digits, M, kSplitForResidual);
        plain.emplace(f, digits, M, 1.0);
    }
    std::vector<BigFloat> out;
    for (const auto& t : ts) {
        const BigFloat tw = t.rounded(wp);
        const BigFloat left = split ? split->completed(tw) : degree2_sum(f, tw, digits, M, kSplitForResidual);
        const BigFloat right = plain ? plain->completed(w - tw) : degree2_sum(f, w - tw, digits, M, 1.0);
        out.push_back(abs(f.sign > 0 ? left - right : left + right));
    }
    return out;
}

BigFloat functional_eq_residual(const LFunctionSpec& f, const BigFloat& t, int digits, int M) {
    return functional_eq_residuals(f, {t}, digits, M).front();
}

} // namespace spinl::numeric
