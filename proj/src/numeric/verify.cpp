#include "spinl/numeric/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "spinl/numeric/lfunction.hpp"
#include "spinl/numeric/petersson.hpp"

namespace spinl::numeric {

using critical::CriticalValueResult;
using critical::PeterssonFactors;

NormValues reference_norms(Precision p) {
    return NormValues{BigFloat::parse(kReferenceDeltaNorm, p), BigFloat::parse(kReferenceG20Norm, p)};
}

NormValues computed_norms(int digits) {
    return NormValues{petersson_norm(12, 4, digits).value, petersson_norm(20, 4, digits).value};
}

NormValues norms_for(NormSource source, int digits) {
    return source == NormSource::Reference ? reference_norms(Precision::decimal(digits))
                                           : computed_norms(digits);
}

BigFloat exact_numeric(const CriticalValueResult& r, const NormValues& norms, Precision p) {
    BigFloat v = BigFloat(r.rational, p) * pow(BigFloat::pi(p), static_cast<long>(r.pi_exponent));
    if (r.petersson_factors != PeterssonFactors::G20G20) v *= norms.delta_delta.rounded(p);
    if (r.petersson_factors != PeterssonFactors::DeltaDelta) v *= norms.g20_g20.rounded(p);
    return v;
}

std::string_view to_string(Branch b) {
    switch (b) {
    case Branch::TwoDelta: return "i";
    case Branch::RankinG20: return "ii";
    case Branch::Main: return "iii";
    }
    return "?";
}

bool VerificationRow::ok(const BigFloat& tolerance) const {
    return error.empty() && rel_diff && *rel_diff <= tolerance;
}

bool VerificationReport::passes(const BigFloat& tolerance) const {
    return std::all_of(rows.begin(), rows.end(), [&](const auto& r) { return r.ok(tolerance); });
}

std::vector<VerificationRow> VerificationReport::failures(const BigFloat& tolerance) const {
    std::vector<VerificationRow> out;
    for (const auto& r : rows) {
        if (!r.ok(tolerance)) out.push_back(r);
    }
    return out;
}

VerificationReport verify_tables(int digits, int coefficients, NormSource norms) {
    if (digits < 15) {
        throw std::invalid_argument("verify_tables: precision must be at least 15 digits");
    }
    if (coefficients < 1) {
        throw std::invalid_argument("verify_tables: coefficient count must be positive");
    }
    const Precision p = Precision::decimal(digits);
    const NormValues nv = norms_for(norms, digits);
    const int m2 = std::min(coefficients, degree2_terms_for(digits));
    const LFunctionSpec delta = delta_lfunction(m2);

    std::optional<RankinL4Evaluator> rankin;
    std::string rankin_error;
    try {
        rankin.emplace(rankin_lfunction(coefficients), digits, coefficients);
    } catch (const std::exception& e) {
        rankin_error = e.what();
    }

    VerificationReport report{digits, coefficients, norms, {}};
    auto add = [&](int s, Branch b, const CriticalValueResult& r, const std::optional<BigFloat>& direct,
                   const std::string& error) {
        VerificationRow row;
        row.s = s;
        row.branch = b;
        row.exact = exact_numeric(r, nv, p);
        row.error = error;
        if (direct && error.empty()) {
            row.direct = direct;
            row.abs_diff = abs(*row.exact - *direct);
            row.rel_diff = relative_difference(*row.exact, *direct);
        }
        report.rows.push_back(std::move(row));
    };

    for (int s = critical::kFirstCritical; s <= critical::kLastCritical; ++s) {
        std::optional<BigFloat> two_delta, rankin_value;
        std::string err_i, err_ii;
        try {
            two_delta = l_degree2(delta, BigFloat(static_cast<long>(s - 9), p), digits, m2) *
                        l_degree2(delta, BigFloat(static_cast<long>(s - 10), p), digits, m2);
        } catch (const std::exception& e) {
            err_i = e.what();
        }
        if (rankin) {
            try {
                rankin_value = rankin->value(BigFloat(static_cast<long>(s), p));
            } catch (const std::exception& e) {
                err_ii = e.what();
            }
        } else {
            err_ii = rankin_error;
        }
        std::optional<BigFloat> product;
        if (two_delta && rankin_value) product = *two_delta * *rankin_value;

        add(s, Branch::TwoDelta, critical::two_delta_product(s), two_delta, err_i);
        add(s, Branch::RankinG20, critical::rankin_g20_value(s), rankin_value, err_ii);
        add(s, Branch::Main, critical::main_identity(s), product, err_i.empty() ? err_ii : err_i);
    }
    return report;
}

} // namespace spinl::numeric
