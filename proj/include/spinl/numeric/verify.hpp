#ifndef SPINL_NUMERIC_VERIFY_HPP
#define SPINL_NUMERIC_VERIFY_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spinl/critical/critical_values.hpp"
#include "spinl/numeric/bigfloat.hpp"

namespace spinl::numeric {

/// Petersson norms used to turn exact results into numbers.
struct NormValues {
    BigFloat delta_delta;
    BigFloat g20_g20;
};

/// Truncated norms with which the published numeric columns were rendered.
inline constexpr std::string_view kReferenceDeltaNorm = "0.000001035362056";
inline constexpr std::string_view kReferenceG20Norm = "0.00000826554153165970";

enum class NormSource { Reference, Computed };

NormValues reference_norms(Precision p);
/// petersson_norm(12, 4) and petersson_norm(20, 4).
NormValues computed_norms(int digits);
NormValues norms_for(NormSource source, int digits);

/// rational * pi^P * (the norms named by the result).
BigFloat exact_numeric(const critical::CriticalValueResult& r, const NormValues& norms, Precision p);

/// (i) L(s-9, Delta) L(s-10, Delta); (ii) L(s, Delta x g20); (iii) their product.
enum class Branch { TwoDelta, RankinG20, Main };

std::string_view to_string(Branch b);

struct VerificationRow {
    int s = 0;
    Branch branch = Branch::Main;
    std::optional<BigFloat> exact;
    std::optional<BigFloat> direct;
    std::optional<BigFloat> abs_diff;
    std::optional<BigFloat> rel_diff;
    std::string error;  // set when the direct evaluation failed

    bool ok(const BigFloat& tolerance) const;
};

struct VerificationReport {
    int digits = 0;
    int coefficients = 0;
    NormSource norms = NormSource::Reference;
    std::vector<VerificationRow> rows;

    bool passes(const BigFloat& tolerance) const;
    std::vector<VerificationRow> failures(const BigFloat& tolerance) const;
};

/// For s = 12..19 and each branch, compares the exact value rendered with
/// the chosen norms against direct numerical evaluation: degree-2 values from
/// min(M, degree2_terms_for(D)) coefficients, the degree-4 value from M.
/// Evaluation errors (too few coefficients, quadrature failure) become rows
/// with `error` set rather than exceptions.  Throws std::invalid_argument for
/// D < 15 or M < 1.
VerificationReport verify_tables(int digits, int coefficients, NormSource norms);

} // namespace spinl::numeric

#endif
