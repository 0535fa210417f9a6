#ifndef SPINL_CLI_RENDER_HPP
#define SPINL_CLI_RENDER_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "spinl/exact/rational.hpp"
#include "spinl/numeric/verify.hpp"

namespace spinl::cli {

enum class Format { Text, Json, Csv };

std::optional<Format> parse_format(std::string_view name);

/// One row of Tables 1-4.  Table 1 carries two records per s, with
/// `quantity` "A1" and "A2"; the other tables leave it empty.
struct OutputRecord {
    int s = 0;
    std::string quantity;
    std::string numerator;
    std::string denominator;
    std::string factored;
    int pi_exponent = 0;
    std::string numeric;

    friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

struct TableDocument {
    int table = 0;
    std::vector<OutputRecord> rows;
    std::string delta_norm;
    std::string g20_norm;
    int precision_digits = 0;
    int coefficients_used = 0;

    friend bool operator==(const TableDocument&, const TableDocument&) = default;
};

/// Prime-power form of a rational, e.g. "2^34/(3^7*5^5*7*11)", "-1/2^8", "5".
/// Factors are found by trial division up to 10^6; a larger leftover cofactor
/// is printed as a single factor.
std::string factored_form(const exact::Rational& q);

/// Inverse of factored_form; throws std::invalid_argument on malformed input.
exact::Rational parse_factored(std::string_view text);

/// Table 1 (s = 3..10) or Tables 2-4 (s = 12..19), numeric column rendered
/// at `digits` significant digits with the chosen norms.
TableDocument build_table(int which, int digits, int coefficients, numeric::NormSource norms);

nlohmann::ordered_json to_json(const TableDocument& doc);
TableDocument table_from_json(const nlohmann::ordered_json& j);

std::string render_table(const TableDocument& doc, Format format);

struct CoefficientListing {
    std::string form;  // delta, g20 or rankin
    std::vector<std::string> values;  // values[n-1]
};

/// Throws std::invalid_argument for an unknown form or n_max < 1.
CoefficientListing build_coeffs(std::string_view form, int n_max);
std::string render_coeffs(const CoefficientListing& listing, Format format);

std::string render_verification(const numeric::VerificationReport& report,
                                const numeric::BigFloat& tolerance, Format format);

struct NormReport {
    int k = 0;
    int r = 0;
    int l = 0;
    int precision_digits = 0;
    std::string value;
};

std::string render_norm(const NormReport& norm, Format format);

} // namespace spinl::cli

#endif
