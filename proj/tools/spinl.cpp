// spinl: exact critical values of L(s, F12, spin) and their numerical check.
//
//   spinl table <1|2|3|4>
//   spinl coeffs <delta|g20|rankin> <n_max>
//   spinl verify
//   spinl norm <12|20> [-r R]
//
// Exit codes: 0 success, 1 verification failure or evaluation error, 2 usage error.

#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "spinl/cli/render.hpp"
#include "spinl/numeric/lfunction.hpp"
#include "spinl/numeric/petersson.hpp"
#include "spinl/numeric/verify.hpp"

namespace {

constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream file(out_path, std::ios::binary);
    file << text;
    if (!file) {
        std::cerr << "spinl: cannot write " << out_path << '\n';
        return kUsageError;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    using namespace spinl;

    CLI::App app{"Exact critical values of L(s, F12, spin) and their numerical verification"};
    app.require_subcommand(1);
    app.fallthrough();

    int prec = 30;
    int coeffs = 150;
    std::string format_name = "text";
    std::string tol_text = "1e-9";
    std::string norms_name = "reference";
    std::string out_path;
    app.add_option("--prec", prec, "working precision in decimal digits (>= 15)")->capture_default_str();
    app.add_option("--coeffs", coeffs, "Dirichlet coefficients for the degree-4 evaluator")->capture_default_str();
    app.add_option("--format", format_name, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--tol", tol_text, "relative tolerance for verify")->capture_default_str();
    app.add_option("--norms", norms_name, "Petersson norms for numeric columns: reference or computed")
        ->check(CLI::IsMember({"reference", "computed"}))
        ->capture_default_str();
    app.add_option("--out", out_path, "write output to this file instead of stdout");

    int table = 0;
    auto* table_cmd = app.add_subcommand("table", "regenerate Table 1, 2, 3 or 4");
    table_cmd->add_option("which", table, "table number")->required()->check(CLI::Range(1, 4));

    std::string form;
    int n_max = 0;
    auto* coeffs_cmd = app.add_subcommand("coeffs", "list Fourier or Dirichlet coefficients");
    coeffs_cmd->add_option("form", form, "delta, g20 or rankin")
        ->required()
        ->check(CLI::IsMember({"delta", "g20", "rankin"}));
    coeffs_cmd->add_option("n_max", n_max, "last index")->required()->check(CLI::PositiveNumber);

    auto* verify_cmd = app.add_subcommand("verify", "compare exact values with direct numerical evaluation");

    int k = 0;
    int r = 4;
    auto* norm_cmd = app.add_subcommand("norm", "Petersson norm by Rankin's formula");
    norm_cmd->add_option("k", k, "weight, 12 or 20")->required()->check(CLI::IsMember({12, 20}));
    norm_cmd->add_option("-r", r, "Eisenstein weight r (4; or 4, 6, 8 for k = 20)")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }

    try {
        if (prec < 15) throw UsageError("--prec must be at least 15");
        if (coeffs < 1) throw UsageError("--coeffs must be positive");
        const cli::Format format = *cli::parse_format(format_name);
        const auto norms = norms_name == "computed" ? numeric::NormSource::Computed : numeric::NormSource::Reference;
        numeric::BigFloat tol(numeric::Precision::decimal(prec));
        try {
            tol = numeric::BigFloat::parse(tol_text, numeric::Precision::decimal(prec));
        } catch (const std::invalid_argument&) {
            throw UsageError("--tol expects a number, got '" + tol_text + "'");
        }
        if (tol.sign() < 0) throw UsageError("--tol must be nonnegative");

        if (*table_cmd) {
            return emit(cli::render_table(cli::build_table(table, prec, coeffs, norms), format), out_path);
        }
        if (*coeffs_cmd) {
            return emit(cli::render_coeffs(cli::build_coeffs(form, n_max), format), out_path);
        }
        if (*verify_cmd) {
            const auto report = numeric::verify_tables(prec, coeffs, norms);
            const int rc = emit(cli::render_verification(report, tol, format), out_path);
            if (rc != 0) return rc;
            return report.passes(tol) ? 0 : 1;
        }
        if (*norm_cmd) {
            if (!((k == 12 && r == 4) || (k == 20 && (r == 4 || r == 6 || r == 8)))) {
                throw UsageError("norm: r must be 4 for k = 12 and 4, 6 or 8 for k = 20");
            }
            const auto n = numeric::petersson_norm(k, r, prec);
            return emit(cli::render_norm({k, r, n.l_used, prec, n.value.to_scientific(prec)}, format), out_path);
        }
    } catch (const UsageError& e) {
        std::cerr << "spinl: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "spinl: " << e.what() << '\n';
        return 1;
    }
    return kUsageError;
}
