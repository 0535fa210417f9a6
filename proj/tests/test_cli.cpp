#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "spinl/cli/render.hpp"
#include "spinl/critical/critical_values.hpp"

using namespace spinl;
using exact::Rational;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

// Runs the spinl binary with stdout captured to a temporary file.
RunResult run(const std::string& args) {
    const auto out = std::filesystem::temp_directory_path() / "spinl_test_cli_stdout.txt";
    const std::string cmd = std::string(SPINL_CLI_PATH) + " " + args + " > " + out.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    std::filesystem::remove(out);
    return r;
}

// The published columns are rounded to 15 decimals.
bool printed_agrees(const std::string& value, const char* printed) {
    const auto p = numeric::Precision::decimal(30);
    const auto diff = abs(numeric::BigFloat::parse(value, p) - numeric::BigFloat::parse(printed, p));
    return diff <= numeric::BigFloat::parse("5e-16", p);
}

} // namespace

TEST_CASE("factored form") {
    CHECK(cli::factored_form(Rational::parse("17179869184/526246875")) == "2^34/(3^7*5^5*7*11)");
    CHECK(cli::factored_form(Rational::parse("4096/81")) == "2^12/3^4");
    CHECK(cli::factored_form(Rational::parse("-1/256")) == "-1/2^8");
    CHECK(cli::factored_form(Rational(5)) == "5");
    CHECK(cli::factored_form(Rational(1)) == "1");
    CHECK(cli::factored_form(Rational::parse("76/25")) == "2^2*19/5^2");
}

TEST_CASE("factored form re-multiplies to the decimal form") {
    for (int s = critical::kFirstCritical; s <= critical::kLastCritical; ++s) {
        for (const auto& r : {critical::two_delta_product(s), critical::rankin_g20_value(s), critical::main_identity(s)}) {
            CHECK(cli::parse_factored(cli::factored_form(r.rational)) == r.rational);
        }
    }
    for (int s = 3; s <= 10; ++s) {
        const auto pc = critical::projection_coeffs(s);
        for (const auto& v : {pc.a1, pc.a2}) {
            const Rational q = v.as_monomial().coeff;
            CHECK(cli::parse_factored(cli::factored_form(q)) == q);
        }
    }
    // A prime above the trial-division bound stays a single factor.
    const Rational big = Rational::parse("1000003/2000006000009");
    CHECK(cli::parse_factored(cli::factored_form(big)) == big);
    CHECK_THROWS_AS(cli::parse_factored("2^"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_factored("x/3"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_factored(""), std::invalid_argument);
}

TEST_CASE("table 1 document") {
    const auto doc = cli::build_table(1, 30, 150, numeric::NormSource::Reference);
    REQUIRE(doc.rows.size() == 16);
    const auto& a1 = doc.rows[4];
    const auto& a2 = doc.rows[5];
    CHECK(a1.s == 5);
    CHECK(a1.quantity == "A1");
    CHECK(a1.numerator == "1");
    CHECK(a1.denominator == "1440");
    CHECK(a1.pi_exponent == -2);
    CHECK(a2.quantity == "A2");
    CHECK(a2.denominator == "20");
}

TEST_CASE("tables 2-4 numeric column with reference norms") {
    const auto t2 = cli::build_table(2, 30, 150, numeric::NormSource::Reference);
    REQUIRE(t2.rows.size() == 8);
    CHECK(t2.rows[1].s == 13);
    CHECK(t2.rows[1].factored == "2^12/3^4");
    CHECK(t2.rows[1].pi_exponent == 7);
    CHECK(printed_agrees(t2.rows[1].numeric, "0.158130732552033"));

    const auto t4 = cli::build_table(4, 30, 150, numeric::NormSource::Reference);
    CHECK(t4.rows[6].s == 18);
    CHECK(t4.rows[6].factored == "2^35/(3^18*5^6*7^5*11*13*17)");
    CHECK(t4.rows[6].pi_exponent == 42);
    CHECK(printed_agrees(t4.rows[6].numeric, "0.902464835857626"));
    CHECK(t4.rows[5].numerator == "17179869184");
    CHECK_THROWS(cli::build_table(5, 30, 150, numeric::NormSource::Reference));
}

TEST_CASE("json output round-trips byte for byte") {
    for (int which = 1; which <= 4; ++which) {
        CAPTURE(which);
        const auto doc = cli::build_table(which, 30, 150, numeric::NormSource::Reference);
        const std::string first = cli::render_table(doc, cli::Format::Json);
        const auto parsed = cli::table_from_json(nlohmann::ordered_json::parse(first));
        CHECK(parsed == doc);
        CHECK(cli::render_table(parsed, cli::Format::Json) == first);
    }
}

TEST_CASE("json schema") {
    const auto j = cli::to_json(cli::build_table(3, 30, 150, numeric::NormSource::Reference));
    CHECK(j.at("table") == 3);
    CHECK(j.at("rows").size() == 8);
    CHECK(j.at("petersson").contains("delta_delta"));
    CHECK(j.at("petersson").contains("g20_g20"));
    CHECK(j.at("precision_digits") == 30);
    CHECK(j.at("coefficients_used") == 150);
    const auto& row = j.at("rows").at(0);
    for (const char* key : {"s", "numerator", "denominator", "factored", "pi_exponent", "numeric"}) {
        CHECK(row.contains(key));
    }
}

TEST_CASE("coefficient listings") {
    CHECK(cli::build_coeffs("rankin", 15).values.at(14) == "-146571102587851200");
    CHECK(cli::build_coeffs("g20", 13).values.at(12) == "50421615062");
    CHECK(cli::build_coeffs("delta", 1).values.at(0) == "1");
    CHECK_THROWS_AS(cli::build_coeffs("eta", 3), std::invalid_argument);
    CHECK_THROWS_AS(cli::build_coeffs("delta", 0), std::invalid_argument);
}

TEST_CASE("format names") {
    CHECK(cli::parse_format("json") == cli::Format::Json);
    CHECK(cli::parse_format("csv") == cli::Format::Csv);
    CHECK(cli::parse_format("text") == cli::Format::Text);
    CHECK_FALSE(cli::parse_format("xml").has_value());
}

TEST_CASE("command line exit codes") {
    const auto ok = run("table 2");
    CHECK(ok.code == 0);
    CHECK(ok.out.find("2^12/3^4") != std::string::npos);

    const auto coeffs = run("coeffs rankin 15 --format csv");
    CHECK(coeffs.code == 0);
    CHECK(coeffs.out.find("-146571102587851200") != std::string::npos);

    CHECK(run("table 7").code == 2);
    CHECK(run("--prec 10 table 1").code == 2);
    CHECK(run("").code == 2);
    CHECK(run("table 1 --format xml").code == 2);
    CHECK(run("--tol abc verify").code == 2);
    CHECK(run("norm 12 -r 6").code == 2);
    CHECK(run("--help").code == 0);
    CHECK(run("--prec 15 --coeffs 20 --tol 1e-30 verify").code == 1);
}

TEST_CASE("command line output is deterministic") {
    const auto a = run("table 4 --format json");
    const auto b = run("table 4 --format json");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const auto parsed = cli::table_from_json(nlohmann::ordered_json::parse(a.out));
    CHECK(cli::render_table(parsed, cli::Format::Json) == a.out);
}
