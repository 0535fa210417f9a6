#include "spinl/cli/render.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "spinl/critical/critical_values.hpp"
#include "spinl/qexp/forms.hpp"

namespace spinl::cli {

using exact::BigInt;
using exact::Rational;
using json = nlohmann::ordered_json;

namespace {

constexpr unsigned long kTrialLimit = 1000000;

std::vector<std::pair<BigInt, unsigned>> factor(BigInt n) {
    std::vector<std::pair<BigInt, unsigned>> out;
    for (unsigned long p = 2; p <= kTrialLimit && n > 1; p += (p == 2 ? 1 : 2)) {
        if (BigInt(p) * p > n) break;
        unsigned e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++e;
        }
        if (e) out.emplace_back(BigInt(p), e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::string product_form(const BigInt& n) {
    if (n == 1) return "1";
    std::string out;
    for (const auto& [p, e] : factor(n)) {
        if (!out.empty()) out += '*';
        out += p.get_str();
        if (e > 1) out += '^' + std::to_string(e);
    }
    return out;
}

BigInt parse_product(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("parse_factored: empty product");
    BigInt out = 1;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t star = std::min(text.find('*', pos), text.size());
        const std::string_view item = text.substr(pos, star - pos);
        const std::size_t caret = item.find('^');
        BigInt base;
        unsigned long e = 1;
        try {
            if (base.set_str(std::string(item.substr(0, caret)), 10) != 0 || base < 1) throw 0;
            if (caret != std::string_view::npos) e = std::stoul(std::string(item.substr(caret + 1)));
        } catch (...) {
            throw std::invalid_argument("parse_factored: bad factor '" + std::string(item) + "'");
        }
        BigInt power;
        mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), e);
        out *= power;
        pos = star + 1;
    }
    return out;
}

std::string_view table_title(int which) {
    switch (which) {
    case 1: return "A1(s), A2(s) = r * pi^P";
    case 2: return "L(s-9, Delta) L(s-10, Delta) = r * pi^P * <Delta, Delta>";
    case 3: return "L(s, Delta x g20) = r * pi^P * <g20, g20>";
    case 4: return "L(s, F12, spin) = r * pi^P * <Delta, Delta> * <g20, g20>";
    }
    return "";
}

OutputRecord make_record(int s, std::string quantity, const Rational& r, int pi_exponent,
                         const numeric::BigFloat& numeric, int digits) {
    return OutputRecord{s,
                        std::move(quantity),
                        r.numerator().get_str(),
                        r.denominator().get_str(),
                        factored_form(r),
                        pi_exponent,
                        numeric.to_string(digits)};
}

std::string csv_line(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ',';
        out += cells[i];
    }
    return out + '\n';
}

// Left-aligned columns separated by two spaces.
std::string text_grid(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& r : rows) {
        width.resize(std::max(width.size(), r.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    }
    std::ostringstream os;
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t i = 0; i < r.size(); ++i) {
            line += r[i];
            if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
        }
        os << line << '\n';
    }
    return os.str();
}

std::string sci(const std::optional<numeric::BigFloat>& x, int digits) {
    return x ? x->to_scientific(digits) : std::string("-");
}

} // namespace

std::optional<Format> parse_format(std::string_view name) {
    if (name == "text") return Format::Text;
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    return std::nullopt;
}

std::string factored_form(const Rational& q) {
    if (q.is_zero()) return "0";
    const std::string sign = q.sign() < 0 ? "-" : "";
    const BigInt num = abs(q.numerator());
    const BigInt den = q.denominator();
    std::string out = sign + product_form(num);
    if (den != 1) {
        const std::string d = product_form(den);
        const bool single = d.find('*') == std::string::npos;
        out += single ? "/" + d : "/(" + d + ")";
    }
    return out;
}

Rational parse_factored(std::string_view text) {
    bool negative = false;
    if (!text.empty() && text.front() == '-') {
        negative = true;
        text.remove_prefix(1);
    }
    const std::size_t slash = text.find('/');
    const BigInt num = parse_product(text.substr(0, slash));
    BigInt den = 1;
    if (slash != std::string_view::npos) {
        std::string_view d = text.substr(slash + 1);
        if (d.size() >= 2 && d.front() == '(' && d.back() == ')') d = d.substr(1, d.size() - 2);
        den = parse_product(d);
    }
    Rational out(num, den);
    return negative ? -out : out;
}

TableDocument build_table(int which, int digits, int coefficients, numeric::NormSource norms) {
    if (which < 1 || which > 4) {
        throw std::invalid_argument("table must be 1, 2, 3 or 4");
    }
    const numeric::Precision p = numeric::Precision::decimal(digits);
    const numeric::NormValues nv = numeric::norms_for(norms, digits);
    TableDocument doc;
    doc.table = which;
    doc.precision_digits = digits;
    doc.coefficients_used = coefficients;
    if (norms == numeric::NormSource::Reference) {
        doc.delta_norm = std::string(numeric::kReferenceDeltaNorm);
        doc.g20_norm = std::string(numeric::kReferenceG20Norm);
    } else {
        doc.delta_norm = nv.delta_delta.to_scientific(digits);
        doc.g20_norm = nv.g20_g20.to_scientific(digits);
    }

    const numeric::BigFloat pi = numeric::BigFloat::pi(p);
    if (which == 1) {
        for (int s = 3; s <= 10; ++s) {
            const auto pc = critical::projection_coeffs(s);
            for (const auto& [name, v] : {std::pair{"A1", &pc.a1}, std::pair{"A2", &pc.a2}}) {
                const auto& m = v->as_monomial();
                const numeric::BigFloat x = numeric::BigFloat(m.coeff, p) * pow(pi, static_cast<long>(m.exponent));
                doc.rows.push_back(make_record(s, name, m.coeff, m.exponent, x, digits));
            }
        }
        return doc;
    }
    for (int s = critical::kFirstCritical; s <= critical::kLastCritical; ++s) {
        const critical::CriticalValueResult r = which == 2   ? critical::two_delta_product(s)
                                                : which == 3 ? critical::rankin_g20_value(s)
                                                             : critical::main_identity(s);
        doc.rows.push_back(make_record(s, "", r.rational, r.pi_exponent, numeric::exact_numeric(r, nv, p), digits));
    }
    return doc;
}

json to_json(const TableDocument& doc) {
    json rows = json::array();
    for (const auto& r : doc.rows) {
        json j;
        j["s"] = r.s;
        if (!r.quantity.empty()) j["quantity"] = r.quantity;
        j["numerator"] = r.numerator;
        j["denominator"] = r.denominator;
        j["factored"] = r.factored;
        j["pi_exponent"] = r.pi_exponent;
        j["numeric"] = r.numeric;
        rows.push_back(std::move(j));
    }
    json out;
    out["table"] = doc.table;
    out["rows"] = std::move(rows);
    out["petersson"] = json{{"delta_delta", doc.delta_norm}, {"g20_g20", doc.g20_norm}};
    out["precision_digits"] = doc.precision_digits;
    out["coefficients_used"] = doc.coefficients_used;
    return out;
}

TableDocument table_from_json(const json& j) {
    TableDocument doc;
    doc.table = j.at("table").get<int>();
    for (const auto& r : j.at("rows")) {
        OutputRecord rec;
        rec.s = r.at("s").get<int>();
        rec.quantity = r.value("quantity", std::string());
        rec.numerator = r.at("numerator").get<std::string>();
        rec.denominator = r.at("denominator").get<std::string>();
        rec.factored = r.at("factored").get<std::string>();
        rec.pi_exponent = r.at("pi_exponent").get<int>();
        rec.numeric = r.at("numeric").get<std::string>();
        doc.rows.push_back(std::move(rec));
    }
    doc.delta_norm = j.at("petersson").at("delta_delta").get<std::string>();
    doc.g20_norm = j.at("petersson").at("g20_g20").get<std::string>();
    doc.precision_digits = j.at("precision_digits").get<int>();
    doc.coefficients_used = j.at("coefficients_used").get<int>();
    return doc;
}

std::string render_table(const TableDocument& doc, Format format) {
    const bool with_quantity = doc.table == 1;
    switch (format) {
    case Format::Json:
        return to_json(doc).dump(2) + '\n';
    case Format::Csv: {
        std::vector<std::string> head{"s"};
        if (with_quantity) head.push_back("quantity");
        head.insert(head.end(), {"numerator", "denominator", "factored", "pi_exponent", "numeric"});
        std::string out = csv_line(head);
        for (const auto& r : doc.rows) {
            std::vector<std::string> cells{std::to_string(r.s)};
            if (with_quantity) cells.push_back(r.quantity);
            cells.insert(cells.end(), {r.numerator, r.denominator, r.factored, std::to_string(r.pi_exponent), r.numeric});
            out += csv_line(cells);
        }
        return out;
    }
    case Format::Text: {
        std::vector<std::vector<std::string>> grid;
        std::vector<std::string> head{"s"};
        if (with_quantity) head.push_back("");
        head.insert(head.end(), {"r", "factored", "P", "numeric"});
        grid.push_back(head);
        for (const auto& r : doc.rows) {
            std::vector<std::string> cells{std::to_string(r.s)};
            if (with_quantity) cells.push_back(r.quantity);
            const std::string frac = r.denominator == "1" ? r.numerator : r.numerator + "/" + r.denominator;
            cells.insert(cells.end(), {frac, r.factored, std::to_string(r.pi_exponent), r.numeric});
            grid.push_back(cells);
        }
        std::string out = "Table " + std::to_string(doc.table) + ": " + std::string(table_title(doc.table)) + '\n';
        if (doc.table > 1) {
            out += "<Delta, Delta> = " + doc.delta_norm + ", <g20, g20> = " + doc.g20_norm + '\n';
        }
        return out + text_grid(grid);
    }
    }
    return "";
}

CoefficientListing build_coeffs(std::string_view form, int n_max) {
    if (n_max < 1) {
        throw std::invalid_argument("n_max must be at least 1");
    }
    CoefficientListing out{std::string(form), {}};
    if (form == "delta" || form == "g20") {
        const qexp::QSeries f = form == "delta" ? qexp::delta_qexp(n_max) : qexp::g20_qexp(n_max);
        for (int n = 1; n <= n_max; ++n) out.values.push_back(f.integer_at(n).get_str());
    } else if (form == "rankin") {
        const qexp::RankinCoeffs coeffs = qexp::rankin_coeffs(n_max);
        for (const auto& a : coeffs.values()) out.values.push_back(a.get_str());
    } else {
        throw std::invalid_argument("unknown form '" + std::string(form) + "' (expected delta, g20 or rankin)");
    }
    return out;
}

std::string render_coeffs(const CoefficientListing& listing, Format format) {
    switch (format) {
    case Format::Json: {
        json values = json::array();
        for (std::size_t i = 0; i < listing.values.size(); ++i) {
            values.push_back(json{{"n", i + 1}, {"value", listing.values[i]}});
        }
        return json{{"form", listing.form}, {"coefficients", values}}.dump(2) + '\n';
    }
    case Format::Csv: {
        std::string out = csv_line({"n", listing.form});
        for (std::size_t i = 0; i < listing.values.size(); ++i) {
            out += csv_line({std::to_string(i + 1), listing.values[i]});
        }
        return out;
    }
    case Format::Text: {
        std::vector<std::vector<std::string>> grid{{"n", listing.form}};
        for (std::size_t i = 0; i < listing.values.size(); ++i) {
            grid.push_back({std::to_string(i + 1), listing.values[i]});
        }
        return text_grid(grid);
    }
    }
    return "";
}

std::string render_verification(const numeric::VerificationReport& report, const numeric::BigFloat& tolerance,
                                Format format) {
    const int d = std::min(report.digits, 20);
    const std::string norms = report.norms == numeric::NormSource::Reference ? "reference" : "computed";
    const bool passed = report.passes(tolerance);
    switch (format) {
    case Format::Json: {
        json rows = json::array();
        for (const auto& r : report.rows) {
            json j;
            j["s"] = r.s;
            j["branch"] = std::string(numeric::to_string(r.branch));
            j["exact"] = sci(r.exact, report.digits);
            j["direct"] = sci(r.direct, report.digits);
            j["abs_diff"] = sci(r.abs_diff, 6);
            j["rel_diff"] = sci(r.rel_diff, 6);
            j["ok"] = r.ok(tolerance);
            if (!r.error.empty()) j["error"] = r.error;
            rows.push_back(std::move(j));
        }
        json out;
        out["precision_digits"] = report.digits;
        out["coefficients_used"] = report.coefficients;
        out["norms"] = norms;
        out["tolerance"] = tolerance.to_scientific(6);
        out["passed"] = passed;
        out["rows"] = std::move(rows);
        return out.dump(2) + '\n';
    }
    case Format::Csv: {
        std::string out = csv_line({"s", "branch", "exact", "direct", "abs_diff", "rel_diff", "ok"});
        for (const auto& r : report.rows) {
            out += csv_line({std::to_string(r.s), std::string(numeric::to_string(r.branch)), sci(r.exact, d),
                             sci(r.direct, d), sci(r.abs_diff, 6), sci(r.rel_diff, 6), r.ok(tolerance) ? "1" : "0"});
        }
        return out;
    }
    case Format::Text: {
        std::vector<std::vector<std::string>> grid{{"s", "branch", "exact", "direct", "rel_diff", ""}};
        for (const auto& r : report.rows) {
            grid.push_back({std::to_string(r.s), std::string(numeric::to_string(r.branch)), sci(r.exact, d),
                            sci(r.direct, d), sci(r.rel_diff, 3), r.ok(tolerance) ? "ok" : "FAIL"});
        }
        std::string out = "precision " + std::to_string(report.digits) + " digits, " +
                          std::to_string(report.coefficients) + " coefficients, " + norms +
                          " norms, tolerance " + tolerance.to_scientific(3) + '\n';
        out += text_grid(grid);
        const auto bad = report.failures(tolerance);
        for (const auto& r : bad) {
            out += "FAIL s=" + std::to_string(r.s) + " branch " + std::string(numeric::to_string(r.branch)) +
                   (r.error.empty() ? ": relative difference " + sci(r.rel_diff, 3) : ": " + r.error) + '\n';
        }
        out += passed ? "all " + std::to_string(report.rows.size()) + " rows within tolerance\n"
                      : std::to_string(bad.size()) + " of " + std::to_string(report.rows.size()) +
                            " rows outside tolerance\n";
        return out;
    }
    }
    return "";
}

std::string render_norm(const NormReport& norm, Format format) {
    switch (format) {
    case Format::Json:
        return json{{"k", norm.k}, {"r", norm.r}, {"l", norm.l}, {"precision_digits", norm.precision_digits},
                    {"value", norm.value}}
                   .dump(2) +
               '\n';
    case Format::Csv:
        return csv_line({"k", "r", "l", "value"}) +
               csv_line({std::to_string(norm.k), std::to_string(norm.r), std::to_string(norm.l), norm.value});
    case Format::Text:
        return "<f" + std::to_string(norm.k) + ", f" + std::to_string(norm.k) + "> = " + norm.value + "  (r = " +
               std::to_string(norm.r) + ", l = " + std::to_string(norm.l) + ")\n";
    }
    return "";
}

} // namespace spinl::cli
