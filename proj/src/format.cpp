#include "weylcone/format.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace weylcone {

namespace {

using nlohmann::json;

std::string subscript(int j, bool latex) {
    const std::string s = std::to_string(j);
    if (latex && s.size() > 1) return "_{" + s + "}";
    return "_" + s;
}

std::string power(int e, bool latex) {
    const std::string s = std::to_string(e);
    if (latex && s.size() > 1) return "^{" + s + "}";
    return "^" + s;
}

// "q" for one variable, "q_1".."q_k" otherwise.
std::string var_name(int j, int k, bool latex) {
    return k == 1 ? "q" : "q" + subscript(j + 1, latex);
}

std::string monomial_string(const Monomial& e, bool latex) {
    const int k = static_cast<int>(e.size());
    std::string out;
    for (int j = 0; j < k; ++j) {
        if (e[j] == 0) continue;
        out += var_name(j, k, latex);
        if (e[j] > 1) out += power(e[j], latex);
    }
    return out;
}

std::string coeff_string(const Rational& c) {
    return is_integer(c) ? numerator(c).str() : c.str();
}

std::string poly_string(const Poly& p, bool latex) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : graded_lex_terms(p)) {
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? "-" : "+";
        }
        const std::string mono = monomial_string(e, latex);
        if (mono.empty()) {
            out += coeff_string(mag);
        } else {
            if (mag != 1) out += coeff_string(mag);
            out += mono;
        }
    }
    return out;
}

// One factor (1-q_j)^e; empty when e = 0.
std::string den_factor(int j, int k, int e, bool latex) {
    if (e == 0) return "";
    std::string out = "(1-" + var_name(j, k, latex) + ")";
    if (e > 1) out += power(e, latex);
    return out;
}

std::string parenthesized_numerator(const Poly& p, bool latex) {
    const std::string n = poly_string(p, latex);
    return p.terms().size() > 1 ? "(" + n + ")" : n;
}

json terms_json(const Poly& p) {
    json arr = json::array();
    for (const auto& [e, c] : graded_lex_terms(p))
        arr.push_back({{"exp", e}, {"coeff", coeff_string(c)}});
    return arr;
}

} // namespace

OutputFormat format_from_string(const std::string& s) {
    if (s == "text") return OutputFormat::text;
    if (s == "latex") return OutputFormat::latex;
    if (s == "json") return OutputFormat::json;
    throw std::invalid_argument("unknown output format: " + s);
}

std::vector<std::pair<Monomial, Rational>> graded_lex_terms(const Poly& p) {
    std::vector<std::pair<Monomial, Rational>> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        const int da = std::accumulate(a.first.begin(), a.first.end(), 0);
        const int db = std::accumulate(b.first.begin(), b.first.end(), 0);
        if (da != db) return da < db;
        return a.first > b.first;
    });
    return terms;
}

std::string render_euler_rational(const EulerRational& f, OutputFormat fmt) {
    const int k = f.num_vars();
    if (fmt == OutputFormat::json) {
        json doc = {{"vars", k}, {"numerator", terms_json(f.numerator)}, {"den_exps", f.den_exps}};
        return doc.dump();
    }

    const bool latex = fmt == OutputFormat::latex;
    std::string den;
    int factors = 0;
    for (int j = 0; j < k; ++j) {
        const std::string part = den_factor(j, k, f.den_exps[j], latex);
        if (!part.empty()) ++factors;
        den += part;
    }
    if (factors == 0) return poly_string(f.numerator, latex);
    if (latex) return "\\frac{" + poly_string(f.numerator, true) + "}{" + den + "}";
    if (factors > 1) den = "(" + den + ")";
    return parenthesized_numerator(f.numerator, false) + "/" + den;
}

std::string render_uni_rational(const UniRational& f, OutputFormat fmt) {
    const auto standard = denominator_power_of_one_minus_q(f);
    if (fmt == OutputFormat::json) {
        json doc = {{"vars", 1}, {"numerator", terms_json(f.numerator)}};
        if (standard)
            doc["den_exps"] = std::vector<int>{*standard};
        else
            doc["denominator"] = terms_json(f.denominator);
        return doc.dump();
    }

    const bool latex = fmt == OutputFormat::latex;
    std::string den;
    if (standard) {
        den = den_factor(0, 1, *standard, latex);
        if (den.empty()) return poly_string(f.numerator, latex); // denominator 1
    } else {
        den = "(" + poly_string(f.denominator, latex) + ")";
    }
    if (latex) return "\\frac{" + poly_string(f.numerator, true) + "}{" + den + "}";
    return parenthesized_numerator(f.numerator, false) + "/" + den;
}

std::string render_dimension(const Int& dim, OutputFormat fmt) {
    if (fmt == OutputFormat::json) return json{{"dimension", dim.str()}}.dump();
    return dim.str();
}

std::string render_report(const VerificationReport& report, OutputFormat fmt) {
    if (fmt == OutputFormat::json) {
        json arr = json::array();
        for (const auto& m : report.mismatches)
            arr.push_back({{"at", m.index}, {"expected", m.expected.str()}, {"got", m.got.str()}});
        return json{{"checked", report.checked}, {"mismatches", arr}}.dump();
    }

    std::ostringstream out;
    out << report.checked << " checked, " << report.mismatches.size() << " mismatches";
    for (const auto& m : report.mismatches) {
        out << "\nmismatch at (";
        for (std::size_t i = 0; i < m.index.size(); ++i)
            out << (i ? "," : "") << m.index[i];
        out << "): expected " << m.expected << ", got " << m.got;
    }
    return out.str();
}

} // namespace weylcone
