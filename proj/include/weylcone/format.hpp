#ifndef WEYLCONE_FORMAT_HPP
#define WEYLCONE_FORMAT_HPP

#include "weylcone/genfun.hpp"
#include "weylcone/oracle.hpp"

#include <string>
#include <utility>
#include <vector>

namespace weylcone {

enum class OutputFormat { text, latex, json };

// "text" | "latex" | "json"; anything else -> invalid_argument.
OutputFormat format_from_string(const std::string& s);

// Terms sorted for output: ascending total degree, descending lexicographic
// within a degree (so q_1^2 precedes q_1 q_2 precedes q_2^2).
std::vector<std::pair<Monomial, Rational>> graded_lex_terms(const Poly& p);

std::string render_euler_rational(const EulerRational& f, OutputFormat fmt);
// Expects reduced input; prints (1-q)^D denominators in that standard form
// when the denominator is exactly such a power.
std::string render_uni_rational(const UniRational& f, OutputFormat fmt);
std::string render_dimension(const Int& dim, OutputFormat fmt);
std::string render_report(const VerificationReport& report, OutputFormat fmt);

} // namespace weylcone

#endif
