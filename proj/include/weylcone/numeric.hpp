#ifndef WEYLCONE_NUMERIC_HPP
#define WEYLCONE_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace weylcone {

// Exact arithmetic everywhere: arbitrary-precision integers and rationals.
// cpp_rational keeps lowest terms and a positive denominator by construction,
// with zero represented as 0/1.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Invariant violations that cannot be triggered by user input (e.g. a final
// numerator with a non-integer coefficient). CLI maps these to exit code 3.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline Int to_integer(const Rational& r) {
    if (!is_integer(r))
        throw internal_error("expected integer value, got " + r.str());
    return numerator(r);
}

// C(n, k) with n >= 0; returns 0 for k < 0 or k > n.
inline Int binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

} // namespace weylcone

#endif
