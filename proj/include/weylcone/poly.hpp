#ifndef WEYLCONE_POLY_HPP
#define WEYLCONE_POLY_HPP

#include "weylcone/numeric.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace weylcone {

// Exponent vector of a monomial; length = number of variables of the ring.
using Monomial = std::vector<int>;

// Sparse multivariate polynomial over Rational. Terms are stored in a map
// keyed by exponent vector with zero coefficients pruned, so equal
// polynomials compare equal structurally. Storage order is plain
// lexicographic; graded-lex ordering is applied only when serializing.
class Poly {
public:
    explicit Poly(int num_vars) : num_vars_(num_vars) {}

    static Poly zero(int num_vars) { return Poly(num_vars); }
    static Poly constant(int num_vars, const Rational& c);
    static Poly monomial(int num_vars, Monomial exponents, const Rational& c);
    // 1 - q_j
    static Poly one_minus_var(int num_vars, int j);

    int num_vars() const { return num_vars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    Rational coeff(const Monomial& exponents) const;
    void add_term(const Monomial& exponents, const Rational& c);

    // Degree in variable j (-1 for the zero polynomial).
    int degree(int j) const;
    int total_degree() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rational& c, const Poly& p);

    bool operator==(const Poly&) const = default;

    // d/dq_j
    Poly derivative(int j) const;
    // * q_j^power
    Poly shifted(int j, int power = 1) const;
    // Partial evaluation q_j = 1 (exponent j collapses to 0).
    Poly eval_at_one(int j) const;

private:
    int num_vars_;
    std::map<Monomial, Rational> terms_;

    void check_same_ring(const Poly& other) const;
};

// Exact quotient p / (1 - q_j), or nullopt when not divisible. p is
// divisible exactly when eval_at_one(j) vanishes.
std::optional<Poly> exact_div_one_minus_q(const Poly& p, int j);

// --- univariate helpers (num_vars == 1) ---

// Degree of a univariate polynomial, -1 for zero.
int udegree(const Poly& p);
Rational ucoeff(const Poly& p, int d);
// Quotient and remainder of univariate division (b nonzero).
std::pair<Poly, Poly> udivmod(const Poly& a, const Poly& b);
// Monic gcd over the rationals (Euclidean algorithm); ugcd(0, 0) = 0.
Poly ugcd(Poly a, Poly b);
// (1 - q^w)^e as a univariate polynomial.
Poly upow_one_minus_q(int w, int e);

} // namespace weylcone

#endif
