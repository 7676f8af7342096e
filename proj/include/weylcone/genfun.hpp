#ifndef WEYLCONE_GENFUN_HPP
#define WEYLCONE_GENFUN_HPP

#include "weylcone/euler.hpp"
#include "weylcone/root_system.hpp"

#include <optional>
#include <vector>

namespace weylcone {

// One operator factor 1 + sum_j coeffs[j] * q_j d/dq_j.
struct EulerOp {
    std::vector<Rational> coeffs;

    bool operator==(const EulerOp&) const = default;
};

// A root system together with an ordered list of k dominant generators; the
// series variable q_j counts the multiplicity of generators[j].
struct ConeSpec {
    RootSystem rs;
    std::vector<Weight> generators;

    // Validates: at least one generator, each of length rank(), each dominant.
    ConeSpec(RootSystem rs_, std::vector<Weight> generators_);

    int num_generators() const { return static_cast<int>(generators.size()); }
};

// Univariate rational function numerator/denominator (both num_vars == 1).
struct UniRational {
    Poly numerator;
    Poly denominator;

    bool operator==(const UniRational&) const = default;
};

// The factor contributed by one positive root: coeffs[j] is the pairing
// ratio of generators[j] against alpha.
EulerOp operator_for_root(const ConeSpec& cone, const PositiveRoot& alpha);

// Exact application of (1 + sum_j c_j q_j d_j) to f. For each j with
// c_j != 0 the denominator exponent e_j grows by exactly 1, via
//   q_j d_j [P / prod (1-q_i)^{e_i}]
//     = [q_j (d_j P)(1-q_j) + e_j q_j P] / [(1-q_j) prod (1-q_i)^{e_i}].
EulerRational apply_euler_op(const EulerOp& op, const EulerRational& f);

// The closed form of the cone's dimension series: the product of the root
// factors applied to prod_j 1/(1-q_j). Expansion coefficient at a equals
// weyl_dim(sum_j a_j * generators[j]). The final numerator always has
// integer coefficients; violation raises internal_error.
EulerRational hilbert_series(const ConeSpec& cone);

// Substitutes q_j -> q^{grading[j]} (entries must be positive); result is
// the unreduced univariate function with denominator prod (1-q^{w_j})^{e_j}.
UniRational specialize(const EulerRational& f, const std::vector<int>& grading);

// Cancels the exact univariate GCD and scales so the denominator has
// constant term 1. Requires a nonzero denominator, and the reduced
// denominator must have nonzero constant term (always true for functions
// that are power series at q = 0).
UniRational reduce_univariate(const UniRational& f);

// D such that the denominator equals (1-q)^D exactly, if it does.
std::optional<int> denominator_power_of_one_minus_q(const UniRational& f);

// One step of the two-variable recursion for the rank-at-most-2 symmetric
// matrix cones <2w1, 2w2>: maps the series for SL(n-1) to the series for
// SL(n) by applying (1 + 2/(n-2) q2 d2)(1 + 2/(n-1) q1 d1 + 2/(n-1) q2 d2).
// Defined for n >= 4 (the n = 3 base has no second generator one rank down
// and is computed directly from hilbert_series).
EulerRational extend_symmetric_determinantal(int n, const EulerRational& f);

} // namespace weylcone

#endif
