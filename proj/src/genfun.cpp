#include "weylcone/genfun.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace weylcone {

ConeSpec::ConeSpec(RootSystem rs_, std::vector<Weight> generators_)
    : rs(std::move(rs_)), generators(std::move(generators_)) {
    if (generators.empty())
        throw std::invalid_argument("cone needs at least one generator");
    for (const auto& w : generators) {
        if (static_cast<int>(w.coeffs.size()) != rs.rank())
            throw std::invalid_argument("generator length " + std::to_string(w.coeffs.size()) +
                                        " does not match rank " + std::to_string(rs.rank()));
        if (!w.is_dominant())
            throw std::invalid_argument("cone generators must be dominant");
    }
}

EulerOp operator_for_root(const ConeSpec& cone, const PositiveRoot& alpha) {
    if (!cone.rs.is_positive_root(alpha))
        throw std::domain_error("not a positive root of this root system");
    EulerOp op;
    op.coeffs.reserve(cone.generators.size());
    for (const auto& lambda : cone.generators)
        op.coeffs.push_back(pairing_ratio(cone.rs, lambda, alpha));
    return op;
}

EulerRational apply_euler_op(const EulerOp& op, const EulerRational& f) {
    const int k = f.num_vars();
    if (static_cast<int>(op.coeffs.size()) != k)
        throw std::invalid_argument("operator/function variable count mismatch");
    if (static_cast<int>(f.den_exps.size()) != k)
        throw internal_error("denominator exponent vector length mismatch");

    std::vector<int> active;
    for (int j = 0; j < k; ++j)
        if (op.coeffs[j] != 0) active.push_back(j);
    if (active.empty()) return f;

    const int m = static_cast<int>(active.size());
    // prefix[i] = prod_{t<i} (1 - q_{active[t]}), suffix[i] = prod_{t>=i}.
    std::vector<Poly> prefix(m + 1, Poly::constant(k, 1));
    std::vector<Poly> suffix(m + 1, Poly::constant(k, 1));
    for (int i = 0; i < m; ++i)
        prefix[i + 1] = prefix[i] * Poly::one_minus_var(k, active[i]);
    for (int i = m - 1; i >= 0; --i)
        suffix[i] = Poly::one_minus_var(k, active[i]) * suffix[i + 1];

    const Poly& p = f.numerator;
    Poly result = p * suffix[0];
    for (int i = 0; i < m; ++i) {
        const int j = active[i];
        Poly term = p.derivative(j).shifted(j) * Poly::one_minus_var(k, j);
        term += Rational(f.den_exps[j]) * p.shifted(j);
        result += (op.coeffs[j] * term) * (prefix[i] * suffix[i + 1]);
    }

    EulerRational out{std::move(result), f.den_exps};
    for (int j : active) out.den_exps[j] += 1;
    return out;
}

EulerRational hilbert_series(const ConeSpec& cone) {
    const int k = cone.num_generators();
    EulerRational f{Poly::constant(k, 1), std::vector<int>(k, 1)};
    for (const auto& alpha : cone.rs.positive_roots())
        f = apply_euler_op(operator_for_root(cone, alpha), f);
    for (const auto& [e, c] : f.numerator.terms())
        if (!is_integer(c))
            throw internal_error("series numerator has non-integer coefficient " + c.str());
    return f;
}

UniRational specialize(const EulerRational& f, const std::vector<int>& grading) {
    const int k = f.num_vars();
    if (static_cast<int>(grading.size()) != k)
        throw std::invalid_argument("grading length does not match variable count");
    for (int w : grading)
        if (w <= 0) throw std::domain_error("grading entries must be positive");

    Poly num(1);
    for (const auto& [e, c] : f.numerator.terms()) {
        long long d = 0;
        for (int j = 0; j < k; ++j) d += static_cast<long long>(e[j]) * grading[j];
        num.add_term(Monomial{static_cast<int>(d)}, c);
    }
    Poly den = Poly::constant(1, 1);
    for (int j = 0; j < k; ++j)
        den = den * upow_one_minus_q(grading[j], f.den_exps[j]);
    return {std::move(num), std::move(den)};
}

UniRational reduce_univariate(const UniRational& f) {
    if (f.numerator.num_vars() != 1 || f.denominator.num_vars() != 1)
        throw std::invalid_argument("reduce_univariate needs univariate input");
    if (f.denominator.is_zero())
        throw std::domain_error("zero denominator");

    const Poly g = ugcd(f.numerator, f.denominator);
    Poly num = udivmod(f.numerator, g).first;
    Poly den = udivmod(f.denominator, g).first;
    const Rational c0 = ucoeff(den, 0);
    if (c0 == 0)
        throw std::domain_error("denominator vanishes at q = 0; not a power series");
    num = (Rational(1) / c0) * num;
    den = (Rational(1) / c0) * den;
    return {std::move(num), std::move(den)};
}

std::optional<int> denominator_power_of_one_minus_q(const UniRational& f) {
    const int D = udegree(f.denominator);
    if (D < 0) return std::nullopt;
    if (f.denominator == upow_one_minus_q(1, D)) return D;
    return std::nullopt;
}

EulerRational extend_symmetric_determinantal(int n, const EulerRational& f) {
    if (n < 4)
        throw std::domain_error("recursion step requires n >= 4");
    if (f.num_vars() != 2)
        throw std::invalid_argument("recursion step needs a two-variable series");
    const EulerOp inner{{Rational(2, n - 1), Rational(2, n - 1)}};
    const EulerOp outer{{Rational(0), Rational(2, n - 2)}};
    return apply_euler_op(outer, apply_euler_op(inner, f));
}

} // namespace weylcone
