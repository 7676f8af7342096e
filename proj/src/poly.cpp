#include "weylcone/poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace weylcone {

void Poly::check_same_ring(const Poly& other) const {
    if (num_vars_ != other.num_vars_)
        throw std::invalid_argument("polynomial variable count mismatch: " +
                                    std::to_string(num_vars_) + " vs " +
                                    std::to_string(other.num_vars_));
}

Poly Poly::constant(int num_vars, const Rational& c) {
    Poly p(num_vars);
    p.add_term(Monomial(num_vars, 0), c);
    return p;
}

Poly Poly::monomial(int num_vars, Monomial exponents, const Rational& c) {
    if (static_cast<int>(exponents.size()) != num_vars)
        throw std::invalid_argument("monomial exponent count mismatch");
    Poly p(num_vars);
    p.add_term(std::move(exponents), c);
    return p;
}

Poly Poly::one_minus_var(int num_vars, int j) {
    Poly p = Poly::constant(num_vars, 1);
    Monomial e(num_vars, 0);
    e.at(j) = 1;
    p.add_term(e, -1);
    return p;
}

Rational Poly::coeff(const Monomial& exponents) const {
    auto it = terms_.find(exponents);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Monomial& exponents, const Rational& c) {
    if (static_cast<int>(exponents.size()) != num_vars_)
        throw std::invalid_argument("term exponent count mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exponents, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int Poly::degree(int j) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.at(j));
    return d;
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (int x : e) t += x;
        d = std::max(d, t);
    }
    return d;
}

Poly Poly::operator-() const {
    Poly r(num_vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& other) {
    check_same_ring(other);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    check_same_ring(other);
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.check_same_ring(b);
    Poly r(a.num_vars_);
    Monomial e(a.num_vars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int j = 0; j < a.num_vars_; ++j) e[j] = ea[j] + eb[j];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Poly operator*(const Rational& c, const Poly& p) {
    Poly r(p.num_vars_);
    if (c == 0) return r;
    for (const auto& [e, pc] : p.terms_) r.terms_.emplace(e, c * pc);
    return r;
}

Poly Poly::derivative(int j) const {
    Poly r(num_vars_);
    for (const auto& [e, c] : terms_) {
        if (e.at(j) == 0) continue;
        Monomial d = e;
        d[j] -= 1;
        r.add_term(d, c * e[j]);
    }
    return r;
}

Poly Poly::shifted(int j, int power) const {
    Poly r(num_vars_);
    for (const auto& [e, c] : terms_) {
        Monomial s = e;
        s.at(j) += power;
        if (s[j] < 0) throw std::invalid_argument("negative exponent in shift");
        r.terms_.emplace(std::move(s), c);
    }
    return r;
}

Poly Poly::eval_at_one(int j) const {
    Poly r(num_vars_);
    for (const auto& [e, c] : terms_) {
        Monomial s = e;
        s.at(j) = 0;
        r.add_term(s, c);
    }
    return r;
}

std::optional<Poly> exact_div_one_minus_q(const Poly& p, int j) {
    if (!p.eval_at_one(j).is_zero()) return std::nullopt;

    // With p = sum_t p_t q_j^t, the quotient r by (1 - q_j) has
    // r_t = p_0 + ... + p_t; divisibility makes the top partial sum vanish.
    Poly r(p.num_vars());
    std::map<int, Poly> layers; // q_j-degree -> coefficient polynomial (exponent j zeroed)
    for (const auto& [e, c] : p.terms()) {
        Monomial s = e;
        const int t = s.at(j);
        s[j] = 0;
        auto [it, inserted] = layers.try_emplace(t, Poly::zero(p.num_vars()));
        it->second.add_term(s, c);
    }
    const int top = p.degree(j);
    Poly partial = Poly::zero(p.num_vars());
    for (int t = 0; t < top; ++t) {
        if (auto it = layers.find(t); it != layers.end()) partial += it->second;
        r += partial.shifted(j, t);
    }
    return r;
}

int udegree(const Poly& p) {
    if (p.num_vars() != 1) throw std::invalid_argument("univariate operation on multivariate polynomial");
    return p.is_zero() ? -1 : p.terms().rbegin()->first[0];
}

Rational ucoeff(const Poly& p, int d) { return p.coeff(Monomial{d}); }

std::pair<Poly, Poly> udivmod(const Poly& a, const Poly& b) {
    if (a.num_vars() != 1 || b.num_vars() != 1)
        throw std::invalid_argument("univariate division on multivariate polynomial");
    if (b.is_zero()) throw std::domain_error("univariate division by zero");

    Poly quotient(1), remainder = a;
    const int db = udegree(b);
    const Rational lead_b = ucoeff(b, db);
    while (!remainder.is_zero() && udegree(remainder) >= db) {
        const int dr = udegree(remainder);
        const Rational factor = ucoeff(remainder, dr) / lead_b;
        const Poly step = Poly::monomial(1, Monomial{dr - db}, factor);
        quotient += step;
        remainder -= step * b;
    }
    return {quotient, remainder};
}

Poly ugcd(Poly a, Poly b) {
    auto monic = [](Poly p) {
        if (p.is_zero()) return p;
        return (Rational(1) / ucoeff(p, udegree(p))) * p;
    };
    while (!b.is_zero()) {
        Poly r = udivmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(std::move(a));
}

Poly upow_one_minus_q(int w, int e) {
    if (w <= 0 || e < 0) throw std::invalid_argument("upow_one_minus_q needs w > 0, e >= 0");
    Poly base = Poly::constant(1, 1);
    base.add_term(Monomial{w}, -1);
    Poly result = Poly::constant(1, 1);
    for (int i = 0; i < e; ++i) result = result * base;
    return result;
}

} // namespace weylcone
