#ifndef WEYLCONE_ROOT_SYSTEM_HPP
#define WEYLCONE_ROOT_SYSTEM_HPP

#include "weylcone/numeric.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace weylcone {

// Semisimple root systems from Cartan data, in simple-root/fundamental-weight
// coordinates only. All pairings go through the symmetrizer, so no ambient
// (epsilon-) coordinates are ever chosen.

enum class Family : char {
    A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G',
};

Family family_from_char(char c);

struct SimpleFactor {
    Family family;
    int rank;
};

// Valid ranks: A n>=1, B n>=2, C n>=3, D n>=4, E n in {6,7,8}, F n=4, G n=2.
bool is_valid_factor(const SimpleFactor& f);

// Positive root in simple-root coordinates.
struct PositiveRoot {
    std::vector<int> coeffs;
    int height = 0;

    bool operator==(const PositiveRoot&) const = default;
};

// Integral weight in fundamental-weight coordinates (length = total rank).
struct Weight {
    std::vector<long long> coeffs;

    bool is_dominant() const;
    bool operator==(const Weight&) const = default;
};

class RootSystem {
public:
    // Builds the root system for an ordered product of simple factors.
    // Throws std::invalid_argument for an empty list or invalid family/rank.
    explicit RootSystem(const std::vector<SimpleFactor>& factors);

    const std::vector<SimpleFactor>& factors() const { return factors_; }
    int rank() const { return rank_; }

    // cartan()[i][j] = <alpha_j, alpha_i^vee> = 2(alpha_i,alpha_j)/(alpha_i,alpha_i),
    // block-diagonal over factors, Bourbaki node ordering within each factor.
    const std::vector<std::vector<int>>& cartan() const { return cartan_; }

    // Positive integers d with d_i*cartan[i][j] symmetric; within each factor
    // the short simple roots have d = 1. (alpha_i, alpha_j) is proportional
    // to d_i*cartan[i][j], and (omega_i, alpha_j) to delta_ij*d_j.
    const std::vector<int>& symmetrizer() const { return symmetrizer_; }

    // Sorted by height, then lexicographically by coefficient vector.
    const std::vector<PositiveRoot>& positive_roots() const { return positive_roots_; }
    std::size_t num_positive_roots() const { return positive_roots_.size(); }

    bool is_positive_root(const PositiveRoot& alpha) const;

    std::string name() const; // e.g. "A3xG2"

private:
    std::vector<SimpleFactor> factors_;
    int rank_ = 0;
    std::vector<std::vector<int>> cartan_;
    std::vector<int> symmetrizer_;
    std::vector<PositiveRoot> positive_roots_;
};

RootSystem build_root_system(const std::vector<SimpleFactor>& factors);

// (lambda, alpha) / (rho, alpha) = (sum_j c_j d_j m_j) / (sum_j c_j d_j),
// exact and linear in lambda. This is the per-root coefficient of the Euler
// operator factors and of the dimension product below.
Rational pairing_ratio(const RootSystem& rs, const Weight& lambda, const PositiveRoot& alpha);

// Weyl dimension formula: prod_{alpha>0} (pairing_ratio(lambda, alpha) + 1).
// Requires lambda dominant; the product always clears denominators, and a
// non-integer result is reported as internal_error.
Int weyl_dim(const RootSystem& rs, const Weight& lambda);

// m1*w1 + ... + mk*wk as an integral weight (all weights of equal length).
Weight weight_combination(const std::vector<Weight>& weights, const std::vector<int>& multipliers);

} // namespace weylcone

#endif
