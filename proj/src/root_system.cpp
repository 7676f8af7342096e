#include "weylcone/root_system.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace weylcone {

Family family_from_char(char c) {
    switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
    default:
        throw std::invalid_argument(std::string("unknown family '") + c + "' (expected one of A..G)");
    }
}

bool is_valid_factor(const SimpleFactor& f) {
    switch (f.family) {
    case Family::A: return f.rank >= 1;
    case Family::B: return f.rank >= 2;
    case Family::C: return f.rank >= 3;
    case Family::D: return f.rank >= 4;
    case Family::E: return f.rank == 6 || f.rank == 7 || f.rank == 8;
    case Family::F: return f.rank == 4;
    case Family::G: return f.rank == 2;
    }
    return false;
}

bool Weight::is_dominant() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](long long m) { return m >= 0; });
}

namespace {

// Cartan matrix of one simple factor, entries <alpha_j, alpha_i^vee> at [i][j]
// (Bourbaki node ordering), together with the symmetrizer d (short roots d=1).
// The full matrices are listed in the README.
void factor_cartan(const SimpleFactor& f, std::vector<std::vector<int>>& cartan, std::vector<int>& d) {
    const int n = f.rank;
    cartan.assign(n, std::vector<int>(n, 0));
    d.assign(n, 1);
    for (int i = 0; i < n; ++i) cartan[i][i] = 2;

    auto bond = [&](int i, int j) { cartan[i][j] = cartan[j][i] = -1; }; // 0-based

    switch (f.family) {
    case Family::A:
        for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
        break;
    case Family::B: // alpha_n short
        for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
        cartan[n - 1][n - 2] = -2;
        for (int i = 0; i + 1 < n; ++i) d[i] = 2;
        break;
    case Family::C: // alpha_n long
        for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
        cartan[n - 2][n - 1] = -2;
        d[n - 1] = 2;
        break;
    case Family::D: // fork: alpha_{n-1} and alpha_n both attached to alpha_{n-2}
        for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
        bond(n - 3, n - 1);
        break;
    case Family::E: // node 2 attached to node 4; chain 1-3-4-5-...-n
        bond(0, 2);
        bond(1, 3);
        for (int i = 2; i + 1 < n; ++i) bond(i, i + 1);
        break;
    case Family::F: // alpha_1, alpha_2 long; alpha_3, alpha_4 short
        bond(0, 1);
        bond(1, 2);
        bond(2, 3);
        cartan[2][1] = -2;
        d[0] = d[1] = 2;
        break;
    case Family::G: // alpha_1 short, alpha_2 long
        cartan[0][1] = -3;
        cartan[1][0] = -1;
        d[1] = 3;
        break;
    }
}

} // namespace

RootSystem::RootSystem(const std::vector<SimpleFactor>& factors) : factors_(factors) {
    if (factors.empty())
        throw std::invalid_argument("root system needs at least one simple factor");
    for (const auto& f : factors) {
        if (!is_valid_factor(f))
            throw std::invalid_argument("invalid family/rank pair " +
                                        std::string(1, static_cast<char>(f.family)) +
                                        std::to_string(f.rank));
        rank_ += f.rank;
    }

    cartan_.assign(rank_, std::vector<int>(rank_, 0));
    symmetrizer_.assign(rank_, 1);
    int offset = 0;
    for (const auto& f : factors) {
        std::vector<std::vector<int>> block;
        std::vector<int> d;
        factor_cartan(f, block, d);
        for (int i = 0; i < f.rank; ++i) {
            symmetrizer_[offset + i] = d[i];
            for (int j = 0; j < f.rank; ++j) cartan_[offset + i][offset + j] = block[i][j];
        }
        offset += f.rank;
    }

    // Height-induction closure: beta + alpha_i is a root iff
    // p - <beta, alpha_i^vee> > 0, with p the length of the descending
    // alpha_i-string through beta. Cross-factor candidates never fire
    // (p = 0 and the pairing is 0), so the block matrix needs no special
    // casing.
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> current; // roots of the current height
    for (int i = 0; i < rank_; ++i) {
        std::vector<int> simple(rank_, 0);
        simple[i] = 1;
        seen.insert(simple);
        current.push_back(std::move(simple));
    }

    int height = 1;
    while (!current.empty()) {
        std::sort(current.begin(), current.end());
        for (auto& coeffs : current)
            positive_roots_.push_back(PositiveRoot{coeffs, height});

        std::set<std::vector<int>> next;
        for (const auto& beta : current) {
            for (int i = 0; i < rank_; ++i) {
                long long pairing = 0;
                for (int j = 0; j < rank_; ++j) pairing += static_cast<long long>(cartan_[i][j]) * beta[j];

                int p = 0;
                std::vector<int> below = beta;
                while (true) {
                    below[i] -= 1;
                    if (below[i] < 0 || !seen.count(below)) break;
                    ++p;
                }

                if (p - pairing > 0) {
                    std::vector<int> above = beta;
                    above[i] += 1;
                    if (!seen.count(above)) {
                        seen.insert(above);
                        next.insert(std::move(above));
                    }
                }
            }
        }
        current.assign(next.begin(), next.end());
        ++height;
    }
}

bool RootSystem::is_positive_root(const PositiveRoot& alpha) const {
    return std::any_of(positive_roots_.begin(), positive_roots_.end(),
                       [&](const PositiveRoot& beta) { return beta.coeffs == alpha.coeffs; });
}

std::string RootSystem::name() const {
    std::string s;
    for (const auto& f : factors_) {
        if (!s.empty()) s += 'x';
        s += static_cast<char>(f.family);
        s += std::to_string(f.rank);
    }
    return s;
}

RootSystem build_root_system(const std::vector<SimpleFactor>& factors) {
    return RootSystem(factors);
}

Rational pairing_ratio(const RootSystem& rs, const Weight& lambda, const PositiveRoot& alpha) {
    const auto k = static_cast<std::size_t>(rs.rank());
    if (lambda.coeffs.size() != k)
        throw std::invalid_argument("weight length " + std::to_string(lambda.coeffs.size()) +
                                    " does not match rank " + std::to_string(rs.rank()));
    if (alpha.coeffs.size() != k)
        throw std::invalid_argument("root length does not match rank");

    Int num = 0, den = 0;
    const auto& d = rs.symmetrizer();
    for (std::size_t j = 0; j < k; ++j) {
        const Int cd = Int(alpha.coeffs[j]) * d[j];
        num += cd * lambda.coeffs[j];
        den += cd;
    }
    return Rational(num) / den;
}

Int weyl_dim(const RootSystem& rs, const Weight& lambda) {
    if (lambda.coeffs.size() != static_cast<std::size_t>(rs.rank()))
        throw std::invalid_argument("weight length does not match rank");
    if (!lambda.is_dominant())
        throw std::invalid_argument("weyl_dim requires a dominant weight");

    Rational product = 1;
    for (const auto& alpha : rs.positive_roots())
        product *= pairing_ratio(rs, lambda, alpha) + 1;
    return to_integer(product);
}

Weight weight_combination(const std::vector<Weight>& weights, const std::vector<int>& multipliers) {
    if (weights.size() != multipliers.size())
        throw std::invalid_argument("weight/multiplier count mismatch");
    if (weights.empty())
        throw std::invalid_argument("empty weight combination");
    Weight result;
    result.coeffs.assign(weights.front().coeffs.size(), 0);
    for (std::size_t t = 0; t < weights.size(); ++t) {
        if (weights[t].coeffs.size() != result.coeffs.size())
            throw std::invalid_argument("weights of unequal length");
        for (std::size_t j = 0; j < result.coeffs.size(); ++j)
            result.coeffs[j] += static_cast<long long>(multipliers[t]) * weights[t].coeffs[j];
    }
    return result;
}

} // namespace weylcone
