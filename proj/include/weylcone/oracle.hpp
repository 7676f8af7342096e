#ifndef WEYLCONE_ORACLE_HPP
#define WEYLCONE_ORACLE_HPP

#include "weylcone/genfun.hpp"

#include <cstddef>
#include <vector>

namespace weylcone {

struct Mismatch {
    std::vector<int> index;
    Int expected; // brute-force dimension
    Int got;      // closed-form expansion

    bool operator==(const Mismatch&) const = default;
};

struct VerificationReport {
    std::size_t checked = 0;
    std::vector<Mismatch> mismatches;

    bool passed() const { return mismatches.empty(); }
};

// Ground truth: entry at a is weyl_dim(rs, sum_j a_j * generators[j]),
// evaluated directly. Deliberately bypasses the rational-function engine so
// the two sides of verify_equivalence share nothing but the root system.
CoeffTable dimension_table(const ConeSpec& cone, const std::vector<int>& bounds);

// Expands f on the box and compares entrywise against dimension_table.
// Mismatches are reported, not thrown.
VerificationReport verify_equivalence(const EulerRational& f, const ConeSpec& cone,
                                      const std::vector<int>& bounds);

} // namespace weylcone

#endif
