#ifndef WEYLCONE_EULER_HPP
#define WEYLCONE_EULER_HPP

#include "weylcone/poly.hpp"

#include <vector>

namespace weylcone {

// Rational function N(q) / prod_j (1 - q_j)^{e_j}. The denominator is fixed
// to this product shape because every series the library produces lives
// there; only the numerator and the exponent vector vary.
struct EulerRational {
    Poly numerator;
    std::vector<int> den_exps;

    int num_vars() const { return numerator.num_vars(); }
    bool operator==(const EulerRational&) const = default;
};

// Dense table of power-series coefficients of an EulerRational on the box
// 0 <= a_j <= bounds[j], stored flat in row-major order (last index fastest).
class CoeffTable {
public:
    explicit CoeffTable(std::vector<int> bounds);

    const std::vector<int>& bounds() const { return bounds_; }
    int num_vars() const { return static_cast<int>(bounds_.size()); }
    std::size_t size() const { return values_.size(); }

    Int& at(const std::vector<int>& index);
    const Int& at(const std::vector<int>& index) const;

    // Advances a multi-index through the box; returns false after the last.
    bool next_index(std::vector<int>& index) const;

    bool operator==(const CoeffTable&) const = default;

private:
    std::vector<int> bounds_;
    std::vector<std::size_t> strides_;
    std::vector<Int> values_;

    std::size_t offset(const std::vector<int>& index) const;
};

// Power-series coefficients of f on the given box. All coefficients of the
// expansion of a series produced by this library are integers; a non-integer
// entry indicates an internal invariant violation.
CoeffTable expand(const EulerRational& f, const std::vector<int>& bounds);

} // namespace weylcone

#endif
