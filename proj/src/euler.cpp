#include "weylcone/euler.hpp"

#include <stdexcept>
#include <string>

namespace weylcone {

CoeffTable::CoeffTable(std::vector<int> bounds) : bounds_(std::move(bounds)) {
    std::size_t total = 1;
    strides_.assign(bounds_.size(), 0);
    for (int j = static_cast<int>(bounds_.size()) - 1; j >= 0; --j) {
        if (bounds_[j] < 0) throw std::invalid_argument("negative expansion bound");
        strides_[j] = total;
        total *= static_cast<std::size_t>(bounds_[j]) + 1;
    }
    values_.assign(total, Int(0));
}

std::size_t CoeffTable::offset(const std::vector<int>& index) const {
    if (index.size() != bounds_.size())
        throw std::invalid_argument("coefficient index length mismatch");
    std::size_t off = 0;
    for (std::size_t j = 0; j < index.size(); ++j) {
        if (index[j] < 0 || index[j] > bounds_[j])
            throw std::out_of_range("coefficient index outside expansion box");
        off += strides_[j] * static_cast<std::size_t>(index[j]);
    }
    return off;
}

Int& CoeffTable::at(const std::vector<int>& index) { return values_[offset(index)]; }
const Int& CoeffTable::at(const std::vector<int>& index) const { return values_[offset(index)]; }

bool CoeffTable::next_index(std::vector<int>& index) const {
    for (int j = static_cast<int>(index.size()) - 1; j >= 0; --j) {
        if (index[j] < bounds_[j]) {
            ++index[j];
            return true;
        }
        index[j] = 0;
    }
    return false;
}

CoeffTable expand(const EulerRational& f, const std::vector<int>& bounds) {
    const int k = f.num_vars();
    if (static_cast<int>(bounds.size()) != k)
        throw std::invalid_argument("expansion bounds length mismatch");
    if (static_cast<int>(f.den_exps.size()) != k)
        throw internal_error("denominator exponent vector length mismatch");

    // Seed the table with the numerator truncated to the box, then divide by
    // each (1 - q_j)^{e_j} via e_j prefix-sum passes along axis j: one pass
    // multiplies the series by 1/(1 - q_j).
    std::vector<Rational> work(CoeffTable(bounds).size(), Rational(0));
    CoeffTable table(bounds);

    auto offset_of = [&](const std::vector<int>& index) {
        std::size_t off = 0;
        std::size_t stride = 1;
        for (int j = k - 1; j >= 0; --j) {
            off += stride * static_cast<std::size_t>(index[j]);
            stride *= static_cast<std::size_t>(bounds[j]) + 1;
        }
        return off;
    };

    for (const auto& [e, c] : f.numerator.terms()) {
        bool inside = true;
        for (int j = 0; j < k; ++j)
            if (e[j] > bounds[j]) { inside = false; break; }
        if (inside) work[offset_of(e)] += c;
    }

    for (int j = 0; j < k; ++j) {
        if (f.den_exps[j] < 0) throw internal_error("negative denominator exponent");
        if (bounds[j] == 0) continue; // a single slice needs no accumulation
        std::vector<int> index(k, 0);
        for (int pass = 0; pass < f.den_exps[j]; ++pass) {
            // Running sums along axis j over every line of the box.
            std::fill(index.begin(), index.end(), 0);
            do {
                if (index[j] == 0) continue;
                std::vector<int> prev = index;
                prev[j] -= 1;
                work[offset_of(index)] += work[offset_of(prev)];
            } while (table.next_index(index));
        }
    }

    std::vector<int> index(k, 0);
    std::size_t pos = 0;
    do {
        table.at(index) = to_integer(work[pos]);
        ++pos;
    } while (table.next_index(index));
    return table;
}

} // namespace weylcone
