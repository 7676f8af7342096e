#include "weylcone/oracle.hpp"

#include <stdexcept>

namespace weylcone {

CoeffTable dimension_table(const ConeSpec& cone, const std::vector<int>& bounds) {
    if (bounds.size() != cone.generators.size())
        throw std::invalid_argument("bounds length does not match generator count");
    CoeffTable table(bounds);
    std::vector<int> index(bounds.size(), 0);
    do {
        table.at(index) = weyl_dim(cone.rs, weight_combination(cone.generators, index));
    } while (table.next_index(index));
    return table;
}

VerificationReport verify_equivalence(const EulerRational& f, const ConeSpec& cone,
                                      const std::vector<int>& bounds) {
    const CoeffTable expected = dimension_table(cone, bounds);
    const CoeffTable got = expand(f, bounds);

    VerificationReport report;
    std::vector<int> index(bounds.size(), 0);
    do {
        ++report.checked;
        const Int& want = expected.at(index);
        const Int& have = got.at(index);
        if (want != have) report.mismatches.push_back({index, want, have});
    } while (expected.next_index(index));
    return report;
}

} // namespace weylcone
