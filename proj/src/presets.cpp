#include "weylcone/presets.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace weylcone {

namespace {

std::vector<int> one_to_k(int k) {
    std::vector<int> g(k);
    std::iota(g.begin(), g.end(), 1);
    return g;
}

Weight fundamental(int rank, int i, long long multiple = 1) {
    Weight w{std::vector<long long>(rank, 0)};
    w.coeffs[i - 1] = multiple;
    return w;
}

} // namespace

ProblemSpec symmetric_determinantal(int n, int k) {
    if (n < 2 || k < 1 || k > n - 1)
        throw std::domain_error("symmetric determinantal preset requires n >= 2 and 1 <= k <= n-1");
    std::vector<Weight> gens;
    for (int i = 1; i <= k; ++i) gens.push_back(fundamental(n - 1, i, 2));
    ConeSpec cone(build_root_system({{Family::A, n - 1}}), std::move(gens));
    return {"sym-det(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")",
            std::move(cone), one_to_k(k),
            "rank <= " + std::to_string(k) + " locus in symmetric " + std::to_string(n) + "x" +
                std::to_string(n) + " matrices; generators 2w_1..2w_k of A_" + std::to_string(n - 1) +
                ", graded by matrix degree"};
}

ProblemSpec antisymmetric_determinantal(int n, int k) {
    if (n < 1 || k < 1 || 2 * k > 2 * n - 1)
        throw std::domain_error("antisymmetric determinantal preset requires n >= 1 and 2k <= 2n-1");
    std::vector<Weight> gens;
    for (int i = 1; i <= k; ++i) gens.push_back(fundamental(2 * n - 1, 2 * i));
    ConeSpec cone(build_root_system({{Family::A, 2 * n - 1}}), std::move(gens));
    return {"antisym-det(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")",
            std::move(cone), one_to_k(k),
            "rank <= " + std::to_string(2 * k) + " locus in antisymmetric " + std::to_string(2 * n) +
                "x" + std::to_string(2 * n) + " matrices; generators w_2, w_4, .., w_2k of A_" +
                std::to_string(2 * n - 1) + ", graded by matrix degree"};
}

ProblemSpec fundamental_cone(const RootSystem& rs) {
    const int r = rs.rank();
    std::vector<Weight> gens;
    for (int i = 1; i <= r; ++i) gens.push_back(fundamental(r, i));
    ConeSpec cone(rs, std::move(gens));
    return {"fundamental(" + rs.name() + ")", std::move(cone), std::vector<int>(r, 1),
            "all fundamental weights of " + rs.name() + ", unit grading"};
}

} // namespace weylcone
