#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "golden_series.hpp"
#include "weylcone/oracle.hpp"

#include <random>

using namespace weylcone;
using weylcone::testing::golden_a2_triple;

namespace {

ConeSpec cone_of(Family f, int rank, std::vector<std::vector<long long>> gens) {
    std::vector<Weight> weights;
    for (auto& g : gens) weights.push_back(Weight{std::move(g)});
    return ConeSpec(build_root_system({{f, rank}}), std::move(weights));
}

} // namespace

TEST_CASE("dimension tables from the brute-force formula") {
    const CoeffTable t = dimension_table(cone_of(Family::A, 1, {{1}}), {3});
    for (int a = 0; a <= 3; ++a) CHECK(t.at({a}) == a + 1);

    const CoeffTable zeros = dimension_table(cone_of(Family::B, 2, {{0, 0}, {0, 0}}), {2, 2});
    std::vector<int> idx{0, 0};
    do {
        CHECK(zeros.at(idx) == 1);
    } while (zeros.next_index(idx));

    const CoeffTable t33 = dimension_table(cone_of(Family::A, 2, {{3, 0}, {0, 3}}), {2, 2});
    CHECK(t33.at({1, 1}) == 64);
    CHECK(t33.at({0, 0}) == 1);
    CHECK(t33.at({2, 2}) == 343);

    CHECK_THROWS_AS(dimension_table(cone_of(Family::A, 1, {{1}}), {3, 3}),
                    std::invalid_argument);
}

TEST_CASE("dimension table is an outer product across factors") {
    const ConeSpec left = cone_of(Family::A, 2, {{1, 1}});
    const ConeSpec right = cone_of(Family::B, 2, {{0, 2}});
    ConeSpec both(build_root_system({{Family::A, 2}, {Family::B, 2}}),
                  {Weight{{1, 1, 0, 0}}, Weight{{0, 0, 0, 2}}});

    const CoeffTable tl = dimension_table(left, {3});
    const CoeffTable tr = dimension_table(right, {3});
    const CoeffTable tb = dimension_table(both, {3, 3});
    std::vector<int> idx{0, 0};
    do {
        CHECK(tb.at(idx) == tl.at({idx[0]}) * tr.at({idx[1]}));
    } while (tb.next_index(idx));
}

TEST_CASE("verification accepts the true closed form") {
    const ConeSpec cone = cone_of(Family::A, 2, {{3, 0}, {0, 3}});
    const VerificationReport report = verify_equivalence(hilbert_series(cone), cone, {4, 4});
    CHECK(report.checked == 25);
    CHECK(report.passed());
    CHECK(report.mismatches.empty());
}

TEST_CASE("verification pinpoints an injected fault") {
    const ConeSpec cone = cone_of(Family::A, 2, {{3, 0}, {0, 3}});
    EulerRational f = golden_a2_triple();
    f.numerator.add_term({1, 0}, 1); // 7 -> 8
    const VerificationReport report = verify_equivalence(f, cone, {3, 3});
    CHECK_FALSE(report.passed());
    REQUIRE_FALSE(report.mismatches.empty());
    const Mismatch& first = report.mismatches.front();
    CHECK(first.index == std::vector<int>{1, 0});
    CHECK(first.expected == 10); // dim for 3w_1
    CHECK(first.got == 11);
}

TEST_CASE("a bare product of geometric series fails for nonzero generators") {
    const ConeSpec cone = cone_of(Family::A, 1, {{1}});
    const EulerRational flat{Poly::constant(1, 1), {1}};
    const VerificationReport report = verify_equivalence(flat, cone, {3});
    CHECK_FALSE(report.passed());
    CHECK(report.mismatches.front().index == std::vector<int>{1});
    CHECK(report.mismatches.front().expected == 2);
    CHECK(report.mismatches.front().got == 1);
}

TEST_CASE("random cones verify on small boxes") {
    std::mt19937 rng(60601);
    std::uniform_int_distribution<int> kdist(1, 3);
    std::uniform_int_distribution<long long> coeff(0, 2);
    const std::vector<SimpleFactor> types{{Family::A, 1}, {Family::A, 2}, {Family::B, 2}};
    for (const auto& t : types) {
        const RootSystem rs = build_root_system({t});
        for (int trial = 0; trial < 3; ++trial) {
            const int k = kdist(rng);
            std::vector<Weight> gens(k);
            for (auto& g : gens)
                for (int j = 0; j < rs.rank(); ++j) g.coeffs.push_back(coeff(rng));
            const ConeSpec cone(rs, std::move(gens));
            const std::vector<int> bounds(k, 3);
            CHECK(verify_equivalence(hilbert_series(cone), cone, bounds).passed());
        }
    }
}
