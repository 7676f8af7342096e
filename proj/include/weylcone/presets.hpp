#ifndef WEYLCONE_PRESETS_HPP
#define WEYLCONE_PRESETS_HPP

#include "weylcone/genfun.hpp"

#include <string>
#include <vector>

namespace weylcone {

// A named cone together with the grading used for its one-variable series.
struct ProblemSpec {
    std::string name;
    ConeSpec cone;
    std::vector<int> grading;
    std::string notes;
};

// Cone of the rank <= k locus inside symmetric n x n matrices:
// A_{n-1} with generators 2w_1, ..., 2w_k and grading (1, ..., k).
// Requires n >= 2 and 1 <= k <= n-1.
ProblemSpec symmetric_determinantal(int n, int k);

// Cone of the rank <= 2k locus inside antisymmetric 2n x 2n matrices:
// A_{2n-1} with generators w_2, w_4, ..., w_{2k} and grading (1, ..., k).
// Requires n >= 1 and 1 <= k with 2k <= 2n-1.
ProblemSpec antisymmetric_determinantal(int n, int k);

// All fundamental weights of rs as generators, grading all ones; the
// specialized series then counts total dimension by highest-weight height.
ProblemSpec fundamental_cone(const RootSystem& rs);

} // namespace weylcone

#endif
