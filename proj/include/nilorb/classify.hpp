#pragma once

#include <vector>

#include "nilorb/blockdata.hpp"
#include "nilorb/eolp.hpp"
#include "nilorb/matrix.hpp"

namespace nilorb {

// Flag-compatible rank invariants of a 2-nilpotent matrix: r(k,l) is the rank
// of the submatrix on rows d_k+1..n and columns 1..d_l. These are constant on
// P-orbits because P stabilizes every F_l and every quotient by F_k.
struct RankProfile {
    int p = 0;
    std::vector<std::vector<int>> r;  // (p+1) x (p+1), r[k][l]

    std::vector<int> a(const BlockData& blocks) const;               // a_k = d_k - r(0,k)
    std::vector<std::vector<int>> b(const BlockData& blocks) const;  // b_{k,l} = d_l - r(k,l)
};

RankProfile rank_profile(const Mat& n, const BlockData& blocks);

// The complete orbit invariant for nilpotency bound 2. Arrow counts come from
// inclusion-exclusion on c(k,l) = r(0,l) - r(k,l), the number of arrows with
// source <= l and target <= k; dots fill the capacities.
Eolp classify(const Mat& n, const BlockData& blocks);

// A 0/1 representative with classify(result) = e: one basis column per arrow
// source and one basis row per arrow target, allocated inside their blocks.
Mat representative_matrix(const Eolp& e, const BlockData& blocks);

}  // namespace nilorb
