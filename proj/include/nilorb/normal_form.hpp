#pragma once

#include <utility>
#include <vector>

#include "nilorb/blockdata.hpp"
#include "nilorb/matrix.hpp"

namespace nilorb {

// Generic normal form of a nilpotent matrix under the block-parabolic action:
// H = g N g^-1 with g in P, H strictly lower triangular with unit subdiagonal
// and structured zeros determined by the blocks. H is unique on the generic
// locus; g is a witness.
struct GenericNormalForm {
    Mat h;
    Mat g;
    BlockData blocks;
};

// Genericity via the corner minors det((N^{n-d_k})_{(d_k,d_k)}) != 0 for
// k = 1..p-1. Requires N nilpotent.
bool is_generic(const Mat& n, const BlockData& blocks);

// Genericity via linear independence of the first d_k columns of N^{n-d_k}.
// Agrees with the minor test away from a thin locus; the minor test is the
// operative precondition of normal_form.
bool is_generic_by_columns(const Mat& n, const BlockData& blocks);

GenericNormalForm normal_form(const Mat& n, const BlockData& blocks);

// Unipotent normal form: u N u^-1 = H with u unit upper triangular and H
// strictly lower triangular with nonzero subdiagonal. Unlike the Borel form
// the subdiagonal is not rescaled to 1.
struct UNormalForm {
    Mat h;
    Mat u;
};

UNormalForm u_normal_form(const Mat& n);

// Shape predicate and the certified positions of the normal-form pattern.
bool matches_normal_pattern(const Mat& h, const BlockData& blocks);
// (i, j, forced) triples, 1-based; forced = 1 for subdiagonal ones, 0 for
// structural zeros. Free positions are omitted.
std::vector<std::tuple<int, int, int>> normal_pattern_positions(const BlockData& blocks);

bool is_in_hu(const Mat& h);  // strictly lower triangular, nonzero subdiagonal

}  // namespace nilorb
