#pragma once

#include <vector>

#include "nilorb/blockdata.hpp"
#include "nilorb/decomposition.hpp"
#include "nilorb/eolp.hpp"
#include "nilorb/matrix.hpp"

namespace nilorb {

// Representation of the linear quiver on p vertices with a loop at the last
// vertex, bound by loop^x = 0: spaces K^{dims[k]}, chain maps vertex k ->
// k+1, and the loop at vertex p.
struct QuiverRep {
    int p = 0;
    int x = 2;
    std::vector<int> dims;   // dims[k], 0-based vertex index
    std::vector<Mat> chain;  // chain[k] : K^{dims[k]} -> K^{dims[k+1]}, size p-1
    Mat loop;                // at vertex p

    void check() const;  // shape consistency and loop^x = 0
    bool chain_injective() const;
};

QuiverRep direct_sum(const QuiverRep& a, const QuiverRep& b);

// The explicit indecomposable for a label (x = 2): V(i) is a chain of
// identities K -> ... -> K with zero loop starting at vertex i; U(i,j) starts
// K at min(i,j), jumps to K^2 at max(i,j) via e1 (j <= i) or e2 (j > i), with
// loop e1 -> e2 -> 0.
QuiverRep build_indecomposable(const IndecLabel& label, int p);

// The representation attached to an x-nilpotent matrix: standard flag
// embeddings K^{d_1} -> ... -> K^n with loop N.
QuiverRep rep_from_matrix(const Mat& n, const BlockData& blocks, int x);

// dim Hom(M, M'): dimension of the space of tuples (f_1..f_p) intertwining
// all chain maps and the loop. Independent of the combinatorial formulas.
int hom_dim_oracle(const QuiverRep& m, const QuiverRep& mp);

// dim Hom by the delta formulas, extended bilinearly to direct sums.
int hom_dim_formula(const IndecLabel& a, const IndecLabel& b);
int hom_dim_formula(const Decomposition& x, const Decomposition& y);

struct InvariantVector {
    std::vector<int> a;                  // a_k = [V(k), X]
    std::vector<std::vector<int>> b;     // b[k-1][l-1] = [U(k,l), X]
    std::vector<int> abar;               // [X, V(i)]
    std::vector<std::vector<int>> bbar;  // [X, U(i,j)]
};

InvariantVector invariant_vector(const Decomposition& x, int p);

// dim P - [X, X]; X must have the dimension vector dictated by the blocks.
int orbit_dimension(const Decomposition& x, const BlockData& blocks);

}  // namespace nilorb
