#pragma once

#include <vector>

#include "nilorb/blockdata.hpp"
#include "nilorb/decomposition.hpp"

namespace nilorb {

// Enhanced oriented link pattern: the combinatorial label of a P-orbit of a
// 2-nilpotent matrix. arrows[i][j] (0-based storage) is the multiplicity
// p_{i,j} of arrows j -> i; dots[i] is the number of dots at vertex i+1.
// At every vertex, sources + targets + dots = b_i, a loop counting twice.
struct Eolp {
    int p = 0;
    std::vector<std::vector<int>> arrows;
    std::vector<int> dots;

    static Eolp empty(int p) {
        return {p, std::vector<std::vector<int>>(p, std::vector<int>(p, 0)), std::vector<int>(p, 0)};
    }

    int arrow(int i, int j) const { return arrows[i - 1][j - 1]; }  // 1-based accessors
    int& arrow(int i, int j) { return arrows[i - 1][j - 1]; }
    int dot(int i) const { return dots[i - 1]; }
    int& dot(int i) { return dots[i - 1]; }

    // Arrow endpoints incident to vertex v; a loop contributes twice.
    int load(int v) const;

    std::vector<int> flat() const;  // row-major arrow table, then dots
    bool operator==(const Eolp& o) const { return p == o.p && arrows == o.arrows && dots == o.dots; }
    bool operator<(const Eolp& o) const { return flat() < o.flat(); }

    std::string to_string() const;
};

// True iff the arrow/dot sums meet b_i exactly at every vertex.
// Throws on p mismatch.
bool validate(const Eolp& e, const BlockData& blocks);

// All valid patterns of the given type, in lexicographic order of the
// flattened arrow table. Dots are filled in to meet the capacities.
std::vector<Eolp> enumerate_eolps(const BlockData& blocks);

// U(i,j) multiplicity <-> p_{i,j}; V(i) multiplicity <-> dots. Mutually
// inverse on valid patterns; from_multiplicities checks the dimension vector.
Decomposition to_multiplicities(const Eolp& e);
Eolp from_multiplicities(const Decomposition& d, const BlockData& blocks);

}  // namespace nilorb
