#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilorb/blockdata.hpp"
#include "nilorb/eolp.hpp"

namespace nilorb {

// Degeneration order on patterns: X <= Y means Y's orbit lies in the closure
// of X's. Computed from the hom-order invariants a_k and b_{k,l}; this
// coincides with the closure order for the Borel case and is used as the
// hom-order for general blocks.
bool leq_deg(const Eolp& x, const Eolp& y, const BlockData& blocks);

struct OrbitPoset {
    std::vector<Eolp> elements;              // canonical (lexicographic) order
    std::vector<std::vector<bool>> leq;      // leq[i][j]: elements[i] <= elements[j]
    std::vector<std::pair<int, int>> covers; // (i,j): i covered by j (transitive reduction)
    std::vector<int> dims;                   // orbit dimensions

    int index_of(const Eolp& e) const;
};

OrbitPoset hasse(const BlockData& blocks);

struct MinimalityReport {
    bool minimal;       // ground truth: (D+W, D'+W) is a covering pair
    bool delta_literal; // [X,D]=[X,D'] and [D,X]=[D',X] for every summand X of W
    // The interior-vertex reading for the swap pair U(t,s) < U(s,t); absent otherwise.
    std::optional<bool> delta_swap;
    std::string diagnostic;  // non-empty when the readings disagree with the poset

    explicit operator bool() const { return minimal; }
};

// D < D' must be a minimal disjoint degeneration; W pads both sides to the
// dimension vector of `blocks`. The covering relation of hasse() is the
// ground truth; the delta criteria are evaluated alongside as diagnostics.
MinimalityReport minimality_check(const Decomposition& d, const Decomposition& dp,
                                  const Decomposition& w, const BlockData& blocks);

// DOT digraph; edges run from the denser orbit to the more degenerate one.
std::string to_dot(const OrbitPoset& poset, const BlockData& blocks);

}  // namespace nilorb
