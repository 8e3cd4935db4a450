#pragma once

#include <map>
#include <string>
#include <vector>

#include "nilorb/errors.hpp"

namespace nilorb {

// Label of an indecomposable for nilpotency bound 2: U(i,j) with i,j in 1..p
// (arrow j -> i in the link pattern) or V(i) (dot at vertex i).
struct IndecLabel {
    enum class Kind { U, V };
    Kind kind;
    int i = 0;
    int j = 0;  // unused for V

    static IndecLabel U(int i, int j) { return {Kind::U, i, j}; }
    static IndecLabel V(int i) { return {Kind::V, i, 0}; }

    // Dimension at vertex k (1-based): V(i) contributes for k >= i, U(i,j)
    // contributes 1 from min(i,j) and a second 1 from max(i,j).
    int dim_at(int k) const {
        if (kind == Kind::V) return k >= i ? 1 : 0;
        return (k >= std::min(i, j) ? 1 : 0) + (k >= std::max(i, j) ? 1 : 0);
    }

    auto key() const { return std::tuple(kind == Kind::V, i, j); }
    bool operator==(const IndecLabel& o) const { return key() == o.key(); }
    bool operator<(const IndecLabel& o) const { return key() < o.key(); }

    std::string to_string() const;
};

// Multiset of indecomposable labels with positive multiplicities.
struct Decomposition {
    std::map<IndecLabel, int> mult;

    void add(const IndecLabel& l, int m = 1) {
        if (m == 0) return;
        if (m < 0) throw DomainError("negative multiplicity");
        mult[l] += m;
    }
    bool empty() const { return mult.empty(); }

    // Dimension vector of the direct sum over vertices 1..p.
    std::vector<int> dim_vector(int p) const;

    Decomposition plus(const Decomposition& o) const;
    bool shares_summand(const Decomposition& o) const;
    bool operator==(const Decomposition& o) const { return mult == o.mult; }

    std::string to_string() const;
};

}  // namespace nilorb
