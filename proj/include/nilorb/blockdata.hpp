#pragma once

#include <string>
#include <vector>

#include "nilorb/errors.hpp"

namespace nilorb {

// Block sizes (b_1,...,b_p) of an upper-block parabolic subgroup of GL_n.
// d(k) = b_1 + ... + b_k are the partial flag dimensions; the Borel case is
// all b_i = 1 and the unipotent group U sits inside it.
class BlockData {
public:
    explicit BlockData(std::vector<int> blocks);

    int p() const { return int(b_.size()); }
    int n() const { return d_.back(); }
    int block(int k) const { return b_[k - 1]; }               // 1-based
    int d(int k) const { return k == 0 ? 0 : d_[k - 1]; }      // d(0) = 0, d(p) = n
    const std::vector<int>& blocks() const { return b_; }

    // dim P = sum_{i=1}^p sum_{x=1}^i b_i * b_x.
    int dim_p() const;

    // Block number containing the 1-based index idx in 1..n.
    int block_of(int idx) const;

    // Whether a matrix entry (0-based) may be nonzero for an element of P.
    bool in_pattern(int i, int j) const { return block_of(i + 1) <= block_of(j + 1); }

    static BlockData borel(int n) { return BlockData(std::vector<int>(n, 1)); }

    bool operator==(const BlockData& o) const { return b_ == o.b_; }

    std::string to_string() const;

private:
    std::vector<int> b_;
    std::vector<int> d_;
};

}  // namespace nilorb
