#include "nilorb/blockdata.hpp"

#include <sstream>

namespace nilorb {

BlockData::BlockData(std::vector<int> blocks) : b_(std::move(blocks)) {
    if (b_.empty()) throw DomainError("block data needs at least one block");
    int acc = 0;
    for (int bi : b_) {
        if (bi < 1) throw DomainError("block sizes must be positive");
        acc += bi;
        d_.push_back(acc);
    }
}

int BlockData::dim_p() const {
    int s = 0;
    for (int i = 1; i <= p(); ++i)
        for (int x = 1; x <= i; ++x) s += block(i) * block(x);
    return s;
}

int BlockData::block_of(int idx) const {
    if (idx < 1 || idx > n()) throw DomainError("index outside 1..n");
    for (int k = 1; k <= p(); ++k)
        if (idx <= d(k)) return k;
    return p();
}

std::string BlockData::to_string() const {
    std::ostringstream os;
    os << "(";
    for (int k = 1; k <= p(); ++k) os << (k > 1 ? "," : "") << block(k);
    os << ")";
    return os.str();
}

}  // namespace nilorb
