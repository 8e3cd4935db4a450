#include "nilorb/classify.hpp"

#include "nilorb/linalg.hpp"

namespace nilorb {

std::vector<int> RankProfile::a(const BlockData& blocks) const {
    std::vector<int> out(p);
    for (int k = 1; k <= p; ++k) out[k - 1] = blocks.d(k) - r[0][k];
    return out;
}

std::vector<std::vector<int>> RankProfile::b(const BlockData& blocks) const {
    std::vector<std::vector<int>> out(p, std::vector<int>(p));
    for (int k = 1; k <= p; ++k)
        for (int l = 1; l <= p; ++l) out[k - 1][l - 1] = blocks.d(l) - r[k][l];
    return out;
}

RankProfile rank_profile(const Mat& n, const BlockData& blocks) {
    if (!n.is_square() || n.rows() != blocks.n()) throw DomainError("matrix size does not match block data");
    if (!(n * n).is_zero()) throw DomainError("rank profile requires a 2-nilpotent matrix");
    int p = blocks.p();
    RankProfile rp;
    rp.p = p;
    rp.r.assign(p + 1, std::vector<int>(p + 1, 0));
    for (int k = 0; k <= p; ++k)
        for (int l = 0; l <= p; ++l) {
            int nrows = blocks.n() - blocks.d(k);
            int ncols = blocks.d(l);
            if (nrows == 0 || ncols == 0) continue;
            Mat sub(nrows, ncols);
            for (int i = 0; i < nrows; ++i)
                for (int j = 0; j < ncols; ++j) sub(i, j) = n(blocks.d(k) + i, j);
            rp.r[k][l] = rank(sub);
        }
    return rp;
}

Eolp classify(const Mat& n, const BlockData& blocks) {
    RankProfile rp = rank_profile(n, blocks);
    int p = blocks.p();
    auto c = [&](int k, int l) { return rp.r[0][l] - rp.r[k][l]; };
    Eolp e = Eolp::empty(p);
    for (int i = 1; i <= p; ++i)
        for (int j = 1; j <= p; ++j)
            e.arrow(i, j) = c(i, j) - c(i - 1, j) - c(i, j - 1) + c(i - 1, j - 1);
    for (int v = 1; v <= p; ++v) e.dot(v) = blocks.block(v) - e.load(v);
    if (!validate(e, blocks)) throw DomainError("classification produced an invalid pattern");
    return e;
}

Mat representative_matrix(const Eolp& e, const BlockData& blocks) {
    if (!validate(e, blocks)) throw DomainError("invalid pattern for block data " + blocks.to_string());
    int n = blocks.n();
    Mat m(n, n);
    std::vector<int> cursor(blocks.p() + 1);  // next free index within each block, 0-based
    for (int v = 1; v <= blocks.p(); ++v) cursor[v] = blocks.d(v - 1);
    for (int i = 1; i <= e.p; ++i)
        for (int j = 1; j <= e.p; ++j)
            for (int mlt = 0; mlt < e.arrow(i, j); ++mlt) {
                int src = cursor[j]++;
                int tgt = cursor[i]++;  // distinct from src even when i == j
                m(tgt, src) = 1;
            }
    return m;
}

}  // namespace nilorb
