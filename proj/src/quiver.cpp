#include "nilorb/quiver.hpp"

#include "nilorb/linalg.hpp"

namespace nilorb {

void QuiverRep::check() const {
    if (p < 1 || int(dims.size()) != p || int(chain.size()) != p - 1)
        throw DomainError("malformed quiver representation");
    for (int k = 0; k + 1 < p; ++k)
        if (chain[k].rows() != dims[k + 1] || chain[k].cols() != dims[k])
            throw DomainError("chain map shape mismatch");
    if (loop.rows() != dims[p - 1] || loop.cols() != dims[p - 1])
        throw DomainError("loop shape mismatch");
    if (dims[p - 1] > 0 && !mat_pow(loop, x).is_zero())
        throw DomainError("loop is not x-nilpotent");
}

bool QuiverRep::chain_injective() const {
    for (const Mat& c : chain)
        if (rank(c) != c.cols()) return false;
    return true;
}

QuiverRep direct_sum(const QuiverRep& a, const QuiverRep& b) {
    if (a.p != b.p || a.x != b.x) throw DomainError("direct sum shape mismatch");
    QuiverRep s;
    s.p = a.p;
    s.x = a.x;
    auto blockdiag = [](const Mat& u, const Mat& v) {
        Mat out(u.rows() + v.rows(), u.cols() + v.cols());
        for (int i = 0; i < u.rows(); ++i)
            for (int j = 0; j < u.cols(); ++j) out(i, j) = u(i, j);
        for (int i = 0; i < v.rows(); ++i)
            for (int j = 0; j < v.cols(); ++j) out(u.rows() + i, u.cols() + j) = v(i, j);
        return out;
    };
    for (int k = 0; k < a.p; ++k) s.dims.push_back(a.dims[k] + b.dims[k]);
    for (int k = 0; k + 1 < a.p; ++k) s.chain.push_back(blockdiag(a.chain[k], b.chain[k]));
    s.loop = blockdiag(a.loop, b.loop);
    return s;
}

QuiverRep build_indecomposable(const IndecLabel& label, int p) {
    if (label.i < 1 || label.i > p || (label.kind == IndecLabel::Kind::U && (label.j < 1 || label.j > p)))
        throw DomainError("label index outside 1..p");
    QuiverRep r;
    r.p = p;
    r.x = 2;
    for (int k = 1; k <= p; ++k) r.dims.push_back(label.dim_at(k));
    for (int k = 1; k < p; ++k) {
        int dk = r.dims[k - 1], dk1 = r.dims[k];
        Mat c(dk1, dk);
        if (dk == dk1) {
            for (int t = 0; t < dk; ++t) c(t, t) = 1;
        } else if (dk == 0) {
            // zero map out of the zero space
        } else {
            // dk = 1, dk1 = 2: e1 when the source index comes first, e2 otherwise
            bool use_e1 = label.j <= label.i;
            c(use_e1 ? 0 : 1, 0) = 1;
        }
        r.chain.push_back(c);
    }
    int dp = r.dims[p - 1];
    r.loop = Mat(dp, dp);
    if (label.kind == IndecLabel::Kind::U) r.loop(1, 0) = 1;  // e1 -> e2 -> 0
    r.check();
    return r;
}

QuiverRep rep_from_matrix(const Mat& n, const BlockData& blocks, int x) {
    if (!n.is_square() || n.rows() != blocks.n()) throw DomainError("matrix size does not match block data");
    auto deg = nilpotency_degree(n);
    if (!deg || *deg > x) throw DomainError("matrix is not x-nilpotent");
    QuiverRep r;
    r.p = blocks.p();
    r.x = x;
    for (int k = 1; k <= r.p; ++k) r.dims.push_back(blocks.d(k));
    for (int k = 1; k < r.p; ++k) {
        Mat c(blocks.d(k + 1), blocks.d(k));
        for (int t = 0; t < blocks.d(k); ++t) c(t, t) = 1;
        r.chain.push_back(c);
    }
    r.loop = n;
    r.check();
    return r;
}

int hom_dim_oracle(const QuiverRep& m, const QuiverRep& mp) {
    if (m.p != mp.p) throw DomainError("hom oracle needs equal vertex counts");
    int p = m.p;
    // Unknowns: entries of f_k (dims'[k] x dims[k]), stacked per vertex.
    std::vector<int> offset(p + 1, 0);
    for (int k = 0; k < p; ++k) offset[k + 1] = offset[k] + mp.dims[k] * m.dims[k];
    int unknowns = offset[p];
    if (unknowns == 0) return 0;
    auto var = [&](int k, int r, int c) { return offset[k] + r * m.dims[k] + c; };

    std::vector<std::vector<Rat>> rows;
    // f_{k+1} A_k = A'_k f_k for the chain maps.
    for (int k = 0; k + 1 < p; ++k) {
        const Mat& a = m.chain[k];
        const Mat& ap = mp.chain[k];
        for (int r = 0; r < mp.dims[k + 1]; ++r)
            for (int c = 0; c < m.dims[k]; ++c) {
                std::vector<Rat> row(unknowns, Rat(0));
                for (int t = 0; t < m.dims[k + 1]; ++t)
                    if (a(t, c) != 0) row[var(k + 1, r, t)] += a(t, c);
                for (int t = 0; t < mp.dims[k]; ++t)
                    if (ap(r, t) != 0) row[var(k, t, c)] -= ap(r, t);
                rows.push_back(std::move(row));
            }
    }
    // f_p L = L' f_p for the loop.
    {
        int k = p - 1;
        const Mat& l = m.loop;
        const Mat& lp = mp.loop;
        for (int r = 0; r < mp.dims[k]; ++r)
            for (int c = 0; c < m.dims[k]; ++c) {
                std::vector<Rat> row(unknowns, Rat(0));
                for (int t = 0; t < m.dims[k]; ++t)
                    if (l(t, c) != 0) row[var(k, r, t)] += l(t, c);
                for (int t = 0; t < mp.dims[k]; ++t)
                    if (lp(r, t) != 0) row[var(k, t, c)] -= lp(r, t);
                rows.push_back(std::move(row));
            }
    }
    if (rows.empty()) return unknowns;
    Mat sys(int(rows.size()), unknowns);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < unknowns; ++j) sys(int(i), j) = rows[i][j];
    return unknowns - rank(sys);
}

namespace {
inline int delta(bool cond) { return cond ? 1 : 0; }
}

int hom_dim_formula(const IndecLabel& a, const IndecLabel& b) {
    using K = IndecLabel::Kind;
    if (a.kind == K::V && b.kind == K::V) return delta(b.i <= a.i);
    if (a.kind == K::V && b.kind == K::U) return delta(b.i <= a.i);
    if (a.kind == K::U && b.kind == K::V) return delta(b.i <= a.j);
    // [U(k,l), U(i,j)] = delta(i<=l) + delta(j<=l)*delta(i<=k)
    return delta(b.i <= a.j) + delta(b.j <= a.j) * delta(b.i <= a.i);
}

int hom_dim_formula(const Decomposition& x, const Decomposition& y) {
    int s = 0;
    for (const auto& [la, ma] : x.mult)
        for (const auto& [lb, mb] : y.mult) s += ma * mb * hom_dim_formula(la, lb);
    return s;
}

InvariantVector invariant_vector(const Decomposition& x, int p) {
    InvariantVector iv;
    iv.a.resize(p);
    iv.abar.resize(p);
    iv.b.assign(p, std::vector<int>(p, 0));
    iv.bbar.assign(p, std::vector<int>(p, 0));
    for (int k = 1; k <= p; ++k) {
        Decomposition vk;
        vk.add(IndecLabel::V(k));
        iv.a[k - 1] = hom_dim_formula(vk, x);
        iv.abar[k - 1] = hom_dim_formula(x, vk);
        for (int l = 1; l <= p; ++l) {
            Decomposition ukl;
            ukl.add(IndecLabel::U(k, l));
            iv.b[k - 1][l - 1] = hom_dim_formula(ukl, x);
            iv.bbar[k - 1][l - 1] = hom_dim_formula(x, ukl);
        }
    }
    return iv;
}

int orbit_dimension(const Decomposition& x, const BlockData& blocks) {
    std::vector<int> dims = x.dim_vector(blocks.p());
    for (int k = 1; k <= blocks.p(); ++k)
        if (dims[k - 1] != blocks.d(k)) throw DomainError("dimension-vector mismatch with block data");
    return blocks.dim_p() - hom_dim_formula(x, x);
}

}  // namespace nilorb
