#include "nilorb/normal_form.hpp"

#include "nilorb/linalg.hpp"

namespace nilorb {

namespace {

void require_nilpotent(const Mat& n) {
    if (!n.is_square()) throw DomainError("normal forms need a square matrix");
    if (!nilpotency_degree(n)) throw DomainError("matrix is not nilpotent");
}

// Column x of H may be nonzero only at the subdiagonal (row x+1, entry 1) and
// at rows >= cut(x); 1-based x in 1..n-1.
int cut_row(const BlockData& blocks, int x) {
    int c = (x < blocks.d(1)) ? blocks.d(1) + 2 : blocks.d(blocks.block_of(x + 1)) + 1;
    return std::min(c, blocks.n() + 1);
}

Mat standard_flag_basis(int n, int d) {
    Mat f(n, d);
    for (int i = 0; i < d; ++i) f(i, i) = 1;
    return f;
}

}  // namespace

bool is_generic(const Mat& n, const BlockData& blocks) {
    require_nilpotent(n);
    if (n.rows() != blocks.n()) throw DomainError("matrix size does not match block data");
    for (int k = 1; k < blocks.p(); ++k) {
        int dk = blocks.d(k);
        Mat m = corner_submatrix(mat_pow(n, blocks.n() - dk), dk, dk);
        if (det(m) == 0) return false;
    }
    return true;
}

bool is_generic_by_columns(const Mat& n, const BlockData& blocks) {
    require_nilpotent(n);
    if (n.rows() != blocks.n()) throw DomainError("matrix size does not match block data");
    for (int k = 1; k < blocks.p(); ++k) {
        int dk = blocks.d(k);
        Mat m = mat_pow(n, blocks.n() - dk).col_range(0, dk);
        if (rank(m) != dk) return false;
    }
    return true;
}

std::vector<std::tuple<int, int, int>> normal_pattern_positions(const BlockData& blocks) {
    int n = blocks.n();
    std::vector<std::tuple<int, int, int>> out;
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= n; ++i) {
            if (i == j + 1)
                out.emplace_back(i, j, 1);
            else if (i <= j || (j < n && i < cut_row(blocks, j)))
                out.emplace_back(i, j, 0);
            // rows >= cut(j) below the subdiagonal are free
        }
    return out;
}

bool matches_normal_pattern(const Mat& h, const BlockData& blocks) {
    if (!h.is_square() || h.rows() != blocks.n()) return false;
    for (auto [i, j, v] : normal_pattern_positions(blocks))
        if (h(i - 1, j - 1) != v) return false;
    return true;
}

GenericNormalForm normal_form(const Mat& n, const BlockData& blocks) {
    int sz = blocks.n();
    if (!is_generic(n, blocks))
        throw DomainError("genericity violated: a corner minor det((N^(n-d_k))_(d_k,d_k)) vanishes");

    // Intrinsic decreasing flag: im N^(x-1) = span(w_x..w_n) for the sought basis.
    std::vector<Mat> im(sz + 2);
    im[1] = Mat::identity(sz);
    for (int x = 2; x <= sz + 1; ++x) im[x] = column_space(n * im[x - 1]);
    for (int x = 1; x <= sz + 1; ++x)
        if (im[x].cols() != std::max(0, sz - x + 1))
            throw DomainError("genericity violated: rank of a power of N is too small");

    // Feasible spaces for each basis vector, from the last one backwards:
    // w_n spans ker N; w_x must sit in F_(block(x)) and map into
    // Feas_(x+1) + im N^(cut(x)-1).
    std::vector<Mat> feas(sz + 1);
    feas[sz] = null_space(n);
    for (int x = sz - 1; x >= 1; --x) {
        Mat target = Mat::hcat(feas[x + 1], im[cut_row(blocks, x)]);
        Mat pre = preimage_of_span(n, target);
        feas[x] = intersect_spans(standard_flag_basis(sz, blocks.d(blocks.block_of(x))), pre);
        if (feas[x].cols() == 0)
            throw DomainError("genericity violated: no adapted basis vector at position " +
                              std::to_string(x));
    }

    // Seed: any feasible w_1 outside im N keeps the chain independent.
    std::vector<Rat> w1;
    for (int c = 0; c < feas[1].cols(); ++c) {
        std::vector<Rat> cand = feas[1].col(c);
        if (!in_span(im[2], cand)) {
            w1 = cand;
            break;
        }
    }
    if (w1.empty()) throw DomainError("genericity violated: no independent seed vector");

    Mat w(sz, sz);
    w.set_col(0, w1);
    for (int x = 1; x < sz; ++x) {
        std::vector<Rat> t(sz, Rat(0));
        for (int i = 0; i < sz; ++i)
            for (int j = 0; j < sz; ++j) t[i] += n(i, j) * w(j, x - 1);
        Mat sysm = Mat::hcat(feas[x + 1], im[cut_row(blocks, x)]);
        auto sol = solve(sysm, t);
        if (!sol) throw DomainError("genericity violated: congruence step failed at position " +
                                    std::to_string(x));
        std::vector<Rat> wx(sz, Rat(0));
        for (int c = 0; c < feas[x + 1].cols(); ++c)
            for (int i = 0; i < sz; ++i) wx[i] += feas[x + 1](i, c) * (*sol)[c];
        w.set_col(x, wx);
    }

    auto wi = inverse(w);
    if (!wi) throw DomainError("genericity violated: constructed basis is singular");
    for (int i = 0; i < sz; ++i)
        for (int j = 0; j < sz; ++j)
            if (!blocks.in_pattern(i, j) && w(i, j) != 0)
                throw DomainError("internal: basis not adapted to the flag");
    GenericNormalForm out{*wi * n * w, *wi, blocks};
    if (!matches_normal_pattern(out.h, blocks))
        throw DomainError("internal: constructed form does not match the pattern");
    return out;
}

bool is_in_hu(const Mat& h) {
    if (!h.is_square()) return false;
    int n = h.rows();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            if (h(i, j) != 0) return false;
    for (int i = 0; i + 1 < n; ++i)
        if (h(i + 1, i) == 0) return false;
    return true;
}

UNormalForm u_normal_form(const Mat& n) {
    BlockData borel = BlockData::borel(n.rows());
    GenericNormalForm nf = normal_form(n, borel);
    // Split g = t * u with t = diag(g); then u N u^-1 = t^-1 H t.
    int sz = n.rows();
    Mat u = nf.g;
    for (int i = 0; i < sz; ++i) {
        Rat inv = Rat(1) / nf.g(i, i);
        for (int j = 0; j < sz; ++j) u(i, j) *= inv;
    }
    Mat h = nf.h;
    for (int i = 0; i < sz; ++i)
        for (int j = 0; j < sz; ++j)
            if (h(i, j) != 0) h(i, j) = h(i, j) * nf.g(j, j) / nf.g(i, i);
    if (!is_in_hu(h)) throw DomainError("internal: unipotent form left the expected shape");
    return {h, u};
}

}  // namespace nilorb
