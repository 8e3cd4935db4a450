#include "nilorb/linalg.hpp"

#include "nilorb/errors.hpp"

namespace nilorb {

Rref rref(const Mat& m) {
    Mat r = m;
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < r.cols() && row < r.rows(); ++col) {
        int piv = -1;
        for (int i = row; i < r.rows(); ++i)
            if (r(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < r.cols(); ++j) std::swap(r(piv, j), r(row, j));
        Rat inv = Rat(1) / r(row, col);
        for (int j = col; j < r.cols(); ++j) r(row, j) *= inv;
        for (int i = 0; i < r.rows(); ++i) {
            if (i == row || r(i, col) == 0) continue;
            Rat f = r(i, col);
            for (int j = col; j < r.cols(); ++j) r(i, j) -= f * r(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(r), std::move(pivots)};
}

int rank(const Mat& m) { return int(rref(m).pivots.size()); }

Rat det(const Mat& m) {
    if (!m.is_square()) throw DomainError("determinant needs a square matrix");
    Mat a = m;
    int n = a.rows();
    Rat d = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (a(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return 0;
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
            d = -d;
        }
        d *= a(col, col);
        Rat inv = Rat(1) / a(col, col);
        for (int i = col + 1; i < n; ++i) {
            if (a(i, col) == 0) continue;
            Rat f = a(i, col) * inv;
            for (int j = col; j < n; ++j) a(i, j) -= f * a(col, j);
        }
    }
    return d;
}

std::optional<Mat> inverse(const Mat& m) {
    if (!m.is_square()) throw DomainError("inverse needs a square matrix");
    int n = m.rows();
    Rref rr = rref(Mat::hcat(m, Mat::identity(n)));
    for (int i = 0; i < n; ++i)
        if (rr.r(i, i) != 1) return std::nullopt;
    return rr.r.col_range(n, 2 * n);
}

std::optional<std::vector<Rat>> solve(const Mat& a, const std::vector<Rat>& b) {
    if (int(b.size()) != a.rows()) throw DomainError("shape mismatch in solve");
    Mat rhs(a.rows(), 1);
    for (int i = 0; i < a.rows(); ++i) rhs(i, 0) = b[i];
    Rref rr = rref(Mat::hcat(a, rhs));
    // Inconsistent iff some pivot lands in the appended column.
    for (int p : rr.pivots)
        if (p == a.cols()) return std::nullopt;
    std::vector<Rat> x(a.cols(), Rat(0));
    for (size_t i = 0; i < rr.pivots.size(); ++i) x[rr.pivots[i]] = rr.r(int(i), a.cols());
    return x;
}

Mat null_space(const Mat& a) {
    Rref rr = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (int p : rr.pivots) is_pivot[p] = true;
    std::vector<int> free_cols;
    for (int j = 0; j < a.cols(); ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    Mat basis(a.cols(), int(free_cols.size()));
    for (size_t k = 0; k < free_cols.size(); ++k) {
        int fc = free_cols[k];
        basis(fc, int(k)) = 1;
        for (size_t i = 0; i < rr.pivots.size(); ++i) basis(rr.pivots[i], int(k)) = -rr.r(int(i), fc);
    }
    return basis;
}

Mat column_space(const Mat& a) {
    Rref rr = rref(a);
    Mat basis(a.rows(), int(rr.pivots.size()));
    for (size_t k = 0; k < rr.pivots.size(); ++k)
        for (int i = 0; i < a.rows(); ++i) basis(i, int(k)) = a(i, rr.pivots[k]);
    return basis;
}

Mat intersect_spans(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw DomainError("shape mismatch in intersect_spans");
    if (a.cols() == 0 || b.cols() == 0) return Mat(a.rows(), 0);
    Mat z = null_space(Mat::hcat(a, b * Rat(-1)));
    Mat combos(a.rows(), z.cols());
    for (int k = 0; k < z.cols(); ++k) {
        std::vector<Rat> v(a.rows(), Rat(0));
        for (int j = 0; j < a.cols(); ++j)
            for (int i = 0; i < a.rows(); ++i) v[i] += a(i, j) * z(j, k);
        combos.set_col(k, v);
    }
    return column_space(combos);
}

Mat preimage_of_span(const Mat& f, const Mat& s) {
    if (f.rows() != s.rows()) throw DomainError("shape mismatch in preimage_of_span");
    if (s.cols() == 0) return null_space(f);
    Mat z = null_space(Mat::hcat(f, s * Rat(-1)));
    return column_space(z.row_range(0, f.cols()));
}

bool in_span(const Mat& basis, const std::vector<Rat>& v) {
    if (basis.cols() == 0) {
        for (const auto& x : v)
            if (x != 0) return false;
        return true;
    }
    return solve(basis, v).has_value();
}

Mat corner_submatrix(const Mat& m, int a, int b) {
    if (a < 0 || a > m.rows() || b < 0 || b > m.cols())
        throw DomainError("corner_submatrix: index out of range");
    Mat out(a, b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) out(i, j) = m(m.rows() - a + i, j);
    return out;
}

std::optional<int> nilpotency_degree(const Mat& m) {
    if (!m.is_square()) throw DomainError("nilpotency_degree needs a square matrix");
    int n = m.rows();
    if (n == 0) return 1;
    Mat pw = Mat::identity(n);
    for (int k = 1; k <= n; ++k) {
        pw = pw * m;
        if (pw.is_zero()) return k;
    }
    return std::nullopt;
}

}  // namespace nilorb
