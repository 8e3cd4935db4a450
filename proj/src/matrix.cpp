#include "nilorb/matrix.hpp"

#include "nilorb/errors.hpp"

namespace nilorb {

Mat::Mat(std::initializer_list<std::initializer_list<Rat>> rows) {
    rows_ = int(rows.size());
    cols_ = rows_ ? int(rows.begin()->size()) : 0;
    e_.reserve(size_t(rows_) * cols_);
    for (const auto& r : rows) {
        if (int(r.size()) != cols_) throw DomainError("ragged matrix initializer");
        for (const auto& x : r) e_.push_back(x);
    }
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool Mat::is_zero() const {
    for (const auto& x : e_)
        if (x != 0) return false;
    return true;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("shape mismatch in +");
    Mat out(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] + o.e_[i];
    return out;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("shape mismatch in -");
    Mat out(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] - o.e_[i];
    return out;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw DomainError("shape mismatch in *");
    Mat out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& a = (*this)(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Rat& b = o(k, j);
                if (b != 0) out(i, j) += a * b;
            }
        }
    return out;
}

Mat Mat::operator*(const Rat& c) const {
    Mat out(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] * c;
    return out;
}

Mat Mat::transpose() const {
    Mat out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

Mat Mat::col_range(int c0, int c1) const {
    assert(0 <= c0 && c0 <= c1 && c1 <= cols_);
    Mat out(rows_, c1 - c0);
    for (int i = 0; i < rows_; ++i)
        for (int j = c0; j < c1; ++j) out(i, j - c0) = (*this)(i, j);
    return out;
}

Mat Mat::row_range(int r0, int r1) const {
    assert(0 <= r0 && r0 <= r1 && r1 <= rows_);
    Mat out(r1 - r0, cols_);
    for (int i = r0; i < r1; ++i)
        for (int j = 0; j < cols_; ++j) out(i - r0, j) = (*this)(i, j);
    return out;
}

std::vector<Rat> Mat::col(int j) const {
    std::vector<Rat> v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

void Mat::set_col(int j, const std::vector<Rat>& v) {
    assert(int(v.size()) == rows_);
    for (int i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Mat Mat::hcat(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw DomainError("shape mismatch in hcat");
    Mat out(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
        for (int j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
    }
    return out;
}

Mat mat_pow(const Mat& m, int k) {
    if (!m.is_square()) throw DomainError("matrix power needs a square matrix");
    Mat acc = Mat::identity(m.rows());
    for (int i = 0; i < k; ++i) acc = acc * m;
    return acc;
}

}  // namespace nilorb
