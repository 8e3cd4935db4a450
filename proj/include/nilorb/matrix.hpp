#pragma once

#include <cassert>
#include <initializer_list>
#include <vector>

#include "nilorb/rational.hpp"

namespace nilorb {

// Dense rational matrix, row-major, value semantics. Indices are 0-based in
// code; the JSON formats and link-pattern vertices are 1-based.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {
        assert(rows >= 0 && cols >= 0);
    }
    Mat(std::initializer_list<std::initializer_list<Rat>> rows);

    static Mat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rat& operator()(int i, int j) {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return e_[size_t(i) * cols_ + j];
    }
    const Rat& operator()(int i, int j) const {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return e_[size_t(i) * cols_ + j];
    }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat operator*(const Rat& c) const;
    Mat transpose() const;

    // Columns [c0, c1) as a new matrix.
    Mat col_range(int c0, int c1) const;
    Mat row_range(int r0, int r1) const;
    std::vector<Rat> col(int j) const;
    void set_col(int j, const std::vector<Rat>& v);

    // Horizontal concatenation [A | B].
    static Mat hcat(const Mat& a, const Mat& b);

private:
    int rows_, cols_;
    std::vector<Rat> e_;
};

Mat mat_pow(const Mat& m, int k);

}  // namespace nilorb
