#pragma once

#include <optional>
#include <vector>

#include "nilorb/matrix.hpp"

namespace nilorb {

struct Rref {
    Mat r;
    std::vector<int> pivots;  // pivot column of each nonzero row
};

// Reduced row echelon form by exact Gauss-Jordan elimination.
Rref rref(const Mat& m);

int rank(const Mat& m);

Rat det(const Mat& m);

// Inverse, or nullopt when singular.
std::optional<Mat> inverse(const Mat& m);

// One solution of A x = b with all free variables set to zero, or nullopt if
// the system is inconsistent. Deterministic.
std::optional<std::vector<Rat>> solve(const Mat& a, const std::vector<Rat>& b);

// Columns form the canonical (RREF-derived) basis of ker A.
Mat null_space(const Mat& a);

// Basis of the column span: the pivot columns of A.
Mat column_space(const Mat& a);

// Basis of span(A) ∩ span(B).
Mat intersect_spans(const Mat& a, const Mat& b);

// Basis of the full preimage f^{-1}(span S) of a linear map given by `f`.
Mat preimage_of_span(const Mat& f, const Mat& s);

bool in_span(const Mat& basis, const std::vector<Rat>& v);

// Submatrix of the last `a` rows and the first `b` columns.
Mat corner_submatrix(const Mat& m, int a, int b);

// Least k >= 1 with M^k = 0, or nullopt when M is not nilpotent.
std::optional<int> nilpotency_degree(const Mat& m);

}  // namespace nilorb
