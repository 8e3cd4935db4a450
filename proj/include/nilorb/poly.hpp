#pragma once

#include <vector>

#include "nilorb/matrix.hpp"

namespace nilorb {

// Univariate polynomial with exact rational coefficients; c[k] multiplies x^k.
struct Poly {
    std::vector<Rat> c;

    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }
    static Poly monomial(int deg, const Rat& coeff = Rat(1));

    void trim();
    bool is_zero() const { return c.empty(); }
    int degree() const { return int(c.size()) - 1; }  // -1 for the zero polynomial
    Rat coeff(int k) const { return k < int(c.size()) ? c[k] : Rat(0); }
    bool constant_term_zero() const { return coeff(0) == 0; }

    Rat eval(const Rat& x) const;
    // Evaluate against precomputed matrix powers pw[k] = N^k.
    Mat eval_matrix(const std::vector<Mat>& pw) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    bool operator==(const Poly& o) const { return c == o.c; }

    std::string to_string() const;
};

}  // namespace nilorb
