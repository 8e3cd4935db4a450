#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nilorb/matrix.hpp"
#include "nilorb/poly.hpp"

namespace nilorb {

// Determinantal semi-invariant datum: block heights a, widths a', and an
// s x t table of polynomials. The value at N is det of the block matrix
// whose (i,j) block is P_ij(N) restricted to the last a_i rows and first
// a'_j columns. Zero-size blocks are permitted and contribute nothing.
struct SemiInvDatum {
    std::vector<int> a;
    std::vector<int> a_prime;
    std::vector<std::vector<Poly>> polys;

    int s() const { return int(a.size()); }
    int t() const { return int(a_prime.size()); }
    int r() const;  // common block sum
    void check(int n) const;
    int max_degree() const;
};

Rat evaluate(const SemiInvDatum& d, const Mat& n);

// Character of the diagonal torus, as integer coordinates over the basis
// omega_i(g) = g_ii.
struct Weight {
    std::vector<int> omega;

    Weight() = default;
    explicit Weight(int n) : omega(n, 0) {}
    Weight operator+(const Weight& o) const;
    bool operator==(const Weight& o) const { return omega == o.omega; }
    // chi(g) = prod g_ii^omega_i for invertible upper-triangular g.
    Rat chi(const Mat& g) const;
};

// sum_i (omega_{n-a_i+1} + ... + omega_n) - sum_j (omega_1 + ... + omega_{a'_j}).
Weight weight(const SemiInvDatum& d, int n);

// The built-in battery.
// det_i: ((i),(i),(x^{n-i})), the corner minor of N^{n-i}.
// f_i:  ((i),(1,...,1)) with column polynomials x^{n-i-1+j}, the toric
//       invariant of those block sizes, normalized with leading coefficient 1.
// f_ij: ((j-1, n-i+1),(j, n-i), [[x^{n-j+1}, 0],[x, x^i]]) for j < i-1;
//       zero-size blocks are dropped.
// g_rel: ((2),(2),(x)) at n = 4, ((n-2),(2,n-4),(x,x^4)) for n >= 5.
// uthree_*: the explicit n = 3 battery.
SemiInvDatum builtin_det_i(int n, int i);
SemiInvDatum builtin_f_i(int n, int i);
SemiInvDatum builtin_f_ij(int n, int i, int j);
SemiInvDatum builtin_g_rel(int n);
SemiInvDatum builtin_uthree(const std::string& which);  // f1, f2, det1, det2
SemiInvDatum builtin(const std::string& name, int n, int i = 0, int j = 0);

// Only the subdiagonal of a strictly-lower-triangular H is retained.
Mat toric_part(const Mat& h);

// Randomized exact identity test of f(H) = f(H_tor) over H in H_U.
// `false` is a certificate; `true` is probabilistic with the reported bound.
struct ToricCheck {
    bool toric;
    int trials;
    Rat error_bound;  // per full run, by the degree/sample-space argument
    explicit operator bool() const { return toric; }
};

ToricCheck is_toric_on_samples(const SemiInvDatum& d, int n, int trials, uint64_t seed);

// No nonempty proper index subsets of a and a' share a partial sum.
bool is_sum_free(const SemiInvDatum& d);

// Exponents h_1..h_{n-1} of f(H_tor) as a monomial in the subdiagonal
// variables: measured symbolically, and predicted by the sum-free exponent
// formula. Requires positive-degree polynomials for the prediction to apply.
struct ToricData {
    std::vector<int> measured;
    std::vector<int> predicted;
    bool sum_free = false;
    bool match = false;
};

ToricData toric_exponents(const SemiInvDatum& d, int n);

}  // namespace nilorb
