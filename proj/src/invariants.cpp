#include "nilorb/invariants.hpp"

#include <algorithm>

#include "nilorb/errors.hpp"
#include "nilorb/linalg.hpp"
#include "nilorb/normal_form.hpp"
#include "nilorb/sampling.hpp"

namespace nilorb {

namespace {

Rat rat_pow(const Rat& q, int e) {
    if (e >= 0) {
        Rat acc = 1;
        for (int k = 0; k < e; ++k) acc *= q;
        return acc;
    }
    if (q == 0) throw DomainError("zero raised to a negative power");
    return Rat(1) / rat_pow(q, -e);
}

}  // namespace

int SemiInvDatum::r() const {
    int ra = 0, rb = 0;
    for (int x : a) ra += x;
    for (int x : a_prime) rb += x;
    if (ra != rb) throw DomainError("block size inconsistency: sum(a) != sum(a')");
    return ra;
}

void SemiInvDatum::check(int n) const {
    r();
    for (int x : a)
        if (x < 0 || x > n) throw DomainError("block height outside 0..n");
    for (int x : a_prime)
        if (x < 0 || x > n) throw DomainError("block width outside 0..n");
    if (int(polys.size()) != s()) throw DomainError("polynomial table has wrong number of rows");
    for (const auto& row : polys)
        if (int(row.size()) != t()) throw DomainError("polynomial table has wrong number of columns");
}

int SemiInvDatum::max_degree() const {
    int d = 0;
    for (const auto& row : polys)
        for (const Poly& p : row) d = std::max(d, p.degree());
    return d;
}

Rat evaluate(const SemiInvDatum& d, const Mat& n) {
    if (!n.is_square()) throw DomainError("evaluate needs a square matrix");
    d.check(n.rows());
    int rr = d.r();
    if (rr == 0) return 1;  // empty determinant

    std::vector<Mat> pw{Mat::identity(n.rows())};
    for (int k = 0; k < d.max_degree(); ++k) pw.push_back(pw.back() * n);

    std::vector<int> roff(d.s() + 1, 0), coff(d.t() + 1, 0);
    for (int i = 0; i < d.s(); ++i) roff[i + 1] = roff[i] + d.a[i];
    for (int j = 0; j < d.t(); ++j) coff[j + 1] = coff[j] + d.a_prime[j];

    Mat np(rr, rr);
    for (int i = 0; i < d.s(); ++i) {
        if (d.a[i] == 0) continue;
        for (int j = 0; j < d.t(); ++j) {
            if (d.a_prime[j] == 0) continue;
            Mat block = corner_submatrix(d.polys[i][j].eval_matrix(pw), d.a[i], d.a_prime[j]);
            for (int r = 0; r < d.a[i]; ++r)
                for (int c = 0; c < d.a_prime[j]; ++c) np(roff[i] + r, coff[j] + c) = block(r, c);
        }
    }
    return det(np);
}

Weight Weight::operator+(const Weight& o) const {
    if (omega.size() != o.omega.size()) throw DomainError("weight size mismatch");
    Weight w(int(omega.size()));
    for (size_t i = 0; i < omega.size(); ++i) w.omega[i] = omega[i] + o.omega[i];
    return w;
}

Rat Weight::chi(const Mat& g) const {
    if (!g.is_square() || g.rows() != int(omega.size())) throw DomainError("weight size mismatch");
    Rat v = 1;
    for (size_t i = 0; i < omega.size(); ++i) v *= rat_pow(g(int(i), int(i)), omega[i]);
    return v;
}

Weight weight(const SemiInvDatum& d, int n) {
    d.check(n);
    Weight w(n);
    for (int ai : d.a)
        for (int k = n - ai + 1; k <= n; ++k) w.omega[k - 1] += 1;
    for (int aj : d.a_prime)
        for (int k = 1; k <= aj; ++k) w.omega[k - 1] -= 1;
    return w;
}

SemiInvDatum builtin_det_i(int n, int i) {
    if (i < 1 || i > n - 1) throw DomainError("det_i needs 1 <= i <= n-1");
    return {{i}, {i}, {{Poly::monomial(n - i)}}};
}

SemiInvDatum builtin_f_i(int n, int i) {
    if (i < 1 || i > n - 1) throw DomainError("f_i needs 1 <= i <= n-1");
    SemiInvDatum d;
    d.a = {i};
    d.a_prime.assign(i, 1);
    d.polys.resize(1);
    for (int j = 1; j <= i; ++j) d.polys[0].push_back(Poly::monomial(n - i - 1 + j));
    return d;
}

SemiInvDatum builtin_f_ij(int n, int i, int j) {
    if (!(1 <= j && j < i - 1 && i <= n)) throw DomainError("f_ij needs 1 <= j < i-1 <= n-1");
    SemiInvDatum d;
    d.a = {j - 1, n - i + 1};
    d.a_prime = {j, n - i};
    d.polys = {{Poly::monomial(n - j + 1), Poly()}, {Poly::monomial(1), Poly::monomial(i)}};
    return d;
}

SemiInvDatum builtin_g_rel(int n) {
    if (n == 4) return {{2}, {2}, {{Poly::monomial(1)}}};
    if (n >= 5) return {{n - 2}, {2, n - 4}, {{Poly::monomial(1), Poly::monomial(4)}}};
    throw DomainError("g_rel needs n >= 4");
}

SemiInvDatum builtin_uthree(const std::string& which) {
    if (which == "f1") return {{2}, {1, 1}, {{Poly::monomial(1), Poly::monomial(2)}}};
    if (which == "f2") return {{1, 1}, {2}, {{Poly::monomial(2)}, {Poly::monomial(1)}}};
    if (which == "det1") return {{2}, {2}, {{Poly::monomial(1)}}};
    if (which == "det2") return {{1}, {1}, {{Poly::monomial(2)}}};
    throw DomainError("unknown n=3 invariant '" + which + "'");
}

SemiInvDatum builtin(const std::string& name, int n, int i, int j) {
    if (name == "det_i") return builtin_det_i(n, i);
    if (name == "f_i") return builtin_f_i(n, i);
    if (name == "f_ij") return builtin_f_ij(n, i, j);
    if (name == "g_rel") return builtin_g_rel(n);
    if (name.rfind("uthree_", 0) == 0) {
        if (n != 3) throw DomainError(name + " is specific to n = 3");
        return builtin_uthree(name.substr(7));
    }
    throw DomainError("unknown builtin invariant '" + name + "'");
}

Mat toric_part(const Mat& h) {
    if (!is_in_hu(h)) throw DomainError("toric part needs a matrix in H_U");
    Mat t(h.rows(), h.cols());
    for (int i = 0; i + 1 < h.rows(); ++i) t(i + 1, i) = h(i + 1, i);
    return t;
}

namespace {

constexpr int64_t kSampleBound = int64_t(1) << 31;

Mat sample_hu(int n, Rng& rng) {
    Mat h(n, n);
    for (int i = 0; i + 1 < n; ++i) h(i + 1, i) = Rat(Int(rng.uniform(1, kSampleBound)));
    for (int i = 2; i < n; ++i)
        for (int j = 0; j < i - 1; ++j) h(i, j) = Rat(Int(rng.uniform(-kSampleBound, kSampleBound)));
    return h;
}

}  // namespace

ToricCheck is_toric_on_samples(const SemiInvDatum& d, int n, int trials, uint64_t seed) {
    d.check(n);
    if (trials < 1) throw DomainError("need at least one trial");
    Rng rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        Mat h = sample_hu(n, rng);
        if (evaluate(d, h) != evaluate(d, toric_part(h))) return {false, trial + 1, Rat(0)};
    }
    // deg(f) <= r * maxdeg; per-trial failure chance <= deg / |sample set|.
    Rat per = Rat(Int(int64_t(d.r()) * std::max(1, d.max_degree())), Int(kSampleBound));
    Rat bound = 1;
    for (int k = 0; k < trials; ++k) bound *= per;
    return {true, trials, bound};
}

bool is_sum_free(const SemiInvDatum& d) {
    d.r();
    int s = d.s(), t = d.t();
    std::vector<long long> sums_a, sums_b;
    for (int mask = 1; mask < (1 << s) - 1; ++mask) {
        long long v = 0;
        for (int i = 0; i < s; ++i)
            if (mask & (1 << i)) v += d.a[i];
        sums_a.push_back(v);
    }
    for (int mask = 1; mask < (1 << t) - 1; ++mask) {
        long long v = 0;
        for (int j = 0; j < t; ++j)
            if (mask & (1 << j)) v += d.a_prime[j];
        sums_b.push_back(v);
    }
    for (long long x : sums_a)
        for (long long y : sums_b)
            if (x == y) return false;
    return true;
}

namespace {

// Exact determinant of a matrix of univariate polynomials by evaluation at
// deg+1 points and Lagrange interpolation.
Poly poly_det(const std::vector<std::vector<Poly>>& m, int deg_bound) {
    int r = int(m.size());
    int npts = deg_bound + 1;
    std::vector<Rat> xs(npts), ys(npts);
    for (int k = 0; k < npts; ++k) {
        xs[k] = k;
        Mat num(r, r);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) num(i, j) = m[i][j].eval(xs[k]);
        ys[k] = det(num);
    }
    Poly acc;
    for (int k = 0; k < npts; ++k) {
        Poly term({ys[k]});
        for (int l = 0; l < npts; ++l) {
            if (l == k) continue;
            term = term * Poly({-xs[l] / (xs[k] - xs[l]), Rat(1) / (xs[k] - xs[l])});
        }
        acc = acc + term;
    }
    return acc;
}

// Blocks of the datum evaluated on H_tor with symbolic x_var and the other
// subdiagonal entries set to fixed constants.
Poly eval_on_toric_line(const SemiInvDatum& d, int n, int var, const std::vector<Rat>& consts) {
    int rr = d.r();
    std::vector<int> roff(d.s() + 1, 0), coff(d.t() + 1, 0);
    for (int i = 0; i < d.s(); ++i) roff[i + 1] = roff[i] + d.a[i];
    for (int j = 0; j < d.t(); ++j) coff[j + 1] = coff[j] + d.a_prime[j];
    // (H_tor^m)_{r,c} = x_c * x_{c+1} * ... * x_{r-1} when r - c = m, else 0.
    auto shift_entry = [&](int m, int row, int col) -> Poly {
        if (row - col != m) return Poly();
        Poly prod({Rat(1)});
        for (int q = col; q < row; ++q) {
            // subdiagonal variable x_{q+1}, 1-based
            if (q + 1 == var)
                prod = prod * Poly::monomial(1);
            else
                prod = prod * Poly({consts[q]});
        }
        return prod;
    };
    std::vector<std::vector<Poly>> np(rr, std::vector<Poly>(rr));
    for (int i = 0; i < d.s(); ++i)
        for (int j = 0; j < d.t(); ++j) {
            if (d.a[i] == 0 || d.a_prime[j] == 0) continue;
            const Poly& pij = d.polys[i][j];
            for (int r = 0; r < d.a[i]; ++r)
                for (int c = 0; c < d.a_prime[j]; ++c) {
                    int row = n - d.a[i] + r, col = c;  // 0-based position in H
                    Poly entry;
                    for (int m = 0; m <= pij.degree(); ++m)
                        if (pij.coeff(m) != 0) entry = entry + shift_entry(m, row, col) * Poly({pij.coeff(m)});
                    np[roff[i] + r][coff[j] + c] = entry;
                }
        }
    return poly_det(np, rr * std::max(1, d.max_degree()));
}

}  // namespace

ToricData toric_exponents(const SemiInvDatum& d, int n) {
    d.check(n);
    for (const auto& row : d.polys)
        for (const Poly& p : row)
            if (!p.is_zero() && !p.constant_term_zero())
                throw DomainError("exponent formula needs polynomials with zero constant term");
    ToricData out;
    out.sum_free = is_sum_free(d);

    // Measured exponents, one subdiagonal variable at a time.
    std::vector<Rat> consts(n, Rat(0));
    static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
    for (int q = 0; q < n && q < int(sizeof(primes) / sizeof(int)); ++q) consts[q] = primes[q];
    for (int l = 1; l <= n - 1; ++l) {
        Poly f = eval_on_toric_line(d, n, l, consts);
        int nonzero = 0, deg = -1;
        for (int k = 0; k <= f.degree(); ++k)
            if (f.coeff(k) != 0) {
                ++nonzero;
                deg = k;
            }
        if (nonzero != 1)
            throw DomainError("f(H_tor) is not a monomial (non-toric or degenerate datum)");
        out.measured.push_back(deg);
    }

    // Predicted exponents for sum-free toric data.
    out.predicted.assign(n - 1, 0);
    if (n >= 2) {
        out.predicted[n - 2] = d.s();
        for (int l = 1; l <= n - 2; ++l) {
            int h = d.t();
            for (int k = 2; k <= l; ++k)
                for (int aj : d.a_prime)
                    if (aj >= k) ++h;
            for (int k = 1; k <= l - 1; ++k)
                for (int ai : d.a)
                    if (ai >= n - k) --h;
            out.predicted[l - 1] = h;
        }
    }
    out.match = out.measured == out.predicted;
    return out;
}

}  // namespace nilorb
