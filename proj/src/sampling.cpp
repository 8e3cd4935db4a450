#include "nilorb/sampling.hpp"

#include "nilorb/linalg.hpp"

namespace nilorb {

namespace {

Mat sample_parabolic(const BlockData& blocks, Rng& rng) {
    int n = blocks.n();
    for (;;) {
        Mat g(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (blocks.in_pattern(i, j)) g(i, j) = (i == j) ? Rat(1) + rng.small_rat() : rng.small_rat();
        if (det(g) != 0) return g;
    }
}

Mat sample_unipotent(int n, Rng& rng) {
    Mat u = Mat::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) u(i, j) = rng.small_rat();
    return u;
}

Mat sample_nilpotent_impl(int n, int x, Rng& rng) {
    if (x < 1 || x > n) throw DomainError("nilpotency bound x must satisfy 1 <= x <= n");
    // Strictly lower staircase: consecutive runs of length <= x, nonzero
    // subdiagonal entries inside each run. Degree = longest run <= x.
    Mat n0(n, n);
    int pos = 0;
    while (pos < n) {
        int m = std::min<int>(x, n - pos);
        int len = int(std::max(rng.uniform(1, m), rng.uniform(1, m)));
        for (int i = 1; i < len; ++i) n0(pos + i, pos + i - 1) = rng.small_rat_nonzero();
        pos += len;
    }
    // Conjugate by g = L*U with unit-triangular factors; exact inverse.
    Mat l = sample_unipotent(n, rng).transpose();
    Mat u = sample_unipotent(n, rng);
    Mat g = l * u;
    Mat gi = *inverse(u) * *inverse(l);
    return g * n0 * gi;
}

}  // namespace

Mat sample(SampleKind kind, const BlockData& blocks, int x, uint64_t seed) {
    Rng rng(seed);
    switch (kind) {
        case SampleKind::Parabolic: return sample_parabolic(blocks, rng);
        case SampleKind::Unipotent: return sample_unipotent(blocks.n(), rng);
        case SampleKind::Nilpotent: return sample_nilpotent_impl(blocks.n(), x, rng);
    }
    throw DomainError("unknown sample kind");
}

Mat sample_nilpotent(int n, int x, uint64_t seed) {
    Rng rng(seed);
    return sample_nilpotent_impl(n, x, rng);
}

}  // namespace nilorb
