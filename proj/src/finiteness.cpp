#include "nilorb/finiteness.hpp"

#include "nilorb/linalg.hpp"
#include "nilorb/sampling.hpp"

namespace nilorb {

std::string to_string(FinitenessReason r) {
    switch (r) {
        case FinitenessReason::XLe2: return "x_le_2";
        case FinitenessReason::MaximalX3: return "maximal_x3";
        case FinitenessReason::SingleBlockJordan: return "single_block_jordan";
        case FinitenessReason::InfiniteWithWitness: return "infinite_with_witness";
    }
    return "?";
}

std::string to_string(WitnessKind k) {
    switch (k) {
        case WitnessKind::D: return "D";
        case WitnessKind::E: return "E";
        case WitnessKind::F: return "F";
    }
    return "?";
}

FinitenessVerdict is_finite(const BlockData& blocks, int x) {
    if (x < 1 || x > blocks.n()) throw DomainError("nilpotency bound x must satisfy 1 <= x <= n");
    int p = blocks.p();
    if (x <= 2) return {true, FinitenessReason::XLe2, std::nullopt};
    if (p == 1) return {true, FinitenessReason::SingleBlockJordan, std::nullopt};
    if (p == 2 && x == 3) return {true, FinitenessReason::MaximalX3, std::nullopt};
    if (p >= 3) return {false, FinitenessReason::InfiniteWithWitness, WitnessKind::D};
    // p == 2, x >= 4
    WitnessKind k = (std::min(blocks.block(1), blocks.block(2)) >= 2) ? WitnessKind::E : WitnessKind::F;
    return {false, FinitenessReason::InfiniteWithWitness, k};
}

namespace {

// Three-point family adapted to the first two flag steps:
//   e_{d1} -> e_{d2} + lambda e_n,   e_{d2} -> e_n.
// The ratio of the two rank-one composites F_1 -> V/F_2 recovers lambda, so
// distinct parameters land in distinct orbits for every p >= 3 blocking. At
// the smallest case (Borel, n = 3) this is exactly the classical matrix with
// unit subdiagonal and lambda in the corner.
Mat witness_d(const BlockData& blocks, const Rat& lambda) {
    int n = blocks.n();
    Mat m(n, n);
    m(blocks.d(2) - 1, blocks.d(1) - 1) = 1;
    m(n - 1, blocks.d(1) - 1) = lambda;
    m(n - 1, blocks.d(2) - 1) = 1;
    return m;
}

Mat e_core(const Rat& lambda) {
    Mat e(4, 4);
    e(1, 0) = 1;
    e(2, 0) = 1;
    e(2, 1) = 1;
    e(3, 0) = lambda;
    e(3, 1) = 1;
    e(3, 2) = 1;
    return e;
}

Mat f_core(const Rat& lambda) {
    Mat f(4, 4);
    f(0, 0) = 1;
    f(0, 1) = 1;
    f(1, 0) = -1;
    f(1, 1) = -1;
    f(2, 0) = lambda - 1;
    f(2, 1) = lambda;
    f(2, 2) = -1;
    f(2, 3) = 1;
    f(3, 0) = lambda;
    f(3, 1) = lambda - 1;
    f(3, 2) = -1;
    f(3, 3) = 1;
    return f;
}

Mat embed(const Mat& core, int n, int offset) {
    Mat m(n, n);
    for (int i = 0; i < core.rows(); ++i)
        for (int j = 0; j < core.cols(); ++j) m(offset + i, offset + j) = core(i, j);
    return m;
}

}  // namespace

Mat witness_family(WitnessKind kind, const BlockData& blocks, int x, const Rat& lambda) {
    if (lambda == 0) throw DomainError("witness parameter must be nonzero");
    int n = blocks.n();
    Mat m;
    switch (kind) {
        case WitnessKind::D:
            if (blocks.p() < 3 || x < 3) throw DomainError("witness D applies to p >= 3, x >= 3");
            m = witness_d(blocks, lambda);
            break;
        case WitnessKind::E: {
            if (blocks.p() != 2 || x < 4) throw DomainError("witness E applies to p = 2, x >= 4");
            if (blocks.block(1) < 2 || blocks.block(2) < 2)
                throw DomainError("witness E needs both blocks >= 2");
            // Straddle the block boundary: two rows in each block.
            m = embed(e_core(lambda), n, blocks.d(1) - 2);
            break;
        }
        case WitnessKind::F: {
            if (blocks.p() != 2 || x < 4) throw DomainError("witness F applies to p = 2, x >= 4");
            if (std::min(blocks.block(1), blocks.block(2)) != 1)
                throw DomainError("witness F needs a block of size 1");
            if (blocks.block(1) == 1) {
                m = embed(f_core(lambda), n, 0);
            } else {
                // Mirror through the antidiagonal for block sizes (n-1, 1).
                Mat core = f_core(lambda);
                Mat flipped(4, 4);
                for (int i = 0; i < 4; ++i)
                    for (int j = 0; j < 4; ++j) flipped(i, j) = core(3 - j, 3 - i);
                m = embed(flipped, n, n - 4);
            }
            break;
        }
    }
    auto deg = nilpotency_degree(m);
    if (!deg || *deg > x)
        throw DomainError("witness construction defect: result is not x-nilpotent");
    return m;
}

ConjugacyResult are_conjugate(const Mat& n, const Mat& np, const BlockData& blocks,
                              uint64_t seed, int trials) {
    if (!n.is_square() || !np.is_square() || n.rows() != np.rows() || n.rows() != blocks.n())
        throw DomainError("conjugacy test needs matrices of size n matching the block data");
    int sz = blocks.n();
    if (n == np) {
        nlohmann::json cert;
        cert["type"] = "identical_inputs";
        return {ConjugacyResult::Status::Yes, Mat::identity(sz), cert};
    }

    // Unknowns: the block-pattern entries of g; constraints: g N = N' g.
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < sz; ++i)
        for (int j = 0; j < sz; ++j)
            if (blocks.in_pattern(i, j)) slots.emplace_back(i, j);
    Mat sys(sz * sz, int(slots.size()));
    for (size_t v = 0; v < slots.size(); ++v) {
        auto [gi, gj] = slots[v];
        // d/dg_{gi,gj} of (g N - N' g)_{r,c}
        for (int c = 0; c < sz; ++c)
            if (n(gj, c) != 0) sys(gi * sz + c, int(v)) += n(gj, c);
        for (int r = 0; r < sz; ++r)
            if (np(r, gi) != 0) sys(r * sz + gj, int(v)) -= np(r, gi);
    }
    Mat basis = null_space(sys);
    int m = basis.cols();
    nlohmann::json cert;
    cert["intertwiner_dim"] = m;
    if (m == 0) {
        cert["type"] = "zero_intertwiner_space";
        return {ConjugacyResult::Status::No, std::nullopt, cert};
    }
    if (trials < 1) {
        cert["type"] = "budget_exhausted";
        return {ConjugacyResult::Status::Unknown, std::nullopt, cert};
    }

    constexpr int64_t kBound = int64_t(1) << 62;
    Rng rng(seed);
    nlohmann::json transcript = nlohmann::json::array();
    for (int trial = 0; trial < trials; ++trial) {
        Mat g(sz, sz);
        std::vector<Rat> coeffs(m);
        for (int k = 0; k < m; ++k) coeffs[k] = Rat(Int(rng.uniform(-kBound, kBound)));
        for (size_t v = 0; v < slots.size(); ++v) {
            auto [gi, gj] = slots[v];
            Rat val = 0;
            for (int k = 0; k < m; ++k) val += basis(int(v), k) * coeffs[k];
            g(gi, gj) = val;
        }
        Rat dg = det(g);
        transcript.push_back({{"trial", trial}, {"det_zero", dg == 0}});
        if (dg != 0) {
            cert["type"] = "invertible_intertwiner";
            cert["trials"] = trial + 1;
            return {ConjugacyResult::Status::Yes, g, cert};
        }
    }
    // All sampled determinants vanished: declare the determinant polynomial
    // zero, with the Schwartz-Zippel style bound recorded.
    cert["type"] = "pit_zero_determinant";
    cert["trials"] = trials;
    cert["degree_bound"] = sz;
    cert["sample_space"] = "integers in [-2^62, 2^62]";
    Rat per = Rat(Int(sz), Int(2) * Int(kBound) + 1);
    Rat bound = 1;
    for (int k = 0; k < trials; ++k) bound *= per;
    cert["false_negative_bound"] = rat_to_string(bound);
    cert["transcript"] = transcript;
    return {ConjugacyResult::Status::No, std::nullopt, cert};
}

}  // namespace nilorb
