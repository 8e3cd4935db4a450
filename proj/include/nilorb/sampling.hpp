#pragma once

#include <cstdint>
#include <random>

#include "nilorb/blockdata.hpp"
#include "nilorb/matrix.hpp"

namespace nilorb {

enum class SampleKind { Parabolic, Unipotent, Nilpotent };

// Deterministic PRNG wrapper; all draws reduce the raw engine output so that
// results are identical across platforms.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}
    uint64_t raw() { return eng_(); }
    // Uniform in [lo, hi].
    int64_t uniform(int64_t lo, int64_t hi) {
        return lo + int64_t(raw() % uint64_t(hi - lo + 1));
    }
    // Numerators in [-9,9], denominators in [1,9].
    Rat small_rat() {
        return Rat(Int(uniform(-9, 9)), Int(uniform(1, 9)));
    }
    Rat small_rat_nonzero() {
        Rat q = small_rat();
        while (q == 0) q = small_rat();
        return q;
    }

private:
    std::mt19937_64 eng_;
};

// kind = Parabolic: invertible block-upper-triangular matrix for `blocks`.
// kind = Unipotent: upper-triangular with unit diagonal.
// kind = Nilpotent: exact member of the x-nilpotent cone, built as g N0 g^-1
//   with N0 a random strictly-lower staircase satisfying N0^x = 0.
Mat sample(SampleKind kind, const BlockData& blocks, int x, uint64_t seed);

// Convenience for a random x-nilpotent n x n matrix.
Mat sample_nilpotent(int n, int x, uint64_t seed);

}  // namespace nilorb
