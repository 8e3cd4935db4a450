#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "nilorb/blockdata.hpp"
#include "nilorb/matrix.hpp"
#include "vendor_json_fwd.hpp"

namespace nilorb {

enum class FinitenessReason { XLe2, MaximalX3, SingleBlockJordan, InfiniteWithWitness };
enum class WitnessKind { D, E, F };

std::string to_string(FinitenessReason r);
std::string to_string(WitnessKind k);

// The action of P on the x-nilpotent cone has finitely many orbits iff
// x <= 2, or p = 1 (Jordan theory), or p = 2 and x = 3.
struct FinitenessVerdict {
    bool finite;
    FinitenessReason reason;
    std::optional<WitnessKind> witness;
};

FinitenessVerdict is_finite(const BlockData& blocks, int x);

// One member of the witness family for lambda != 0:
//   D: the flag-adapted three-point family e_{d1} -> e_{d2} + lambda e_n,
//      e_{d2} -> e_n; 3-nilpotent, pairwise non-conjugate for p >= 3.
//   E: the 4x4 lower unitriangular family embedded across the block boundary
//      of a maximal parabolic with both blocks >= 2; 4-nilpotent.
//   F: the classical 4x4 degree-4 family for block sizes (1, n-1), embedded
//      at the top left; mirrored for (n-1, 1). Caution: its members are in
//      fact P-conjugate (are_conjugate produces exact conjugators), so it
//      does not certify an infinite orbit count; see the README.
// The result is checked to be x-nilpotent; a failure is a construction
// defect and raises.
Mat witness_family(WitnessKind kind, const BlockData& blocks, int x, const Rat& lambda);

struct ConjugacyResult {
    enum class Status { Yes, No, Unknown } status;
    std::optional<Mat> g;       // exact witness for yes
    nlohmann::json certificate; // intertwiner dimension, trials, error bound
};

// Decides whether N' = g N g^-1 for some g in P. The intertwiner space
// {g with the block pattern : g N = N' g} is computed exactly; invertibility
// of a generic element is detected by randomized exact evaluation of the
// determinant with a degree bound.
ConjugacyResult are_conjugate(const Mat& n, const Mat& np, const BlockData& blocks,
                              uint64_t seed, int trials = 10);

}  // namespace nilorb
