#pragma once

#include <string>
#include <vector>

namespace nilorb {

struct SelftestResult {
    int passed = 0;
    int failed = 0;
    std::vector<std::string> failures;
};

// Compact built-in battery: hom-oracle vs formula, classification round
// trips, order-route agreement, normal-form round trips, the explicit n = 3
// invariant identities.
SelftestResult run_selftest();

}  // namespace nilorb
