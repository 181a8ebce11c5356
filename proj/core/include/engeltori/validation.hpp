#pragma once

#include <string>
#include <vector>

namespace engeltori::knots {

// Outcome of validating a braid word or a front word. `violations` holds one
// human-readable line per problem; `components` counts the components of the
// traced closure (0 when the word is too broken to trace).
struct ValidationReport {
    bool valid = false;
    std::vector<std::string> violations;
    int components = 0;
    // Braid reports only: closure_permutation[j] is the strand that ends at
    // position j after the whole word. Empty for fronts.
    std::vector<int> closure_permutation;
};

}  // namespace engeltori::knots
