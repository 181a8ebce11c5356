#pragma once

#include <vector>

#include "engeltori/validation.hpp"

namespace engeltori::knots {

// A braid word on `strands` strands. Letters are signed Artin generators:
// +i encodes sigma_i and -i encodes sigma_i^{-1}, with 1 <= i <= strands-1.
// The closure of the word is the link the calculus actually works with.
struct BraidWord {
    int strands = 1;
    std::vector<int> word;

    int exponent_sum() const;
    bool operator==(const BraidWord&) const = default;
};

// Checks strand count, letter ranges, and traces the closure permutation.
// Component count = number of permutation cycles.
ValidationReport validate_braid(const BraidWord& b);

// Self-linking number of the closure: exponent sum minus strand count.
// Requires a valid word whose closure is a knot; throws MultiComponentError
// otherwise.
long long sl_of_braid(const BraidWord& b);

// Markov stabilization: one extra strand plus one letter sigma_n^{sign} at the
// end (n = the old strand count). sign=-1 drops sl by 2; sign=+1 preserves it.
// Either move keeps the closure's smooth isotopy class.
BraidWord markov_stabilize(const BraidWord& b, int sign);

}  // namespace engeltori::knots
