#pragma once

#include "engeltori/braid.hpp"
#include "engeltori/front.hpp"

namespace engeltori::knots {

// Classical invariant bundle attached to one knot presentation. For a braid
// only sl is meaningful; for a front, tb and rot.
struct ClassicalInvariants {
    long long sl = 0;
    long long tb = 0;
    long long rot = 0;
    int components = 1;
};

ClassicalInvariants braid_invariants(const BraidWord& b);
ClassicalInvariants front_invariants(const FrontWord& f);

// Self-linking number of the positive (sign=+1) or negative (sign=-1)
// transverse push-off of a Legendrian knot: tb -/+ rot.
long long transverse_pushoff(long long tb, long long rot, int sign);

// Bennequin bound: sl <= 2*genus - 1 for a knot of the given Seifert genus.
bool bennequin_check(long long sl, long long genus);

}  // namespace engeltori::knots
