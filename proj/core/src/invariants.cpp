#include "engeltori/invariants.hpp"

#include "engeltori/errors.hpp"

namespace engeltori::knots {

ClassicalInvariants braid_invariants(const BraidWord& b) {
    ClassicalInvariants inv;
    inv.sl = sl_of_braid(b);  // validates and enforces the knot condition
    inv.components = 1;
    return inv;
}

ClassicalInvariants front_invariants(const FrontWord& f) {
    OrientedFront o = orient_front(f);
    ClassicalInvariants inv;
    inv.tb = o.writhe - static_cast<long long>(o.cusps.size()) / 2;
    inv.rot = (static_cast<long long>(o.down_cusps) - o.up_cusps) / 2;
    inv.components = 1;
    return inv;
}

long long transverse_pushoff(long long tb, long long rot, int sign) {
    if (sign != 1 && sign != -1)
        throw InvalidInputError("push-off sign must be +1 or -1");
    return sign > 0 ? tb - rot : tb + rot;
}

bool bennequin_check(long long sl, long long genus) {
    return sl <= 2 * genus - 1;
}

}  // namespace engeltori::knots
