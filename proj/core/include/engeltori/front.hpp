#pragma once

#include <utility>
#include <vector>

#include "engeltori/validation.hpp"

namespace engeltori::knots {

enum class EventKind { LeftCusp, RightCusp, Crossing };

struct FrontEvent {
    EventKind kind;
    int pos = 0;
    bool operator==(const FrontEvent&) const = default;
};

// A front diagram read left to right as a sequence of Morse events acting on a
// stack of strand slots; slot 0 is the lowest strand.
//
//   LeftCusp(p):  inserts two strands at slots p (lower branch), p+1 (upper)
//   RightCusp(p): caps the strands at slots p, p+1
//   Crossing(p):  transposes the strands at slots p, p+1
//
// The strand count starts and ends at 0, so the traced 1-manifold is closed.
// The empty word is rejected: it traces no component at all.
struct FrontWord {
    std::vector<FrontEvent> events;
    bool operator==(const FrontWord&) const = default;
};

ValidationReport validate_front(const FrontWord& f);

enum class CuspClass { Up, Down };

// Orientation data for a one-component front. The canonical orientation
// traverses the lower branch of the first cusp rightward; reverse=true picks
// the other orientation. Crossing signs follow the right-hand rule with the
// over-strand the one of lesser slope, which boils down to: sign = +1 iff the
// two strands run in the same horizontal direction (see docs/conventions.md).
struct OrientedFront {
    FrontWord front;
    std::vector<std::pair<int, CuspClass>> cusps;  // (event index, class)
    std::vector<std::pair<int, int>> crossings;    // (event index, +1/-1)
    int up_cusps = 0;
    int down_cusps = 0;
    long long writhe = 0;  // sum of crossing signs
};

OrientedFront orient_front(const FrontWord& f, bool reverse = false);

// Thurston-Bennequin number: writhe minus half the cusp count. Orientation
// independent.
long long tb_of_front(const FrontWord& f);

// Rotation number: (down cusps - up cusps) / 2 in the chosen orientation.
// Negating the orientation negates the result.
long long rot_of_front(const FrontWord& f, bool reverse = false);

// Inserts one zigzag (a LeftCusp-RightCusp pair in adjacent columns) right
// after the first cusp: tb drops by 1 and rot moves by `sign` in the
// canonical orientation.
FrontWord legendrian_stabilize(const FrontWord& f, int sign);

}  // namespace engeltori::knots
