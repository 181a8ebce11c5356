#include "engeltori/front.hpp"

#include <array>
#include <string>

#include "engeltori/errors.hpp"

namespace engeltori::knots {

namespace {

// Internal trace of a front word. A "piece" is a maximal strand segment: it is
// born as one branch of a LeftCusp, passes through any number of crossings,
// and dies as one branch of a RightCusp. Pieces are the edges of the knot
// cycle, so orientation is a walk over them.
struct TraceResult {
    bool valid = false;
    std::vector<std::string> violations;
    int components = 0;
    int n_pieces = 0;
    std::vector<int> birth_event;
    std::vector<int> death_event;
    // Indexed by event: LeftCusp -> {lower, upper} piece ids, RightCusp ->
    // {lower, upper} at cap time, Crossing -> {slot p, slot p+1} just before
    // the swap. {-1,-1} for events of the other kinds.
    std::vector<std::array<int, 2>> l_pieces;
    std::vector<std::array<int, 2>> r_pieces;
    std::vector<std::array<int, 2>> x_pieces;
};

TraceResult trace_front(const FrontWord& f) {
    TraceResult t;
    if (f.events.empty()) {
        t.violations.push_back("empty front word traces no component");
        return t;
    }
    const int m = static_cast<int>(f.events.size());
    t.l_pieces.assign(m, {-1, -1});
    t.r_pieces.assign(m, {-1, -1});
    t.x_pieces.assign(m, {-1, -1});

    std::vector<int> slots;   // piece id per live slot, bottom first
    std::vector<int> parent;  // union-find over pieces, for component count
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

    for (int e = 0; e < m; ++e) {
        const FrontEvent& ev = f.events[e];
        const int c = static_cast<int>(slots.size());
        switch (ev.kind) {
            case EventKind::LeftCusp: {
                if (ev.pos < 0 || ev.pos > c) {
                    t.violations.push_back(
                        "event " + std::to_string(e) + ": LeftCusp position " +
                        std::to_string(ev.pos) + " outside [0, " + std::to_string(c) + "]");
                    return t;
                }
                int lo = t.n_pieces++;
                int up = t.n_pieces++;
                parent.push_back(lo);
                parent.push_back(up);
                t.birth_event.insert(t.birth_event.end(), {e, e});
                t.death_event.insert(t.death_event.end(), {-1, -1});
                unite(lo, up);  // the two branches are one arc through the cusp
                slots.insert(slots.begin() + ev.pos, {lo, up});
                t.l_pieces[e] = {lo, up};
                break;
            }
            case EventKind::RightCusp: {
                if (ev.pos < 0 || ev.pos + 1 >= c) {
                    t.violations.push_back(
                        "event " + std::to_string(e) + ": RightCusp position " +
                        std::to_string(ev.pos) + " outside [0, " + std::to_string(c - 2) + "]");
                    return t;
                }
                int lo = slots[ev.pos];
                int up = slots[ev.pos + 1];
                t.death_event[lo] = e;
                t.death_event[up] = e;
                unite(lo, up);
                slots.erase(slots.begin() + ev.pos, slots.begin() + ev.pos + 2);
                t.r_pieces[e] = {lo, up};
                break;
            }
            case EventKind::Crossing: {
                if (ev.pos < 0 || ev.pos + 1 >= c) {
                    t.violations.push_back(
                        "event " + std::to_string(e) + ": Crossing position " +
                        std::to_string(ev.pos) + " outside [0, " + std::to_string(c - 2) + "]");
                    return t;
                }
                t.x_pieces[e] = {slots[ev.pos], slots[ev.pos + 1]};
                std::swap(slots[ev.pos], slots[ev.pos + 1]);
                break;
            }
        }
    }

    if (!slots.empty()) {
        t.violations.push_back("strand count ends at " +
                               std::to_string(slots.size()) + ", not 0");
        return t;
    }

    std::vector<char> root_seen(t.n_pieces, 0);
    for (int p = 0; p < t.n_pieces; ++p) {
        int r = find(p);
        if (!root_seen[r]) {
            root_seen[r] = 1;
            ++t.components;
        }
    }
    t.valid = true;
    return t;
}

TraceResult trace_knot_or_throw(const FrontWord& f, const char* op) {
    TraceResult t = trace_front(f);
    if (!t.valid)
        throw InvalidInputError(std::string(op) + ": invalid front word: " +
                                t.violations.front());
    if (t.components != 1)
        throw MultiComponentError(std::string(op) + ": front traces " +
                                  std::to_string(t.components) +
                                  " components; a knot is required");
    return t;
}

}  // namespace

ValidationReport validate_front(const FrontWord& f) {
    TraceResult t = trace_front(f);
    ValidationReport r;
    r.valid = t.valid;
    r.violations = std::move(t.violations);
    r.components = t.components;
    return r;
}

OrientedFront orient_front(const FrontWord& f, bool reverse) {
    TraceResult t = trace_knot_or_throw(f, "orient_front");

    // Walk the knot cycle. dir[p] = +1 traverses piece p left-to-right (birth
    // to death), -1 the other way. Anchor: the first cusp's lower branch runs
    // rightward in the canonical orientation.
    std::vector<int> dir(t.n_pieces, 0);
    const int start = t.l_pieces[0][0];
    int cur = start;
    int d = reverse ? -1 : +1;
    int visited = 0;
    do {
        dir[cur] = d;
        ++visited;
        if (d > 0) {
            auto [lo, up] = t.r_pieces[t.death_event[cur]];
            cur = (lo == cur) ? up : lo;
            d = -1;
        } else {
            auto [lo, up] = t.l_pieces[t.birth_event[cur]];
            cur = (lo == cur) ? up : lo;
            d = +1;
        }
    } while (cur != start);
    if (visited != t.n_pieces)
        throw MultiComponentError("orient_front: trace did not close over every strand");

    OrientedFront out;
    out.front = f;
    const int m = static_cast<int>(f.events.size());
    for (int e = 0; e < m; ++e) {
        switch (f.events[e].kind) {
            case EventKind::LeftCusp: {
                auto [lo, up] = t.l_pieces[e];
                // The branch running leftward enters the cusp; passing from the
                // upper branch to the lower one turns the knot downward.
                int incoming = (dir[lo] < 0) ? lo : up;
                CuspClass c = (incoming == up) ? CuspClass::Down : CuspClass::Up;
                out.cusps.emplace_back(e, c);
                (c == CuspClass::Down ? out.down_cusps : out.up_cusps)++;
                break;
            }
            case EventKind::RightCusp: {
                auto [lo, up] = t.r_pieces[e];
                int incoming = (dir[lo] > 0) ? lo : up;  // rightward branch arrives
                CuspClass c = (incoming == up) ? CuspClass::Down : CuspClass::Up;
                out.cusps.emplace_back(e, c);
                (c == CuspClass::Down ? out.down_cusps : out.up_cusps)++;
                break;
            }
            case EventKind::Crossing: {
                auto [asc, desc] = t.x_pieces[e];
                // Over-strand = lesser slope = the descending one; the sign
                // reduces to the product of the horizontal directions.
                int sign = dir[asc] * dir[desc];
                out.crossings.emplace_back(e, sign);
                out.writhe += sign;
                break;
            }
        }
    }
    return out;
}

long long tb_of_front(const FrontWord& f) {
    OrientedFront o = orient_front(f);
    return o.writhe - static_cast<long long>(o.cusps.size()) / 2;
}

long long rot_of_front(const FrontWord& f, bool reverse) {
    OrientedFront o = orient_front(f, reverse);
    return (static_cast<long long>(o.down_cusps) - o.up_cusps) / 2;
}

FrontWord legendrian_stabilize(const FrontWord& f, int sign) {
    if (sign != 1 && sign != -1)
        throw InvalidInputError("stabilization sign must be +1 or -1");
    trace_knot_or_throw(f, "legendrian_stabilize");

    // The canonical orientation sends the first cusp's lower branch rightward,
    // so a zigzag spliced into that strand right after event 0 has a
    // determined sense: cup below + cap above adds two down cusps (rot +1),
    // the mirrored pair adds two up cusps (rot -1). tb drops by 1 either way.
    FrontWord out = f;
    if (sign > 0) {
        out.events.insert(out.events.begin() + 1,
                          {FrontEvent{EventKind::LeftCusp, 0},
                           FrontEvent{EventKind::RightCusp, 1}});
    } else {
        out.events.insert(out.events.begin() + 1,
                          {FrontEvent{EventKind::LeftCusp, 1},
                           FrontEvent{EventKind::RightCusp, 0}});
    }
    return out;
}

}  // namespace engeltori::knots
