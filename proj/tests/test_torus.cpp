#include <utility>

#include "doctest.h"
#include "engeltori/errors.hpp"
#include "engeltori/invariants.hpp"
#include "engeltori/torus.hpp"
#include "support/test_support.hpp"

using namespace engeltori;
using homology::FgAbGroup;
using homology::GradedGroup;
using homology::Int;
using knots::BraidWord;
using knots::EventKind;
using knots::FrontWord;
using tori::BasisKind;
using tori::HomClass;
using tori::Outcome;

namespace {
FgAbGroup grp(int free, std::vector<Int> torsion) {
    return FgAbGroup{free, std::move(torsion)};
}
GradedGroup graded(std::vector<FgAbGroup> gs) { return GradedGroup{std::move(gs)}; }
const FgAbGroup kZ = FgAbGroup::free_group(1);
const FgAbGroup kTrivial{};

FrontWord ev(std::initializer_list<std::pair<char, int>> list) {
    FrontWord f;
    for (auto [k, p] : list)
        f.events.push_back({k == 'L'   ? EventKind::LeftCusp
                            : k == 'R' ? EventKind::RightCusp
                                       : EventKind::Crossing,
                            p});
    return f;
}

const BraidWord kUnknotBraid{1, {}};
const BraidWord kTrefoilBraid{2, {1, 1, 1}};
const BraidWord kCinquefoilBraid{2, {1, 1, 1, 1, 1}};
const FrontWord kUnknotFront = ev({{'L', 0}, {'R', 0}});

GradedGroup sphere3() { return graded({kZ, kTrivial, kTrivial, kZ}); }

HomClass ab_class(std::vector<Int> coords) {
    return HomClass{BasisKind::AlphaBeta, std::move(coords)};
}
}  // namespace

TEST_SUITE("torus") {

TEST_CASE("build_product_torus accepts knots and rejects everything else") {
    tori::TransverseTorusModel t = tori::build_product_torus("core", kTrefoilBraid);
    CHECK(t.core == "core");
    CHECK(t.profile.strands == 2);
    CHECK(t.stabilizations_from_base == 0);
    CHECK(t.nullhomologous);

    CHECK_THROWS_AS(tori::build_product_torus("core", BraidWord{2, {}}),
                    MultiComponentError);
    CHECK_THROWS_AS(tori::build_product_torus("core", BraidWord{2, {9}}),
                    InvalidInputError);
}

TEST_CASE("self_linking_class is sl times alpha") {
    auto check_class = [](const BraidWord& b, long long sl) {
        HomClass c = tori::self_linking_class(tori::build_product_torus("core", b));
        CHECK(c.basis == BasisKind::AlphaBeta);
        REQUIRE(c.coords.size() == 2);
        CHECK(c.coords[0] == Int(sl));
        CHECK(c.coords[1] == 0);
    };
    check_class(kUnknotBraid, -1);
    check_class(kTrefoilBraid, 1);
    check_class(kCinquefoilBraid, 3);
}

TEST_CASE("stabilize_torus counts moves and drops sl by two each") {
    tori::TransverseTorusModel t = tori::build_product_torus("core", kTrefoilBraid);
    tori::TransverseTorusModel s3 = tori::stabilize_torus(t, 3);
    CHECK(s3.stabilizations_from_base == 3);
    CHECK(s3.profile.strands == 5);
    CHECK(knots::sl_of_braid(s3.profile) == knots::sl_of_braid(t.profile) - 6);

    // Counts accumulate across calls and zero moves change nothing.
    tori::TransverseTorusModel chained =
        tori::stabilize_torus(tori::stabilize_torus(t, 1), 2);
    CHECK(chained.stabilizations_from_base == 3);
    CHECK(knots::sl_of_braid(chained.profile) ==
          knots::sl_of_braid(s3.profile));
    CHECK(tori::stabilize_torus(t, 0).profile.word == t.profile.word);

    CHECK_THROWS_AS(tori::stabilize_torus(t, -1), InvalidInputError);
}

TEST_CASE("complement_h2_transverse is free of rank two under the hypotheses") {
    tori::ComplementGroup g = tori::complement_h2_transverse(true, true);
    CHECK(g.group == grp(2, {}));
    CHECK(g.basis == BasisKind::AlphaBeta);

    CHECK_THROWS_AS(tori::complement_h2_transverse(false, true),
                    HypothesisViolatedError);
    CHECK_THROWS_AS(tori::complement_h2_transverse(true, false),
                    HypothesisViolatedError);
    try {
        tori::complement_h2_transverse(false, true);
        FAIL("expected a hypothesis violation");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Hypothesis);
    }
}

TEST_CASE("complement_h2_product on pinned ambient manifolds") {
    auto s1xs2 = graded({kZ, kZ, kZ, kZ});
    auto torus3 = graded({kZ, grp(3, {}), grp(3, {}), kZ});
    auto lens5 = graded({kZ, grp(0, {5}), kTrivial, kZ});

    CHECK(tori::complement_h2_product(sphere3()).group == kZ);
    CHECK(tori::complement_h2_product(s1xs2).group == grp(3, {}));
    CHECK(tori::complement_h2_product(torus3).group == grp(7, {}));
    CHECK(tori::complement_h2_product(lens5).group == grp(1, {5}));
    CHECK(tori::complement_h2_product(sphere3()).basis == BasisKind::S1MuK);
}

TEST_CASE("complement_h2_product rejects non-3-manifold homology") {
    // Disconnected.
    CHECK_THROWS_AS(
        tori::complement_h2_product(graded({grp(2, {}), kTrivial, kTrivial, kZ})),
        NotClosed3ManifoldError);
    // Torsion in degree zero.
    CHECK_THROWS_AS(
        tori::complement_h2_product(graded({grp(1, {2}), kTrivial, kTrivial, kZ})),
        NotClosed3ManifoldError);
    // Missing or oversized top class.
    CHECK_THROWS_AS(tori::complement_h2_product(graded({kZ, kZ, kTrivial})),
                    NotClosed3ManifoldError);
    CHECK_THROWS_AS(
        tori::complement_h2_product(graded({kZ, kTrivial, kTrivial, grp(2, {})})),
        NotClosed3ManifoldError);
    // Torsion in degree two contradicts Poincare duality.
    CHECK_THROWS_AS(
        tori::complement_h2_product(graded({kZ, kTrivial, grp(0, {2}), kZ})),
        NotClosed3ManifoldError);
    // Homology above degree three.
    CHECK_THROWS_AS(
        tori::complement_h2_product(graded({kZ, kTrivial, kTrivial, kZ, kZ})),
        NotClosed3ManifoldError);
}

TEST_CASE("tb_class is tb times mu with both hypotheses enforced") {
    tori::LegendrianTorusModel l{kUnknotFront, sphere3(), true, 0};
    HomClass c = tori::tb_class(l);
    CHECK(c.basis == BasisKind::S1MuK);
    REQUIRE(c.coords.size() == 1);
    CHECK(c.coords[0] == Int(-1));

    FrontWord stabbed = knots::legendrian_stabilize(
        knots::legendrian_stabilize(kUnknotFront, -1), -1);
    tori::LegendrianTorusModel l2{stabbed, sphere3(), true, 2};
    CHECK(tori::tb_class(l2).coords[0] == Int(-3));

    tori::LegendrianTorusModel bad_profile{kUnknotFront, sphere3(), false, 0};
    CHECK_THROWS_AS(tori::tb_class(bad_profile), HypothesisViolatedError);

    tori::LegendrianTorusModel bad_ambient{kUnknotFront, graded({kZ}), true, 0};
    CHECK_THROWS_AS(tori::tb_class(bad_ambient), NotClosed3ManifoldError);
}

TEST_CASE("class_divisibility is the gcd of the coordinates") {
    CHECK(tori::class_divisibility(ab_class({Int(6), Int(-4)})) == 2);
    CHECK(tori::class_divisibility(ab_class({Int(0), Int(0)})) == 0);
    CHECK(tori::class_divisibility(ab_class({Int(-7), Int(0)})) == 7);
    CHECK(tori::class_divisibility(HomClass{BasisKind::S1MuK, {Int(3)}}) == 3);
}

TEST_CASE("distinguish certifies unequal divisibilities and nothing more") {
    tori::Verdict v = tori::distinguish(ab_class({Int(1), Int(0)}),
                                        ab_class({Int(3), Int(0)}));
    CHECK(v.outcome == Outcome::Distinct);
    REQUIRE(v.divisibilities.has_value());
    CHECK(v.divisibilities->first == 1);
    CHECK(v.divisibilities->second == 3);

    // Equal gcds certify nothing, even with opposite signs.
    tori::Verdict same = tori::distinguish(ab_class({Int(3), Int(0)}),
                                           ab_class({Int(-3), Int(0)}));
    CHECK(same.outcome == Outcome::Inconclusive);
    REQUIRE(same.divisibilities.has_value());
    CHECK(same.divisibilities->first == same.divisibilities->second);

    CHECK_THROWS_AS(tori::distinguish(ab_class({Int(1), Int(0)}),
                                      HomClass{BasisKind::S1MuK, {Int(1)}}),
                    BasisMismatchError);
    CHECK_THROWS_AS(
        tori::distinguish(ab_class({Int(1), Int(0)}), ab_class({Int(1)})),
        BasisMismatchError);
}

TEST_CASE("sl of opposite sign collides: the calculus stays honest") {
    // Cinquefoil closure has sl 3; the unknot stabilized once has sl -3.
    HomClass a = tori::self_linking_class(
        tori::build_product_torus("core", kCinquefoilBraid));
    HomClass b = tori::self_linking_class(
        tori::stabilize_torus(tori::build_product_torus("core", kUnknotBraid), 1));
    CHECK(a.coords[0] == 3);
    CHECK(b.coords[0] == -3);
    CHECK(tori::distinguish(a, b).outcome == Outcome::Inconclusive);
}

TEST_CASE("transverse family over the unknot separates all members") {
    tori::TheoremFamilyReport r = tori::theorem_family(kUnknotBraid, 10);
    CHECK(r.kind == "transverse");
    REQUIRE(r.members.size() == 11);
    REQUIRE(r.pairs.size() == 55);
    CHECK(r.all_distinct);
    CHECK(r.smoothly_isotopic);

    for (int n = 0; n <= 10; ++n) {
        CAPTURE(n);
        CHECK(r.members[n].index == n);
        CHECK(r.members[n].knot_invariant == -1 - 2 * n);
        CHECK(r.members[n].divisibility == Int(1 + 2 * n));
        CHECK(r.members[n].cls.basis == BasisKind::AlphaBeta);
        CHECK(r.implemented_ladder[n] == -1 - 2 * n);
        CHECK(r.unit_step_ladder[n] == -1 - n);
    }
    for (const tori::PairVerdict& pv : r.pairs) {
        CHECK(pv.verdict.outcome == Outcome::Distinct);
        CHECK(pv.verdict.divisibilities.has_value());
    }
}

TEST_CASE("legendrian family over the unknot walks tb down by one") {
    tori::TheoremFamilyReport r =
        tori::theorem_family(kUnknotFront, sphere3(), 10);
    CHECK(r.kind == "legendrian");
    REQUIRE(r.members.size() == 11);
    CHECK(r.all_distinct);
    CHECK(r.implemented_ladder == r.unit_step_ladder);
    for (int n = 0; n <= 10; ++n) {
        CAPTURE(n);
        CHECK(r.members[n].knot_invariant == -1 - n);
        CHECK(r.members[n].divisibility == Int(1 + n));
        CHECK(r.members[n].cls.basis == BasisKind::S1MuK);
    }
}

TEST_CASE("family edge cases") {
    // sl 1 and sl -1 share divisibility 1: the invariant goes silent.
    tori::TheoremFamilyReport trefoil = tori::theorem_family(kTrefoilBraid, 1);
    CHECK_FALSE(trefoil.all_distinct);
    REQUIRE(trefoil.pairs.size() == 1);
    CHECK(trefoil.pairs[0].verdict.outcome == Outcome::Inconclusive);

    // A one-member family is vacuously distinct.
    tori::TheoremFamilyReport single = tori::theorem_family(kUnknotBraid, 0);
    CHECK(single.members.size() == 1);
    CHECK(single.pairs.empty());
    CHECK(single.all_distinct);

    CHECK_THROWS_AS(tori::theorem_family(kUnknotBraid, -1), InvalidInputError);
    CHECK_THROWS_AS(tori::theorem_family(kUnknotFront, sphere3(), -2),
                    InvalidInputError);

    // The legendrian construction refuses bad hypotheses outright.
    CHECK_THROWS_AS(tori::theorem_family(kUnknotFront, sphere3(), 2, false),
                    HypothesisViolatedError);
    CHECK_THROWS_AS(tori::theorem_family(kUnknotFront, graded({kZ, kZ}), 2),
                    NotClosed3ManifoldError);
}

TEST_CASE("family divisibilities over random knot profiles") {
    for (int iter = 0; iter < 25; ++iter) {
        BraidWord b = testsupport::random_knot_braid();
        tori::TheoremFamilyReport r = tori::theorem_family(b, 4);
        long long base = knots::sl_of_braid(b);
        CAPTURE(iter);
        for (int n = 0; n <= 4; ++n) {
            CHECK(r.members[n].knot_invariant == base - 2 * n);
            Int expect = Int(base - 2 * n);
            if (expect < 0) expect = -expect;
            CHECK(r.members[n].divisibility == expect);
        }
    }
}

}  // TEST_SUITE
