#include "engeltori/torus.hpp"

#include <string>

#include "engeltori/errors.hpp"
#include "engeltori/invariants.hpp"

namespace engeltori::tori {

namespace {
using boost::multiprecision::abs;
using boost::multiprecision::gcd;
}  // namespace

TransverseTorusModel build_product_torus(std::string core, knots::BraidWord profile) {
    (void)knots::sl_of_braid(profile);  // validates and enforces a knot closure
    TransverseTorusModel t;
    t.core = std::move(core);
    t.profile = std::move(profile);
    t.nullhomologous = true;  // bounds S^1 x (Seifert surface) in the model
    return t;
}

HomClass self_linking_class(const TransverseTorusModel& t) {
    // The push-off's class is sl(profile) * alpha; the beta coordinate
    // vanishes for product tori.
    long long sl = knots::sl_of_braid(t.profile);
    return HomClass{BasisKind::AlphaBeta, {Int(sl), Int(0)}};
}

TransverseTorusModel stabilize_torus(TransverseTorusModel t, int n) {
    if (n < 0)
        throw InvalidInputError("stabilization count must be nonnegative");
    for (int i = 0; i < n; ++i)
        t.profile = knots::markov_stabilize(t.profile, -1);
    t.stabilizations_from_base += n;
    return t;
}

ComplementGroup complement_h2_transverse(bool ambient_h3_zero,
                                         bool torus_nullhomologous) {
    if (!ambient_h3_zero)
        throw HypothesisViolatedError(
            "H_3 of the ambient manifold must vanish for the rank-2 "
            "complement description");
    if (!torus_nullhomologous)
        throw HypothesisViolatedError(
            "the torus must be nullhomologous for the rank-2 complement "
            "description");
    return ComplementGroup{FgAbGroup::free_group(2), BasisKind::AlphaBeta};
}

ComplementGroup complement_h2_product(const GradedGroup& ambient) {
    const FgAbGroup& h0 = ambient.at(0);
    const FgAbGroup& h2 = ambient.at(2);
    const FgAbGroup& h3 = ambient.at(3);
    if (!(h0.free_rank == 1 && h0.is_torsion_free()))
        throw NotClosed3ManifoldError(
            "H_0 must be Z for a connected closed oriented 3-manifold");
    if (!(h3.free_rank == 1 && h3.is_torsion_free()))
        throw NotClosed3ManifoldError(
            "H_3 must be Z for a closed oriented 3-manifold");
    if (!h2.is_torsion_free())
        throw NotClosed3ManifoldError(
            "H_2 of a closed oriented 3-manifold is torsion-free");
    if (ambient.support() > 4)
        throw NotClosed3ManifoldError(
            "homology above degree 3 contradicts a 3-manifold");

    // H_2 of the product-torus complement: H_1(N) + H_2(N) + Z, the last
    // summand spanned by S^1 x (meridian of K).
    FgAbGroup g = homology::direct_sum(ambient.at(1), h2);
    g = homology::direct_sum(g, FgAbGroup::free_group(1));
    return ComplementGroup{std::move(g), BasisKind::S1MuK};
}

HomClass tb_class(const LegendrianTorusModel& l) {
    if (!l.profile_nullhomologous)
        throw HypothesisViolatedError(
            "tb_class needs a nullhomologous Legendrian profile");
    (void)complement_h2_product(l.ambient_homology);  // hypothesis gate
    long long tb = knots::tb_of_front(l.profile);
    return HomClass{BasisKind::S1MuK, {Int(tb)}};
}

Int class_divisibility(const HomClass& c) {
    Int d = 0;
    for (const Int& x : c.coords) d = gcd(d, abs(x));
    return d;
}

Verdict distinguish(const HomClass& c1, const HomClass& c2) {
    if (c1.basis != c2.basis)
        throw BasisMismatchError(
            "classes live in different named bases; comparing their "
            "coordinates is meaningless");
    if (c1.coords.size() != c2.coords.size())
        throw BasisMismatchError("coordinate lengths differ: " +
                                 std::to_string(c1.coords.size()) + " vs " +
                                 std::to_string(c2.coords.size()));
    Int d1 = class_divisibility(c1);
    Int d2 = class_divisibility(c2);
    Verdict v;
    v.divisibilities = std::make_pair(d1, d2);
    // Divisibility is a basis-free invariant, so unequal values certify the
    // classes (hence the tori) are different. Equal values certify nothing.
    v.outcome = (d1 != d2) ? Outcome::Distinct : Outcome::Inconclusive;
    return v;
}

namespace {

TheoremFamilyReport finish_family(TheoremFamilyReport r, long long base_invariant) {
    const int count = static_cast<int>(r.members.size()) - 1;
    for (int n = 0; n <= count; ++n) {
        r.implemented_ladder.push_back(r.members[n].knot_invariant);
        r.unit_step_ladder.push_back(base_invariant - n);
    }
    r.all_distinct = true;
    for (size_t i = 0; i < r.members.size(); ++i)
        for (size_t j = i + 1; j < r.members.size(); ++j) {
            PairVerdict pv;
            pv.i = static_cast<int>(i);
            pv.j = static_cast<int>(j);
            pv.verdict = distinguish(r.members[i].cls, r.members[j].cls);
            if (pv.verdict.outcome != Outcome::Distinct) r.all_distinct = false;
            r.pairs.push_back(std::move(pv));
        }
    return r;
}

}  // namespace

TheoremFamilyReport theorem_family(const knots::BraidWord& base, int count) {
    if (count < 0)
        throw InvalidInputError("family size must be nonnegative");
    TheoremFamilyReport r;
    r.kind = "transverse";
    r.smoothly_isotopic = true;  // stabilization never changes the smooth type

    TransverseTorusModel t = build_product_torus("core", base);
    long long base_sl = knots::sl_of_braid(base);
    for (int n = 0; n <= count; ++n) {
        TransverseTorusModel tn = stabilize_torus(t, n);
        FamilyMember m;
        m.index = n;
        m.knot_invariant = knots::sl_of_braid(tn.profile);
        m.cls = self_linking_class(tn);
        m.divisibility = class_divisibility(m.cls);
        r.members.push_back(std::move(m));
    }
    return finish_family(std::move(r), base_sl);
}

TheoremFamilyReport theorem_family(const knots::FrontWord& base,
                                   const GradedGroup& ambient, int count,
                                   bool nullhomologous) {
    if (count < 0)
        throw InvalidInputError("family size must be nonnegative");
    TheoremFamilyReport r;
    r.kind = "legendrian";
    r.smoothly_isotopic = true;

    long long base_tb = knots::tb_of_front(base);
    knots::FrontWord profile = base;
    for (int n = 0; n <= count; ++n) {
        LegendrianTorusModel ln{profile, ambient, nullhomologous, n};
        FamilyMember m;
        m.index = n;
        m.knot_invariant = knots::tb_of_front(profile);
        m.cls = tb_class(ln);
        m.divisibility = class_divisibility(m.cls);
        r.members.push_back(std::move(m));
        // Either zigzag sense drops tb by one; alternate for variety's sake.
        profile = knots::legendrian_stabilize(profile, (n % 2 == 0) ? -1 : 1);
    }
    return finish_family(std::move(r), base_tb);
}

}  // namespace engeltori::tori
