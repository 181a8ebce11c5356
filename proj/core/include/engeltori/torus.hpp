#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "engeltori/abelian_group.hpp"
#include "engeltori/braid.hpp"
#include "engeltori/front.hpp"

namespace engeltori::tori {

using homology::FgAbGroup;
using homology::GradedGroup;
using homology::Int;

// Product transverse torus S^1 x K sitting inside the standard neighborhood
// S^1 x D^3_R of a closed transverse curve (the core). The core is symbolic:
// closed transverse curves are all transversely isotopic, so only the label
// travels along. The profile braid presents K; it must close to a knot.
struct TransverseTorusModel {
    std::string core;
    knots::BraidWord profile;
    // Negative Markov moves applied through stabilize_torus. Each move keeps
    // the smooth isotopy class, so a nonzero count records "same smooth torus,
    // different transverse presentation".
    int stabilizations_from_base = 0;
    // The torus bounds S^1 x (Seifert surface of K) inside the model.
    bool nullhomologous = true;
};

// Legendrian product torus S^1 x K for a Legendrian knot K (front profile) in
// a closed oriented 3-manifold N with the supplied homology.
struct LegendrianTorusModel {
    knots::FrontWord profile;
    GradedGroup ambient_homology;  // H_*(N), degrees 0..3
    bool profile_nullhomologous = true;
    int stabilizations_from_base = 0;
};

// Named bases the degree-2 complement classes are written in.
//   AlphaBeta: the two meridian generators (alpha, beta) of the rank-2 group
//              for a transverse torus; coords = (alpha, beta).
//   S1MuK:     the distinguished S^1 x meridian summand for a Legendrian
//              torus; coords = (mu coefficient).
enum class BasisKind { AlphaBeta, S1MuK };

struct HomClass {
    BasisKind basis = BasisKind::AlphaBeta;
    std::vector<Int> coords;
};

enum class Outcome { Distinct, Inconclusive };

// Distinct carries a certificate: the two (distinct) divisibilities. Equal
// divisibilities are never evidence of isotopy, only of this invariant's
// silence, hence Inconclusive.
struct Verdict {
    Outcome outcome = Outcome::Inconclusive;
    std::optional<std::pair<Int, Int>> divisibilities;
};

struct ComplementGroup {
    FgAbGroup group;
    BasisKind basis = BasisKind::AlphaBeta;
};

// Builds the product torus over a knot profile. MultiComponentError when the
// profile closes to a link.
TransverseTorusModel build_product_torus(std::string core, knots::BraidWord profile);

// Degree-2 complement class of the push-off: sl(profile) * alpha + 0 * beta.
HomClass self_linking_class(const TransverseTorusModel& t);

// n-fold transverse stabilization = n negative Markov moves on the profile.
TransverseTorusModel stabilize_torus(TransverseTorusModel t, int n);

// H_2 of the transverse-torus complement under the two standing hypotheses
// (H_3(ambient) = 0 and the torus nullhomologous): free of rank 2 on the
// meridians alpha, beta. HypothesisViolatedError when either flag is false.
ComplementGroup complement_h2_transverse(bool ambient_h3_zero,
                                         bool torus_nullhomologous);

// H_2 of the complement of a Legendrian product torus in S^1 x N:
// H_1(N) + H_2(N) + Z, the distinguished Z spanned by S^1 x mu_K. Throws
// NotClosed3ManifoldError when `ambient` cannot be a closed oriented
// 3-manifold's homology (H_0 = Z, H_3 = Z, H_2 free, support <= 3).
ComplementGroup complement_h2_product(const GradedGroup& ambient);

// Degree-2 complement class of the Legendrian push-off: tb(profile) * mu.
HomClass tb_class(const LegendrianTorusModel& l);

Int class_divisibility(const HomClass& c);

// Compares two classes written in the same named basis by divisibility.
// BasisMismatchError when the bases (or coordinate lengths) differ.
Verdict distinguish(const HomClass& c1, const HomClass& c2);

struct FamilyMember {
    int index = 0;              // stabilizations from the base
    long long knot_invariant = 0;  // sl (transverse) or tb (legendrian)
    HomClass cls;
    Int divisibility;
};

struct PairVerdict {
    int i = 0, j = 0;
    Verdict verdict;
};

// Family report for the stabilization construction. `implemented_ladder` is
// the invariant sequence the calculus actually produces (sl steps by -2 per
// transverse stabilization); `unit_step_ladder` is the base-minus-n sequence
// reported alongside for comparison. For Legendrian families the two agree.
struct TheoremFamilyReport {
    std::string kind;  // "transverse" | "legendrian"
    std::vector<FamilyMember> members;
    std::vector<PairVerdict> pairs;
    bool all_distinct = false;
    bool smoothly_isotopic = true;
    std::vector<long long> implemented_ladder;
    std::vector<long long> unit_step_ladder;
};

// Transverse family: base torus plus `count` successive stabilizations.
TheoremFamilyReport theorem_family(const knots::BraidWord& base, int count);

// Legendrian family over ambient N (its graded homology).
TheoremFamilyReport theorem_family(const knots::FrontWord& base,
                                   const GradedGroup& ambient, int count,
                                   bool nullhomologous = true);

}  // namespace engeltori::tori
