#pragma once

#include <vector>

#include "engeltori/int_matrix.hpp"

namespace engeltori::homology {

// Finitely generated abelian group Z^free_rank + Z/d1 + Z/d2 + ... in
// canonical invariant-factor form: every di >= 2 and d1 | d2 | ... The
// canonical form makes equality of groups plain field equality.
struct FgAbGroup {
    int free_rank = 0;
    std::vector<Int> invariant_factors;

    bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
    bool is_torsion_free() const { return invariant_factors.empty(); }

    static FgAbGroup free_group(int rank);
    static FgAbGroup cyclic(const Int& n);  // n = 0 gives Z, n = 1 the trivial group

    bool operator==(const FgAbGroup&) const = default;
};

// A group per degree. Trailing trivial groups are insignificant: at(k) is the
// trivial group beyond the stored support, and equality ignores them.
struct GradedGroup {
    std::vector<FgAbGroup> groups;

    const FgAbGroup& at(int k) const;
    int support() const;  // 1 + largest degree with a nontrivial group (0 if none)

    friend bool operator==(const GradedGroup& a, const GradedGroup& b);
};

// Cokernel of A viewed as a map Z^cols -> Z^rows: the abelian group with one
// generator per row and one relation per column.
FgAbGroup group_from_presentation(const IntMatrix& a);

// Canonicalizes Z^free_rank + sum of Z/order (orders may be arbitrary
// nonnegative integers; 0 contributes a Z, 1 contributes nothing).
FgAbGroup canonical_form(int free_rank, std::vector<Int> cyclic_orders);

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b);
FgAbGroup tensor_group(const FgAbGroup& a, const FgAbGroup& b);
FgAbGroup tor_group(const FgAbGroup& a, const FgAbGroup& b);

// Degreewise prediction for the homology of a product:
//   T_k = sum_{i+j=k} A_i x B_j  +  sum_{i+j=k-1} Tor(A_i, B_j).
GradedGroup kunneth_predict(const GradedGroup& a, const GradedGroup& b);

// Reduced homology of the complement of a compact K inside the n-sphere:
// reduced H_i(complement) = reduced H^{n-i-1}(K), with cohomology obtained
// from the input homology by universal coefficients.
GradedGroup alexander_duality(int sphere_dim, const GradedGroup& k);

// Divisibility of a class in the free part of g: gcd of the free coordinates
// (0 for the zero vector). v carries the free coordinates first; torsion
// coordinates, when present, must be zero (TorsionCoordinateError otherwise).
Int divisibility(const std::vector<Int>& v, const FgAbGroup& g);

bool is_primitive(const std::vector<Int>& v, const FgAbGroup& g);

}  // namespace engeltori::homology
