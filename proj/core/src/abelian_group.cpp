#include "engeltori/abelian_group.hpp"

#include <algorithm>
#include <string>

#include "engeltori/smith.hpp"

namespace engeltori::homology {

namespace {
using boost::multiprecision::abs;
using boost::multiprecision::gcd;

const FgAbGroup kTrivial{};

std::vector<Int> torsion_of(const FgAbGroup& g) { return g.invariant_factors; }
}  // namespace

FgAbGroup FgAbGroup::free_group(int rank) { return FgAbGroup{rank, {}}; }

FgAbGroup FgAbGroup::cyclic(const Int& n) {
    return canonical_form(0, {n});
}

const FgAbGroup& GradedGroup::at(int k) const {
    if (k < 0 || k >= static_cast<int>(groups.size())) return kTrivial;
    return groups[k];
}

int GradedGroup::support() const {
    for (int k = static_cast<int>(groups.size()); k-- > 0;)
        if (!groups[k].is_trivial()) return k + 1;
    return 0;
}

bool operator==(const GradedGroup& a, const GradedGroup& b) {
    int n = std::max(a.support(), b.support());
    for (int k = 0; k < n; ++k)
        if (!(a.at(k) == b.at(k))) return false;
    return true;
}

FgAbGroup group_from_presentation(const IntMatrix& a) {
    SmithForm s = smith_normal_form(a);
    FgAbGroup g;
    g.free_rank = a.rows() - s.rank();
    for (const Int& d : s.diagonal())
        if (d > 1) g.invariant_factors.push_back(d);
    return g;
}

FgAbGroup canonical_form(int free_rank, std::vector<Int> cyclic_orders) {
    std::vector<Int> torsion;
    for (Int& d : cyclic_orders) {
        if (d < 0) d = -d;
        if (d == 0)
            ++free_rank;  // Z/0 is Z
        else if (d > 1)
            torsion.push_back(std::move(d));
    }
    FgAbGroup g;
    if (!torsion.empty()) {
        // Let the Smith form of the diagonal presentation sort the factors
        // into the canonical dividing chain.
        int k = static_cast<int>(torsion.size());
        IntMatrix diag(k, k);
        for (int i = 0; i < k; ++i) diag.at(i, i) = torsion[i];
        g = group_from_presentation(diag);
    }
    g.free_rank += free_rank;
    return g;
}

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
    std::vector<Int> orders = a.invariant_factors;
    orders.insert(orders.end(), b.invariant_factors.begin(),
                  b.invariant_factors.end());
    return canonical_form(a.free_rank + b.free_rank, std::move(orders));
}

FgAbGroup tensor_group(const FgAbGroup& a, const FgAbGroup& b) {
    std::vector<Int> orders;
    // Z^r x Z/d = (Z/d)^r on either side; Z/d x Z/e = Z/gcd(d, e).
    for (const Int& d : a.invariant_factors)
        for (int i = 0; i < b.free_rank; ++i) orders.push_back(d);
    for (const Int& e : b.invariant_factors)
        for (int i = 0; i < a.free_rank; ++i) orders.push_back(e);
    for (const Int& d : a.invariant_factors)
        for (const Int& e : b.invariant_factors) orders.push_back(gcd(d, e));
    return canonical_form(a.free_rank * b.free_rank, std::move(orders));
}

FgAbGroup tor_group(const FgAbGroup& a, const FgAbGroup& b) {
    // Tor vanishes against free summands and is Z/gcd on cyclic ones.
    std::vector<Int> orders;
    for (const Int& d : a.invariant_factors)
        for (const Int& e : b.invariant_factors) orders.push_back(gcd(d, e));
    return canonical_form(0, std::move(orders));
}

GradedGroup kunneth_predict(const GradedGroup& a, const GradedGroup& b) {
    const int la = static_cast<int>(a.groups.size());
    const int lb = static_cast<int>(b.groups.size());
    GradedGroup out;
    if (la == 0 || lb == 0) return out;
    out.groups.resize(la + lb);  // tensor part ends at la+lb-2, Tor shifts by 1
    for (int k = 0; k < la + lb; ++k) {
        FgAbGroup g;
        for (int i = 0; i < la; ++i) {
            int j = k - i;
            if (j >= 0 && j < lb) g = direct_sum(g, tensor_group(a.groups[i], b.groups[j]));
            int jt = k - 1 - i;
            if (jt >= 0 && jt < lb) g = direct_sum(g, tor_group(a.groups[i], b.groups[jt]));
        }
        out.groups[k] = std::move(g);
    }
    return out;
}

GradedGroup alexander_duality(int sphere_dim, const GradedGroup& k) {
    const int n = sphere_dim;
    if (n < 1)
        throw InvalidInputError("sphere dimension must be at least 1, got " +
                                std::to_string(n));
    if (k.at(0).free_rank < 1 || !k.at(0).is_torsion_free())
        throw InvalidInputError(
            "degree-0 input must be Z^(number of components) of a nonempty space");
    if (k.support() > n)
        throw InvalidInputError(
            "input has homology in degree >= " + std::to_string(n) +
            "; it cannot be a proper compact subcomplex of the " +
            std::to_string(n) + "-sphere");

    // Reduced homology of K, then reduced cohomology by universal
    // coefficients: H^m = free(H_m) + torsion(H_{m-1}).
    auto reduced = [&](int i) -> FgAbGroup {
        FgAbGroup g = k.at(i);
        if (i == 0) --g.free_rank;
        return g;
    };
    GradedGroup out;
    out.groups.resize(n);  // the complement is an open n-manifold: H_n = 0
    for (int i = 0; i < n; ++i) {
        int m = n - i - 1;  // reduced H_i(complement) = reduced H^m(K)
        FgAbGroup co;
        co.free_rank = reduced(m).free_rank;
        if (m >= 1) co.invariant_factors = torsion_of(reduced(m - 1));
        out.groups[i] = canonical_form(co.free_rank, co.invariant_factors);
    }
    return out;
}

Int divisibility(const std::vector<Int>& v, const FgAbGroup& g) {
    const size_t nfree = static_cast<size_t>(g.free_rank);
    const size_t full = nfree + g.invariant_factors.size();
    if (v.size() != nfree && v.size() != full)
        throw InvalidInputError(
            "coordinate vector of length " + std::to_string(v.size()) +
            " fits neither the free part (" + std::to_string(nfree) +
            ") nor the whole group (" + std::to_string(full) + ")");
    for (size_t i = nfree; i < v.size(); ++i)
        if (v[i] != 0)
            throw TorsionCoordinateError(
                "nonzero coordinate against torsion summand " +
                std::to_string(i - nfree) + "; divisibility lives in the free part");
    Int d = 0;
    for (size_t i = 0; i < nfree; ++i) d = gcd(d, abs(v[i]));
    return d;
}

bool is_primitive(const std::vector<Int>& v, const FgAbGroup& g) {
    return divisibility(v, g) == 1;
}

}  // namespace engeltori::homology
