#include "engeltori/chain_complex.hpp"

#include <string>

#include "engeltori/smith.hpp"

namespace engeltori::homology {

int ChainComplex::dim(int k) const {
    if (k < 0 || k >= static_cast<int>(dims.size())) return 0;
    return dims[k];
}

IntMatrix ChainComplex::boundary_from(int k) const {
    if (k >= 1 && k <= top_degree()) return boundaries[k - 1];
    return IntMatrix(dim(k - 1), dim(k));  // zero-sized map off the ends
}

void ChainComplex::check_shapes() const {
    for (int d : dims)
        if (d < 0)
            throw InvalidInputError("chain group dimensions must be nonnegative");
    size_t expected = dims.empty() ? 0 : dims.size() - 1;
    if (boundaries.size() != expected)
        throw InvalidInputError("complex with " + std::to_string(dims.size()) +
                                " degrees needs " + std::to_string(expected) +
                                " boundary maps, got " +
                                std::to_string(boundaries.size()));
    for (size_t i = 0; i < boundaries.size(); ++i) {
        if (boundaries[i].rows() != dims[i] || boundaries[i].cols() != dims[i + 1])
            throw InvalidInputError(
                "boundary " + std::to_string(i + 1) + " has shape " +
                std::to_string(boundaries[i].rows()) + "x" +
                std::to_string(boundaries[i].cols()) + ", expected " +
                std::to_string(dims[i]) + "x" + std::to_string(dims[i + 1]));
    }
}

bool ChainComplex::is_complex() const {
    try {
        check_shapes();
    } catch (const InvalidInputError&) {
        return false;
    }
    for (size_t i = 1; i < boundaries.size(); ++i)
        if (!(boundaries[i - 1] * boundaries[i]).is_zero()) return false;
    return true;
}

GradedGroup homology(const ChainComplex& c) {
    c.check_shapes();
    for (size_t i = 1; i < c.boundaries.size(); ++i)
        if (!(c.boundaries[i - 1] * c.boundaries[i]).is_zero())
            throw NotAComplexError("boundary composite d_" + std::to_string(i) +
                                   " . d_" + std::to_string(i + 1) +
                                   " is nonzero; not a chain complex");

    GradedGroup out;
    if (c.dims.empty()) return out;
    const int top = c.top_degree();

    std::vector<SmithForm> snf;  // snf[i] belongs to d_{i+1}
    snf.reserve(c.boundaries.size());
    for (const IntMatrix& b : c.boundaries) snf.push_back(smith_normal_form(b));

    auto rank_of_bnd = [&](int k) {
        if (k < 1 || k > top) return 0;
        return snf[k - 1].rank();
    };

    out.groups.resize(top + 1);
    for (int k = 0; k <= top; ++k) {
        // H_k = ker d_k / im d_{k+1}: free rank by dimension count, torsion by
        // the invariant factors of the incoming boundary.
        FgAbGroup g;
        g.free_rank = c.dims[k] - rank_of_bnd(k) - rank_of_bnd(k + 1);
        if (k < top)
            for (const Int& d : snf[k].diagonal())
                if (d > 1) g.invariant_factors.push_back(d);
        out.groups[k] = canonical_form(g.free_rank, g.invariant_factors);
    }
    return out;
}

ChainComplex tensor_product(const ChainComplex& c, const ChainComplex& d) {
    c.check_shapes();
    d.check_shapes();
    const int lc = static_cast<int>(c.dims.size());
    const int ld = static_cast<int>(d.dims.size());
    ChainComplex out;
    if (lc == 0 || ld == 0) return out;

    const int lt = lc + ld - 1;
    out.dims.assign(lt, 0);
    // Degree-k basis: blocks (i, k-i) by ascending i, each block pairs (a, b)
    // in row-major order. off[k][i] is the block's first index.
    std::vector<std::vector<int>> off(lt);
    for (int k = 0; k < lt; ++k) {
        off[k].assign(lc, -1);
        int at = 0;
        for (int i = 0; i < lc; ++i) {
            int j = k - i;
            if (j < 0 || j >= ld) continue;
            off[k][i] = at;
            at += c.dims[i] * d.dims[j];
        }
        out.dims[k] = at;
    }

    for (int k = 1; k < lt; ++k) {
        IntMatrix bnd(out.dims[k - 1], out.dims[k]);
        for (int i = 0; i < lc; ++i) {
            int j = k - i;
            if (j < 0 || j >= ld) continue;
            for (int a = 0; a < c.dims[i]; ++a)
                for (int b = 0; b < d.dims[j]; ++b) {
                    int col = off[k][i] + a * d.dims[j] + b;
                    // d(a x b) = (da) x b + (-1)^i a x (db)
                    if (i >= 1) {
                        const IntMatrix& bc = c.boundaries[i - 1];
                        for (int a2 = 0; a2 < c.dims[i - 1]; ++a2)
                            if (bc.at(a2, a) != 0)
                                bnd.at(off[k - 1][i - 1] + a2 * d.dims[j] + b, col) +=
                                    bc.at(a2, a);
                    }
                    if (j >= 1) {
                        const IntMatrix& bd = d.boundaries[j - 1];
                        int sign = (i % 2 == 0) ? 1 : -1;
                        for (int b2 = 0; b2 < d.dims[j - 1]; ++b2)
                            if (bd.at(b2, b) != 0)
                                bnd.at(off[k - 1][i] + a * d.dims[j - 1] + b2, col) +=
                                    sign * bd.at(b2, b);
                    }
                }
        }
        out.boundaries.push_back(std::move(bnd));
    }
    return out;
}

bool is_exact(const std::vector<IntMatrix>& seq) {
    const int m = static_cast<int>(seq.size());
    for (int t = 0; t + 1 < m; ++t)
        if (seq[t + 1].cols() != seq[t].rows())
            throw ShapeMismatchError(
                "maps " + std::to_string(t) + " and " + std::to_string(t + 1) +
                " are not composable: " + std::to_string(seq[t].rows()) +
                " outputs vs " + std::to_string(seq[t + 1].cols()) + " inputs");

    for (int t = 0; t + 1 < m; ++t) {
        // Exactness at the term between seq[t] and seq[t+1]:
        // im(seq[t]) = ker(seq[t+1]) as subgroups of Z^rows(seq[t]).
        if (!(seq[t + 1] * seq[t]).is_zero()) return false;
        SmithForm image = smith_normal_form(seq[t]);
        for (const std::vector<Int>& v : kernel_basis(seq[t + 1]))
            if (!in_image(image, v)) return false;
    }
    return true;
}

}  // namespace engeltori::homology
