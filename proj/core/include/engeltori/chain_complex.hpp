#pragma once

#include <vector>

#include "engeltori/abelian_group.hpp"
#include "engeltori/int_matrix.hpp"

namespace engeltori::homology {

// Chain complex of free Z-modules supported in degrees 0..dims.size()-1.
// boundaries[i] is the matrix of d_{i+1}: C_{i+1} -> C_i acting on column
// vectors, so it has dims[i] rows and dims[i+1] columns. Zero-dimensional
// degrees and empty complexes are legal; their boundary matrices are the
// evident zero-sized maps.
struct ChainComplex {
    std::vector<int> dims;
    std::vector<IntMatrix> boundaries;

    int top_degree() const { return static_cast<int>(dims.size()) - 1; }
    int dim(int k) const;                 // 0 outside the support
    IntMatrix boundary_from(int k) const; // d_k: C_k -> C_{k-1}; zero-sized off the ends

    void check_shapes() const;  // throws InvalidInputError on inconsistent sizes
    bool is_complex() const;    // shapes consistent and d(d(x)) = 0
};

// Homology in every degree of the support. Throws NotAComplexError when the
// boundaries do not compose to zero.
GradedGroup homology(const ChainComplex& c);

// Chain-level tensor product with the usual sign twist
//   d(a x b) = (da) x b + (-1)^deg(a) a x (db).
// Degree-k basis blocks are ordered by ascending first factor degree.
ChainComplex tensor_product(const ChainComplex& c, const ChainComplex& d);

// Exactness of X0 -g1-> X1 -g2-> ... -gm-> Xm at every interior term:
// im(g_k) = ker(g_{k+1}) as subgroups, checked by composing to zero plus
// integer membership of a kernel basis in the image. Throws
// ShapeMismatchError when consecutive matrices are not composable.
bool is_exact(const std::vector<IntMatrix>& seq);

}  // namespace engeltori::homology
