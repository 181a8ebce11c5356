#pragma once

#include <functional>
#include <vector>

#include "engeltori/int_matrix.hpp"

namespace engeltori::homology {

// Smith normal form D = U * A * V with U, V unimodular and D diagonal,
// diagonal entries nonnegative with d1 | d2 | ... (zeros trailing).
struct SmithForm {
    IntMatrix u, d, v;

    int rank() const;                    // number of nonzero diagonal entries
    std::vector<Int> diagonal() const;   // min(rows, cols) entries
};

// `cancelled` (optional) is polled between elimination rounds; returning true
// aborts the run with CancelledError. The pivot strategy picks the entry of
// smallest nonzero absolute value, which keeps coefficient growth tame on the
// desk-scale inputs this library targets.
SmithForm smith_normal_form(const IntMatrix& a,
                            const std::function<bool()>& cancelled = {});

int rank_of(const IntMatrix& a);

// Basis of the integer kernel {x : Ax = 0}, one column vector per element.
std::vector<std::vector<Int>> kernel_basis(const IntMatrix& a);

// Whether x lies in the column span of the matrix the SmithForm was computed
// from (solves Dz = Ux by divisibility).
bool in_image(const SmithForm& s, const std::vector<Int>& x);

}  // namespace engeltori::homology
