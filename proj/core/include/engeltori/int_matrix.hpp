#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "engeltori/errors.hpp"

namespace engeltori::homology {

// All homological arithmetic is exact. cpp_int keeps intermediate entries of
// the elimination honest; machine words silently overflow on inputs as small
// as a dozen rows.
using Int = boost::multiprecision::cpp_int;

// Dense integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_check(rows, cols)) {}
    IntMatrix(int rows, int cols, std::vector<Int> entries);

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

    bool is_zero() const;
    bool operator==(const IntMatrix&) const = default;

    IntMatrix operator*(const IntMatrix& rhs) const;
    std::vector<Int> apply(const std::vector<Int>& x) const;  // this * column vector
    IntMatrix transposed() const;

private:
    static size_t size_check(int rows, int cols);
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> e_;
};

}  // namespace engeltori::homology
