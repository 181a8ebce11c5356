#include "engeltori/int_matrix.hpp"

#include <string>

namespace engeltori::homology {

size_t IntMatrix::size_check(int rows, int cols) {
    if (rows < 0 || cols < 0)
        throw InvalidInputError("matrix dimensions must be nonnegative, got " +
                                std::to_string(rows) + "x" + std::to_string(cols));
    return static_cast<size_t>(rows) * static_cast<size_t>(cols);
}

IntMatrix::IntMatrix(int rows, int cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != size_check(rows, cols))
        throw InvalidInputError("matrix entry count " + std::to_string(e_.size()) +
                                " does not fill " + std::to_string(rows) + "x" +
                                std::to_string(cols));
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool IntMatrix::is_zero() const {
    for (const Int& x : e_)
        if (x != 0) return false;
    return true;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw ShapeMismatchError("cannot multiply " + std::to_string(rows_) + "x" +
                                 std::to_string(cols_) + " by " +
                                 std::to_string(rhs.rows_) + "x" +
                                 std::to_string(rhs.cols_));
    IntMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& x) const {
    if (static_cast<int>(x.size()) != cols_)
        throw ShapeMismatchError("vector of length " + std::to_string(x.size()) +
                                 " does not fit a matrix with " +
                                 std::to_string(cols_) + " columns");
    std::vector<Int> out(rows_, 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0) out[i] += at(i, j) * x[j];
    return out;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

}  // namespace engeltori::homology
