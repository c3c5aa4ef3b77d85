// Dense exact integer matrices: arithmetic, Bareiss determinant, and Smith
// normal form with unimodular transforms.  Row-major throughout.
#pragma once

#include <cstddef>
#include <vector>

#include "symki/rational.hpp"

namespace symki {

class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    exact::Integer& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const exact::Integer& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator-() const;
    IntMatrix transpose() const;

    exact::Integer det() const;  // Bareiss fraction-free elimination

private:
    std::size_t rows_, cols_;
    std::vector<exact::Integer> data_;
};

// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ...,
// diagonal entries nonnegative.  Pivoting on minimal absolute value.
struct SmithForm {
    IntMatrix U, D, V;
    std::vector<exact::Integer> diagonal;  // min(rows, cols) entries of D
    bool verify(const IntMatrix& A) const;  // U*A*V == D and |det U| = |det V| = 1
};

SmithForm smith_normal_form(const IntMatrix& A);

}  // namespace symki
