#include "symki/matrix.hpp"

#include <algorithm>

namespace symki {

using exact::Integer;

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw precondition_error("IntMatrix: dimension mismatch in product");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Integer& aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix r(*this);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = -r.at(i, j);
    return r;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Integer IntMatrix::det() const {
    if (rows_ != cols_) throw precondition_error("IntMatrix::det: matrix not square");
    const std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix a(*this);
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a.at(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = t / prev;  // exact by Bareiss
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

namespace {

struct Pivot {
    std::size_t i, j;
    bool found;
};

Pivot find_pivot(const IntMatrix& d, std::size_t from) {
    // Smallest nonzero absolute value in the remaining block.
    Pivot best{0, 0, false};
    Integer best_abs = 0;
    for (std::size_t i = from; i < d.rows(); ++i)
        for (std::size_t j = from; j < d.cols(); ++j) {
            if (d.at(i, j) == 0) continue;
            Integer a = abs(d.at(i, j));
            if (!best.found || a < best_abs) {
                best = {i, j, true};
                best_abs = a;
                if (best_abs == 1) return best;
            }
        }
    return best;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& A) {
    const std::size_t m = A.rows(), n = A.cols();
    SmithForm f{IntMatrix::identity(m), A, IntMatrix::identity(n), {}};
    IntMatrix& d = f.D;
    IntMatrix& u = f.U;
    IntMatrix& v = f.V;

    auto swap_rows = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < n; ++j) std::swap(d.at(a, j), d.at(b, j));
        for (std::size_t j = 0; j < m; ++j) std::swap(u.at(a, j), u.at(b, j));
    };
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < m; ++i) std::swap(d.at(i, a), d.at(i, b));
        for (std::size_t i = 0; i < n; ++i) std::swap(v.at(i, a), v.at(i, b));
    };
    auto row_op = [&](std::size_t dst, std::size_t src, const Integer& c) {
        // row dst -= c * row src
        for (std::size_t j = 0; j < n; ++j) d.at(dst, j) -= c * d.at(src, j);
        for (std::size_t j = 0; j < m; ++j) u.at(dst, j) -= c * u.at(src, j);
    };
    auto col_op = [&](std::size_t dst, std::size_t src, const Integer& c) {
        for (std::size_t i = 0; i < m; ++i) d.at(i, dst) -= c * d.at(i, src);
        for (std::size_t i = 0; i < n; ++i) v.at(i, dst) -= c * v.at(i, src);
    };
    auto negate_row = [&](std::size_t r) {
        for (std::size_t j = 0; j < n; ++j) d.at(r, j) = -d.at(r, j);
        for (std::size_t j = 0; j < m; ++j) u.at(r, j) = -u.at(r, j);
    };

    const std::size_t rank_bound = std::min(m, n);
    for (std::size_t k = 0; k < rank_bound; ++k) {
        Pivot p = find_pivot(d, k);
        if (!p.found) break;
        swap_rows(k, p.i);
        swap_cols(k, p.j);
        for (;;) {
            bool clean = true;
            for (std::size_t i = k + 1; i < m; ++i) {
                if (d.at(i, k) == 0) continue;
                Integer q = d.at(i, k) / d.at(k, k);
                row_op(i, k, q);
                if (d.at(i, k) != 0) {  // remainder smaller than pivot: swap up
                    swap_rows(k, i);
                    clean = false;
                }
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                if (d.at(k, j) == 0) continue;
                Integer q = d.at(k, j) / d.at(k, k);
                col_op(j, k, q);
                if (d.at(k, j) != 0) {
                    swap_cols(k, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // The pivot must divide every entry of the remaining block; merge
            // an offending row into row k and redo (the pivot then shrinks,
            // keeping entries from blowing up and making the divisibility
            // chain automatic).
            bool divides_all = true;
            for (std::size_t i = k + 1; i < m && divides_all; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    if (d.at(i, j) % d.at(k, k) != 0) {
                        row_op(k, i, Integer(-1));  // row k += row i
                        divides_all = false;
                        break;
                    }
            if (divides_all) break;
        }
        if (d.at(k, k) < 0) negate_row(k);
    }

    // Enforce the divisibility chain d_k | d_{k+1}.
    for (;;) {
        bool changed = false;
        for (std::size_t k = 0; k + 1 < rank_bound; ++k) {
            Integer a = d.at(k, k), b = d.at(k + 1, k + 1);
            if (a == 0 && b != 0) {
                swap_rows(k, k + 1);
                swap_cols(k, k + 1);
                changed = true;
                continue;
            }
            if (a == 0 || b % a == 0) continue;
            // Fold entry (k+1,k+1) into the pivot at (k,k) via one column op,
            // then re-eliminate the 2x2 block.
            col_op(k, k + 1, Integer(-1));  // col k += col k+1
            for (;;) {
                bool clean = true;
                if (d.at(k + 1, k) != 0) {
                    Integer q = d.at(k + 1, k) / d.at(k, k);
                    row_op(k + 1, k, q);
                    if (d.at(k + 1, k) != 0) {
                        swap_rows(k, k + 1);
                        clean = false;
                    }
                }
                if (d.at(k, k + 1) != 0) {
                    Integer q = d.at(k, k + 1) / d.at(k, k);
                    col_op(k + 1, k, q);
                    if (d.at(k, k + 1) != 0) {
                        swap_cols(k, k + 1);
                        clean = false;
                    }
                }
                if (clean) break;
            }
            if (d.at(k, k) < 0) negate_row(k);
            if (d.at(k + 1, k + 1) < 0) negate_row(k + 1);
            changed = true;
        }
        if (!changed) break;
    }

    for (std::size_t k = 0; k < rank_bound; ++k) f.diagonal.push_back(d.at(k, k));
    return f;
}

bool SmithForm::verify(const IntMatrix& A) const {
    IntMatrix lhs = U * A * V;
    if (!(lhs == D)) return false;
    Integer du = U.det(), dv = V.det();
    return (du == 1 || du == -1) && (dv == 1 || dv == -1);
}

}  // namespace symki
