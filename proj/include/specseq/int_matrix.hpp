#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace specseq {

using Int = mpz_class;
using IntVec = std::vector<Int>;

// Dense matrix over arbitrary-precision integers. Zero-dimensional
// matrices are legal everywhere; all operations accept them.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
    static IntMatrix column(const IntVec& v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    bool operator==(const IntMatrix& other) const = default;

    bool is_zero() const;
    bool is_diagonal() const;

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntVec operator*(const IntVec& v) const;
    IntMatrix operator+(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;

    // Horizontal / vertical concatenation.
    IntMatrix hstack(const IntMatrix& right) const;
    IntMatrix vstack(const IntMatrix& below) const;

    IntMatrix columns(const std::vector<std::size_t>& idx) const;
    IntMatrix row_subset(const std::vector<std::size_t>& idx) const;

    IntVec col(std::size_t j) const;
    void set_col(std::size_t j, const IntVec& v);

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);
    // row[dst] += q * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& q);
    // col[dst] += q * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& q);

    // Exact determinant by fraction-free (Bareiss) elimination. Square only.
    Int determinant() const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    IntVec entries_;
};

bool is_zero(const IntVec& v);
IntVec operator+(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a, const IntVec& b);
IntVec operator*(const Int& c, const IntVec& v);
IntMatrix operator*(const Int& c, const IntMatrix& m);

}  // namespace specseq
