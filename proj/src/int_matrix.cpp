#include "specseq/int_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace specseq {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    IntMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("ragged row list");
        std::size_t j = 0;
        for (long x : row) m(i, j++) = x;
        ++i;
    }
    return m;
}

IntMatrix IntMatrix::column(const IntVec& v) {
    IntMatrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
}

bool IntMatrix::is_zero() const {
    for (const Int& x : entries_)
        if (x != 0) return false;
    return true;
}

bool IntMatrix::is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && (*this)(i, j) != 0) return false;
    return true;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

IntVec IntMatrix::operator*(const IntVec& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    IntVec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0) out[i] += (*this)(i, j) * v[j];
    return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix sum shape mismatch");
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] + rhs.entries_[i];
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("matrix sum shape mismatch");
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] - rhs.entries_[i];
    return out;
}

IntMatrix IntMatrix::hstack(const IntMatrix& right) const {
    if (rows_ != right.rows_) throw std::invalid_argument("hstack row mismatch");
    IntMatrix out(rows_, cols_ + right.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
        for (std::size_t j = 0; j < right.cols_; ++j) out(i, cols_ + j) = right(i, j);
    }
    return out;
}

IntMatrix IntMatrix::vstack(const IntMatrix& below) const {
    if (cols_ != below.cols_) throw std::invalid_argument("vstack column mismatch");
    IntMatrix out(rows_ + below.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    for (std::size_t i = 0; i < below.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(rows_ + i, j) = below(i, j);
    return out;
}

IntMatrix IntMatrix::columns(const std::vector<std::size_t>& idx) const {
    IntMatrix out(rows_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j) {
        if (idx[j] >= cols_) throw std::out_of_range("column index");
        for (std::size_t i = 0; i < rows_; ++i) out(i, j) = (*this)(i, idx[j]);
    }
    return out;
}

IntMatrix IntMatrix::row_subset(const std::vector<std::size_t>& idx) const {
    IntMatrix out(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] >= rows_) throw std::out_of_range("row index");
        for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(idx[i], j);
    }
    return out;
}

IntVec IntMatrix::col(std::size_t j) const {
    if (j >= cols_) throw std::out_of_range("column index");
    IntVec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

void IntMatrix::set_col(std::size_t j, const IntVec& v) {
    if (j >= cols_ || v.size() != rows_) throw std::out_of_range("set_col shape");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
}

void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t k = 0; k < rows_; ++k) (*this)(k, j) = -(*this)(k, j);
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t k = 0; k < cols_; ++k) (*this)(dst, k) += q * (*this)(src, k);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t k = 0; k < rows_; ++k) (*this)(k, dst) += q * (*this)(k, src);
}

Int IntMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix a = *this;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t piv = k;
            while (piv < n && a(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            a.swap_rows(k, piv);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i > 0) os << "; ";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j > 0) os << " ";
            os << (*this)(i, j).get_str();
        }
    }
    os << "] (" << rows_ << "x" << cols_ << ")";
    return os.str();
}

bool is_zero(const IntVec& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

IntVec operator+(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector sum size mismatch");
    IntVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

IntVec operator-(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector sum size mismatch");
    IntVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

IntVec operator*(const Int& c, const IntVec& v) {
    IntVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
    return out;
}

IntMatrix operator*(const Int& c, const IntMatrix& m) {
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = c * m(i, j);
    return out;
}

}  // namespace specseq
