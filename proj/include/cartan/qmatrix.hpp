#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cartan {

using Int = mpz_class;
using Rat = mpq_class;

/// Dense matrix of exact rationals. Row/column index sets are tracked by the
/// callers (as vectors of partitions, partition maps, ...); entries here are
/// always exact, never floating point.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static QMatrix identity(std::size_t n);
    static QMatrix diagonal(const std::vector<Rat>& d);
    static QMatrix diagonal(const std::vector<Int>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_integral() const;
    /// True iff every entry has denominator coprime to p (lies in Z_(p)).
    bool is_p_integral(unsigned long p) const;

    QMatrix transpose() const;
    QMatrix submatrix(const std::vector<std::size_t>& row_idx,
                      const std::vector<std::size_t>& col_idx) const;

    /// Row-major Kronecker product (left factor most significant).
    static QMatrix kronecker(const QMatrix& a, const QMatrix& b);

    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator*(const Rat& s, const QMatrix& a);
    friend bool operator==(const QMatrix& a, const QMatrix& b) = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> data_;
};

/// Canonicalized rational num/den.
Rat make_rat(const Int& num, const Int& den);

}  // namespace cartan
