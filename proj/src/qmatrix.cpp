#include "cartan/qmatrix.hpp"

#include <sstream>
#include <stdexcept>

namespace cartan {

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMatrix QMatrix::diagonal(const std::vector<Rat>& d) {
    QMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

QMatrix QMatrix::diagonal(const std::vector<Int>& d) {
    QMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = Rat(d[i]);
    return m;
}

bool QMatrix::is_integral() const {
    for (const Rat& q : data_)
        if (q.get_den() != 1) return false;
    return true;
}

bool QMatrix::is_p_integral(unsigned long p) const {
    for (const Rat& q : data_)
        if (mpz_divisible_ui_p(q.get_den().get_mpz_t(), p)) return false;
    return true;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

QMatrix QMatrix::submatrix(const std::vector<std::size_t>& row_idx,
                           const std::vector<std::size_t>& col_idx) const {
    QMatrix s(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j)
            s(i, j) = (*this)(row_idx[i], col_idx[j]);
    return s;
}

QMatrix QMatrix::kronecker(const QMatrix& a, const QMatrix& b) {
    QMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            for (std::size_t s = 0; s < b.rows(); ++s)
                for (std::size_t t = 0; t < b.cols(); ++t)
                    k(i * b.rows() + s, j * b.cols() + t) = a(i, j) * b(s, t);
        }
    return k;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("QMatrix: dimension mismatch in product");
    QMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rat& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (b(k, j) == 0) continue;
                c(i, j) += aik * b(k, j);
            }
        }
    return c;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("QMatrix: dimension mismatch in sum");
    QMatrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] + b.data_[i];
    return c;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("QMatrix: dimension mismatch in difference");
    QMatrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] - b.data_[i];
    return c;
}

QMatrix operator*(const Rat& s, const QMatrix& a) {
    QMatrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = s * a.data_[i];
    return c;
}

std::string QMatrix::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) out << ' ';
            out << (*this)(i, j);
        }
        out << '\n';
    }
    return out.str();
}

Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace cartan
