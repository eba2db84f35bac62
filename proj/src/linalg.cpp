#include "cartan/linalg.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace cartan {

namespace {

struct ZMat {
    std::size_t rows = 0, cols = 0;
    std::vector<Int> a;

    ZMat() = default;
    ZMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static ZMat eye(std::size_t n) {
        ZMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols; ++c) std::swap(at(i, c), at(j, c));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < rows; ++r) std::swap(at(r, i), at(r, j));
    }
    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < cols; ++c) at(i, c) = -at(i, c);
    }
    /// row_i += f * row_j
    void addmul_row(std::size_t i, std::size_t j, const Int& f) {
        if (f == 0) return;
        for (std::size_t c = 0; c < cols; ++c) at(i, c) += f * at(j, c);
    }
    void addmul_col(std::size_t i, std::size_t j, const Int& f) {
        if (f == 0) return;
        for (std::size_t r = 0; r < rows; ++r) at(r, i) += f * at(r, j);
    }
};

ZMat to_integer(const QMatrix& q, const char* who) {
    if (!q.is_integral())
        throw std::invalid_argument(std::string(who) + ": entries must be integral");
    ZMat m(q.rows(), q.cols());
    for (std::size_t i = 0; i < q.rows(); ++i)
        for (std::size_t j = 0; j < q.cols(); ++j)
            m.at(i, j) = q(i, j).get_num();
    return m;
}

QMatrix to_rational(const ZMat& m) {
    QMatrix q(m.rows, m.cols);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            q(i, j) = Rat(m.at(i, j));
    return q;
}

/// Minimal-absolute-value nonzero entry of the trailing submatrix, if any.
std::optional<std::pair<std::size_t, std::size_t>> min_pivot(const ZMat& d, std::size_t s) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Int best_abs;
    for (std::size_t i = s; i < d.rows; ++i)
        for (std::size_t j = s; j < d.cols; ++j) {
            if (d.at(i, j) == 0) continue;
            Int v = abs(d.at(i, j));
            if (!best || v < best_abs) {
                best = {i, j};
                best_abs = v;
            }
        }
    return best;
}

struct HnfTransform {
    ZMat h;
    ZMat u;                     // unimodular with u * input = h
    std::size_t pivot_rows = 0; // nonzero rows of h
};

HnfTransform hnf_transform(ZMat a) {
    std::size_t m = a.rows, n = a.cols;
    ZMat u = ZMat::eye(m);
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        // gcd-eliminate column c among rows >= r
        while (true) {
            std::size_t k = m;
            Int best;
            for (std::size_t i = r; i < m; ++i) {
                if (a.at(i, c) == 0) continue;
                Int v = abs(a.at(i, c));
                if (k == m || v < best) { k = i; best = v; }
            }
            if (k == m) break;  // column is zero below r
            a.swap_rows(r, k);
            u.swap_rows(r, k);
            if (a.at(r, c) < 0) { a.negate_row(r); u.negate_row(r); }
            bool dirty = false;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (a.at(i, c) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a.at(i, c).get_mpz_t(), a.at(r, c).get_mpz_t());
                a.addmul_row(i, r, -q);
                u.addmul_row(i, r, -q);
                if (a.at(i, c) != 0) dirty = true;
            }
            if (!dirty) break;
        }
        if (a.at(r, c) == 0) continue;
        // reduce entries above the pivot into [0, pivot)
        for (std::size_t i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), a.at(i, c).get_mpz_t(), a.at(r, c).get_mpz_t());
            a.addmul_row(i, r, -q);
            u.addmul_row(i, r, -q);
        }
        ++r;
    }
    return {std::move(a), std::move(u), r};
}

}  // namespace

SnfResult snf(const QMatrix& qa) {
    ZMat d = to_integer(qa, "snf");
    std::size_t m = d.rows, n = d.cols;
    std::size_t nmin = std::min(m, n);
    std::size_t s = 0;
    for (; s < nmin; ++s) {
        bool settled = false;
        while (!settled) {
            auto piv = min_pivot(d, s);
            if (!piv) break;  // trailing submatrix is zero
            d.swap_rows(s, piv->first);
            d.swap_cols(s, piv->second);
            if (d.at(s, s) < 0) d.negate_row(s);
            bool dirty = false;
            for (std::size_t i = s + 1; i < m; ++i) {
                if (d.at(i, s) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), d.at(i, s).get_mpz_t(), d.at(s, s).get_mpz_t());
                d.addmul_row(i, s, -q);
                if (d.at(i, s) != 0) dirty = true;
            }
            for (std::size_t j = s + 1; j < n; ++j) {
                if (d.at(s, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), d.at(s, j).get_mpz_t(), d.at(s, s).get_mpz_t());
                d.addmul_col(j, s, -q);
                if (d.at(s, j) != 0) dirty = true;
            }
            if (dirty) continue;
            // pivot must divide the rest of the submatrix
            settled = true;
            for (std::size_t i = s + 1; i < m && settled; ++i)
                for (std::size_t j = s + 1; j < n && settled; ++j)
                    if (!mpz_divisible_p(d.at(i, j).get_mpz_t(), d.at(s, s).get_mpz_t())) {
                        d.addmul_row(s, i, 1);
                        settled = false;
                    }
        }
        if (d.at(s, s) == 0) break;
    }
    SnfResult out;
    out.factors.resize(nmin, 0);
    for (std::size_t i = 0; i < s; ++i) out.factors[i] = d.at(i, i);
    out.rank = s;
    return out;
}

QMatrix hnf_row(const QMatrix& a) {
    HnfTransform t = hnf_transform(to_integer(a, "hnf_row"));
    ZMat dropped(t.pivot_rows, t.h.cols);
    for (std::size_t i = 0; i < t.pivot_rows; ++i)
        for (std::size_t j = 0; j < t.h.cols; ++j)
            dropped.at(i, j) = t.h.at(i, j);
    return to_rational(dropped);
}

QMatrix integer_kernel(const QMatrix& a) {
    HnfTransform t = hnf_transform(to_integer(a, "integer_kernel"));
    std::size_t m = a.rows();
    ZMat kern(m - t.pivot_rows, m);
    for (std::size_t i = t.pivot_rows; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            kern.at(i - t.pivot_rows, j) = t.u.at(i, j);
    // canonical presentation; kernel rows are independent, so nothing drops
    return hnf_row(to_rational(kern));
}

QMatrix inverse(const QMatrix& a) {
    if (!a.is_square())
        throw std::domain_error("inverse: matrix not square");
    std::size_t n = a.rows();
    QMatrix work = a;
    QMatrix inv = QMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = n;
        for (std::size_t i = c; i < n; ++i)
            if (work(i, c) != 0) { piv = i; break; }
        if (piv == n)
            throw std::domain_error("inverse: matrix is singular");
        if (piv != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(work(piv, j), work(c, j));
                std::swap(inv(piv, j), inv(c, j));
            }
        Rat d = work(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            work(c, j) /= d;
            inv(c, j) /= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || work(i, c) == 0) continue;
            Rat f = work(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                work(i, j) -= f * work(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

Rat determinant(const QMatrix& a) {
    if (!a.is_square())
        throw std::domain_error("determinant: matrix not square");
    std::size_t n = a.rows();
    QMatrix work = a;
    Rat det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = n;
        for (std::size_t i = c; i < n; ++i)
            if (work(i, c) != 0) { piv = i; break; }
        if (piv == n) return Rat(0);
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(work(piv, j), work(c, j));
            det = -det;
        }
        det *= work(c, c);
        Rat d = work(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (work(i, c) == 0) continue;
            Rat f = work(i, c) / d;
            for (std::size_t j = c; j < n; ++j)
                work(i, j) -= f * work(c, j);
        }
    }
    return det;
}

std::size_t rank(const QMatrix& a) {
    QMatrix work = a;
    std::size_t m = a.rows(), n = a.cols(), r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t piv = m;
        for (std::size_t i = r; i < m; ++i)
            if (work(i, c) != 0) { piv = i; break; }
        if (piv == m) continue;
        if (piv != r)
            for (std::size_t j = 0; j < n; ++j) std::swap(work(piv, j), work(r, j));
        Rat d = work(r, c);
        for (std::size_t i = r + 1; i < m; ++i) {
            if (work(i, c) == 0) continue;
            Rat f = work(i, c) / d;
            for (std::size_t j = c; j < n; ++j)
                work(i, j) -= f * work(r, j);
        }
        ++r;
    }
    return r;
}

namespace {

long v_p_rational(const Rat& q, unsigned long p) {
    // q != 0 assumed
    Int prime(static_cast<unsigned long>(p));
    Int tmp;
    long vn = static_cast<long>(
        mpz_remove(tmp.get_mpz_t(), q.get_num().get_mpz_t(), prime.get_mpz_t()));
    long vd = static_cast<long>(
        mpz_remove(tmp.get_mpz_t(), q.get_den().get_mpz_t(), prime.get_mpz_t()));
    return vn - vd;
}

}  // namespace

bool p_local_unimodular(const QMatrix& a, unsigned long p) {
    if (!a.is_square())
        throw std::invalid_argument("p_local_unimodular: matrix not square");
    if (!a.is_p_integral(p)) return false;
    Rat det = determinant(a);
    if (det == 0) return false;
    return v_p_rational(det, p) == 0;
}

bool p_row_equivalent(const QMatrix& a, const QMatrix& b, unsigned long p) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("p_row_equivalent: shape mismatch");
    return p_local_unimodular(a * inverse(b), p);
}

std::vector<unsigned long> p_part_of_snf(const QMatrix& a, unsigned long p) {
    if (!a.is_square())
        throw std::domain_error("p_part_of_snf: matrix not square");
    if (!a.is_p_integral(p))
        throw std::domain_error("p_part_of_snf: entries not in Z_(p)");
    // clear the p-coprime common denominator; p-parts are unaffected
    Int common = 1;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), a(i, j).get_den().get_mpz_t());
    QMatrix cleared = Rat(common) * a;
    SnfResult s = snf(cleared);
    if (s.rank < a.rows())
        throw std::domain_error("p_part_of_snf: matrix is singular");
    std::vector<unsigned long> parts;
    parts.reserve(s.factors.size());
    for (const Int& d : s.factors) {
        Int tmp;
        Int prime(static_cast<unsigned long>(p));
        parts.push_back(mpz_remove(tmp.get_mpz_t(), d.get_mpz_t(), prime.get_mpz_t()));
    }
    std::sort(parts.begin(), parts.end());
    return parts;
}

}  // namespace cartan
