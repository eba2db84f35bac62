#pragma once

#include <vector>

#include "cartan/partition.hpp"
#include "cartan/qmatrix.hpp"
#include "cartan/symfun.hpp"

namespace cartan {

/// I_n([0,k)): exponent vectors of length k summing to n. Enumerated with the
/// first coordinate descending, so for k = 2, n = 2 the order is
/// (2,0), (1,1), (0,2) -- the monomial order t1^2, t1 t2, t2^2.
std::vector<std::vector<unsigned>> exponent_vectors(std::size_t k, unsigned n);

/// Matrix of the n-th symmetric power of the operator given by the T x Q
/// matrix a, in the monomial bases indexed by exponent_vectors.
QMatrix sym_power(const QMatrix& a, unsigned n);

/// A^{wr w}(p, ptilde): block-diagonal over the maps j in I(N); the block of j
/// is the tensor product over d of Sym^{j(d)}(a) under the multiplicity-vector
/// relabeling. Rows over pmaps_of(a.rows(), w), columns over pmaps_of(a.cols(), w).
QMatrix wreath_pp(const QMatrix& a, unsigned w);

/// A^{wr w}(s, s), computed by conjugating wreath_pp with graded tensor powers
/// of M(s, p). Integer input yields integer output.
QMatrix wreath_ss(const QMatrix& a, unsigned w);

/// A^{wr w}(s, s) straight from the defining triple sum over PMap(T x Q).
/// Exponential in w; intended as a cross-check for small w only.
QMatrix wreath_ss_direct(const QMatrix& a, unsigned w);

/// X^{(s,s)}_{ell,w} with its parameters. Entries are integers and det is a
/// power of ell for ell >= 1.
struct XMatrix {
    unsigned long ell = 0;
    unsigned w = 0;
    Basis row_basis = Basis::S;
    Basis col_basis = Basis::S;
    QMatrix mat;
};

/// X^{(p,ptilde)}_{ell,w} = diag(ell^{l(lambda)}) over Par(w).
QMatrix x_matrix_pp(unsigned long ell, unsigned w);

/// X^{(s,s)}_{ell,w}, computed both by conjugation M(s,p) X^{pp~} M(s,p)^{-1}
/// and by the direct sum over nu (entry = sum_nu chi^lambda(nu) chi^mu(nu)
/// ell^{l(nu)} / z_nu); the two paths must agree exactly.
XMatrix x_matrix(unsigned long ell, unsigned w);

/// The (ell-1) x (ell-1) Gram matrix of the beta basis: tridiagonal with 2 on
/// the diagonal and 1 off it. Invariant factors are (1, ..., 1, ell).
QMatrix cartan_A_matrix(unsigned ell);

}  // namespace cartan
