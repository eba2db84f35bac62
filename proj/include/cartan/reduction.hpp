#pragma once

#include <vector>

#include "cartan/partition.hpp"
#include "cartan/qmatrix.hpp"
#include "cartan/report.hpp"

namespace cartan {

/// N^{(w)}: restriction of M(h, ptilde; w) to p-power rows and columns,
/// indexed by power_partitions(w, p).
QMatrix n_matrix(unsigned w, unsigned long p);

/// M with entries kept iff row and column share a block class (the
/// Par(w, nu) set partition), zero otherwise.
QMatrix truncated_M(unsigned w, unsigned long p);

/// Block-diagonal tensor model over Par(w): the block of nu is the tensor
/// product over p-coprime j of n_matrix(m_j(nu), p), under the iota-split
/// relabeling. Same determinant as M.
QMatrix tensor_L(unsigned w, unsigned long p);

/// Per-(p, r, w) data: the Pow(w) index and the diagonal matrices of the
/// reduction (stored as diagonal entry vectors, aligned to `pow`; `a` is the
/// lone Par(w)-indexed diagonal).
struct ReductionContext {
    unsigned long p = 2;
    unsigned r = 0;
    unsigned w = 0;
    std::vector<Partition> par;   // Par(w)
    std::vector<Partition> pow;   // Pow(w)
    std::vector<Int> a;           // p^{r l(lambda)} over Par(w)
    std::vector<Int> b;           // p^{r l(lambda)} over Pow(w)
    std::vector<Int> z;           // centralizer orders over Pow(w)
    std::vector<Int> x, y;        // z = x y
    std::vector<Int> x_lt, x_ge;  // x = x^{<r} x^{>=r}
    std::vector<Int> y_lt, y_ge, y_tilde;  // y = y^{<r} y^{>=r} y~
    std::vector<Int> b_lt;        // b^{<r} = b y~^{-1}
};

ReductionContext make_context(unsigned long p, unsigned r, unsigned w);

/// The factorization chain of the proof: N = A C, A = x^{<r} U,
/// (C^T)^{-1} x^{>=r} y^{>=r} = S C, V = S^{-1} U^T S, Y = N b N^{-1},
/// Y' = N b z^{-1} N^T, Y'' = x^{<r} U b^{<r} (x^{<r})^{-1} (y^{<r})^{-1} V x^{<r}.
/// Construction asserts: S is p-locally unimodular and Y' = Y'' S^{-1}.
struct ChainMatrices {
    QMatrix N, C, A, U, S, V, Y, Yd, Ydd;
};

ChainMatrices chain(const ReductionContext& ctx);

/// Entrywise conditions on U: (i) entries in Z_(p); (ii) U = delta within a
/// bar-block; (iii) v_p(U_{lambda mu}) > k_lambda - k_mu across blocks.
VerificationReport check_lemma_U(const ReductionContext& ctx);

/// Conditions (i)-(v) of the invariant-factor lemma for
/// s = x^{<r}, P = U, t = b^{<r} (x^{<r})^{-1} (y^{<r})^{-1}, Q = V, u = x^{<r},
/// with alpha = k/2, beta = -k/2 and rho = c_{p,r}; half-integers are handled
/// by comparing doubled valuations.
VerificationReport check_invfac_hypotheses(const ReductionContext& ctx);

/// The four row-equivalence lemmas: M ~ M-tilde, M ~ L, N ~ (N^T)^{-1} z over
/// Z_(p), and the rectangular row-space equality of M-bar and N.
std::vector<VerificationReport> verify_row_equivalences(const ReductionContext& ctx);

/// p-parts of the invariant factors of Y against {c_{p,r}(lambda)} over Pow(w).
/// Y's entries are asserted to lie in Z_(p) (they are not integral in general).
VerificationReport verify_thm_pow(unsigned long p, unsigned r, unsigned w);

/// Sorted {c_{p,r}(lambda)} over the given partitions.
std::vector<unsigned long> cpr_multiset(unsigned long p, unsigned r,
                                        const std::vector<Partition>& lambdas);

}  // namespace cartan
