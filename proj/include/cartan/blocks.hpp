#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cartan/partition.hpp"
#include "cartan/qmatrix.hpp"
#include "cartan/report.hpp"

namespace cartan {

/// Identifies a combinatorial ell-block: core rho, weight w, degree n = |rho| + ell*w.
struct BlockId {
    unsigned ell = 0;
    Partition core;
    unsigned weight = 0;
    unsigned n = 0;
};

/// Groups Par(n) by ell-core. Keys are exactly the cores that occur.
std::map<Partition, std::vector<Partition>> block_partition_of_irr(unsigned n, unsigned ell);

/// A Z-basis of the lattice of virtual characters vanishing on every
/// ell-singular class, in irreducible-character coordinates. Rows of `basis`
/// are the basis elements; `irr_index` labels the columns.
struct ProjectiveLattice {
    unsigned n = 0;
    unsigned ell = 0;
    std::optional<BlockId> block;   // absent for the whole group
    std::vector<Partition> irr_index;
    QMatrix basis;
};

/// Kernel of the character-value matrix on ell-singular classes, over the
/// whole of Irr(S_n) or one block. For a block, rho must be an ell-core with
/// ell | n - |rho| (throws std::invalid_argument otherwise; block mode
/// requires ell >= 2, global mode accepts ell >= 1).
ProjectiveLattice projective_lattice(unsigned n, unsigned ell,
                                     const std::optional<Partition>& core = std::nullopt);

/// Gram matrix B B^T of the lattice basis (irreducible coordinates are
/// orthonormal). Symmetric positive definite.
QMatrix cartan_matrix(const ProjectiveLattice& lattice);

/// Diagonal entries of the block theorem: theta(lambda, ell) with multiplicity
/// k(ell-2, w - |lambda|) over all |lambda| <= w, sorted. Size is k(ell-1, w).
std::vector<Int> expected_block_diagonal(unsigned ell, unsigned w);

/// Diagonal entries of the global corollary: r_ell(lambda) over the
/// partitions of n with no part divisible by ell, sorted.
std::vector<Int> expected_global_diagonal(unsigned ell, unsigned n);

/// SNF of the block Cartan matrix against the expected diagonal. Both sides
/// are compared as invariant factors (the expected multiset is normalized
/// through the SNF of its diagonal matrix).
VerificationReport verify_thm_BH(unsigned ell, unsigned n, const Partition& core);

/// SNF of the global Cartan matrix against the r_ell diagonal.
VerificationReport verify_cor_KOR(unsigned ell, unsigned n);

/// Cross-module shadow of the isometry reduction: SNF(Cart_ell(n, rho)) must
/// equal SNF(A^{wr w}(s,s)) for A the tridiagonal Gram matrix.
VerificationReport verify_isored_shadow(unsigned ell, unsigned n, const Partition& core);

}  // namespace cartan
