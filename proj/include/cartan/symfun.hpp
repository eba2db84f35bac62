#pragma once

#include <string>
#include <vector>

#include "cartan/partition.hpp"
#include "cartan/qmatrix.hpp"

namespace cartan {

/// The four graded bases of class functions on symmetric groups: power sums,
/// normalized power sums (p-tilde = p / z), Schur/irreducible characters, and
/// complete homogeneous (permutation characters of Young subgroups).
enum class Basis { P, PTilde, S, H };

std::string basis_name(Basis b);

/// chi^lambda(g_mu): irreducible character value by the Murnaghan-Nakayama
/// recursion, memoized on (remaining shape, remaining cycle type).
/// Requires |lambda| = |mu|.
Int character_value(const Partition& lambda, const Partition& mu);

/// The character table of S_w: entry (lambda, mu) = s_lambda(g_mu), rows and
/// columns over partitions_of(w) in canonical order. Cached per w.
struct CharTable {
    unsigned w = 0;
    QMatrix values;
};
const CharTable& character_table(unsigned w);

/// Transition matrix M(u, v; w) with u_lambda = sum_mu M_{lambda mu} v_mu,
/// over Par(w) in canonical order. M(s, ptilde) is the character table;
/// M(h, ptilde) is computed combinatorially by counting the maps
/// f : [1, l(mu)] -> [1, l(lambda)] with sum_{j in f^-1(i)} mu_j = lambda_i;
/// all other pairs come from composition/inversion. Cached per (u, v, w).
const QMatrix& transition(Basis u, Basis v, unsigned w);

/// |M_{lambda mu}|: the map count from the transition-matrix definition.
Int homogeneous_map_count(const Partition& lambda, const Partition& mu);

/// Scalar product of class functions given as coefficient vectors in bases u
/// and v: both are converted to class-value (ptilde) coordinates and paired as
/// sum_mu f(g_mu) g(g_mu) / z_mu. Throws on degree mismatch.
Rat scalar_product(const std::vector<Rat>& f, Basis u,
                   const std::vector<Rat>& g, Basis v, unsigned w);

}  // namespace cartan
