#pragma once

#include <vector>

#include "cartan/qmatrix.hpp"

namespace cartan {

/// Invariant factors d_1 | d_2 | ... of an integer matrix, padded with zeros
/// up to min(rows, cols). Two integer matrices are Z-equivalent iff their
/// SnfResults agree.
struct SnfResult {
    std::vector<Int> factors;
    std::size_t rank = 0;
    friend bool operator==(const SnfResult&, const SnfResult&) = default;
};

/// Smith normal form. Pre: all entries integral. Pivots on the nonzero entry
/// of minimal absolute value each round to moderate coefficient growth.
SnfResult snf(const QMatrix& a);

/// Row Hermite normal form with zero rows dropped: positive pivots, entries
/// above each pivot reduced into [0, pivot). Two integer matrices have equal
/// Z-row spaces iff their hnf_row forms are identical.
QMatrix hnf_row(const QMatrix& a);

/// Z-basis of the left integer kernel {x : xA = 0}, returned as rows in HNF.
/// The basis is saturated: every rational kernel vector with integer entries
/// is an integer combination of the rows.
QMatrix integer_kernel(const QMatrix& a);

/// Exact inverse. Throws std::domain_error if singular or not square.
QMatrix inverse(const QMatrix& a);

/// Exact determinant (square input).
Rat determinant(const QMatrix& a);

/// Rank over Q.
std::size_t rank(const QMatrix& a);

/// True iff a is in GL over Z_(p): every entry p-integral and v_p(det) = 0.
/// Singular matrices yield false.
bool p_local_unimodular(const QMatrix& a, unsigned long p);

/// True iff A * B^{-1} is p-locally unimodular (both square nonsingular, same
/// shape; shape mismatch throws).
bool p_row_equivalent(const QMatrix& a, const QMatrix& b, unsigned long p);

/// Sorted v_p of each invariant factor of a square nonsingular matrix with
/// entries in Z_(p). Clearing the p-coprime common denominator multiplies
/// every invariant factor by a p-adic unit, so the p-parts are those of the
/// underlying Z_(p)-matrix. Throws std::domain_error if singular or if some
/// entry has p in its denominator.
std::vector<unsigned long> p_part_of_snf(const QMatrix& a, unsigned long p);

}  // namespace cartan
