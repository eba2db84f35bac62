#pragma once

#include <utility>
#include <vector>

#include "cartan/partition.hpp"

namespace cartan {

/// p-adic valuation of k >= 1. Throws std::domain_error for k = 0.
unsigned long v_p(const Int& k, unsigned long p);

/// d_p(k) = v_p(k!) = sum_i floor(k / p^i).
unsigned long d_p(unsigned long k, unsigned long p);

/// c_{p,r}(lambda) = sum over parts j with 0 <= v_p(j) < r of
/// (r - v_p(j)) m_j(lambda) + d_p(m_j(lambda)).
unsigned long c_pr(const Partition& lambda, unsigned long p, unsigned r);

/// theta_lambda(ell) = prod_i p_i^{c_{p_i,r_i}(lambda)} over the prime
/// factorisation of ell; theta(lambda, 0) = 0 and theta(lambda, 1) = 1.
Int theta(const Partition& lambda, unsigned long ell);

/// r_ell(lambda) = prod_k (ell/(ell,k))^{floor(m_k/ell)} * (floor(m_k/ell)!)_{pi(ell,k)},
/// with pi(ell,k) the primes dividing ell/(ell,k). Requires ell >= 1.
Int r_ell(const Partition& lambda, unsigned long ell);

/// The exponents of Eq.-(deff) style bookkeeping for p-power partitions:
/// e = sum_{i<r} d_p(n_i), f = sum_{i<r} (r-i) n_i, k = f - e,
/// where n_i(lambda) = m_{p^i}(lambda). Always e + f = c_{p,r}(lambda).
struct ExponentTriple {
    unsigned long e = 0;
    unsigned long f = 0;
    long k = 0;
    friend bool operator==(const ExponentTriple&, const ExponentTriple&) = default;
};

/// Requires lambda in Pow (throws std::invalid_argument otherwise).
ExponentTriple exponents(const Partition& lambda, unsigned long p, unsigned r);

/// Trial-division primality (desk scale).
bool is_prime(unsigned long n);

/// Prime factorisation n = prod p_i^{r_i}, ascending p_i. Requires n >= 1.
std::vector<std::pair<unsigned long, unsigned>> factorize(unsigned long n);

/// k_pi: the largest divisor of k all of whose prime divisors lie in pi.
Int pi_part(const Int& k, const std::vector<unsigned long>& primes);

}  // namespace cartan
