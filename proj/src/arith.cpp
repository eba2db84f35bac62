#include "cartan/arith.hpp"

#include <numeric>
#include <stdexcept>

namespace cartan {

unsigned long v_p(const Int& k, unsigned long p) {
    if (k == 0)
        throw std::domain_error("v_p: valuation of 0 is infinite");
    Int prime(static_cast<unsigned long>(p));
    Int reduced;
    return mpz_remove(reduced.get_mpz_t(), k.get_mpz_t(), prime.get_mpz_t());
}

unsigned long d_p(unsigned long k, unsigned long p) {
    if (p < 2)
        throw std::invalid_argument("d_p: p must be prime");
    unsigned long total = 0;
    while (k > 0) {
        k /= p;
        total += k;
    }
    return total;
}

unsigned long c_pr(const Partition& lambda, unsigned long p, unsigned r) {
    unsigned long total = 0;
    for (auto [j, m] : lambda.multiplicities()) {
        unsigned long v = v_p(Int(j), p);
        if (v < r)
            total += (r - v) * m + d_p(m, p);
    }
    return total;
}

Int theta(const Partition& lambda, unsigned long ell) {
    if (ell == 0) return 0;
    Int out = 1;
    for (auto [p, r] : factorize(ell)) {
        Int pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), p, c_pr(lambda, p, r));
        out *= pw;
    }
    return out;
}

Int r_ell(const Partition& lambda, unsigned long ell) {
    if (ell < 1)
        throw std::invalid_argument("r_ell: ell must be >= 1");
    Int out = 1;
    for (auto [k, m] : lambda.multiplicities()) {
        unsigned long q = ell / std::gcd(ell, static_cast<unsigned long>(k));
        unsigned long reps = m / ell;
        if (reps == 0 || q == 1) {
            // q == 1 still contributes (1)^reps * (reps!)_{empty} = 1.
            continue;
        }
        std::vector<unsigned long> pi;
        for (auto [p, r] : factorize(q)) pi.push_back(p);
        Int qpow;
        mpz_ui_pow_ui(qpow.get_mpz_t(), q, reps);
        Int fact;
        mpz_fac_ui(fact.get_mpz_t(), reps);
        out *= qpow * pi_part(fact, pi);
    }
    return out;
}

ExponentTriple exponents(const Partition& lambda, unsigned long p, unsigned r) {
    // n_i(lambda) = m_{p^i}(lambda)
    std::map<unsigned, unsigned long> n;
    for (unsigned part : lambda.parts()) {
        unsigned long v = part;
        unsigned i = 0;
        while (v % p == 0) { v /= p; ++i; }
        if (v != 1)
            throw std::invalid_argument("exponents: partition has a non-p-power part");
        ++n[i];
    }
    ExponentTriple t;
    for (auto [i, ni] : n) {
        if (i < r) {
            t.e += d_p(ni, p);
            t.f += (r - i) * ni;
        }
    }
    t.k = static_cast<long>(t.f) - static_cast<long>(t.e);
    return t;
}

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<unsigned long, unsigned>> factorize(unsigned long n) {
    if (n < 1)
        throw std::invalid_argument("factorize: n must be >= 1");
    std::vector<std::pair<unsigned long, unsigned>> out;
    for (unsigned long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            unsigned r = 0;
            while (n % d == 0) { n /= d; ++r; }
            out.emplace_back(d, r);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

Int pi_part(const Int& k, const std::vector<unsigned long>& primes) {
    if (k == 0)
        throw std::domain_error("pi_part: k must be nonzero");
    Int out = 1;
    for (unsigned long p : primes) {
        Int pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), p, v_p(k, p));
        out *= pw;
    }
    return out;
}

}  // namespace cartan
