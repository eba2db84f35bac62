#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cartan {

using Int = mpz_class;
using Rat = mpq_class;

/// An integer partition: a weakly decreasing list of positive parts.
/// Immutable after construction; the empty list is the partition of 0.
/// Ordering is the canonical order used to index every matrix in this
/// project: ascending lexicographic with zero padding.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<unsigned> parts);

    /// Sorts the given parts descending; zero parts are rejected.
    static Partition from_unsorted(std::vector<unsigned> parts);

    const std::vector<unsigned>& parts() const { return parts_; }
    /// |lambda|
    unsigned sum() const { return sum_; }
    /// l(lambda)
    unsigned length() const { return static_cast<unsigned>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// m_j(lambda), the number of parts equal to j (j >= 1).
    unsigned multiplicity(unsigned j) const;

    /// Part multiplicities as a map j -> m_j, nonzero entries only.
    std::map<unsigned, unsigned> multiplicities() const;

    /// Textual form "[4,2,1]"; the empty partition renders as "[]".
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

private:
    std::vector<unsigned> parts_;
    unsigned sum_ = 0;
};

/// Parses the "[4,2,1]" textual form. Throws std::invalid_argument on bad input.
Partition parse_partition(const std::string& text);

/// All partitions of w in canonical (ascending padded-lexicographic) order.
std::vector<Partition> partitions_of(unsigned w);

/// All partitions of size <= w, in canonical order.
std::vector<Partition> partitions_up_to(unsigned w);

/// z_lambda = prod_i i^{m_i} m_i!, the centralizer order of a cycle-type-lambda element.
Int z_value(const Partition& lambda);

/// Multiset union of parts.
Partition sum_partitions(std::span<const Partition> lambdas);

/// The ell-core, computed on the abacus (beta numbers pushed up their runners).
Partition ell_core(const Partition& lambda, unsigned ell);

/// True iff some part is divisible by ell.
bool is_ell_singular(const Partition& lambda, unsigned ell);

/// k(b,a): the number of b-tuples of partitions with total size a.
Int count_tuples(unsigned b, unsigned a);

/// Pow(w) for the prime p: partitions of w all of whose parts are powers of p
/// (including p^0 = 1), in canonical order.
std::vector<Partition> power_partitions(unsigned w, unsigned long p);

/// Par'(w): partitions of w with every part coprime to p, canonical order.
std::vector<Partition> class_regular_partitions(unsigned w, unsigned long p);

/// The p-class-regular nu with m_j(nu) = sum_n m_{j p^n}(lambda) p^n for p-coprime j.
Partition block_class(const Partition& lambda, unsigned long p);

/// The iota splitting: component lambda^j has m_{p^n}(lambda^j) = m_{j p^n}(lambda).
/// Keys are the p-coprime j with nonempty component.
std::map<unsigned, Partition> iota_split(const Partition& lambda, unsigned long p);

/// lambda^{<r}: keeps the parts < p^r. Input must lie in Pow (else std::invalid_argument).
Partition truncate_below_r(const Partition& lambda, unsigned long p, unsigned r);

/// lambda^{>=r}: parts >= p^r, divided by p^r. Input must lie in Pow.
Partition truncate_at_least_r(const Partition& lambda, unsigned long p, unsigned r);

/// bar(lambda): parts < p^r kept; each part p^j with j >= r split into p^{j-r}
/// parts of size p^r. Input must lie in Pow.
Partition bar(const Partition& lambda, unsigned long p, unsigned r);

/// A map from the ordered index set [0,k) to partitions; the universal index
/// object for wreath-product matrices. Ordered componentwise by the canonical
/// partition order, first component most significant.
class PartitionMap {
public:
    PartitionMap() = default;
    explicit PartitionMap(std::vector<Partition> components)
        : comps_(std::move(components)) {}

    const std::vector<Partition>& components() const { return comps_; }
    const Partition& operator[](std::size_t t) const { return comps_[t]; }
    std::size_t domain_size() const { return comps_.size(); }

    /// Total size |lambda_bar| = sum of component sizes.
    unsigned total() const;

    std::string to_string() const;

    friend bool operator==(const PartitionMap&, const PartitionMap&) = default;
    friend std::strong_ordering operator<=>(const PartitionMap&, const PartitionMap&);

private:
    std::vector<Partition> comps_;
};

/// PMap_w([0,k)): all maps with total size w, in canonical order.
std::vector<PartitionMap> pmaps_of(std::size_t k, unsigned w);

}  // namespace cartan
