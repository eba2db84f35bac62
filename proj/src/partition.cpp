#include "cartan/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cartan {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] == 0)
            throw std::invalid_argument("Partition: zero part");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("Partition: parts not weakly decreasing");
        sum_ += parts_[i];
    }
}

Partition Partition::from_unsorted(std::vector<unsigned> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<unsigned>());
    return Partition(std::move(parts));
}

unsigned Partition::multiplicity(unsigned j) const {
    if (j == 0)
        throw std::invalid_argument("multiplicity: j must be positive");
    return static_cast<unsigned>(std::count(parts_.begin(), parts_.end(), j));
}

std::map<unsigned, unsigned> Partition::multiplicities() const {
    std::map<unsigned, unsigned> m;
    for (unsigned p : parts_) ++m[p];
    return m;
}

std::string Partition::to_string() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ',';
        out << parts_[i];
    }
    out << ']';
    return out.str();
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    std::size_t n = std::max(a.parts_.size(), b.parts_.size());
    for (std::size_t i = 0; i < n; ++i) {
        unsigned x = i < a.parts_.size() ? a.parts_[i] : 0;
        unsigned y = i < b.parts_.size() ? b.parts_[i] : 0;
        if (x != y) return x <=> y;
    }
    return std::strong_ordering::equal;
}

Partition parse_partition(const std::string& text) {
    std::size_t begin = text.find('[');
    std::size_t end = text.rfind(']');
    if (begin == std::string::npos || end == std::string::npos || begin > end)
        throw std::invalid_argument("parse_partition: expected bracketed part list");
    std::string body = text.substr(begin + 1, end - begin - 1);
    std::vector<unsigned> parts;
    std::istringstream in(body);
    std::string token;
    while (std::getline(in, token, ',')) {
        std::size_t pos = 0;
        unsigned long v = std::stoul(token, &pos);
        while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos]))) ++pos;
        if (pos != token.size() || v == 0)
            throw std::invalid_argument("parse_partition: bad part '" + token + "'");
        parts.push_back(static_cast<unsigned>(v));
    }
    return Partition(std::move(parts));
}

namespace {

void generate_desc(unsigned remaining, unsigned max_part, std::vector<unsigned>& acc,
                   std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
        acc.push_back(part);
        generate_desc(remaining - part, part, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(unsigned w) {
    std::vector<Partition> out;
    std::vector<unsigned> acc;
    generate_desc(w, w == 0 ? 1 : w, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> partitions_up_to(unsigned w) {
    std::vector<Partition> out;
    for (unsigned s = 0; s <= w; ++s) {
        auto ps = partitions_of(s);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

Int z_value(const Partition& lambda) {
    Int z = 1;
    for (auto [j, m] : lambda.multiplicities()) {
        Int pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), j, m);
        Int fact;
        mpz_fac_ui(fact.get_mpz_t(), m);
        z *= pw * fact;
    }
    return z;
}

Partition sum_partitions(std::span<const Partition> lambdas) {
    std::vector<unsigned> parts;
    for (const Partition& l : lambdas)
        parts.insert(parts.end(), l.parts().begin(), l.parts().end());
    return Partition::from_unsorted(std::move(parts));
}

Partition ell_core(const Partition& lambda, unsigned ell) {
    if (ell < 2)
        throw std::invalid_argument("ell_core: ell must be >= 2");
    unsigned len = lambda.length();
    if (len == 0) return Partition();
    // Beta set with len beads; push every bead as far up its runner as it goes.
    std::vector<unsigned> beta(len);
    for (unsigned i = 0; i < len; ++i)
        beta[i] = lambda.parts()[i] + (len - 1 - i);
    std::vector<unsigned> runner_count(ell, 0);
    for (unsigned b : beta) ++runner_count[b % ell];
    std::vector<unsigned> pushed;
    for (unsigned r = 0; r < ell; ++r)
        for (unsigned c = 0; c < runner_count[r]; ++c)
            pushed.push_back(r + c * ell);
    std::sort(pushed.begin(), pushed.end(), std::greater<unsigned>());
    std::vector<unsigned> parts;
    for (unsigned i = 0; i < len; ++i) {
        unsigned part = pushed[i] - (len - 1 - i);
        if (part > 0) parts.push_back(part);
    }
    return Partition(std::move(parts));
}

bool is_ell_singular(const Partition& lambda, unsigned ell) {
    if (ell < 2)
        throw std::invalid_argument("is_ell_singular: ell must be >= 2");
    for (unsigned p : lambda.parts())
        if (p % ell == 0) return true;
    return false;
}

Int count_tuples(unsigned b, unsigned a) {
    // Coefficients of prod_{i>=1} (1-x^i)^{-b} up to degree a.
    std::vector<Int> c(a + 1, 0);
    c[0] = 1;
    for (unsigned i = 1; i <= a; ++i)
        for (unsigned rep = 0; rep < b; ++rep)
            for (unsigned j = i; j <= a; ++j)
                c[j] += c[j - i];
    return c[a];
}

namespace {

bool is_power_of(unsigned part, unsigned long p) {
    unsigned long v = part;
    while (v % p == 0) v /= p;
    return v == 1;
}

void require_prime(unsigned long p, const char* who) {
    if (p < 2)
        throw std::invalid_argument(std::string(who) + ": p must be prime");
    for (unsigned long d = 2; d * d <= p; ++d)
        if (p % d == 0)
            throw std::invalid_argument(std::string(who) + ": p must be prime");
}

void require_p_power_partition(const Partition& lambda, unsigned long p, const char* who) {
    for (unsigned part : lambda.parts())
        if (!is_power_of(part, p))
            throw std::invalid_argument(std::string(who) + ": partition has a non-p-power part");
}

}  // namespace

std::vector<Partition> power_partitions(unsigned w, unsigned long p) {
    require_prime(p, "power_partitions");
    std::vector<Partition> out;
    for (const Partition& l : partitions_of(w)) {
        bool ok = true;
        for (unsigned part : l.parts())
            if (!is_power_of(part, p)) { ok = false; break; }
        if (ok) out.push_back(l);
    }
    return out;
}

std::vector<Partition> class_regular_partitions(unsigned w, unsigned long p) {
    require_prime(p, "class_regular_partitions");
    std::vector<Partition> out;
    for (const Partition& l : partitions_of(w)) {
        bool ok = true;
        for (unsigned part : l.parts())
            if (part % p == 0) { ok = false; break; }
        if (ok) out.push_back(l);
    }
    return out;
}

Partition block_class(const Partition& lambda, unsigned long p) {
    require_prime(p, "block_class");
    std::vector<unsigned> parts;
    for (unsigned part : lambda.parts()) {
        unsigned long j = part, q = 1;
        while (j % p == 0) { j /= p; q *= p; }
        for (unsigned long c = 0; c < q; ++c)
            parts.push_back(static_cast<unsigned>(j));
    }
    return Partition::from_unsorted(std::move(parts));
}

std::map<unsigned, Partition> iota_split(const Partition& lambda, unsigned long p) {
    require_prime(p, "iota_split");
    std::map<unsigned, std::vector<unsigned>> comps;
    for (unsigned part : lambda.parts()) {
        unsigned long j = part, q = 1;
        while (j % p == 0) { j /= p; q *= p; }
        comps[static_cast<unsigned>(j)].push_back(static_cast<unsigned>(q));
    }
    std::map<unsigned, Partition> out;
    for (auto& [j, parts] : comps)
        out.emplace(j, Partition::from_unsorted(std::move(parts)));
    return out;
}

Partition truncate_below_r(const Partition& lambda, unsigned long p, unsigned r) {
    require_prime(p, "truncate_below_r");
    require_p_power_partition(lambda, p, "truncate_below_r");
    Int bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), p, r);
    std::vector<unsigned> parts;
    for (unsigned part : lambda.parts())
        if (bound > part) parts.push_back(part);
    return Partition(std::move(parts));
}

Partition truncate_at_least_r(const Partition& lambda, unsigned long p, unsigned r) {
    require_prime(p, "truncate_at_least_r");
    require_p_power_partition(lambda, p, "truncate_at_least_r");
    Int bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), p, r);
    std::vector<unsigned> parts;
    for (unsigned part : lambda.parts())
        if (bound <= part) parts.push_back(static_cast<unsigned>(part / bound.get_ui()));
    return Partition(std::move(parts));
}

Partition bar(const Partition& lambda, unsigned long p, unsigned r) {
    require_prime(p, "bar");
    require_p_power_partition(lambda, p, "bar");
    Int bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), p, r);
    if (!bound.fits_uint_p())
        throw std::invalid_argument("bar: p^r out of range");
    unsigned long pr = bound.get_ui();
    std::vector<unsigned> parts;
    for (unsigned part : lambda.parts()) {
        if (part < pr) {
            parts.push_back(part);
        } else {
            for (unsigned long c = 0; c < part / pr; ++c)
                parts.push_back(static_cast<unsigned>(pr));
        }
    }
    return Partition::from_unsorted(std::move(parts));
}

unsigned PartitionMap::total() const {
    unsigned t = 0;
    for (const Partition& c : comps_) t += c.sum();
    return t;
}

std::string PartitionMap::to_string() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        if (i) out << ';';
        out << comps_[i].to_string();
    }
    out << ')';
    return out.str();
}

std::strong_ordering operator<=>(const PartitionMap& a, const PartitionMap& b) {
    if (auto c = a.comps_.size() <=> b.comps_.size(); c != 0) return c;
    for (std::size_t i = 0; i < a.comps_.size(); ++i)
        if (auto c = a.comps_[i] <=> b.comps_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

std::vector<PartitionMap> pmaps_of(std::size_t k, unsigned w) {
    std::vector<PartitionMap> out;
    if (k == 0) {
        if (w == 0) out.emplace_back();
        return out;
    }
    std::vector<Partition> pool = partitions_up_to(w);
    std::vector<Partition> acc;
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t slot, unsigned used) {
        if (slot == k) {
            if (used == w) out.emplace_back(acc);
            return;
        }
        // pool is in canonical order, so the recursion emits maps in
        // componentwise-lexicographic order directly.
        for (const Partition& l : pool) {
            if (used + l.sum() > w) continue;
            acc.push_back(l);
            rec(slot + 1, used + l.sum());
            acc.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

}  // namespace cartan
