#include "cartan/symfun.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "cartan/linalg.hpp"

namespace cartan {

std::string basis_name(Basis b) {
    switch (b) {
        case Basis::P: return "p";
        case Basis::PTilde: return "ptilde";
        case Basis::S: return "s";
        case Basis::H: return "h";
    }
    throw std::invalid_argument("basis_name: unknown basis tag");
}

namespace {

using PartPair = std::pair<std::vector<unsigned>, std::vector<unsigned>>;

std::mutex mn_mutex;
std::map<PartPair, Int> mn_memo;

/// Murnaghan-Nakayama on beta numbers: remove a rim hook of length t from the
/// shape by replacing some beta value b with b - t (must stay distinct); the
/// sign is (-1)^{number of beta values jumped}.
Int mn_recurse(const std::vector<unsigned>& shape, const std::vector<unsigned>& cycles) {
    if (shape.empty())
        return cycles.empty() ? 1 : 0;
    PartPair key{shape, cycles};
    if (auto it = mn_memo.find(key); it != mn_memo.end()) return it->second;

    unsigned t = cycles.front();  // cycles kept weakly decreasing
    std::vector<unsigned> rest(cycles.begin() + 1, cycles.end());

    unsigned len = static_cast<unsigned>(shape.size());
    std::vector<unsigned> beta(len);
    for (unsigned i = 0; i < len; ++i) beta[i] = shape[i] + (len - 1 - i);

    Int total = 0;
    for (unsigned i = 0; i < len; ++i) {
        if (beta[i] < t) continue;
        unsigned target = beta[i] - t;
        bool occupied = false;
        unsigned jumped = 0;
        for (unsigned j = 0; j < len; ++j) {
            if (j == i) continue;
            if (beta[j] == target) { occupied = true; break; }
            if (beta[j] > target && beta[j] < beta[i]) ++jumped;
        }
        if (occupied) continue;
        std::vector<unsigned> nbeta = beta;
        nbeta[i] = target;
        std::sort(nbeta.begin(), nbeta.end(), std::greater<unsigned>());
        std::vector<unsigned> nshape;
        for (unsigned j = 0; j < len; ++j) {
            unsigned part = nbeta[j] - (len - 1 - j);
            if (part > 0) nshape.push_back(part);
        }
        Int sub = mn_recurse(nshape, rest);
        if (jumped % 2) total -= sub;
        else total += sub;
    }
    mn_memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

Int character_value(const Partition& lambda, const Partition& mu) {
    if (lambda.sum() != mu.sum())
        throw std::invalid_argument("character_value: |lambda| != |mu|");
    std::lock_guard lock(mn_mutex);
    return mn_recurse(lambda.parts(), mu.parts());
}

namespace {

std::mutex table_mutex;
std::map<unsigned, std::shared_ptr<const CharTable>> table_cache;

}  // namespace

const CharTable& character_table(unsigned w) {
    {
        std::lock_guard lock(table_mutex);
        if (auto it = table_cache.find(w); it != table_cache.end()) return *it->second;
    }
    auto pars = partitions_of(w);
    auto table = std::make_shared<CharTable>();
    table->w = w;
    table->values = QMatrix(pars.size(), pars.size());
    for (std::size_t i = 0; i < pars.size(); ++i)
        for (std::size_t j = 0; j < pars.size(); ++j)
            table->values(i, j) = Rat(character_value(pars[i], pars[j]));
    std::lock_guard lock(table_mutex);
    auto [it, inserted] = table_cache.emplace(w, std::move(table));
    return *it->second;
}

Int homogeneous_map_count(const Partition& lambda, const Partition& mu) {
    if (lambda.sum() != mu.sum())
        throw std::invalid_argument("homogeneous_map_count: |lambda| != |mu|");
    // Assign the parts of mu one by one to the slots of lambda; a state is the
    // vector of residual slot capacities.
    std::map<std::vector<unsigned>, Int> states;
    states[lambda.parts()] = 1;
    for (unsigned part : mu.parts()) {
        std::map<std::vector<unsigned>, Int> next;
        for (const auto& [caps, count] : states) {
            for (std::size_t s = 0; s < caps.size(); ++s) {
                if (caps[s] < part) continue;
                std::vector<unsigned> ncaps = caps;
                ncaps[s] -= part;
                next[std::move(ncaps)] += count;
            }
        }
        states = std::move(next);
    }
    std::vector<unsigned> done(lambda.length(), 0);
    auto it = states.find(done);
    return it == states.end() ? Int(0) : it->second;
}

namespace {

std::mutex trans_mutex;
std::map<std::tuple<Basis, Basis, unsigned>, std::shared_ptr<const QMatrix>> trans_cache;

QMatrix build_to_ptilde(Basis u, unsigned w) {
    auto pars = partitions_of(w);
    std::size_t n = pars.size();
    switch (u) {
        case Basis::PTilde:
            return QMatrix::identity(n);
        case Basis::P: {
            QMatrix m(n, n);
            for (std::size_t i = 0; i < n; ++i) m(i, i) = Rat(z_value(pars[i]));
            return m;
        }
        case Basis::S:
            return character_table(w).values;
        case Basis::H: {
            QMatrix m(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    m(i, j) = Rat(homogeneous_map_count(pars[i], pars[j]));
            return m;
        }
    }
    throw std::invalid_argument("transition: unknown basis tag");
}

}  // namespace

const QMatrix& transition(Basis u, Basis v, unsigned w) {
    std::tuple<Basis, Basis, unsigned> key{u, v, w};
    {
        std::lock_guard lock(trans_mutex);
        if (auto it = trans_cache.find(key); it != trans_cache.end()) return *it->second;
    }
    QMatrix result;
    if (v == Basis::PTilde) {
        result = build_to_ptilde(u, w);
    } else {
        result = build_to_ptilde(u, w) * inverse(build_to_ptilde(v, w));
    }
    auto holder = std::make_shared<const QMatrix>(std::move(result));
    std::lock_guard lock(trans_mutex);
    auto [it, inserted] = trans_cache.emplace(key, std::move(holder));
    return *it->second;
}

Rat scalar_product(const std::vector<Rat>& f, Basis u,
                   const std::vector<Rat>& g, Basis v, unsigned w) {
    auto pars = partitions_of(w);
    std::size_t n = pars.size();
    if (f.size() != n || g.size() != n)
        throw std::invalid_argument("scalar_product: vector length does not match Par(w)");
    const QMatrix& mu = transition(u, Basis::PTilde, w);
    const QMatrix& mv = transition(v, Basis::PTilde, w);
    // class-value coordinates: values[mu] = sum_lambda coeff_lambda M_{lambda mu}
    std::vector<Rat> fv(n), gv(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            if (f[i] != 0) fv[j] += f[i] * mu(i, j);
            if (g[i] != 0) gv[j] += g[i] * mv(i, j);
        }
    Rat out = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (fv[j] == 0 || gv[j] == 0) continue;
        out += fv[j] * gv[j] / Rat(z_value(pars[j]));
    }
    return out;
}

}  // namespace cartan
