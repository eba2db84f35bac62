#include "cartan/wreath.hpp"

#include <map>
#include <stdexcept>

#include "cartan/linalg.hpp"

namespace cartan {

std::vector<std::vector<unsigned>> exponent_vectors(std::size_t k, unsigned n) {
    std::vector<std::vector<unsigned>> out;
    if (k == 0) {
        if (n == 0) out.push_back({});
        return out;
    }
    std::vector<unsigned> acc(k, 0);
    auto rec = [&](auto&& self, std::size_t slot, unsigned left) -> void {
        if (slot + 1 == k) {
            acc[slot] = left;
            out.push_back(acc);
            return;
        }
        for (unsigned v = left; v + 1 > 0; --v) {
            acc[slot] = v;
            self(self, slot + 1, left - v);
        }
    };
    rec(rec, 0, n);
    return out;
}

namespace {

Rat rat_pow(const Rat& base, unsigned long e) {
    if (e == 0) return Rat(1);
    Rat out = 1;
    Rat b = base;
    while (e > 0) {
        if (e & 1) out *= b;
        b *= b;
        e >>= 1;
    }
    return out;
}

}  // namespace

QMatrix sym_power(const QMatrix& a, unsigned n) {
    auto row_exps = exponent_vectors(a.rows(), n);
    auto col_exps = exponent_vectors(a.cols(), n);
    std::map<std::vector<unsigned>, std::size_t> col_pos;
    for (std::size_t j = 0; j < col_exps.size(); ++j) col_pos[col_exps[j]] = j;

    QMatrix out(row_exps.size(), col_exps.size());
    for (std::size_t ri = 0; ri < row_exps.size(); ++ri) {
        // expand prod_t (sum_q a_{tq} x_q)^{i(t)} and read off the monomials
        std::map<std::vector<unsigned>, Rat> poly;
        poly[std::vector<unsigned>(a.cols(), 0)] = 1;
        for (std::size_t t = 0; t < a.rows(); ++t) {
            for (unsigned rep = 0; rep < row_exps[ri][t]; ++rep) {
                std::map<std::vector<unsigned>, Rat> next;
                for (const auto& [mono, coeff] : poly) {
                    for (std::size_t q = 0; q < a.cols(); ++q) {
                        if (a(t, q) == 0) continue;
                        std::vector<unsigned> m = mono;
                        ++m[q];
                        next[std::move(m)] += coeff * a(t, q);
                    }
                }
                poly = std::move(next);
            }
        }
        for (const auto& [mono, coeff] : poly)
            out(ri, col_pos.at(mono)) = coeff;
    }
    return out;
}

namespace {

/// Block key of a partition map: the sum of its components. Two maps lie in
/// the same block of A^{wr}(p, ptilde) iff their keys agree.
Partition block_key(const PartitionMap& pm) {
    return sum_partitions(pm.components());
}

/// Positions of the per-part-size multiplicity vectors of pm inside the
/// exponent-vector enumerations, one per distinct part size d of the key.
std::vector<std::size_t> tensor_positions(
    const PartitionMap& pm, const std::vector<unsigned>& part_sizes,
    const std::vector<std::map<std::vector<unsigned>, std::size_t>>& pos_maps) {
    std::size_t k = pm.domain_size();
    std::vector<std::size_t> out(part_sizes.size());
    for (std::size_t di = 0; di < part_sizes.size(); ++di) {
        std::vector<unsigned> mult(k);
        for (std::size_t t = 0; t < k; ++t)
            mult[t] = pm[t].multiplicity(part_sizes[di]);
        out[di] = pos_maps[di].at(mult);
    }
    return out;
}

}  // namespace

QMatrix wreath_pp(const QMatrix& a, unsigned w) {
    auto rows = pmaps_of(a.rows(), w);
    auto cols = pmaps_of(a.cols(), w);
    QMatrix out(rows.size(), cols.size());

    std::map<Partition, std::vector<std::size_t>> row_blocks, col_blocks;
    for (std::size_t i = 0; i < rows.size(); ++i) row_blocks[block_key(rows[i])].push_back(i);
    for (std::size_t j = 0; j < cols.size(); ++j) col_blocks[block_key(cols[j])].push_back(j);

    for (const auto& [key, row_idx] : row_blocks) {
        auto cit = col_blocks.find(key);
        if (cit == col_blocks.end()) continue;
        const auto& col_idx = cit->second;

        std::vector<unsigned> part_sizes;
        std::vector<unsigned> mults;
        for (auto [d, m] : key.multiplicities()) {
            part_sizes.push_back(d);
            mults.push_back(m);
        }
        // one symmetric power per distinct part size d, of degree j(d) = m_d(key)
        std::vector<QMatrix> sym;
        std::vector<std::map<std::vector<unsigned>, std::size_t>> row_pos, col_pos;
        for (std::size_t di = 0; di < part_sizes.size(); ++di) {
            sym.push_back(sym_power(a, mults[di]));
            auto re = exponent_vectors(a.rows(), mults[di]);
            auto ce = exponent_vectors(a.cols(), mults[di]);
            std::map<std::vector<unsigned>, std::size_t> rp, cp;
            for (std::size_t x = 0; x < re.size(); ++x) rp[re[x]] = x;
            for (std::size_t x = 0; x < ce.size(); ++x) cp[ce[x]] = x;
            row_pos.push_back(std::move(rp));
            col_pos.push_back(std::move(cp));
        }

        std::vector<std::vector<std::size_t>> rpos, cpos;
        for (std::size_t i : row_idx)
            rpos.push_back(tensor_positions(rows[i], part_sizes, row_pos));
        for (std::size_t j : col_idx)
            cpos.push_back(tensor_positions(cols[j], part_sizes, col_pos));

        for (std::size_t ri = 0; ri < row_idx.size(); ++ri)
            for (std::size_t ci = 0; ci < col_idx.size(); ++ci) {
                Rat entry = 1;
                for (std::size_t di = 0; di < part_sizes.size() && entry != 0; ++di)
                    entry *= sym[di](rpos[ri][di], cpos[ci][di]);
                out(row_idx[ri], col_idx[ci]) = entry;
            }
    }
    return out;
}

namespace {

/// Graded tensor power of the transition matrix M(u, v) on PMap_w([0,k)):
/// entry (lm, mm) = prod_t M(u, v; |lm(t)|)_{lm(t), mm(t)}, zero unless the
/// component sizes match.
QMatrix graded_tensor_transition(std::size_t k, unsigned w, Basis u, Basis v) {
    auto maps = pmaps_of(k, w);
    std::vector<std::vector<Partition>> pars(w + 1);
    std::vector<std::map<Partition, std::size_t>> index(w + 1);
    for (unsigned s = 0; s <= w; ++s) {
        pars[s] = partitions_of(s);
        for (std::size_t i = 0; i < pars[s].size(); ++i) index[s][pars[s][i]] = i;
    }
    QMatrix out(maps.size(), maps.size());
    for (std::size_t i = 0; i < maps.size(); ++i)
        for (std::size_t j = 0; j < maps.size(); ++j) {
            Rat entry = 1;
            for (std::size_t t = 0; t < k && entry != 0; ++t) {
                unsigned si = maps[i][t].sum(), sj = maps[j][t].sum();
                if (si != sj) { entry = 0; break; }
                const QMatrix& m = transition(u, v, si);
                entry *= m(index[si].at(maps[i][t]), index[sj].at(maps[j][t]));
            }
            out(i, j) = entry;
        }
    return out;
}

}  // namespace

QMatrix wreath_ss(const QMatrix& a, unsigned w) {
    QMatrix pp = wreath_pp(a, w);
    QMatrix left = graded_tensor_transition(a.rows(), w, Basis::S, Basis::P);
    QMatrix right = graded_tensor_transition(a.cols(), w, Basis::P, Basis::S);
    return left * pp * right;
}

namespace {

/// Nonnegative integer matrices with prescribed row and column sums.
void contingency_tables(const std::vector<unsigned>& row_sums,
                        const std::vector<unsigned>& col_sums,
                        std::vector<std::vector<unsigned>>& acc,
                        std::vector<unsigned>& col_left,
                        std::vector<std::vector<std::vector<unsigned>>>& out) {
    std::size_t r = acc.size();
    if (r == row_sums.size()) {
        for (unsigned c : col_left)
            if (c != 0) return;
        out.push_back(acc);
        return;
    }
    std::size_t q = col_sums.size();
    std::vector<unsigned> row(q, 0);
    auto rec = [&](auto&& self, std::size_t col, unsigned left) -> void {
        if (col == q) {
            if (left != 0) return;
            acc.push_back(row);
            contingency_tables(row_sums, col_sums, acc, col_left, out);
            acc.pop_back();
            return;
        }
        unsigned cap = std::min(left, col_left[col]);
        for (unsigned v = 0; v <= cap; ++v) {
            row[col] = v;
            col_left[col] -= v;
            self(self, col + 1, left - v);
            col_left[col] += v;
        }
        row[col] = 0;
    };
    rec(rec, 0, row_sums[r]);
}

}  // namespace

QMatrix wreath_ss_direct(const QMatrix& a, unsigned w) {
    std::size_t tn = a.rows(), qn = a.cols();
    auto rows = pmaps_of(tn, w);
    auto cols = pmaps_of(qn, w);
    std::vector<std::vector<Partition>> pars(w + 1);
    for (unsigned s = 0; s <= w; ++s) pars[s] = partitions_of(s);

    QMatrix out(rows.size(), cols.size());
    for (std::size_t ri = 0; ri < rows.size(); ++ri) {
        std::vector<unsigned> row_sums(tn);
        for (std::size_t t = 0; t < tn; ++t) row_sums[t] = rows[ri][t].sum();
        for (std::size_t ci = 0; ci < cols.size(); ++ci) {
            std::vector<unsigned> col_sums(qn);
            for (std::size_t q = 0; q < qn; ++q) col_sums[q] = cols[ci][q].sum();

            std::vector<std::vector<std::vector<unsigned>>> tables;
            std::vector<std::vector<unsigned>> acc;
            std::vector<unsigned> col_left = col_sums;
            contingency_tables(row_sums, col_sums, acc, col_left, tables);

            Rat total = 0;
            for (const auto& sizes : tables) {
                // fill each cell with a partition of the prescribed size
                std::vector<std::pair<std::size_t, std::size_t>> cells;
                for (std::size_t t = 0; t < tn; ++t)
                    for (std::size_t q = 0; q < qn; ++q)
                        cells.emplace_back(t, q);
                std::vector<Partition> grid(cells.size());
                auto rec = [&](auto&& self, std::size_t ci2) -> void {
                    if (ci2 == cells.size()) {
                        Rat term = 1;
                        // column factors: chi^{mu(q)} at the column sum
                        for (std::size_t q = 0; q < qn && term != 0; ++q) {
                            std::vector<Partition> colparts;
                            for (std::size_t t = 0; t < tn; ++t)
                                colparts.push_back(grid[t * qn + q]);
                            term *= Rat(character_value(cols[ci][q], sum_partitions(colparts)));
                        }
                        // row factors: chi^{lambda(t)} over z, at the row sum
                        for (std::size_t t = 0; t < tn && term != 0; ++t) {
                            std::vector<Partition> rowparts;
                            Rat zden = 1;
                            for (std::size_t q = 0; q < qn; ++q) {
                                rowparts.push_back(grid[t * qn + q]);
                                zden *= Rat(z_value(grid[t * qn + q]));
                            }
                            term *= Rat(character_value(rows[ri][t], sum_partitions(rowparts))) / zden;
                        }
                        // matrix entry powers
                        for (std::size_t t = 0; t < tn && term != 0; ++t)
                            for (std::size_t q = 0; q < qn; ++q) {
                                unsigned len = grid[t * qn + q].length();
                                if (len > 0) term *= rat_pow(a(t, q), len);
                            }
                        total += term;
                        return;
                    }
                    auto [t, q] = cells[ci2];
                    for (const Partition& nu : pars[sizes[t][q]]) {
                        grid[t * qn + q] = nu;
                        self(self, ci2 + 1);
                    }
                };
                rec(rec, 0);
            }
            out(ri, ci) = total;
        }
    }
    return out;
}

QMatrix x_matrix_pp(unsigned long ell, unsigned w) {
    auto pars = partitions_of(w);
    QMatrix out(pars.size(), pars.size());
    for (std::size_t i = 0; i < pars.size(); ++i) {
        unsigned len = pars[i].length();
        if (len == 0) {
            out(i, i) = 1;  // ell^0 = 1 even for ell = 0
        } else {
            Int pw;
            mpz_ui_pow_ui(pw.get_mpz_t(), ell, len);
            out(i, i) = Rat(pw);
        }
    }
    return out;
}

XMatrix x_matrix(unsigned long ell, unsigned w) {
    const QMatrix& sp = transition(Basis::S, Basis::P, w);
    const QMatrix& ps = transition(Basis::P, Basis::S, w);
    QMatrix conj = sp * x_matrix_pp(ell, w) * ps;

    auto pars = partitions_of(w);
    const CharTable& table = character_table(w);
    QMatrix direct(pars.size(), pars.size());
    for (std::size_t i = 0; i < pars.size(); ++i)
        for (std::size_t j = 0; j < pars.size(); ++j) {
            Rat sum = 0;
            for (std::size_t v = 0; v < pars.size(); ++v) {
                unsigned len = pars[v].length();
                Rat lp;
                if (len == 0) {
                    lp = 1;
                } else {
                    Int pw;
                    mpz_ui_pow_ui(pw.get_mpz_t(), ell, len);
                    lp = Rat(pw);
                }
                if (table.values(i, v) == 0 || table.values(j, v) == 0 || lp == 0) continue;
                sum += table.values(i, v) * table.values(j, v) * lp / Rat(z_value(pars[v]));
            }
            direct(i, j) = sum;
        }
    if (!(conj == direct))
        throw std::logic_error("x_matrix: conjugation and direct-sum paths disagree");

    XMatrix out;
    out.ell = ell;
    out.w = w;
    out.mat = std::move(conj);
    return out;
}

QMatrix cartan_A_matrix(unsigned ell) {
    if (ell < 2)
        throw std::invalid_argument("cartan_A_matrix: ell must be >= 2");
    std::size_t n = ell - 1;
    QMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        out(i, i) = 2;
        if (i + 1 < n) {
            out(i, i + 1) = 1;
            out(i + 1, i) = 1;
        }
    }
    return out;
}

}  // namespace cartan
