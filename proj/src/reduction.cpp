#include "cartan/reduction.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "cartan/arith.hpp"
#include "cartan/linalg.hpp"
#include "cartan/symfun.hpp"

namespace cartan {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

std::mutex nmat_mutex;
std::map<std::pair<unsigned, unsigned long>, QMatrix> nmat_cache;

std::optional<long> v_p_of(const Rat& q, unsigned long p) {
    if (q == 0) return std::nullopt;
    Int prime(static_cast<unsigned long>(p));
    Int tmp;
    long vn = static_cast<long>(
        mpz_remove(tmp.get_mpz_t(), q.get_num().get_mpz_t(), prime.get_mpz_t()));
    long vd = static_cast<long>(
        mpz_remove(tmp.get_mpz_t(), q.get_den().get_mpz_t(), prime.get_mpz_t()));
    return vn - vd;
}

Int ui_pow(unsigned long base, unsigned long e) {
    Int out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, e);
    return out;
}

std::size_t index_of(const std::vector<Partition>& sorted, const Partition& x, const char* who) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
    if (it == sorted.end() || *it != x)
        throw std::logic_error(std::string(who) + ": partition not in index");
    return static_cast<std::size_t>(it - sorted.begin());
}

QMatrix scale_rows(const std::vector<Rat>& d, const QMatrix& m) {
    QMatrix out = m;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) *= d[i];
    return out;
}

QMatrix scale_cols(const QMatrix& m, const std::vector<Rat>& d) {
    QMatrix out = m;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) *= d[j];
    return out;
}

std::vector<Rat> rat_diag(const std::vector<Int>& d) {
    return std::vector<Rat>(d.begin(), d.end());
}

std::vector<Rat> rat_diag_inv(const std::vector<Int>& d) {
    std::vector<Rat> out;
    out.reserve(d.size());
    for (const Int& v : d) out.push_back(make_rat(1, v));
    return out;
}

}  // namespace

QMatrix n_matrix(unsigned w, unsigned long p) {
    std::pair<unsigned, unsigned long> key{w, p};
    {
        std::lock_guard lock(nmat_mutex);
        if (auto it = nmat_cache.find(key); it != nmat_cache.end()) return it->second;
    }
    auto par = partitions_of(w);
    auto pow = power_partitions(w, p);
    std::vector<std::size_t> idx;
    idx.reserve(pow.size());
    for (const Partition& l : pow) idx.push_back(index_of(par, l, "n_matrix"));
    QMatrix n = transition(Basis::H, Basis::PTilde, w).submatrix(idx, idx);
    std::lock_guard lock(nmat_mutex);
    auto [it, inserted] = nmat_cache.emplace(key, std::move(n));
    return it->second;
}

QMatrix truncated_M(unsigned w, unsigned long p) {
    auto par = partitions_of(w);
    const QMatrix& m = transition(Basis::H, Basis::PTilde, w);
    std::vector<Partition> cls;
    cls.reserve(par.size());
    for (const Partition& l : par) cls.push_back(block_class(l, p));
    QMatrix out(par.size(), par.size());
    for (std::size_t i = 0; i < par.size(); ++i)
        for (std::size_t j = 0; j < par.size(); ++j)
            if (cls[i] == cls[j]) out(i, j) = m(i, j);
    return out;
}

QMatrix tensor_L(unsigned w, unsigned long p) {
    auto par = partitions_of(w);
    std::vector<Partition> cls;
    cls.reserve(par.size());
    for (const Partition& l : par) cls.push_back(block_class(l, p));
    std::map<unsigned, std::vector<Partition>> pow_index;  // per component size

    QMatrix out(par.size(), par.size());
    for (std::size_t i = 0; i < par.size(); ++i) {
        auto split_i = iota_split(par[i], p);
        for (std::size_t j = 0; j < par.size(); ++j) {
            if (cls[i] != cls[j]) continue;
            auto split_j = iota_split(par[j], p);
            Rat entry = 1;
            for (const auto& [jj, comp_i] : split_i) {
                unsigned m = cls[i].multiplicity(jj);
                auto [it, inserted] = pow_index.try_emplace(m);
                if (inserted) it->second = power_partitions(m, p);
                const QMatrix& nm = n_matrix(m, p);
                entry *= nm(index_of(it->second, comp_i, "tensor_L"),
                            index_of(it->second, split_j.at(jj), "tensor_L"));
                if (entry == 0) break;
            }
            out(i, j) = entry;
        }
    }
    return out;
}

ReductionContext make_context(unsigned long p, unsigned r, unsigned w) {
    if (!is_prime(p))
        throw std::invalid_argument("make_context: p must be prime");
    ReductionContext ctx;
    ctx.p = p;
    ctx.r = r;
    ctx.w = w;
    ctx.par = partitions_of(w);
    ctx.pow = power_partitions(w, p);
    for (const Partition& l : ctx.par)
        ctx.a.push_back(ui_pow(p, static_cast<unsigned long>(r) * l.length()));
    for (const Partition& l : ctx.pow) {
        // n_i(lambda) = m_{p^i}(lambda)
        std::map<unsigned, unsigned long> n;
        for (unsigned part : l.parts()) {
            unsigned long v = part;
            unsigned i = 0;
            while (v % p == 0) { v /= p; ++i; }
            ++n[i];
        }
        Int xv = 1, yv = 1, xlt = 1, xge = 1, ylt = 1, yge = 1, ytil = 1;
        for (auto [i, ni] : n) {
            Int fact;
            mpz_fac_ui(fact.get_mpz_t(), ni);
            xv *= fact;
            yv *= ui_pow(p, static_cast<unsigned long>(i) * ni);
            if (i < r) {
                xlt *= fact;
                ylt *= ui_pow(p, static_cast<unsigned long>(i) * ni);
            } else {
                xge *= fact;
                yge *= ui_pow(p, static_cast<unsigned long>(i - r) * ni);
                ytil *= ui_pow(p, static_cast<unsigned long>(r) * ni);
            }
        }
        Int bv = ui_pow(p, static_cast<unsigned long>(r) * l.length());
        ctx.b.push_back(bv);
        ctx.x.push_back(xv);
        ctx.y.push_back(yv);
        ctx.z.push_back(xv * yv);
        ctx.x_lt.push_back(xlt);
        ctx.x_ge.push_back(xge);
        ctx.y_lt.push_back(ylt);
        ctx.y_ge.push_back(yge);
        ctx.y_tilde.push_back(ytil);
        Int blt;
        mpz_divexact(blt.get_mpz_t(), bv.get_mpz_t(), ytil.get_mpz_t());
        ctx.b_lt.push_back(blt);
    }
    return ctx;
}

ChainMatrices chain(const ReductionContext& ctx) {
    unsigned long p = ctx.p;
    unsigned r = ctx.r;
    std::size_t n = ctx.pow.size();

    ChainMatrices out;
    out.N = n_matrix(ctx.w, p);

    // bar-class and the >= r slice of every index partition
    std::vector<Partition> bars, highs;
    bars.reserve(n);
    highs.reserve(n);
    for (const Partition& l : ctx.pow) {
        bars.push_back(bar(l, p, r));
        highs.push_back(truncate_at_least_r(l, p, r));
    }
    std::map<unsigned, std::vector<Partition>> pow_index;
    out.C = QMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (bars[i] != bars[j]) continue;
            unsigned u = highs[i].sum();
            auto [it, inserted] = pow_index.try_emplace(u);
            if (inserted) it->second = power_partitions(u, p);
            const QMatrix& nm = n_matrix(u, p);
            out.C(i, j) = nm(index_of(it->second, highs[i], "chain"),
                             index_of(it->second, highs[j], "chain"));
        }

    QMatrix c_inv = inverse(out.C);
    out.A = out.N * c_inv;
    out.U = scale_rows(rat_diag_inv(ctx.x_lt), out.A);

    std::vector<Rat> xy_ge(n);
    for (std::size_t i = 0; i < n; ++i) xy_ge[i] = Rat(ctx.x_ge[i] * ctx.y_ge[i]);
    QMatrix ct_inv = inverse(out.C.transpose());
    out.S = scale_cols(ct_inv, xy_ge) * c_inv;
    if (!p_local_unimodular(out.S, p))
        throw std::logic_error("chain: S is not p-locally unimodular");
    out.V = inverse(out.S) * out.U.transpose() * out.S;

    QMatrix n_inv = inverse(out.N);
    out.Y = scale_cols(out.N, rat_diag(ctx.b)) * n_inv;
    std::vector<Rat> b_over_z(n);
    for (std::size_t i = 0; i < n; ++i) b_over_z[i] = make_rat(ctx.b[i], ctx.z[i]);
    out.Yd = scale_cols(out.N, b_over_z) * out.N.transpose();

    std::vector<Rat> mid(n);  // b^{<r} (x^{<r})^{-1} (y^{<r})^{-1}
    for (std::size_t i = 0; i < n; ++i)
        mid[i] = make_rat(ctx.b_lt[i], ctx.x_lt[i] * ctx.y_lt[i]);
    out.Ydd = scale_cols(scale_rows(rat_diag(ctx.x_lt), out.U), mid) *
              scale_cols(out.V, rat_diag(ctx.x_lt));

    if (!(out.Yd == out.Ydd * inverse(out.S)))
        throw std::logic_error("chain: Y' != Y'' S^{-1}");
    return out;
}

VerificationReport check_lemma_U(const ReductionContext& ctx) {
    auto start = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.check = "lem-U";
    rep.params = {{"p", std::to_string(ctx.p)},
                  {"r", std::to_string(ctx.r)},
                  {"w", std::to_string(ctx.w)}};
    try {
        ChainMatrices ch = chain(ctx);
        std::size_t n = ctx.pow.size();
        std::vector<Partition> bars;
        std::vector<long> k;
        for (const Partition& l : ctx.pow) {
            bars.push_back(bar(l, ctx.p, ctx.r));
            k.push_back(exponents(l, ctx.p, ctx.r).k);
        }
        std::ostringstream bad;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Rat& u = ch.U(i, j);
                if (mpz_divisible_ui_p(u.get_den().get_mpz_t(), ctx.p)) {
                    bad << " (i):" << ctx.pow[i].to_string() << "," << ctx.pow[j].to_string();
                    continue;
                }
                if (bars[i] == bars[j]) {
                    if (u != (i == j ? Rat(1) : Rat(0)))
                        bad << " (ii):" << ctx.pow[i].to_string() << "," << ctx.pow[j].to_string();
                } else {
                    auto v = v_p_of(u, ctx.p);
                    if (v && *v <= k[i] - k[j])
                        bad << " (iii):" << ctx.pow[i].to_string() << "," << ctx.pow[j].to_string();
                }
            }
        std::string violations = bad.str();
        if (violations.empty()) {
            rep.status = VerificationReport::Status::Pass;
        } else {
            rep.status = VerificationReport::Status::Fail;
            rep.note = "violated at" + violations;
        }
    } catch (const std::exception& e) {
        rep.status = VerificationReport::Status::Error;
        rep.note = e.what();
    }
    rep.millis = elapsed_ms(start);
    return rep;
}

VerificationReport check_invfac_hypotheses(const ReductionContext& ctx) {
    auto start = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.check = "lem-invfac";
    rep.params = {{"p", std::to_string(ctx.p)},
                  {"r", std::to_string(ctx.r)},
                  {"w", std::to_string(ctx.w)}};
    try {
        ChainMatrices ch = chain(ctx);
        std::size_t n = ctx.pow.size();
        std::vector<long> k;
        std::vector<unsigned long> rho;
        std::vector<long> vs;  // v_p(s_lambda) = v_p(x^{<r}) = e_lambda
        for (const Partition& l : ctx.pow) {
            ExponentTriple t = exponents(l, ctx.p, ctx.r);
            k.push_back(t.k);
            rho.push_back(c_pr(l, ctx.p, ctx.r));
            vs.push_back(static_cast<long>(t.e));
        }
        std::ostringstream bad;
        // (i) v(t_lambda) = alpha - beta = k_lambda, exactly
        for (std::size_t i = 0; i < n; ++i) {
            Rat t = make_rat(ctx.b_lt[i], ctx.x_lt[i] * ctx.y_lt[i]);
            auto v = v_p_of(t, ctx.p);
            if (!v || *v != k[i]) bad << " (i):" << ctx.pow[i].to_string();
        }
        // (ii)/(iii): strict bounds on P = U and Q = V, doubled to clear halves
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Rat pd = ch.U(i, j) - (i == j ? Rat(1) : Rat(0));
                if (auto v = v_p_of(pd, ctx.p); v && 2 * *v <= k[i] - k[j])
                    bad << " (ii):" << ctx.pow[i].to_string() << "," << ctx.pow[j].to_string();
                Rat qd = ch.V(i, j) - (i == j ? Rat(1) : Rat(0));
                if (auto v = v_p_of(qd, ctx.p); v && 2 * *v <= k[j] - k[i])
                    bad << " (iii):" << ctx.pow[i].to_string() << "," << ctx.pow[j].to_string();
            }
        // (iv)/(v): rho-monotonicity; with u = s = x^{<r} both reduce to
        // k_i - k_j >= 2 (e_j - e_i) whenever rho_i >= rho_j
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (rho[i] < rho[j]) continue;
                if (k[i] - k[j] < 2 * (vs[j] - vs[i])) {
                    bad << " (iv):" << ctx.pow[i].to_string() << "," << ctx.pow[j].to_string();
                    bad << " (v):" << ctx.pow[i].to_string() << "," << ctx.pow[j].to_string();
                }
            }
        std::string violations = bad.str();
        if (violations.empty()) {
            rep.status = VerificationReport::Status::Pass;
        } else {
            rep.status = VerificationReport::Status::Fail;
            rep.note = "violated at" + violations;
        }
    } catch (const std::exception& e) {
        rep.status = VerificationReport::Status::Error;
        rep.note = e.what();
    }
    rep.millis = elapsed_ms(start);
    return rep;
}

std::vector<VerificationReport> verify_row_equivalences(const ReductionContext& ctx) {
    std::vector<VerificationReport> out;
    auto add = [&](const std::string& check, auto&& body) {
        auto start = std::chrono::steady_clock::now();
        VerificationReport rep;
        rep.check = check;
        rep.params = {{"p", std::to_string(ctx.p)},
                      {"r", std::to_string(ctx.r)},
                      {"w", std::to_string(ctx.w)}};
        try {
            std::string note;
            bool ok = body(note);
            rep.status = ok ? VerificationReport::Status::Pass : VerificationReport::Status::Fail;
            rep.note = note;
        } catch (const std::exception& e) {
            rep.status = VerificationReport::Status::Error;
            rep.note = e.what();
        }
        rep.millis = elapsed_ms(start);
        out.push_back(std::move(rep));
    };

    const QMatrix& m = transition(Basis::H, Basis::PTilde, ctx.w);

    add("lem-Mti", [&](std::string&) {
        return p_row_equivalent(truncated_M(ctx.w, ctx.p), m, ctx.p);
    });
    add("lem-Ntensor", [&](std::string&) {
        return p_row_equivalent(tensor_L(ctx.w, ctx.p), m, ctx.p);
    });
    add("lem-Nequiv", [&](std::string&) {
        QMatrix n = n_matrix(ctx.w, ctx.p);
        QMatrix rhs = scale_cols(inverse(n.transpose()), rat_diag(ctx.z));
        return p_row_equivalent(n, rhs, ctx.p);
    });
    add("lem-Mol", [&](std::string& note) {
        // row spaces of M-bar (Par(w) x Pow(w)) and N agree over Z_(p):
        // N's rows are rows of M-bar, and M-bar = W N with W over Z_(p)
        auto par = partitions_of(ctx.w);
        std::vector<std::size_t> pow_cols, all_rows;
        for (const Partition& l : ctx.pow)
            pow_cols.push_back(index_of(par, l, "lem-Mol"));
        for (std::size_t i = 0; i < par.size(); ++i) all_rows.push_back(i);
        QMatrix mbar = m.submatrix(all_rows, pow_cols);
        QMatrix w_factor = mbar * inverse(n_matrix(ctx.w, ctx.p));
        if (!w_factor.is_p_integral(ctx.p)) {
            note = "M-bar N^{-1} has p in a denominator";
            return false;
        }
        if (rank(mbar) != ctx.pow.size()) {
            note = "rank of M-bar differs from |Pow(w)|";
            return false;
        }
        return true;
    });
    return out;
}

VerificationReport verify_thm_pow(unsigned long p, unsigned r, unsigned w) {
    auto start = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.check = "thm-pow";
    rep.params = {{"p", std::to_string(p)},
                  {"r", std::to_string(r)},
                  {"w", std::to_string(w)}};
    try {
        ReductionContext ctx = make_context(p, r, w);
        QMatrix n = n_matrix(w, p);
        QMatrix y = scale_cols(n, rat_diag(ctx.b)) * inverse(n);
        if (!y.is_p_integral(p))
            throw std::logic_error("Y has p in a denominator");
        std::vector<unsigned long> actual = p_part_of_snf(y, p);
        std::vector<unsigned long> expected = cpr_multiset(p, r, ctx.pow);
        for (unsigned long e : expected) rep.expected.push_back(std::to_string(e));
        for (unsigned long a : actual) rep.actual.push_back(std::to_string(a));
        rep.status = expected == actual ? VerificationReport::Status::Pass
                                        : VerificationReport::Status::Fail;
    } catch (const std::exception& e) {
        rep.status = VerificationReport::Status::Error;
        rep.note = e.what();
    }
    rep.millis = elapsed_ms(start);
    return rep;
}

std::vector<unsigned long> cpr_multiset(unsigned long p, unsigned r,
                                        const std::vector<Partition>& lambdas) {
    std::vector<unsigned long> out;
    out.reserve(lambdas.size());
    for (const Partition& l : lambdas) out.push_back(c_pr(l, p, r));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cartan
