#pragma once

// Stable limits of the nonsymmetric Macdonald family: the almost-symmetric
// limit functions E~_mu and E~_(mu|lambda), their Y-weights, the symmetric
// A_lambda basis, the gamma/kappa scalars, the diagonal Psi operators, and a
// t-adic claimed-limit verifier (limits are certified, never extrapolated).

#include <macdlab/almost_sym.hpp>

#include <functional>
#include <limits>
#include <mutex>
#include <optional>
#include <set>

namespace macdlab {

struct StableIndex {
    Composition mu;    // prefix part (reduced in basis usage)
    Partition lambda;  // symmetric part
    friend bool operator==(const StableIndex&, const StableIndex&) = default;
    friend auto operator<=>(const StableIndex&, const StableIndex&) = default;
};

inline Composition concat(const Composition& mu, const Composition& lam) {
    Composition r = mu;
    r.insert(r.end(), lam.begin(), lam.end());
    return r;
}

// limit Y-weight entry of E~_nu: q^{nu_i} t^{l(nu)+1-beta_nu(i)} when the part
// is nonzero, else 0
inline RatQT alpha_tilde(const Composition& nu, int i) {
    const int n = static_cast<int>(nu.size());
    if (i < 1 || i > n || nu[i - 1] == 0) return RatQT::zero();
    return RatQT::qt_monomial(nu[i - 1], n + 1 - beta_count(nu, i));
}

inline RatQT stable_weight_value(const StableIndex& idx, int i) {
    if (i < 1 || i > static_cast<int>(idx.mu.size()) || idx.mu[i - 1] == 0) return RatQT::zero();
    return alpha_tilde(concat(idx.mu, idx.lambda), i);
}

inline std::vector<RatQT> stable_weight(const StableIndex& idx) {
    std::vector<RatQT> w;
    for (int i = 1; i <= static_cast<int>(idx.mu.size()); ++i)
        w.push_back(stable_weight_value(idx, i));
    return w;
}

namespace detail {

// HHL-type coefficient for a filling of mu*0^{pad}. Row-1 boxes carry the
// m-dependent denominator with the arm corrected back to the unpadded diagram;
// m < 0 selects the stable limit where those factors become (1-t).
inline RatQT hhl_limit_coeff(const FillingStats& st, int m, int pad) {
    RatQT c = RatQT::qt_monomial(-st.maj, st.coinv);
    const RatQT one = RatQT::one();
    for (const auto& [u, leg, arm] : st.unequal_below) {
        if (u.j == 1) {
            if (m < 0)
                c *= one - RatQT::t();
            else
                c *= (one - RatQT::t()) /
                     (one - RatQT::qt_monomial(-(leg + 1), arm - pad + m + 1));
        } else {
            c *= (one - RatQT::t()) / (one - RatQT::qt_monomial(-(leg + 1), arm + 1));
        }
    }
    return c;
}

inline void reduced_comps_rec(int s, int len, Composition& cur, std::vector<Composition>& out) {
    if (len == 0) {
        if (s == 0 && (cur.empty() || cur.back() != 0)) out.push_back(cur);
        return;
    }
    for (int v = 0; v <= s; ++v) {
        cur.push_back(v);
        reduced_comps_rec(s - v, len - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace detail

// all reduced compositions of size s with length <= max_len
inline std::vector<Composition> reduced_comps(int s, int max_len) {
    std::vector<Composition> out;
    if (s == 0) out.push_back({});
    for (int len = 1; len <= max_len; ++len) {
        Composition cur;
        detail::reduced_comps_rec(s, len, cur, out);
    }
    return out;
}

// stable limit of (E_{mu*0^m})_m from the tail-constrained filling formula
inline AlmostSym E_tilde(const Composition& mu) {
    const int n = static_cast<int>(mu.size());
    const int d = comp_size(mu);
    AlmostSym r(n);
    for (int dn = 0; dn <= d; ++dn)
        for (const Partition& nu : partitions_of(dn)) {
            const int L = static_cast<int>(nu.size());
            enumerate_nonattacking(mu, n + L, TailConstraint{n, nu}, [&](const Filling& f) {
                FillingStats st = filling_stats(f);
                RatQT c = detail::hhl_limit_coeff(st, -1, L);
                auto xe = f.x_exponents();
                std::vector<int> a(xe.begin(), xe.begin() + n);
                r.add_term(a, nu, c);
            });
        }
    return r;
}

// finite tail-expansion of E_{mu*0^m}: same fillings with the m-dependent
// row-1 factors, assembled in n+m variables
inline FinitePoly E_via_tail_expansion(const Composition& mu, int m) {
    const int n = static_cast<int>(mu.size());
    const int d = comp_size(mu);
    AlmostSym r(n);
    for (int dn = 0; dn <= d; ++dn)
        for (const Partition& nu : partitions_of(dn)) {
            const int L = static_cast<int>(nu.size());
            if (L > m) continue;
            enumerate_nonattacking(mu, n + L, TailConstraint{n, nu}, [&](const Filling& f) {
                FillingStats st = filling_stats(f);
                RatQT c = detail::hhl_limit_coeff(st, m, L);
                auto xe = f.x_exponents();
                std::vector<int> a(xe.begin(), xe.begin() + n);
                r.add_term(a, nu, c);
            });
        }
    return truncate_pi(r, n + m);
}

// E~_(mu|lambda) via the lowering chain applied to E~_{mu*lambda}
inline AlmostSym E_tilde_pair(const StableIndex& idx) {
    static std::map<StableIndex, AlmostSym> memo;
    static std::mutex mx;
    {
        std::scoped_lock lock(mx);
        auto it = memo.find(idx);
        if (it != memo.end()) return it->second;
    }
    AlmostSym r = partial_symmetrize(static_cast<int>(idx.mu.size()),
                                     E_tilde(concat(idx.mu, idx.lambda)));
    std::scoped_lock lock(mx);
    memo.emplace(idx, r);
    return r;
}

// independent route: tail-constrained fillings of mu*lambda*0^{l(nu)} with the
// Jing chain applied to m_nu for the lowered columns
inline AlmostSym E_tilde_pair_direct(const StableIndex& idx) {
    const int nm = static_cast<int>(idx.mu.size());
    const int nl = static_cast<int>(idx.lambda.size());
    const Composition shape = concat(idx.mu, idx.lambda);
    const int n = nm + nl;
    const int d = comp_size(shape);
    AlmostSym r(nm);
    for (int dn = 0; dn <= d; ++dn)
        for (const Partition& nu : partitions_of(dn)) {
            const int L = static_cast<int>(nu.size());
            enumerate_nonattacking(shape, n + L, TailConstraint{n, nu}, [&](const Filling& f) {
                FillingStats st = filling_stats(f);
                RatQT c = detail::hhl_limit_coeff(st, -1, L);
                auto xe = f.x_exponents();
                SymFunc G = SymFunc::m(nu);
                for (int j = nl; j >= 1; --j) G = jing(xe[nm + j - 1], G);
                std::vector<int> a(xe.begin(), xe.begin() + nm);
                for (const auto& [lam, cg] : G.m_terms()) r.add_term(a, lam, c * cg);
            });
        }
    return r;
}

inline SymFunc A_lambda(const Partition& lam) {
    return to_sym(E_tilde_pair({{}, lam}));
}

// scalar with sigma~(E~_mu) = gamma_mu A_{sort(mu)}; 1 on partitions, built by
// the intertwiner recursion along Bruhat covers
inline RatQT gamma_scalar(const Composition& mu) {
    for (std::size_t i = 0; i + 1 < mu.size(); ++i) {
        if (mu[i] < mu[i + 1]) {
            Composition beta = mu;
            std::swap(beta[i], beta[i + 1]);  // beta < mu = s_k(beta)
            const int k = static_cast<int>(i) + 1;
            RatQT ak = alpha_tilde(beta, k), ak1 = alpha_tilde(beta, k + 1);
            return ((ak - RatQT::t() * ak1) / (ak - ak1)) * gamma_scalar(beta);
        }
    }
    return RatQT::one();
}

// limit of t^{n+m} * (sum of all Cherednik eigenvalues of E_{mu*0^m})
inline RatQT kappa_scalar(const Composition& mu) {
    const int n = static_cast<int>(mu.size());
    int nz = 0;
    for (int p : mu)
        if (p != 0) ++nz;
    RatQT s = RatQT::qt_monomial(0, 1 + nz) / (RatQT::one() - RatQT::t());
    for (int i = 1; i <= n; ++i)
        if (mu[i - 1] != 0) s += RatQT::qt_monomial(mu[i - 1], n + 1 - beta_count(mu, i));
    return s;
}

// --- expansion in the stable basis ------------------------------------------

inline std::vector<StableIndex> stable_basis_indices(int degree, int window) {
    std::vector<StableIndex> basis;
    for (int s = 0; s <= degree; ++s)
        for (const auto& mu : reduced_comps(s, window))
            for (const auto& lam : partitions_of(degree - s)) basis.push_back({mu, lam});
    return basis;
}

inline std::map<StableIndex, RatQT> expand_in_stable_basis(const AlmostSym& f) {
    if (f.is_zero()) return {};
    if (!f.is_homogeneous())
        throw std::invalid_argument("expand_in_stable_basis: input must be homogeneous");
    const int d = f.degree(), k = f.window();
    std::vector<StableIndex> basis = stable_basis_indices(d, k);
    std::vector<AlmostSym> vecs;
    vecs.reserve(basis.size());
    std::set<AlmostSym::Key> keys;
    for (const auto& idx : basis) {
        vecs.push_back(E_tilde_pair(idx).widened(k));
        for (const auto& [key, c] : vecs.back().terms()) keys.insert(key);
    }
    for (const auto& [key, c] : f.terms()) keys.insert(key);

    const std::size_t rows = keys.size(), cols = basis.size();
    std::vector<std::vector<RatQT>> A(rows, std::vector<RatQT>(cols, RatQT::zero()));
    std::vector<RatQT> b(rows, RatQT::zero());
    {
        std::size_t r = 0;
        for (const auto& key : keys) {
            for (std::size_t c = 0; c < cols; ++c) A[r][c] = vecs[c].coeff(key.first, key.second);
            b[r] = f.coeff(key.first, key.second);
            ++r;
        }
    }

    // support detection at rational seeds, then a restricted symbolic solve
    static const std::vector<std::pair<mpq_class, mpq_class>> seeds = {
        {mpq_class(19, 7), mpq_class(23, 11)},
        {mpq_class(13, 5), mpq_class(7, 3)},
        {mpq_class(31, 9), mpq_class(17, 13)},
        {mpq_class(5, 2), mpq_class(3, 7)}};
    std::optional<std::vector<bool>> support;
    int agreeing = 0;
    for (const auto& [q0, t0] : seeds) {
        std::vector<std::vector<mpq_class>> M(rows, std::vector<mpq_class>(cols + 1));
        bool pole = false;
        for (std::size_t r = 0; r < rows && !pole; ++r) {
            try {
                for (std::size_t c = 0; c < cols; ++c) M[r][c] = A[r][c].specialize(q0, t0);
                M[r][cols] = -b[r].specialize(q0, t0);
            } catch (const PoleError&) {
                pole = true;
            }
        }
        if (pole) continue;
        auto ns = linalg::nullspace_mpq(M);
        if (ns.size() != 1 || ns[0][cols] == 0) continue;
        std::vector<bool> sup(cols, false);
        for (std::size_t c = 0; c < cols; ++c) sup[c] = ns[0][c] != 0;
        if (support && *support == sup) {
            ++agreeing;
            break;
        }
        // merge to stay safe against accidental zeros at one seed
        if (!support) {
            support = sup;
        } else {
            for (std::size_t c = 0; c < cols; ++c) (*support)[c] = (*support)[c] || sup[c];
        }
    }
    if (!support) throw std::logic_error("expand_in_stable_basis: support detection failed");

    std::vector<std::size_t> cols_used;
    for (std::size_t c = 0; c < cols; ++c)
        if ((*support)[c]) cols_used.push_back(c);
    std::map<StableIndex, RatQT> out;
    if (!cols_used.empty()) {
        std::vector<std::vector<RatQT>> Ar(rows, std::vector<RatQT>(cols_used.size()));
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols_used.size(); ++c) Ar[r][c] = A[r][cols_used[c]];
        std::vector<RatQT> sol = linalg::solve_unique(Ar, b);
        for (std::size_t c = 0; c < cols_used.size(); ++c)
            if (!sol[c].is_zero()) out.emplace(basis[cols_used[c]], sol[c]);
    }
    // reconstruction safety net
    AlmostSym recon(k);
    AlmostSym acc = recon;
    for (const auto& [idx, c] : out) acc = acc + c * E_tilde_pair(idx);
    if (!(acc == f)) throw std::logic_error("expand_in_stable_basis: reconstruction mismatch");
    return out;
}

inline AlmostSym homogeneous_component(const AlmostSym& f, int d) {
    AlmostSym r(f.window());
    for (const auto& [key, c] : f.terms())
        if (comp_size(key.first) + comp_size(key.second) == d) r.add_term(key.first, key.second, c);
    return r;
}

// limit Cherednik operator, realized spectrally through the stable basis
inline AlmostSym limit_cherednik(int i, const AlmostSym& f) {
    AlmostSym r(f.window());
    for (int d = 0; d <= f.degree(); ++d) {
        AlmostSym fd = homogeneous_component(f, d);
        if (fd.is_zero()) continue;
        for (const auto& [idx, c] : expand_in_stable_basis(fd)) {
            RatQT a = stable_weight_value(idx, i);
            if (!a.is_zero()) r = r + (c * a) * E_tilde_pair(idx);
        }
    }
    return r;
}

// --- diagonal operators from symmetric functions ----------------------------

// finite model: F = p_1 evaluated on the rescaled Cherednik elements
inline FinitePoly psi_p1_finite(const FinitePoly& f) {
    const int m = f.n();
    FinitePoly acc(m);
    for (int i = 1; i <= m; ++i) acc = acc + cherednik_Y(i, f);
    return RatQT::qt_monomial(0, m) * acc;
}

inline AlmostSym psi_p1(const AlmostSym& f) {
    AlmostSym r(f.window());
    for (int d = 0; d <= f.degree(); ++d) {
        AlmostSym fd = homogeneous_component(f, d);
        if (fd.is_zero()) continue;
        for (const auto& [idx, c] : expand_in_stable_basis(fd))
            r = r + (c * kappa_scalar(concat(idx.mu, idx.lambda))) * E_tilde_pair(idx);
    }
    return r;
}

// production formula from the convergence proof, with the partial idempotent
// realized as the partial symmetrizer
inline AlmostSym psi_p1_formula(const AlmostSym& f) {
    const int k = f.window();
    AlmostSym acc = AlmostSym::zero(k);
    for (int i = 1; i <= k; ++i) acc = acc + limit_cherednik(i, f);
    AlmostSym g = omega_star(f);
    for (int i = 1; i <= k; ++i) g = act_T(i, g);
    acc = acc + (RatQT::t() / (RatQT::one() - RatQT::t())) * partial_symmetrize(k, g);
    return acc;
}

// Psi_F: diagonal with eigenvalue the plethystic evaluation F[kappa]
inline AlmostSym psi_F_diagonal(const SymFunc& F, const AlmostSym& f) {
    AlmostSym r(f.window());
    for (int d = 0; d <= f.degree(); ++d) {
        AlmostSym fd = homogeneous_component(f, d);
        if (fd.is_zero()) continue;
        for (const auto& [idx, c] : expand_in_stable_basis(fd)) {
            RatQT kap = kappa_scalar(concat(idx.mu, idx.lambda));
            RatQT eig = pleth_eval_scalar(F, [&](int r2) { return kap.frobenius(r2); });
            r = r + (c * eig) * E_tilde_pair(idx);
        }
    }
    return r;
}

// --- t-adic claimed-limit verification --------------------------------------

struct LimitReport {
    bool ok = true;
    bool exact = true;  // every difference vanished identically
    // min over m of (t-adic valuation of the difference) - (m - slack)
    int min_margin = std::numeric_limits<int>::max();
    // (m, valuation) for every step with a nonzero difference
    std::vector<std::pair<int, int>> valuations;
    std::string witness;
};

inline LimitReport verify_claimed_limit(const std::function<FinitePoly(int)>& gen,
                                        const AlmostSym& claimed, int m_lo, int m_hi, int slack) {
    LimitReport rep;
    if (m_lo < claimed.window())
        throw std::invalid_argument("verify_claimed_limit: m_lo below window");
    for (int m = m_lo; m <= m_hi; ++m) {
        FinitePoly diff = gen(m) - truncate_pi(claimed, m);
        if (diff.is_zero()) continue;
        rep.exact = false;
        int v = std::numeric_limits<int>::max();
        for (const auto& [e, c] : diff.terms()) v = std::min(v, c.t_adic_val());
        rep.valuations.push_back({m, v});
        int margin = v - (m - slack);
        if (margin < rep.min_margin) rep.min_margin = margin;
        if (margin < 0) {
            rep.ok = false;
            if (rep.witness.empty())
                rep.witness = "m=" + std::to_string(m) + ": valuation " + std::to_string(v) +
                              " < " + std::to_string(m - slack);
        }
    }
    return rep;
}

// empirical proportionality probe (used for the non-reduced-index question);
// returns the constant ratio g/f when the supports and ratios match exactly
inline std::optional<RatQT> proportionality_ratio(const AlmostSym& g, const AlmostSym& f) {
    if (f.is_zero()) return std::nullopt;
    int k = std::max(f.window(), g.window());
    AlmostSym wf = f.widened(k), wg = g.widened(k);
    if (wf.terms().size() != wg.terms().size()) return std::nullopt;
    std::optional<RatQT> ratio;
    for (const auto& [key, c] : wf.terms()) {
        RatQT cg = wg.coeff(key.first, key.second);
        if (cg.is_zero()) return std::nullopt;
        RatQT r = cg / c;
        if (!ratio)
            ratio = r;
        else if (!(*ratio == r))
            return std::nullopt;
    }
    return ratio;
}

}  // namespace macdlab
