#pragma once

// Named verification suites shared by the command line driver and the
// acceptance runner. Each suite returns one CheckResult per instance; a suite
// passes when every instance does.

#include <macdlab/linalg.hpp>
#include <macdlab/stable_limit.hpp>

#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace macdlab::verify {

struct CheckResult {
    std::string suite;
    std::string instance;
    bool ok = true;
    std::optional<int> min_margin;
    std::string witness;
};

namespace detail {

inline std::string comp_str(const Composition& mu) {
    return format_composition(mu);
}

inline std::string pair_str(const Composition& mu, const Partition& lam) {
    return "(" + comp_str(mu) + "|" + comp_str(lam) + ")";
}

inline void push(std::vector<CheckResult>& out, const std::string& suite,
                 const std::string& instance, bool ok, const std::string& witness = "") {
    out.push_back({suite, instance, ok, std::nullopt, ok ? "" : witness});
}

inline void push_limit(std::vector<CheckResult>& out, const std::string& suite,
                       const std::string& instance, const LimitReport& rep) {
    CheckResult r{suite, instance, rep.ok, std::nullopt, rep.witness};
    if (!rep.exact) r.min_margin = rep.min_margin;
    // certificates additionally require the valuations to be monotone in m
    for (std::size_t i = 1; i < rep.valuations.size(); ++i)
        if (rep.valuations[i].second < rep.valuations[i - 1].second) {
            r.ok = false;
            r.witness = "valuation not monotone at m=" + std::to_string(rep.valuations[i].first);
        }
    out.push_back(std::move(r));
}

inline std::vector<Composition> comps_of_length(int n, int max_size) {
    std::vector<Composition> out;
    std::function<void(Composition&, int)> rec = [&](Composition& cur, int left) {
        if (static_cast<int>(cur.size()) == n) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur.push_back(v);
            rec(cur, left - v);
            cur.pop_back();
        }
    };
    Composition cur;
    rec(cur, max_size);
    return out;
}

inline std::vector<std::pair<Composition, Partition>> pair_indices(int max_size, int max_mu_len) {
    std::vector<std::pair<Composition, Partition>> out;
    for (int d = 0; d <= max_size; ++d)
        for (int s = 0; s <= d; ++s)
            for (const auto& mu : reduced_comps(s, max_mu_len))
                for (const auto& lam : partitions_of(d - s)) out.push_back({mu, lam});
    return out;
}

inline Composition pad_zeros(Composition mu, int total_len) {
    mu.resize(static_cast<std::size_t>(total_len), 0);
    return mu;
}

inline FinitePoly restrict_to_vars(const SymFunc& f, int n) {
    FinitePoly r(n);
    for (const auto& [e, c] : expand_in_vars(f, n)) r.add_term(e, c);
    return r;
}

}  // namespace detail

// Hecke/Cherednik operator relations checked on all monomials of bounded degree
inline std::vector<CheckResult> suite_daha_relations(int n, int max_degree) {
    std::vector<CheckResult> out;
    const RatQT Q = RatQT::q(), T = RatQT::t();
    bool ok = true;
    std::string witness;
    auto fail = [&](const std::string& w) {
        if (ok) witness = w;
        ok = false;
    };
    FinitePoly xs = FinitePoly::one(n);
    for (int i = 1; i <= n; ++i) xs *= FinitePoly::x(n, i);
    for (int d = 0; d <= max_degree && ok; ++d)
        for (const auto& e : macdlab::detail::monomials_of_degree(n, d)) {
            FinitePoly f = FinitePoly::monomial(n, e, RatQT::one());
            for (int i = 1; i < n; ++i) {
                // quadratic relation (T_i - 1)(T_i + t) = 0
                FinitePoly tf = demazure_lusztig(i, f);
                if (!(demazure_lusztig(i, tf) == (RatQT::one() - T) * tf + T * f))
                    fail("quadratic relation, i=" + std::to_string(i));
                // braid relation
                if (i + 1 < n) {
                    FinitePoly lhs = demazure_lusztig(
                        i, demazure_lusztig(i + 1, demazure_lusztig(i, f)));
                    FinitePoly rhs = demazure_lusztig(
                        i + 1, demazure_lusztig(i, demazure_lusztig(i + 1, f)));
                    if (!(lhs == rhs)) fail("braid relation, i=" + std::to_string(i));
                }
                // commuting relation |i - j| > 1
                for (int j = i + 2; j < n; ++j)
                    if (!(demazure_lusztig(i, demazure_lusztig(j, f)) ==
                          demazure_lusztig(j, demazure_lusztig(i, f))))
                        fail("distant commutation");
                // T_i^{-1} X_i T_i^{-1} = t^{-1} X_{i+1}
                FinitePoly lhs = demazure_lusztig_inv(
                    i, FinitePoly::x(n, i) * demazure_lusztig_inv(i, f));
                if (!(lhs == T.inverse() * FinitePoly::x(n, i + 1) * f))
                    fail("TXT relation, i=" + std::to_string(i));
                // T_i Y_i T_i = t Y_{i+1}
                if (!(demazure_lusztig(i, cherednik_Y(i, demazure_lusztig(i, f))) ==
                      T * cherednik_Y(i + 1, f)))
                    fail("TYT relation, i=" + std::to_string(i));
                // T_i commutes with distant X_j
                for (int j = 1; j <= n; ++j) {
                    if (j == i || j == i + 1) continue;
                    if (!(demazure_lusztig(i, FinitePoly::x(n, j) * f) ==
                          FinitePoly::x(n, j) * demazure_lusztig(i, f)))
                        fail("T/X distant commutation");
                }
            }
            // Y_1 T_1 X_1 = X_2 Y_1 T_1
            if (n >= 2) {
                FinitePoly tf = demazure_lusztig(1, FinitePoly::x(n, 1) * f);
                if (!(cherednik_Y(1, tf) ==
                      FinitePoly::x(n, 2) * cherednik_Y(1, demazure_lusztig(1, f))))
                    fail("YTX relation");
            }
            // Y_1 X_1...X_n = q X_1...X_n Y_1
            if (!(cherednik_Y(1, xs * f) == Q * xs * cherednik_Y(1, f)))
                fail("Y against the full monomial");
            // Y's commute pairwise
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    if (!(cherednik_Y(i, cherednik_Y(j, f)) ==
                          cherednik_Y(j, cherednik_Y(i, f))))
                        fail("Y commutation");
        }
    detail::push(out, "daha-relations",
                 "n=" + std::to_string(n) + ",deg<=" + std::to_string(max_degree), ok, witness);
    return out;
}

// three independent constructions of the finite nonsymmetric polynomials
inline std::vector<CheckResult> suite_hhl_oracle(int max_size, int max_len) {
    std::vector<CheckResult> out;
    for (int len = 1; len <= max_len; ++len)
        for (const auto& mu : detail::comps_of_length(len, max_size)) {
            FinitePoly a = E_hhl(mu);
            bool ok = a == E_eigensolve(mu) && a == E_intertwiner(mu);
            detail::push(out, "hhl-oracle", detail::comp_str(mu), ok, "route disagreement");
        }
    return out;
}

// Y_i E_mu = q^{mu_i} t^{1-beta_mu(i)} E_mu
inline std::vector<CheckResult> suite_eigenvalue(int max_size, int max_len) {
    std::vector<CheckResult> out;
    for (int len = 1; len <= max_len; ++len)
        for (const auto& mu : detail::comps_of_length(len, max_size)) {
            FinitePoly E = E_hhl(mu);
            FiniteWeight w = y_weight(mu);
            bool ok = true;
            for (int i = 1; i <= len; ++i)
                if (!(cherednik_Y(i, E) == w[i - 1] * E)) ok = false;
            detail::push(out, "eigenvalue", detail::comp_str(mu), ok, "eigenvalue mismatch");
        }
    return out;
}

// rearranged tail formula against raw enumeration of E_{mu*0^m}
inline std::vector<CheckResult> suite_tail_expansion(int max_size, int max_len, int max_m) {
    std::vector<CheckResult> out;
    for (int len = 1; len <= max_len; ++len)
        for (const auto& mu : detail::comps_of_length(len, max_size))
            for (int m = 0; m <= max_m; ++m) {
                bool ok = E_via_tail_expansion(mu, m) == E_hhl(detail::pad_zeros(mu, len + m));
                detail::push(out, "tail-expansion",
                             detail::comp_str(mu) + ",m=" + std::to_string(m), ok,
                             "expansion mismatch");
            }
    return out;
}

// deformed Cherednik residuals against the claimed stable weights
inline std::vector<CheckResult> suite_stable_weights(int max_size, int max_mu_len) {
    std::vector<CheckResult> out;
    for (const auto& [mu, lam] : detail::pair_indices(max_size, max_mu_len)) {
        const int k = static_cast<int>(mu.size());
        if (k == 0) continue;
        const int n = k + static_cast<int>(lam.size());
        const int d = comp_size(mu) + comp_size(lam);
        Composition full = concat(mu, lam);
        AlmostSym e = E_tilde_pair({mu, lam});
        for (int i = 1; i <= k; ++i) {
            RatQT a = stable_weight_value({mu, lam}, i);
            auto gen = [&, i](int m) {
                FinitePoly g = epsilon_kn(k, m, E_hhl(detail::pad_zeros(full, m)));
                return deformed_Y(i, g) - a * g;
            };
            LimitReport rep = verify_claimed_limit(gen, AlmostSym::zero(k), std::max(n, k + 1),
                                                   k + d + 3, k + d + 1);
            detail::push_limit(out, "stable-weights",
                               detail::pair_str(mu, lam) + ",i=" + std::to_string(i), rep);
        }
    }
    return out;
}

// per (degree, window) block: square coefficient matrix of full rank, and the
// joint (alpha~, kappa) labels pairwise distinct
inline std::vector<CheckResult> suite_basis_rank(int max_degree, int max_window,
                                                 int symbolic_max_degree, int seed) {
    std::vector<CheckResult> out;
    for (int k = 0; k <= max_window; ++k)
        for (int d = 0; d <= max_degree; ++d) {
            std::vector<StableIndex> basis = stable_basis_indices(d, k);
            std::vector<AlmostSym> vecs;
            std::set<AlmostSym::Key> keys;
            for (const auto& idx : basis) {
                vecs.push_back(E_tilde_pair(idx).widened(k));
                for (const auto& [key, c] : vecs.back().terms()) keys.insert(key);
            }
            bool ok = keys.size() == basis.size();
            std::string witness = ok ? "" : "key count != basis size";
            if (ok && !basis.empty()) {
                std::vector<std::vector<RatQT>> A;
                for (const auto& key : keys) {
                    std::vector<RatQT> row;
                    for (const auto& v : vecs) row.push_back(v.coeff(key.first, key.second));
                    A.push_back(row);
                }
                if (d <= symbolic_max_degree) {
                    if (linalg::determinant(A).is_zero()) {
                        ok = false;
                        witness = "singular coefficient matrix";
                    }
                } else {
                    mpq_class q0(17 + seed, 7), t0(11 + seed, 13);
                    std::vector<std::vector<mpq_class>> M;
                    for (const auto& row : A) {
                        std::vector<mpq_class> r;
                        for (const auto& c : row) r.push_back(c.specialize(q0, t0));
                        M.push_back(r);
                    }
                    if (linalg::rank_mpq(M) != basis.size()) {
                        ok = false;
                        witness = "rank deficient at rational point";
                    }
                }
            }
            // simple joint spectrum inside the block
            for (std::size_t a = 0; a < basis.size() && ok; ++a)
                for (std::size_t b = a + 1; b < basis.size(); ++b) {
                    bool same = kappa_scalar(concat(basis[a].mu, basis[a].lambda)) ==
                                kappa_scalar(concat(basis[b].mu, basis[b].lambda));
                    for (int i = 1; i <= k && same; ++i)
                        same = stable_weight_value(basis[a], i) == stable_weight_value(basis[b], i);
                    if (same) {
                        ok = false;
                        witness = "label collision " + detail::pair_str(basis[a].mu, basis[a].lambda) +
                                  " vs " + detail::pair_str(basis[b].mu, basis[b].lambda);
                        break;
                    }
                }
            detail::push(out, "basis-rank", "d=" + std::to_string(d) + ",k=" + std::to_string(k),
                         ok, witness);
        }
    return out;
}

// vertex-operator Hall-Littlewood against the finite symmetrizer and the
// multi-z kernel construction
inline std::vector<CheckResult> suite_hl_duality(int max_size) {
    std::vector<CheckResult> out;
    const RatQT ONE = RatQT::one(), T = RatQT::t();
    for (int d = 0; d <= max_size; ++d)
        for (const Partition& lam : partitions_of(d)) {
            const int n = std::max(d, 1);
            const int l = static_cast<int>(lam.size());
            SymFunc P = hall_littlewood_P(lam);
            // eps^(n)(x^lam) = ([n-l]_t!/[n]_t!) v_lam P_lam(x;t), so
            // (1-t)^l v_lam P_lam(x;t) = (1-t)^l [n]_t!/[n-l]_t! eps^(n)(x^lam)
            std::vector<int> e = lam;
            e.resize(static_cast<std::size_t>(n), 0);
            FinitePoly eps = epsilon_kn(0, n, FinitePoly::monomial(n, e, ONE));
            RatQT scale = t_factorial(n) / t_factorial(n - l);
            for (int i = 0; i < l; ++i) scale *= ONE - T;
            bool ok = detail::restrict_to_vars(P, n) == scale * eps;
            // multi-z kernel route
            if (ok) ok = dual_Q(lam) == P;
            detail::push(out, "hl-duality", detail::comp_str(lam), ok, "route disagreement");
        }
    return out;
}

// fully symmetric stable functions against scaled Macdonald polynomials
inline std::vector<CheckResult> suite_A_macdonald(int max_size) {
    std::vector<CheckResult> out;
    const RatQT ONE = RatQT::one(), T = RatQT::t();
    for (int d = 0; d <= max_size; ++d)
        for (const Partition& lam : partitions_of(d)) {
            RatQT scale = v_lambda(lam);
            for (std::size_t i = 0; i < lam.size(); ++i) scale *= ONE - T;
            bool ok = A_lambda(lam) == scale * macdonald_P(lam).subst_q_inverse();
            detail::push(out, "A-macdonald", detail::comp_str(lam), ok, "oracle mismatch");
        }
    return out;
}

// creation/exchange recurrences and the stable box-adding symmetry
inline std::vector<CheckResult> suite_recurrences(int max_size, int max_mu_len) {
    std::vector<CheckResult> out;
    const RatQT ONE = RatQT::one(), T = RatQT::t();
    for (const auto& [mu, lam] : detail::pair_indices(max_size, max_mu_len)) {
        const int r = static_cast<int>(mu.size());
        Composition full = concat(mu, lam);
        if (r >= 1 && (lam.empty() || mu[r - 1] >= lam[0]) && (r == 1 || mu[r - 2] != 0)) {
            Composition head(mu.begin(), mu.end() - 1);
            Partition lam2;
            lam2.push_back(mu[r - 1]);
            lam2.insert(lam2.end(), lam.begin(), lam.end());
            bool ok = lower(r, E_tilde_pair({mu, lam})) == E_tilde_pair({head, lam2});
            detail::push(out, "recurrences", "lower:" + detail::pair_str(mu, lam), ok,
                         "lowering recurrence failed");
        }
        for (int i = 1; i + 1 <= r; ++i) {
            if (mu[i - 1] <= mu[i]) continue;
            Composition smu = mu;
            std::swap(smu[i - 1], smu[i]);
            if (smu.back() == 0) continue;
            RatQT ai = alpha_tilde(full, i), ai1 = alpha_tilde(full, i + 1);
            AlmostSym base = E_tilde_pair({mu, lam});
            AlmostSym rhs = act_T(i, base) + ((ONE - T) * ai1 / (ai - ai1)) * base;
            bool ok = E_tilde_pair({smu, lam}) == rhs;
            detail::push(out, "recurrences",
                         "intertwiner:" + detail::pair_str(mu, lam) + ",i=" + std::to_string(i),
                         ok, "intertwiner step failed");
        }
        if (r >= 1) {
            Composition shifted(mu.begin(), mu.end() - 1);
            shifted.push_back(0);
            shifted.push_back(mu[r - 1]);
            RatQT ratio = gamma_scalar(full) / gamma_scalar(concat(shifted, lam));
            bool ok =
                act_T(r, E_tilde_pair({mu, lam})) == ratio * E_tilde_pair({shifted, lam});
            detail::push(out, "recurrences", "boundary:" + detail::pair_str(mu, lam), ok,
                         "boundary exchange failed");
        }
    }
    // stable box-adding symmetry on plain stable functions
    for (const Composition& mu :
         {Composition{}, Composition{1}, Composition{2}, Composition{0, 1}, Composition{1, 1}}) {
        int nz = 0;
        for (int p : mu)
            if (p != 0) ++nz;
        AlmostSym et = E_tilde(mu);
        AlmostSym target = E_tilde(concat({1}, mu));
        bool ok = act_X(1, omega_star(et)) == target &&
                  RatQT::qt_monomial(0, nz) * omega_tilde(et) == target;
        detail::push(out, "recurrences", "box-adding:" + detail::comp_str(mu), ok,
                     "box-adding symmetry failed");
    }
    return out;
}

// Psi_{p_1}: production formula against the diagonal definition
inline std::vector<CheckResult> suite_psi(int max_size, int max_mu_len, int max_sym_size) {
    std::vector<CheckResult> out;
    for (const auto& [mu, lam] : detail::pair_indices(max_size, max_mu_len)) {
        AlmostSym e = E_tilde_pair({mu, lam});
        bool ok = psi_p1_formula(e) == kappa_scalar(concat(mu, lam)) * e;
        detail::push(out, "psi", detail::pair_str(mu, lam), ok, "production formula mismatch");
    }
    for (int d = 0; d <= max_sym_size; ++d)
        for (const Partition& lam : partitions_of(d)) {
            AlmostSym a = E_tilde_pair({{}, lam});
            bool ok = psi_p1_formula(a) == kappa_scalar(lam) * a;
            detail::push(out, "psi", "A:" + detail::comp_str(lam), ok,
                         "symmetric eigenvalue mismatch");
        }
    return out;
}

// t-adic convergence certificates with recorded margins
inline std::vector<CheckResult> suite_convergence(int max_size, int max_mu_len, int extra_m) {
    std::vector<CheckResult> out;
    const RatQT ONE = RatQT::one();
    // (a) symmetrized monomials approach the Hall-Littlewood functions
    for (int d = 1; d <= max_size; ++d)
        for (const Partition& lam : partitions_of(d)) {
            auto gen = [&](int m) {
                std::vector<int> e = lam;
                e.resize(static_cast<std::size_t>(m), 0);
                return epsilon_kn(0, m, FinitePoly::monomial(m, e, ONE));
            };
            AlmostSym claimed = AlmostSym::tail(hall_littlewood_P(lam), 0);
            LimitReport rep = verify_claimed_limit(
                gen, claimed, static_cast<int>(lam.size()) + 1, d + extra_m, d + 1);
            detail::push_limit(out, "convergence", "hl:" + detail::comp_str(lam), rep);
        }
    // (b) partially symmetrized finite polynomials approach E~_(mu|lambda)
    // (c) the finite Psi model applied to truncations approaches Psi
    for (const auto& [mu, lam] : detail::pair_indices(max_size, max_mu_len)) {
        const int k = static_cast<int>(mu.size());
        const int n = k + static_cast<int>(lam.size());
        const int d = comp_size(mu) + comp_size(lam);
        Composition full = concat(mu, lam);
        AlmostSym e = E_tilde_pair({mu, lam});
        auto gen_b = [&](int m) { return epsilon_kn(k, m, E_hhl(detail::pad_zeros(full, m))); };
        LimitReport rep_b =
            verify_claimed_limit(gen_b, e, std::max(n, k + 1), k + d + extra_m, k + d);
        detail::push_limit(out, "convergence", "pair:" + detail::pair_str(mu, lam), rep_b);
        auto gen_c = [&](int m) { return psi_p1_finite(truncate_pi(e, m)); };
        LimitReport rep_c = verify_claimed_limit(gen_c, kappa_scalar(full) * e,
                                                 std::max({n, k + 1, 1}), k + d + extra_m + 1,
                                                 k + d + 1);
        detail::push_limit(out, "convergence", "psi:" + detail::pair_str(mu, lam), rep_c);
    }
    return out;
}

// hand-checked expansions and weights of the basic stable family
inline std::vector<CheckResult> suite_examples() {
    std::vector<CheckResult> out;
    const RatQT ONE = RatQT::one();
    const RatQT CQ = RatQT::qt_monomial(-1, 0) / (ONE - RatQT::qt_monomial(-1, 1));
    SymFunc P1 = hall_littlewood_P({1});
    SymFunc P2 = hall_littlewood_P({2});
    SymFunc P11 = hall_littlewood_P({1, 1});
    auto qt = [](int a, int b) { return RatQT::qt_monomial(a, b); };

    detail::push(out, "examples", "(|2)",
                 E_tilde_pair({{}, {2}}) == AlmostSym::tail(P2 + CQ * P11, 0) &&
                     stable_weight({{}, {2}}).empty(),
                 "expansion or weight mismatch");
    detail::push(out, "examples", "(2|)",
                 E_tilde_pair({{2}, {}}) ==
                         AlmostSym::x_monomial({2}) +
                             CQ * (AlmostSym::x_monomial({1}) * AlmostSym::tail(P1, 1)) &&
                     stable_weight({{2}, {}}) == std::vector<RatQT>{qt(2, 1)},
                 "expansion or weight mismatch");
    detail::push(out, "examples", "(1,1,1|)",
                 E_tilde_pair({{1, 1, 1}, {}}) == AlmostSym::x_monomial({1, 1, 1}) &&
                     stable_weight({{1, 1, 1}, {}}) ==
                         std::vector<RatQT>{qt(1, 3), qt(1, 2), qt(1, 1)},
                 "expansion or weight mismatch");
    detail::push(out, "examples", "(1,1|1)",
                 E_tilde_pair({{1, 1}, {1}}) ==
                         AlmostSym::x_monomial({1, 1}) * AlmostSym::tail(P1, 2) &&
                     stable_weight({{1, 1}, {1}}) == std::vector<RatQT>{qt(1, 3), qt(1, 2)},
                 "expansion or weight mismatch");
    detail::push(out, "examples", "(1|1,1)",
                 E_tilde_pair({{1}, {1, 1}}) ==
                         AlmostSym::x_monomial({1}) * AlmostSym::tail(P11, 1) &&
                     stable_weight({{1}, {1, 1}}) == std::vector<RatQT>{qt(1, 3)},
                 "expansion or weight mismatch");
    return out;
}

// the worked filling of (3,2,0,1,0,0) and its displayed contribution
inline std::vector<CheckResult> suite_hhl_stats() {
    std::vector<CheckResult> out;
    const RatQT ONE = RatQT::one(), T = RatQT::t();
    Filling f;
    f.shape = {3, 2, 0, 1, 0, 0};
    f.n_labels = 6;
    f.labels = {{1, 4, 6}, {2, 1}, {}, {3}, {}, {}};
    FillingStats st = filling_stats(f);
    bool ok = st.maj == 3 && st.abs_inv == 21 && st.inv == 14 && st.coinv == 1;
    detail::push(out, "hhl-stats", "statistics", ok, "statistic mismatch");
    // displayed contribution: monomial and coefficient
    RatQT coeff = macdlab::detail::hhl_limit_coeff(st, 0, 0);
    RatQT expect = RatQT::qt_monomial(-3, 1) * ((ONE - T) / (ONE - RatQT::qt_monomial(-1, 3))) *
                   ((ONE - T) / (ONE - RatQT::qt_monomial(-1, 2))) *
                   ((ONE - T) / (ONE - RatQT::qt_monomial(-2, 3))) *
                   ((ONE - T) / (ONE - RatQT::qt_monomial(-1, 2)));
    bool ok2 = coeff == expect && f.x_exponents() == std::vector<int>{2, 1, 1, 1, 0, 1};
    detail::push(out, "hhl-stats", "contribution", ok2, "contribution mismatch");
    return out;
}

inline bool all_pass(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.ok) return false;
    return true;
}

}  // namespace macdlab::verify
