#ifndef MACDLAB_SYMFUNC_HPP
#define MACDLAB_SYMFUNC_HPP

// The ring of symmetric functions over Q(q,t): m/e/h/p bases, plethystic
// substitutions, Jing vertex operators, Hall-Littlewood and Macdonald
// symmetric functions.  Canonical storage is the monomial basis.

#include <macdlab/combinatorics.hpp>
#include <macdlab/linalg.hpp>
#include <macdlab/qt.hpp>

#include <functional>
#include <mutex>

namespace macdlab {

inline void partitions_of_rec(int d, int maxpart, Partition& cur,
                              std::vector<Partition>& out) {
    if (d == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(d, maxpart); k >= 1; --k) {
        cur.push_back(k);
        partitions_of_rec(d - k, k, cur, out);
        cur.pop_back();
    }
}

// all partitions of d, sorted lexicographically as int vectors
inline std::vector<Partition> partitions_of(int d) {
    std::vector<Partition> out;
    Partition cur;
    partitions_of_rec(d, d, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

inline mpz_class z_lambda(const Partition& lam) {
    mpz_class z = 1;
    std::map<int, int> mult;
    for (int k : lam) mult[k] += 1;
    for (const auto& [k, m] : mult) {
        for (int i = 0; i < m; ++i) z *= k;
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), m);
        z *= f;
    }
    return z;
}

inline int eps_sign(const Partition& lam) {
    int d = 0;
    for (int k : lam) d += k - 1;
    return d % 2 == 0 ? 1 : -1;
}

// [n]_t! = prod_{i=1..n} (1 + t + ... + t^{i-1})
inline RatQT t_factorial(int n) {
    RatQT r = RatQT::one();
    for (int i = 1; i <= n; ++i) {
        IntPoly2 s;
        for (int j = 0; j < i; ++j) s.add_term(0, j, 1);
        r *= RatQT::from_poly(s);
    }
    return r;
}

// v_lambda(t) = prod over part values of [multiplicity]_t!
inline RatQT v_lambda(const Partition& lam) {
    std::map<int, int> mult;
    for (int k : lam) mult[k] += 1;
    RatQT r = RatQT::one();
    for (const auto& [k, m] : mult) r *= t_factorial(m);
    return r;
}

inline bool dominance_less(const Partition& a, const Partition& b) {
    return detail::dominance_lt(a, b);
}

// ---------------------------------------------------------------------------
// base-change tables between the p and m bases, per degree
// ---------------------------------------------------------------------------
namespace detail {

struct DegreeTables {
    std::vector<Partition> parts;  // partitions of d in lex order
    std::map<Partition, int> index;
    std::vector<std::vector<mpq_class>> p2m;  // row i: p_{parts[i]} in the m basis
    std::vector<std::vector<mpq_class>> m2p;  // inverse
};

inline const DegreeTables& degree_tables(int d) {
    static std::map<int, DegreeTables> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;

    DegreeTables tab;
    tab.parts = partitions_of(d);
    for (std::size_t i = 0; i < tab.parts.size(); ++i) tab.index[tab.parts[i]] = static_cast<int>(i);
    const std::size_t np = tab.parts.size();
    tab.p2m.assign(np, std::vector<mpq_class>(np, mpq_class(0)));
    const int nv = std::max(d, 1);
    for (std::size_t i = 0; i < np; ++i) {
        // expand p_lambda in nv variables, collect like monomials
        std::map<std::vector<int>, mpz_class> poly;
        poly[std::vector<int>(nv, 0)] = 1;
        for (int k : tab.parts[i]) {
            std::map<std::vector<int>, mpz_class> next;
            for (const auto& [e, c] : poly)
                for (int v = 0; v < nv; ++v) {
                    std::vector<int> e2 = e;
                    e2[v] += k;
                    next[e2] += c;
                }
            poly = std::move(next);
        }
        for (std::size_t j = 0; j < np; ++j) {
            std::vector<int> key = tab.parts[j];
            key.resize(nv, 0);
            std::sort(key.begin(), key.end(), std::greater<int>());
            auto pit = poly.find(key);
            if (pit != poly.end()) tab.p2m[i][j] = mpq_class(pit->second);
        }
    }
    // invert p2m over Q
    std::vector<std::vector<mpq_class>> a = tab.p2m;
    std::vector<std::vector<mpq_class>> inv(np, std::vector<mpq_class>(np, mpq_class(0)));
    for (std::size_t i = 0; i < np; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < np; ++c) {
        std::size_t sel = c;
        while (sel < np && a[sel][c] == 0) ++sel;
        if (sel == np) throw std::logic_error("degree_tables: p2m singular");
        std::swap(a[sel], a[c]);
        std::swap(inv[sel], inv[c]);
        mpq_class piv = 1 / a[c][c];
        for (std::size_t cc = 0; cc < np; ++cc) {
            a[c][cc] *= piv;
            inv[c][cc] *= piv;
        }
        for (std::size_t r = 0; r < np; ++r) {
            if (r == c || a[r][c] == 0) continue;
            mpq_class f = a[r][c];
            for (std::size_t cc = 0; cc < np; ++cc) {
                a[r][cc] -= f * a[c][cc];
                inv[r][cc] -= f * inv[c][cc];
            }
        }
    }
    tab.m2p = std::move(inv);
    return cache.emplace(d, std::move(tab)).first->second;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// SymFunc
// ---------------------------------------------------------------------------
class SymFunc {
public:
    using Terms = std::map<Partition, RatQT>;  // m-basis, canonical

    SymFunc() = default;

    static SymFunc zero() { return SymFunc(); }
    static SymFunc one() { return m({}); }
    static SymFunc m(const Partition& lam) {
        if (!is_partition(lam)) throw std::invalid_argument("SymFunc::m: not a partition");
        SymFunc f;
        f.terms_[lam] = RatQT::one();
        return f;
    }
    static SymFunc e(int n) {
        if (n < 0) throw std::invalid_argument("SymFunc::e: negative degree");
        return m(Partition(n, 1));
    }
    static SymFunc h(int n) {
        if (n < 0) throw std::invalid_argument("SymFunc::h: negative degree");
        SymFunc f;
        for (const auto& lam : partitions_of(n)) f.terms_[lam] = RatQT::one();
        return f;
    }
    static SymFunc p(int n) {
        if (n < 1) throw std::invalid_argument("SymFunc::p: degree must be >= 1");
        return m({n});
    }
    static SymFunc from_m(Terms t) {
        SymFunc f;
        f.terms_ = std::move(t);
        f.prune();
        return f;
    }

    const Terms& m_terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const {
        int d = 0;
        for (const auto& [lam, c] : terms_) d = std::max(d, comp_size(lam));
        return d;
    }
    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = comp_size(terms_.begin()->first);
        for (const auto& [lam, c] : terms_)
            if (comp_size(lam) != d) return false;
        return true;
    }
    RatQT coeff_m(const Partition& lam) const {
        auto it = terms_.find(lam);
        return it == terms_.end() ? RatQT::zero() : it->second;
    }

    friend SymFunc operator+(const SymFunc& a, const SymFunc& b) {
        SymFunc r = a;
        for (const auto& [lam, c] : b.terms_) r.add_term(lam, c);
        return r;
    }
    friend SymFunc operator-(const SymFunc& a, const SymFunc& b) {
        SymFunc r = a;
        for (const auto& [lam, c] : b.terms_) r.add_term(lam, -c);
        return r;
    }
    friend SymFunc operator-(const SymFunc& a) {
        SymFunc r;
        for (const auto& [lam, c] : a.terms_) r.terms_[lam] = -c;
        return r;
    }
    friend SymFunc operator*(const RatQT& c, const SymFunc& a) {
        if (c.is_zero()) return zero();
        SymFunc r;
        for (const auto& [lam, x] : a.terms_) r.terms_[lam] = c * x;
        return r;
    }
    friend SymFunc operator*(const SymFunc& a, const RatQT& c) { return c * a; }
    friend SymFunc operator*(const SymFunc& a, const SymFunc& b) {
        Terms pa = a.p_terms(), pb = b.p_terms();
        Terms prod;
        for (const auto& [la, ca] : pa)
            for (const auto& [lb, cb] : pb) {
                Partition merged = la;
                merged.insert(merged.end(), lb.begin(), lb.end());
                std::sort(merged.begin(), merged.end(), std::greater<int>());
                RatQT c = ca * cb;
                auto it = prod.find(merged);
                if (it == prod.end())
                    prod[merged] = c;
                else {
                    it->second += c;
                    if (it->second.is_zero()) prod.erase(it);
                }
            }
        return from_p(prod);
    }
    SymFunc& operator+=(const SymFunc& b) { return *this = *this + b; }
    SymFunc& operator-=(const SymFunc& b) { return *this = *this - b; }
    SymFunc& operator*=(const SymFunc& b) { return *this = *this * b; }

    friend bool operator==(const SymFunc& a, const SymFunc& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const SymFunc& a, const SymFunc& b) { return !(a == b); }

    // expansion in the power-sum basis
    Terms p_terms() const {
        Terms out;
        // group by degree
        std::map<int, Terms> graded;
        for (const auto& [lam, c] : terms_) graded[comp_size(lam)][lam] = c;
        for (const auto& [d, terms] : graded) {
            const auto& tab = detail::degree_tables(d);
            for (const auto& [lam, c] : terms) {
                int row = tab.index.at(lam);
                for (std::size_t j = 0; j < tab.parts.size(); ++j) {
                    if (tab.m2p[row][j] == 0) continue;
                    RatQT add = c * RatQT(tab.m2p[row][j]);
                    auto it = out.find(tab.parts[j]);
                    if (it == out.end())
                        out[tab.parts[j]] = add;
                    else {
                        it->second += add;
                        if (it->second.is_zero()) out.erase(it);
                    }
                }
            }
        }
        return out;
    }

    static SymFunc from_p(const Terms& pt) {
        SymFunc f;
        std::map<int, Terms> graded;
        for (const auto& [lam, c] : pt) graded[comp_size(lam)][lam] = c;
        for (const auto& [d, terms] : graded) {
            const auto& tab = detail::degree_tables(d);
            for (const auto& [lam, c] : terms) {
                int row = tab.index.at(lam);
                for (std::size_t j = 0; j < tab.parts.size(); ++j) {
                    if (tab.p2m[row][j] == 0) continue;
                    f.add_term(tab.parts[j], c * RatQT(tab.p2m[row][j]));
                }
            }
        }
        return f;
    }

    // apply q -> 1/q to every coefficient
    SymFunc subst_q_inverse() const {
        SymFunc r;
        for (const auto& [lam, c] : terms_) r.terms_[lam] = c.subst_q_inverse();
        return r;
    }
    SymFunc subst_q_to_t() const {
        SymFunc r;
        for (const auto& [lam, c] : terms_) r.add_term(lam, c.subst_q_to_t());
        return r;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [lam, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "m[" << format_composition(lam) << "]*" << c.to_string();
        }
        return os.str();
    }

private:
    void add_term(const Partition& lam, const RatQT& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(lam);
        if (it == terms_.end())
            terms_[lam] = c;
        else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    void prune() {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }

    Terms terms_;
};

// expansion of F in finitely many variables x_1..x_nvars as exponent-vector
// -> coefficient (m_lambda with more parts than nvars vanishes)
inline std::map<std::vector<int>, RatQT> expand_in_vars(const SymFunc& f, int nvars) {
    std::map<std::vector<int>, RatQT> out;
    for (const auto& [lam, c] : f.m_terms()) {
        if (static_cast<int>(lam.size()) > nvars) continue;
        std::vector<int> e = lam;
        e.resize(nvars, 0);
        std::sort(e.begin(), e.end());
        do {
            auto it = out.find(e);
            if (it == out.end())
                out[e] = c;
            else
                it->second += c;
        } while (std::next_permutation(e.begin(), e.end()));
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

// ---------------------------------------------------------------------------
// plethystic helpers
// ---------------------------------------------------------------------------

// p_k multiplier substitution: p_k -> s(k) * p_k (alphabet scaled by a q,t
// scalar expression, e.g. s(k) = 1 - t^k realizes F[(1-t)X])
inline SymFunc pleth_scale(const SymFunc& f,
                           const std::function<RatQT(int)>& s) {
    SymFunc::Terms pt = f.p_terms(), out;
    for (const auto& [lam, c] : pt) {
        RatQT factor = c;
        for (int k : lam) factor *= s(k);
        if (!factor.is_zero()) out[lam] = factor;
    }
    return SymFunc::from_p(out);
}

// full scalar alphabet: F[A] where p_k[A] = vals(k); result is a scalar
inline RatQT pleth_eval_scalar(const SymFunc& f,
                               const std::function<RatQT(int)>& vals) {
    RatQT r = RatQT::zero();
    for (const auto& [lam, c] : f.p_terms()) {
        RatQT term = c;
        for (int k : lam) term *= vals(k);
        r += term;
    }
    return r;
}

// h_n[(1-t)X]
inline SymFunc h_one_minus_t(int n) {
    return pleth_scale(SymFunc::h(n), [](int k) {
        return RatQT::one() - RatQT::t().pow(k);
    });
}

// ---------------------------------------------------------------------------
// skew (perp) operators
// ---------------------------------------------------------------------------
namespace detail {

// p_k^perp = k d/dp_k acting on a p-basis expansion
inline SymFunc::Terms p_perp(int k, const SymFunc::Terms& pt) {
    SymFunc::Terms out;
    for (const auto& [lam, c] : pt) {
        int mult = static_cast<int>(std::count(lam.begin(), lam.end(), k));
        if (mult == 0) continue;
        Partition rest;
        bool removed = false;
        for (int x : lam) {
            if (x == k && !removed) {
                removed = true;
                continue;
            }
            rest.push_back(x);
        }
        RatQT add = c * RatQT(static_cast<long>(k) * mult);
        auto it = out.find(rest);
        if (it == out.end())
            out[rest] = add;
        else {
            it->second += add;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

inline SymFunc perp_from_pattern(const SymFunc& f, int i, bool elementary) {
    if (i == 0) return f;
    SymFunc::Terms pt = f.p_terms();
    SymFunc::Terms acc;
    for (const auto& lam : partitions_of(i)) {
        SymFunc::Terms cur = pt;
        for (int k : lam) cur = p_perp(k, cur);
        mpq_class coeff = mpq_class(1) / mpq_class(z_lambda(lam));
        if (elementary && eps_sign(lam) < 0) coeff = -coeff;
        for (const auto& [mu, c] : cur) {
            RatQT add = c * RatQT(coeff);
            auto it = acc.find(mu);
            if (it == acc.end())
                acc[mu] = add;
            else {
                it->second += add;
                if (it->second.is_zero()) acc.erase(it);
            }
        }
    }
    return SymFunc::from_p(acc);
}

}  // namespace detail

// adjoint of multiplication by e_i under the Hall pairing
inline SymFunc e_perp(int i, const SymFunc& f) { return detail::perp_from_pattern(f, i, true); }
// adjoint of multiplication by h_i
inline SymFunc h_perp(int i, const SymFunc& f) { return detail::perp_from_pattern(f, i, false); }

// ---------------------------------------------------------------------------
// Jing vertex operators and Hall-Littlewood symmetric functions
// ---------------------------------------------------------------------------

// B_n(F) = sum_i (-1)^i h_{n+i}[(1-t)X] * (e_i^perp F)
inline SymFunc jing(int n, const SymFunc& f) {
    if (n < 0) throw std::invalid_argument("jing: negative index");
    SymFunc r = SymFunc::zero();
    int dmax = f.degree();
    for (int i = 0; i <= dmax; ++i) {
        SymFunc g = e_perp(i, f);
        if (g.is_zero()) continue;
        SymFunc term = h_one_minus_t(n + i) * g;
        r = (i % 2 == 0) ? r + term : r - term;
    }
    return r;
}

// P_lambda[X] = B_{lambda_1} ... B_{lambda_r}(1), the dual Hall-Littlewood
// Q_lambda[X;t] in Macdonald's notation
inline SymFunc hall_littlewood_P(const Partition& lam) {
    static std::map<Partition, SymFunc> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(lam);
        if (it != cache.end()) return it->second;
    }
    SymFunc g = SymFunc::one();
    for (auto it = lam.rbegin(); it != lam.rend(); ++it) g = jing(*it, g);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(lam, g);
    return g;
}

// scalar h_d[t - 1]
inline RatQT h_scalar_t_minus_1(int d) {
    return pleth_eval_scalar(SymFunc::h(d), [](int k) {
        return RatQT::t().pow(k) - RatQT::one();
    });
}

// independent kernel-extraction route:
// P_lambda = <z^lambda> Exp[(1-t)(z_1+...+z_r)X] Exp[(t-1) sum_{i<j} z_j/z_i]
inline SymFunc dual_Q(const Partition& lam) {
    const int r = static_cast<int>(lam.size());
    if (r == 0) return SymFunc::one();
    SymFunc total = SymFunc::zero();
    // d[i][j] (0-based, i<j) = exponent of z_j/z_i
    std::vector<std::vector<int>> d(r, std::vector<int>(r, 0));
    // column-by-column from the last: entries d[k][j], k<j, bounded by
    // m_j = lam_j + sum_{k>j} d[j][k] - sum_{k<j} d[k][j] >= 0
    std::function<void(int)> rec_col = [&](int j) {
        if (j == 0) {
            // all exponents fixed; assemble the contribution
            SymFunc term = SymFunc::one();
            RatQT scal = RatQT::one();
            for (int i = 0; i < r; ++i) {
                int mi = lam[i];
                for (int k = i + 1; k < r; ++k) mi += d[i][k];
                for (int k = 0; k < i; ++k) mi -= d[k][i];
                if (mi < 0) return;
                term *= h_one_minus_t(mi);
            }
            for (int i = 0; i < r; ++i)
                for (int k = i + 1; k < r; ++k)
                    if (d[i][k] > 0) scal *= h_scalar_t_minus_1(d[i][k]);
            total += scal * term;
            return;
        }
        int cap = lam[j];
        for (int k = j + 1; k < r; ++k) cap += d[j][k];
        // distribute at most cap among d[0..j-1][j]
        std::function<void(int, int)> dist = [&](int k, int left) {
            if (k == j) {
                rec_col(j - 1);
                return;
            }
            for (int v = 0; v <= left; ++v) {
                d[k][j] = v;
                dist(k + 1, left - v);
            }
            d[k][j] = 0;
        };
        dist(0, cap);
    };
    rec_col(r - 1);
    return total;
}

// ---------------------------------------------------------------------------
// Macdonald symmetric functions
// ---------------------------------------------------------------------------

// Macdonald pairing <p_lam, p_mu> = delta z_lam prod (1-q^{lam_i})/(1-t^{lam_i})
inline RatQT macdonald_pairing(const SymFunc& f, const SymFunc& g) {
    SymFunc::Terms pf = f.p_terms(), pg = g.p_terms();
    RatQT r = RatQT::zero();
    for (const auto& [lam, cf] : pf) {
        auto it = pg.find(lam);
        if (it == pg.end()) continue;
        RatQT w = RatQT(mpq_class(z_lambda(lam)));
        for (int k : lam)
            w *= (RatQT::one() - RatQT::q().pow(k)) / (RatQT::one() - RatQT::t().pow(k));
        r += cf * it->second * w;
    }
    return r;
}

// P_lambda[X;q,t] by Gram-Schmidt against dominance-smaller partitions
inline SymFunc macdonald_P(const Partition& lam) {
    static std::map<Partition, SymFunc> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(lam);
        if (it != cache.end()) return it->second;
    }
    const int d = comp_size(lam);
    // process partitions of d in a linear extension of dominance order
    std::vector<Partition> all = partitions_of(d);
    std::vector<Partition> order;
    std::vector<bool> done(all.size(), false);
    while (order.size() < all.size()) {
        for (std::size_t i = 0; i < all.size(); ++i) {
            if (done[i]) continue;
            bool ready = true;
            for (std::size_t j = 0; j < all.size(); ++j)
                if (!done[j] && j != i && dominance_less(all[j], all[i])) ready = false;
            if (ready) {
                order.push_back(all[i]);
                done[i] = true;
                break;
            }
        }
    }
    std::map<Partition, SymFunc> built;
    for (const auto& nu : order) {
        SymFunc pnu = SymFunc::m(nu);
        for (const auto& [mu, pmu] : built) {
            if (!dominance_less(mu, nu)) continue;
            RatQT c = macdonald_pairing(pnu, pmu) / macdonald_pairing(pmu, pmu);
            pnu -= c * pmu;
        }
        built[nu] = pnu;
        if (nu == lam) break;
    }
    std::lock_guard<std::mutex> lock(mu);
    for (auto& [nu, f] : built) cache.emplace(nu, f);
    return cache.at(lam);
}

// ---------------------------------------------------------------------------
// z-Laurent series with SymFunc coefficients (test/oracle path for jing)
// ---------------------------------------------------------------------------
class ZWindowError : public std::domain_error {
public:
    ZWindowError() : std::domain_error("z-series: term outside declared window") {}
};

class ZSeries {
public:
    ZSeries(int min_pow, int max_pow) : min_(min_pow), max_(max_pow) {}

    static ZSeries constant(const SymFunc& f, int min_pow, int max_pow) {
        ZSeries s(min_pow, max_pow);
        s.set(0, f);
        return s;
    }

    void set(int k, const SymFunc& f) {
        if (f.is_zero()) return;
        if (k < min_ || k > max_) throw ZWindowError();
        coeffs_[k] = f;
    }
    void add(int k, const SymFunc& f) {
        if (f.is_zero()) return;
        if (k < min_ || k > max_) throw ZWindowError();
        auto it = coeffs_.find(k);
        if (it == coeffs_.end())
            coeffs_[k] = f;
        else {
            it->second += f;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }
    SymFunc coeff(int k) const {
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? SymFunc::zero() : it->second;
    }
    // product, truncating to the window only when the dropped coefficient is
    // certifiably irrelevant is NOT allowed: any out-of-window term throws
    friend ZSeries operator*(const ZSeries& a, const ZSeries& b) {
        ZSeries r(std::min(a.min_, b.min_), std::max(a.max_, b.max_));
        for (const auto& [ka, fa] : a.coeffs_)
            for (const auto& [kb, fb] : b.coeffs_) r.add(ka + kb, fa * fb);
        return r;
    }

    int min_pow() const { return min_; }
    int max_pow() const { return max_; }

private:
    int min_, max_;
    std::map<int, SymFunc> coeffs_;
};

// F[X - z^{-1}] as a z-series: substitute p_k -> p_k[X] - z^{-k}
inline ZSeries f_at_x_minus_zinv(const SymFunc& f, int min_pow, int max_pow) {
    ZSeries out(min_pow, max_pow);
    for (const auto& [lam, c] : f.p_terms()) {
        // expand prod_j (p_{lam_j} - z^{-lam_j})
        std::map<int, SymFunc::Terms> acc;  // z-power -> p-basis terms
        acc[0][Partition{}] = c;
        for (int k : lam) {
            std::map<int, SymFunc::Terms> next;
            for (const auto& [zp, terms] : acc)
                for (const auto& [mu, cc] : terms) {
                    Partition mu1 = mu;
                    mu1.push_back(k);
                    std::sort(mu1.begin(), mu1.end(), std::greater<int>());
                    auto& t1 = next[zp][mu1];
                    t1 += cc;
                    auto& t2 = next[zp - k][mu];
                    t2 -= cc;
                }
            acc = std::move(next);
        }
        for (const auto& [zp, terms] : acc) {
            SymFunc::Terms pruned;
            for (const auto& [mu, cc] : terms)
                if (!cc.is_zero()) pruned[mu] = cc;
            if (!pruned.empty()) out.add(zp, SymFunc::from_p(pruned));
        }
    }
    return out;
}

// Exp[(1-t) z X] truncated to the window
inline ZSeries exp_one_minus_t_zx(int min_pow, int max_pow) {
    ZSeries out(min_pow, max_pow);
    for (int n = 0; n <= max_pow; ++n) out.add(n, h_one_minus_t(n));
    return out;
}

}  // namespace macdlab

#endif  // MACDLAB_SYMFUNC_HPP
