#pragma once

// Almost-symmetric functions: finite window of free variables x_1..x_k plus a
// symmetric tail in the remaining alphabet X_k = x_{k+1} + x_{k+2} + ...
// Canonical form: sum of c * x^a * m_lambda[X_k] with a in Z_{>=0}^k.

#include <macdlab/finite_daha.hpp>
#include <macdlab/symfunc.hpp>

#include <json.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace macdlab {

class AlmostSym {
   public:
    // (prefix exponents, tail partition) -> coefficient
    using Key = std::pair<std::vector<int>, Partition>;
    using Terms = std::map<Key, RatQT>;

    AlmostSym() = default;
    explicit AlmostSym(int window) : window_(window) {
        if (window < 0) throw std::invalid_argument("AlmostSym: negative window");
    }

    static AlmostSym zero(int window = 0) { return AlmostSym(window); }
    static AlmostSym one(int window = 0) {
        AlmostSym f(window);
        f.add_term(std::vector<int>(window, 0), {}, RatQT::one());
        return f;
    }
    // x^a at window |a|
    static AlmostSym x_monomial(const std::vector<int>& a, const RatQT& c = RatQT::one()) {
        AlmostSym f(static_cast<int>(a.size()));
        f.add_term(a, {}, c);
        return f;
    }
    // F[X_k] for a symmetric function F in the m-basis
    static AlmostSym tail(const SymFunc& F, int window = 0) {
        AlmostSym f(window);
        for (const auto& [lam, c] : F.m_terms()) f.add_term(std::vector<int>(window, 0), lam, c);
        return f;
    }

    int window() const { return window_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int degree() const {
        int d = 0;
        for (const auto& [k, c] : terms_) {
            int s = comp_size(k.first) + comp_size(k.second);
            d = std::max(d, s);
        }
        return d;
    }
    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = -1;
        for (const auto& [k, c] : terms_) {
            int s = comp_size(k.first) + comp_size(k.second);
            if (d < 0) d = s;
            if (s != d) return false;
        }
        return true;
    }

    void add_term(const std::vector<int>& a, const Partition& lam, const RatQT& c) {
        if (static_cast<int>(a.size()) != window_)
            throw std::invalid_argument("AlmostSym::add_term: prefix length != window");
        if (c.is_zero()) return;
        auto it = terms_.find({a, lam});
        if (it == terms_.end()) {
            terms_.emplace(Key{a, lam}, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    RatQT coeff(const std::vector<int>& a, const Partition& lam) const {
        auto it = terms_.find({a, lam});
        return it == terms_.end() ? RatQT::zero() : it->second;
    }

    // one widening step: m_lam[X_k] = m_lam[X_{k+1}] + sum over distinct parts
    // r of lam of x_{k+1}^r m_{lam \ r}[X_{k+1}]
    AlmostSym widened_once() const {
        AlmostSym r(window_ + 1);
        for (const auto& [key, c] : terms_) {
            std::vector<int> a = key.first;
            const Partition& lam = key.second;
            a.push_back(0);
            r.add_term(a, lam, c);
            int prev = -1;
            for (std::size_t p = 0; p < lam.size(); ++p) {
                if (lam[p] == prev) continue;
                prev = lam[p];
                Partition rest = lam;
                rest.erase(rest.begin() + static_cast<long>(p));
                a.back() = lam[p];
                r.add_term(a, rest, c);
            }
            a.back() = 0;
        }
        return r;
    }

    AlmostSym widened(int k) const {
        if (k < window_) throw std::invalid_argument("AlmostSym::widened: cannot shrink window");
        AlmostSym r = *this;
        while (r.window_ < k) r = r.widened_once();
        return r;
    }

    friend AlmostSym operator+(const AlmostSym& a, const AlmostSym& b) {
        int k = std::max(a.window_, b.window_);
        AlmostSym wa = a.widened(k), r = b.widened(k);
        for (const auto& [key, c] : wa.terms_) r.add_term(key.first, key.second, c);
        return r;
    }
    friend AlmostSym operator-(const AlmostSym& a, const AlmostSym& b) { return a + (-b); }
    friend AlmostSym operator-(const AlmostSym& a) {
        AlmostSym r(a.window_);
        for (const auto& [key, c] : a.terms_) r.terms_.emplace(key, -c);
        return r;
    }
    friend AlmostSym operator*(const RatQT& c, const AlmostSym& a) {
        AlmostSym r(a.window_);
        if (c.is_zero()) return r;
        for (const auto& [key, cc] : a.terms_) r.terms_.emplace(key, c * cc);
        return r;
    }
    friend AlmostSym operator*(const AlmostSym& a, const RatQT& c) { return c * a; }

    // ring product at the common window: prefixes add, tails multiply in Lambda
    friend AlmostSym operator*(const AlmostSym& a, const AlmostSym& b) {
        int k = std::max(a.window_, b.window_);
        AlmostSym wa = a.widened(k), wb = b.widened(k), r(k);
        for (const auto& [ka, ca] : wa.terms_)
            for (const auto& [kb, cb] : wb.terms_) {
                std::vector<int> e(static_cast<std::size_t>(k));
                for (int i = 0; i < k; ++i) e[i] = ka.first[i] + kb.first[i];
                SymFunc prod = SymFunc::m(ka.second) * SymFunc::m(kb.second);
                RatQT c = ca * cb;
                for (const auto& [lam, cm] : prod.m_terms()) r.add_term(e, lam, c * cm);
            }
        return r;
    }

    friend bool operator==(const AlmostSym& a, const AlmostSym& b) {
        int k = std::max(a.window_, b.window_);
        return a.widened(k).terms_ == b.widened(k).terms_;
    }

   private:
    int window_ = 0;
    Terms terms_;
};

// pi_m: send m_lambda[X_k] to m_lambda(x_{k+1},...,x_m)
inline FinitePoly truncate_pi(const AlmostSym& f, int m) {
    if (m < f.window()) throw std::invalid_argument("truncate_pi: m < window");
    AlmostSym w = f.widened(m);
    FinitePoly out(m);
    for (const auto& [key, c] : w.terms()) {
        if (!key.second.empty()) continue;  // m_lambda of the empty alphabet
        out.add_term(key.first, c);
    }
    return out;
}

// inverse of pi_m on the stable range: f must be symmetric in x_{k+1..m} and
// have degree <= m - k so the tail m-basis reads off uniquely
inline AlmostSym lift(const FinitePoly& f, int k) {
    const int m = f.n();
    if (k > m) throw std::invalid_argument("lift: window exceeds variable count");
    if (m - k < f.degree())
        throw std::invalid_argument("lift: need m - window >= degree for a unique lift");
    AlmostSym g(k);
    for (const auto& [e, c] : f.terms()) {
        std::vector<int> a(e.begin(), e.begin() + k);
        std::vector<int> s(e.begin() + k, e.end());
        // keep only the representative with weakly decreasing tail exponents
        if (!std::is_sorted(s.begin(), s.end(), std::greater<int>())) continue;
        while (!s.empty() && s.back() == 0) s.pop_back();
        g.add_term(a, s, c);
    }
    if (truncate_pi(g, m) != f)
        throw std::invalid_argument("lift: input not symmetric in tail variables");
    return g;
}

// T_i via the finite Demazure-Lusztig action on the prefix; the tail is
// s_i-invariant once the window covers i+1
namespace detail {
template <typename Op>
inline AlmostSym act_on_prefix(const AlmostSym& f, int min_window, Op&& op) {
    AlmostSym w = f.widened(std::max(f.window(), min_window));
    const int k = w.window();
    std::map<Partition, FinitePoly> groups;
    for (const auto& [key, c] : w.terms()) {
        auto it = groups.find(key.second);
        if (it == groups.end()) it = groups.emplace(key.second, FinitePoly(k)).first;
        it->second.add_term(key.first, c);
    }
    AlmostSym r(k);
    for (auto& [lam, g] : groups) {
        FinitePoly h = op(g);
        for (const auto& [e, c] : h.terms()) r.add_term(e, lam, c);
    }
    return r;
}
}  // namespace detail

inline AlmostSym act_T(int i, const AlmostSym& f) {
    return detail::act_on_prefix(f, i + 1,
                                 [i](const FinitePoly& g) { return demazure_lusztig(i, g); });
}

inline AlmostSym act_T_inv(int i, const AlmostSym& f) {
    return detail::act_on_prefix(f, i + 1,
                                 [i](const FinitePoly& g) { return demazure_lusztig_inv(i, g); });
}

inline AlmostSym act_X(int i, const AlmostSym& f) {
    AlmostSym w = f.widened(std::max(f.window(), i));
    AlmostSym r(w.window());
    for (const auto& [key, c] : w.terms()) {
        std::vector<int> a = key.first;
        a[i - 1] += 1;
        r.add_term(a, key.second, c);
    }
    return r;
}

// lowering operator: P_{k-1}-linear, x_k^n F[X_k] -> (B_n F)[X_{k-1}] with B_n
// the Hall-Littlewood creation operator
inline AlmostSym lower(int k, const AlmostSym& f) {
    if (k < 1) throw std::invalid_argument("lower: k must be >= 1");
    if (f.window() > k) throw std::invalid_argument("lower: input outside P(k)+");
    AlmostSym w = f.widened(k);
    AlmostSym r(k - 1);
    for (const auto& [key, c] : w.terms()) {
        std::vector<int> a(key.first.begin(), key.first.end() - 1);
        int n = key.first.back();
        SymFunc B = jing(n, SymFunc::m(key.second));
        for (const auto& [lam, cb] : B.m_terms()) r.add_term(a, lam, c * cb);
    }
    return r;
}

// same value as lower, computed from the constant-term description
//   tau_k c_{x_k} f F[X_k - x_k] Exp[-(t-1) x_k^{-1} X_k]
// realized through the z-series machinery with x_k as z^{-1}; test-only path
inline AlmostSym lower_ct_check(int k, const AlmostSym& f) {
    if (k < 1) throw std::invalid_argument("lower_ct_check: k must be >= 1");
    if (f.window() > k) throw std::invalid_argument("lower_ct_check: input outside P(k)+");
    AlmostSym w = f.widened(k);
    AlmostSym r(k - 1);
    for (const auto& [key, c] : w.terms()) {
        std::vector<int> a(key.first.begin(), key.first.end() - 1);
        const int n = key.first.back();
        SymFunc F = SymFunc::m(key.second);
        ZSeries fs = f_at_x_minus_zinv(F, -F.degree(), 0);
        ZSeries es = exp_one_minus_t_zx(0, n + F.degree());
        SymFunc B = (fs * es).coeff(n);
        for (const auto& [lam, cb] : B.m_terms()) r.add_term(a, lam, c * cb);
    }
    return r;
}

// sigma~_k: compose lowering from the window down to k; projection for inputs
// already in P(k)+
inline AlmostSym partial_symmetrize(int k, const AlmostSym& f) {
    if (k < 0) throw std::invalid_argument("partial_symmetrize: negative k");
    AlmostSym g = f;
    for (int j = g.window(); j > k; --j) g = lower(j, g);
    return g;
}

// window-0 element as a symmetric function
inline SymFunc to_sym(const AlmostSym& f) {
    if (f.window() != 0) throw std::invalid_argument("to_sym: window must be 0");
    SymFunc::Terms t;
    for (const auto& [key, c] : f.terms()) t.emplace(key.second, c);
    return SymFunc::from_m(std::move(t));
}

// --- full-alphabet presentation  sum c x^a m_lambda[X]  ---------------------
// needed by the stable operators; conversion is exact via the p-basis using
// p_j[X_k] = p_j[X] - (x_1^j + ... + x_k^j)

using FullTerms = std::map<AlmostSym::Key, RatQT>;

namespace detail {

// expand  prefix * prod_j (p_{nu_j}[X] + sign * (x_1^j+...+x_k^j))  into
// (prefix exponents, p-partition) buckets
inline void split_p_product(const std::vector<int>& prefix, const Partition& nu, const RatQT& c,
                            int sign, std::map<std::pair<std::vector<int>, Partition>, RatQT>& out) {
    if (nu.empty()) {
        auto key = std::make_pair(prefix, Partition{});
        out[key] += c;
        if (out[key].is_zero()) out.erase(key);
        return;
    }
    const int k = static_cast<int>(prefix.size());
    Partition rest(nu.begin() + 1, nu.end());
    // symmetric branch
    std::map<std::pair<std::vector<int>, Partition>, RatQT> sub;
    split_p_product(prefix, rest, c, sign, sub);
    for (const auto& [key, cc] : sub) {
        Partition lam = key.second;
        lam.insert(std::upper_bound(lam.begin(), lam.end(), nu[0], std::greater<int>()), nu[0]);
        auto full_key = std::make_pair(key.first, lam);
        out[full_key] += cc;
        if (out[full_key].is_zero()) out.erase(full_key);
    }
    // finite branch: one of x_1..x_k carries the power nu[0]
    for (int i = 0; i < k; ++i) {
        std::vector<int> p2 = prefix;
        p2[i] += nu[0];
        split_p_product(p2, rest, RatQT(sign) * c, sign, out);
    }
}

inline FullTerms regroup_p_to_m(const std::map<std::pair<std::vector<int>, Partition>, RatQT>& p_buckets) {
    // per prefix, convert the accumulated p-expansion back to the m-basis
    std::map<std::vector<int>, SymFunc::Terms> by_prefix;
    for (const auto& [key, c] : p_buckets) by_prefix[key.first][key.second] += c;
    FullTerms out;
    for (auto& [prefix, pt] : by_prefix) {
        for (auto it = pt.begin(); it != pt.end();)
            it = it->second.is_zero() ? pt.erase(it) : std::next(it);
        SymFunc F = SymFunc::from_p(pt);
        for (const auto& [lam, c] : F.m_terms()) out[{prefix, lam}] = c;
    }
    return out;
}

}  // namespace detail

// tail form -> full form (prefix vectors keep length window)
inline FullTerms to_full(const AlmostSym& f) {
    const int k = f.window();
    std::map<std::pair<std::vector<int>, Partition>, RatQT> p_buckets;
    for (const auto& [key, c] : f.terms()) {
        SymFunc::Terms pt = SymFunc::m(key.second).p_terms();
        for (const auto& [nu, cp] : pt)
            detail::split_p_product(key.first, nu, c * cp, -1, p_buckets);
    }
    (void)k;
    return detail::regroup_p_to_m(p_buckets);
}

// full form -> tail form at the given window
inline AlmostSym from_full(int window, const FullTerms& full) {
    std::map<std::pair<std::vector<int>, Partition>, RatQT> p_buckets;
    for (const auto& [key, c] : full) {
        if (static_cast<int>(key.first.size()) != window)
            throw std::invalid_argument("from_full: prefix length != window");
        SymFunc::Terms pt = SymFunc::m(key.second).p_terms();
        for (const auto& [nu, cp] : pt)
            detail::split_p_product(key.first, nu, c * cp, +1, p_buckets);
    }
    FullTerms tail_terms = detail::regroup_p_to_m(p_buckets);
    AlmostSym r(window);
    for (const auto& [key, c] : tail_terms) r.add_term(key.first, key.second, c);
    return r;
}

// multiply by a fully symmetric function G[X]
inline AlmostSym sym_times(const SymFunc& G, const AlmostSym& f) {
    FullTerms g;
    std::vector<int> zero(static_cast<std::size_t>(f.window()), 0);
    for (const auto& [lam, c] : G.m_terms()) g[{zero, lam}] = c;
    return from_full(f.window(), g) * f;
}

// omega*: x^a F[X] -> x_2^{a_1} ... x_{k+1}^{a_k} F[X + (q-1) x_1]
inline AlmostSym omega_star(const AlmostSym& f) {
    const int k = f.window();
    FullTerms full = to_full(f);
    std::map<std::pair<std::vector<int>, Partition>, RatQT> p_buckets;
    for (const auto& [key, c] : full) {
        std::vector<int> shifted(static_cast<std::size_t>(k + 1), 0);
        for (int i = 0; i < k; ++i) shifted[i + 1] = key.first[i];
        // p_j[X + (q-1)x_1] = p_j[X] + (q^j - 1) x_1^j: expand over subsets
        SymFunc::Terms pt = SymFunc::m(key.second).p_terms();
        for (const auto& [nu, cp] : pt) {
            const std::size_t r = nu.size();
            for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
                std::vector<int> prefix = shifted;
                Partition rest;
                RatQT cc = c * cp;
                for (std::size_t j = 0; j < r; ++j) {
                    if (mask & (std::size_t{1} << j)) {
                        prefix[0] += nu[j];
                        cc *= RatQT::qt_monomial(nu[j], 0) - RatQT::one();
                    } else {
                        rest.push_back(nu[j]);
                    }
                }
                std::sort(rest.begin(), rest.end(), std::greater<int>());
                auto bk = std::make_pair(prefix, rest);
                p_buckets[bk] += cc;
                if (p_buckets[bk].is_zero()) p_buckets.erase(bk);
            }
        }
    }
    FullTerms out = detail::regroup_p_to_m(p_buckets);
    return from_full(k + 1, out);
}

// omega~: x^a F[X] -> x_1 T_1^{-1} ... T_k^{-1} x^a F[X]
inline AlmostSym omega_tilde(const AlmostSym& f) {
    const int k = f.window();
    FullTerms full = to_full(f);
    // group by the symmetric part; T_i acts on the prefix alone
    std::map<Partition, FinitePoly> groups;
    for (const auto& [key, c] : full) {
        auto it = groups.find(key.second);
        if (it == groups.end()) it = groups.emplace(key.second, FinitePoly(k + 1)).first;
        std::vector<int> e(static_cast<std::size_t>(k + 1), 0);
        for (int i = 0; i < k; ++i) e[i] = key.first[i];
        it->second.add_term(e, c);
    }
    FullTerms out;
    for (auto& [lam, g] : groups) {
        FinitePoly h = g;
        for (int i = k; i >= 1; --i) h = demazure_lusztig_inv(i, h);
        h = FinitePoly::x(k + 1, 1) * h;
        for (const auto& [e, c] : h.terms()) {
            auto key = std::make_pair(e, lam);
            out[key] += c;
            if (out[key].is_zero()) out.erase(key);
        }
    }
    return from_full(k + 1, out);
}

// --- serialization ----------------------------------------------------------

inline nlohmann::json to_json(const AlmostSym& f) {
    // terms sorted by (degree, prefix lex, partition lex)
    std::vector<std::pair<AlmostSym::Key, RatQT>> sorted(f.terms().begin(), f.terms().end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        int da = comp_size(a.first.first) + comp_size(a.first.second);
        int db = comp_size(b.first.first) + comp_size(b.first.second);
        if (da != db) return da < db;
        return a.first < b.first;
    });
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [key, c] : sorted)
        terms.push_back({{"x", key.first}, {"tail", key.second}, {"coeff", c.to_string()}});
    return {{"window", f.window()}, {"terms", terms}};
}

inline AlmostSym almost_sym_from_json(const nlohmann::json& j) {
    AlmostSym f(j.at("window").get<int>());
    for (const auto& term : j.at("terms")) {
        std::vector<int> a = term.at("x").get<std::vector<int>>();
        Partition lam = term.at("tail").get<Partition>();
        f.add_term(a, lam, RatQT::parse(term.at("coeff").get<std::string>()));
    }
    return f;
}

inline std::string almost_sym_to_string(const AlmostSym& f) {
    if (f.is_zero()) return "0";
    std::vector<std::pair<AlmostSym::Key, RatQT>> sorted(f.terms().begin(), f.terms().end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        int da = comp_size(a.first.first) + comp_size(a.first.second);
        int db = comp_size(b.first.first) + comp_size(b.first.second);
        if (da != db) return da < db;
        return a.first < b.first;
    });
    std::string out;
    for (const auto& [key, c] : sorted) {
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string() + ")";
        for (std::size_t i = 0; i < key.first.size(); ++i) {
            if (key.first[i] == 0) continue;
            out += "*x" + std::to_string(i + 1);
            if (key.first[i] > 1) out += "^" + std::to_string(key.first[i]);
        }
        if (!key.second.empty()) {
            out += "*m[";
            for (std::size_t i = 0; i < key.second.size(); ++i) {
                if (i) out += ",";
                out += std::to_string(key.second[i]);
            }
            out += "](X" + std::to_string(f.window()) + ")";
        }
    }
    return out;
}

}  // namespace macdlab
