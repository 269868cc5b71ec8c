#ifndef MACDLAB_FINITE_DAHA_HPP
#define MACDLAB_FINITE_DAHA_HPP

// Polynomial representation of the finite-rank double affine Hecke algebra:
// Demazure-Lusztig operators, Cherednik operators, non-symmetric Macdonald
// polynomials (three independent routes), t-symmetrizers, deformed Y's.

#include <macdlab/combinatorics.hpp>
#include <macdlab/linalg.hpp>
#include <macdlab/symfunc.hpp>
#include <macdlab/qt.hpp>

#include <mutex>
#include <random>

namespace macdlab {

// ---------------------------------------------------------------------------
// FinitePoly: element of Q(q,t)[x_1..x_n]
// ---------------------------------------------------------------------------
class FinitePoly {
public:
    using Terms = std::map<std::vector<int>, RatQT>;

    explicit FinitePoly(int n = 0) : n_(n) {}

    static FinitePoly zero(int n) { return FinitePoly(n); }
    static FinitePoly one(int n) { return monomial(n, std::vector<int>(n, 0), RatQT::one()); }
    static FinitePoly x(int n, int i) {
        if (i < 1 || i > n) throw std::out_of_range("FinitePoly::x: index");
        std::vector<int> e(n, 0);
        e[i - 1] = 1;
        return monomial(n, e, RatQT::one());
    }
    static FinitePoly monomial(int n, const std::vector<int>& exps, const RatQT& c) {
        if (static_cast<int>(exps.size()) != n)
            throw std::invalid_argument("FinitePoly::monomial: length mismatch");
        for (int e : exps)
            if (e < 0) throw std::invalid_argument("FinitePoly::monomial: negative exponent");
        FinitePoly f(n);
        if (!c.is_zero()) f.terms_[exps] = c;
        return f;
    }

    int n() const { return n_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int v : e) s += v;
            d = std::max(d, s);
        }
        return d;
    }
    RatQT coeff(const std::vector<int>& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? RatQT::zero() : it->second;
    }

    void add_term(const std::vector<int>& e, const RatQT& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end())
            terms_[e] = c;
        else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend FinitePoly operator+(const FinitePoly& a, const FinitePoly& b) {
        check_rank(a, b);
        FinitePoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend FinitePoly operator-(const FinitePoly& a, const FinitePoly& b) {
        check_rank(a, b);
        FinitePoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    friend FinitePoly operator-(const FinitePoly& a) {
        FinitePoly r(a.n_);
        for (const auto& [e, c] : a.terms_) r.terms_[e] = -c;
        return r;
    }
    friend FinitePoly operator*(const RatQT& c, const FinitePoly& a) {
        FinitePoly r(a.n_);
        if (c.is_zero()) return r;
        for (const auto& [e, x] : a.terms_) r.terms_[e] = c * x;
        return r;
    }
    friend FinitePoly operator*(const FinitePoly& a, const RatQT& c) { return c * a; }
    friend FinitePoly operator*(const FinitePoly& a, const FinitePoly& b) {
        check_rank(a, b);
        FinitePoly r(a.n_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                std::vector<int> e(a.n_);
                for (int i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    FinitePoly& operator+=(const FinitePoly& b) { return *this = *this + b; }
    FinitePoly& operator-=(const FinitePoly& b) { return *this = *this - b; }
    FinitePoly& operator*=(const FinitePoly& b) { return *this = *this * b; }

    friend bool operator==(const FinitePoly& a, const FinitePoly& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const FinitePoly& a, const FinitePoly& b) { return !(a == b); }

    // lines "e_1,...,e_n: coefficient" in graded-lex order
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::vector<const Terms::value_type*> order;
        for (const auto& kv : terms_) order.push_back(&kv);
        std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
            int da = 0, db = 0;
            for (int v : a->first) da += v;
            for (int v : b->first) db += v;
            if (da != db) return da < db;
            return a->first < b->first;
        });
        std::ostringstream os;
        bool first = true;
        for (const auto* kv : order) {
            if (!first) os << "\n";
            first = false;
            os << format_composition(kv->first) << ": " << kv->second.to_string();
        }
        return os.str();
    }

    static FinitePoly from_string(const std::string& s, int n) {
        FinitePoly f(n);
        std::istringstream is(s);
        std::string line;
        while (std::getline(is, line)) {
            if (line.empty()) continue;
            if (line == "0") break;
            auto colon = line.find(':');
            if (colon == std::string::npos)
                throw std::invalid_argument("FinitePoly::from_string: missing ':'");
            std::vector<int> e = parse_composition(line.substr(0, colon));
            e.resize(n, 0);
            f.add_term(e, RatQT::parse(line.substr(colon + 1)));
        }
        return f;
    }

private:
    static void check_rank(const FinitePoly& a, const FinitePoly& b) {
        if (a.n_ != b.n_) throw std::invalid_argument("FinitePoly: rank mismatch");
    }

    int n_;
    Terms terms_;
};

using FiniteWeight = std::vector<RatQT>;

// ---------------------------------------------------------------------------
// Demazure-Lusztig operators and the q-twisted rotation
// ---------------------------------------------------------------------------

inline FinitePoly swap_vars(int i, const FinitePoly& f) {
    if (i < 1 || i >= f.n()) throw std::out_of_range("swap_vars: index");
    FinitePoly r(f.n());
    for (const auto& [e, c] : f.terms()) {
        std::vector<int> e2 = e;
        std::swap(e2[i - 1], e2[i]);
        r.add_term(e2, c);
    }
    return r;
}

// T_i f = s_i f + (1-t) x_i (f - s_i f)/(x_i - x_{i+1}); the divided
// difference is evaluated monomial by monomial via geometric sums, so the
// result is exact with no rational-function intermediate
inline FinitePoly demazure_lusztig(int i, const FinitePoly& f) {
    if (i < 1 || i >= f.n()) throw std::out_of_range("demazure_lusztig: index");
    const RatQT one_minus_t = RatQT::one() - RatQT::t();
    FinitePoly out(f.n());
    for (const auto& [e, c] : f.terms()) {
        std::vector<int> se = e;
        std::swap(se[i - 1], se[i]);
        out.add_term(se, c);
        const int r = e[i - 1], s = e[i];
        if (r == s) continue;
        // x_i (x_i^r x_{i+1}^s - x_i^s x_{i+1}^r)/(x_i - x_{i+1})
        RatQT cc = c * one_minus_t;
        int lo = std::min(r, s), hi = std::max(r, s);
        if (r < s) cc = -cc;
        for (int j = lo; j < hi; ++j) {
            std::vector<int> e2 = e;
            e2[i - 1] = j + 1;
            e2[i] = r + s - 1 - j;
            out.add_term(e2, cc);
        }
    }
    return out;
}

// from (T_i - 1)(T_i + t) = 0: T_i^{-1} = t^{-1}(T_i + t - 1)
inline FinitePoly demazure_lusztig_inv(int i, const FinitePoly& f) {
    RatQT tinv = RatQT::t().inverse();
    return tinv * (demazure_lusztig(i, f) + (RatQT::t() - RatQT::one()) * f);
}

// omega f(x_1,...,x_n) = f(q^{-1}x_n, x_1, ..., x_{n-1})
inline FinitePoly omega(const FinitePoly& f) {
    const int n = f.n();
    FinitePoly r(n);
    for (const auto& [e, c] : f.terms()) {
        std::vector<int> e2(n);
        for (int i = 1; i < n; ++i) e2[i - 1] = e[i];
        e2[n - 1] = e[0];
        r.add_term(e2, c * RatQT::qt_monomial(-e[0], 0));
    }
    return r;
}

// omega^{-1} f = f(x_2, ..., x_n, q x_1)
inline FinitePoly omega_inv(const FinitePoly& f) {
    const int n = f.n();
    FinitePoly r(n);
    for (const auto& [e, c] : f.terms()) {
        std::vector<int> e2(n);
        e2[0] = e[n - 1];
        for (int i = 1; i < n; ++i) e2[i] = e[i - 1];
        r.add_term(e2, c * RatQT::qt_monomial(e[n - 1], 0));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Cherednik operators
// ---------------------------------------------------------------------------

// Y_1 = omega^{-1} T_{n-1}^{-1} ... T_1^{-1} (rightmost acts first),
// Y_{i+1} = t^{-1} T_i Y_i T_i
inline FinitePoly cherednik_Y(int i, const FinitePoly& f) {
    const int n = f.n();
    if (i < 1 || i > n) throw std::out_of_range("cherednik_Y: index");
    if (i == 1) {
        FinitePoly g = f;
        for (int j = 1; j < n; ++j) g = demazure_lusztig_inv(j, g);
        return omega_inv(g);
    }
    FinitePoly g = demazure_lusztig(i - 1, f);
    g = cherednik_Y(i - 1, g);
    return RatQT::t().inverse() * demazure_lusztig(i - 1, g);
}

// Y-weight of E_mu: alpha(i) = q^{mu_i} t^{1 - beta_mu(i)}
inline FiniteWeight y_weight(const Composition& mu) {
    const int n = static_cast<int>(mu.size());
    FiniteWeight w(n);
    for (int i = 1; i <= n; ++i)
        w[i - 1] = RatQT::qt_monomial(mu[i - 1], 1 - beta_count(mu, i));
    return w;
}

// ---------------------------------------------------------------------------
// non-symmetric Macdonald polynomials
// ---------------------------------------------------------------------------

// combinatorial formula: sum over non-attacking fillings of
// x^sigma q^{-maj} t^{coinv} prod (1-t)/(1 - q^{-(leg+1)} t^{arm+1})
inline FinitePoly E_hhl(const Composition& mu, int n = -1) {
    if (n < 0) n = static_cast<int>(mu.size());
    if (n < static_cast<int>(mu.size()))
        throw std::invalid_argument("E_hhl: n smaller than l(mu)");
    const RatQT one_minus_t = RatQT::one() - RatQT::t();
    FinitePoly out(n);
    enumerate_nonattacking(mu, n, std::nullopt, [&](const Filling& f) {
        FillingStats st = filling_stats(f);
        RatQT c = RatQT::qt_monomial(-st.maj, st.coinv);
        for (const auto& [box, leg, arm] : st.unequal_below)
            c *= one_minus_t /
                 (RatQT::one() - RatQT::qt_monomial(-(leg + 1), arm + 1));
        out.add_term(f.x_exponents(), c);
    });
    return out;
}

namespace detail {

inline void monomials_of_degree_rec(int n, int d, std::vector<int>& cur,
                                    std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == n - 1) {
        cur.push_back(d);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int v = 0; v <= d; ++v) {
        cur.push_back(v);
        monomials_of_degree_rec(n, d - v, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<int>> monomials_of_degree(int n, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    monomials_of_degree_rec(n, d, cur, out);
    return out;
}

}  // namespace detail

// joint eigenvector of Y_1..Y_n on the degree-|mu| homogeneous component with
// the weight from y_weight, normalized monic at x^mu. The Y_i are
// Bruhat-triangular on monomials, so the coefficients are found by back
// substitution in a linear extension of Bruhat order (highest first), using
// for each monomial a separating index i whose diagonal entry differs from
// the target eigenvalue; the result is certified afterwards by direct
// application of every Y_i.
inline FinitePoly E_eigensolve(const Composition& mu) {
    const int n = static_cast<int>(mu.size());
    if (n == 0) return FinitePoly::one(0);
    const int d = comp_size(mu);
    auto mons = detail::monomials_of_degree(n, d);
    const std::size_t N = mons.size();
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t j = 0; j < N; ++j) index[mons[j]] = j;
    const std::size_t c0 = index.at(mu);
    FiniteWeight w = y_weight(mu);

    // Y_i on each monomial
    std::vector<std::vector<FinitePoly>> ycols(n);
    for (int i = 0; i < n; ++i) {
        ycols[i].reserve(N);
        for (std::size_t j = 0; j < N; ++j)
            ycols[i].push_back(
                cherednik_Y(i + 1, FinitePoly::monomial(n, mons[j], RatQT::one())));
    }

    // process Bruhat-greater monomials first
    std::vector<std::vector<bool>> less(N, std::vector<bool>(N, false));
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b)
            if (a != b) less[a][b] = bruhat_less(mons[a], mons[b]);
    std::vector<std::size_t> order;
    std::vector<bool> done(N, false);
    while (order.size() < N) {
        bool progressed = false;
        for (std::size_t a = 0; a < N; ++a) {
            if (done[a]) continue;
            bool maximal = true;
            for (std::size_t b = 0; b < N; ++b)
                if (!done[b] && less[a][b]) {
                    maximal = false;
                    break;
                }
            if (maximal) {
                order.push_back(a);
                done[a] = true;
                progressed = true;
            }
        }
        if (!progressed) throw std::logic_error("E_eigensolve: order is not a partial order");
    }

    std::vector<RatQT> c(N, RatQT::zero());
    c[c0] = RatQT::one();
    for (std::size_t j : order) {
        if (j == c0) continue;
        int pick = -1;
        RatQT diag;
        for (int i = 0; i < n; ++i) {
            RatQT dg = ycols[i][j].coeff(mons[j]);
            if (!(dg == w[i])) {
                pick = i;
                diag = dg;
                break;
            }
        }
        if (pick < 0) throw std::logic_error("E_eigensolve: weights collide");
        // row equation for x^{mons[j]}: sum_r M[j][r] c_r = w_mu(pick) c_j
        RatQT acc = RatQT::zero();
        for (std::size_t r = 0; r < N; ++r) {
            if (r == j || c[r].is_zero()) continue;
            RatQT m = ycols[pick][r].coeff(mons[j]);
            if (!m.is_zero()) acc += m * c[r];
        }
        c[j] = acc / (w[pick] - diag);
    }

    FinitePoly f(n);
    for (std::size_t j = 0; j < N; ++j)
        if (!c[j].is_zero()) f.add_term(mons[j], c[j]);
    for (int i = 1; i <= n; ++i)
        if (!(cherednik_Y(i, f) == w[i - 1] * f))
            throw std::logic_error("E_eigensolve: result is not a joint eigenvector");
    if (!(f.coeff(mu) == RatQT::one()))
        throw std::logic_error("E_eigensolve: not monic at x^mu");
    return f;
}

// intertwiner route: walk a Bruhat-increasing chain of adjacent swaps from the
// weakly decreasing rearrangement (the orbit minimum), applying
// T_i + (1-t) alpha(i+1)/(alpha(i) - alpha(i+1)) at each cover
inline FinitePoly E_intertwiner(const Composition& mu) {
    Composition lam = mu;
    std::sort(lam.begin(), lam.end(), std::greater<int>());
    // walk down from mu to lam, recording swap positions
    std::vector<int> steps;
    Composition cur = mu;
    while (cur != lam) {
        for (std::size_t i = 0; i + 1 < cur.size(); ++i)
            if (cur[i] < cur[i + 1]) {
                std::swap(cur[i], cur[i + 1]);
                steps.push_back(static_cast<int>(i) + 1);
                break;
            }
    }
    FinitePoly E = E_eigensolve(lam);
    Composition nu = lam;
    const RatQT one_minus_t = RatQT::one() - RatQT::t();
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        const int i = *it;  // 1-based position; nu_i > nu_{i+1} here
        FiniteWeight a = y_weight(nu);
        RatQT den = a[i - 1] - a[i];
        if (den.is_zero()) throw std::logic_error("E_intertwiner: chain degenerated");
        RatQT c = one_minus_t * a[i] / den;
        E = demazure_lusztig(i, E) + c * E;
        std::swap(nu[i - 1], nu[i]);
    }
    return E;
}

// ---------------------------------------------------------------------------
// partial t-symmetrizers
// ---------------------------------------------------------------------------

// eps_k^(n) f = (1/[n-k]_t!) sum_{sigma in S_{(1^k, n-k)}}
//               t^{C(n-k,2) - l(sigma)} T_sigma f, evaluated by the
// length-additive coset factorization over S_{n-k}
inline FinitePoly epsilon_kn(int k, int n, const FinitePoly& f) {
    if (k < 0 || k >= n || n != f.n()) throw std::out_of_range("epsilon_kn: indices");
    FinitePoly g = f;
    for (int m = k + 2; m <= n; ++m) {
        // insert position m: coset reps s_j s_{j+1} ... s_{m-1}, j = m..k+1
        FinitePoly acc = g, cur = g;
        RatQT tw = RatQT::one();
        const RatQT tinv = RatQT::t().inverse();
        for (int j = m - 1; j >= k + 1; --j) {
            cur = demazure_lusztig(j, cur);
            tw *= tinv;
            acc += tw * cur;
        }
        g = acc;
    }
    const int m = n - k;
    return (RatQT::qt_monomial(0, m * (m - 1) / 2) / t_factorial(m)) * g;
}

// ---------------------------------------------------------------------------
// deformed Cherednik operators
// ---------------------------------------------------------------------------

// projection killing monomials with no x_1 factor
inline FinitePoly rho_project(const FinitePoly& f) {
    FinitePoly r(f.n());
    for (const auto& [e, c] : f.terms())
        if (e[0] > 0) r.add_term(e, c);
    return r;
}

// Ytilde_1 = rho . t^n Y_1, Ytilde_i = t^{-1} T_{i-1} Ytilde_{i-1} T_{i-1}
inline FinitePoly deformed_Y(int i, const FinitePoly& f) {
    const int n = f.n();
    if (i < 1 || i > n) throw std::out_of_range("deformed_Y: index");
    if (i == 1)
        return RatQT::qt_monomial(0, n) * rho_project(cherednik_Y(1, f));
    FinitePoly g = demazure_lusztig(i - 1, f);
    g = deformed_Y(i - 1, g);
    return RatQT::t().inverse() * demazure_lusztig(i - 1, g);
}

}  // namespace macdlab

#endif  // MACDLAB_FINITE_DAHA_HPP
