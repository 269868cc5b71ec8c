#ifndef MACDLAB_QT_HPP
#define MACDLAB_QT_HPP

// Exact arithmetic in Q(q,t): integer bivariate polynomials and reduced
// rational functions.  Canonical form: gcd(num,den) = 1 (including integer
// content) and the leading term of den under graded-lex (q < t) has positive
// coefficient.  All values are immutable after construction.

#include <gmpxx.h>

#include <cstdlib>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace macdlab {

// ---------------------------------------------------------------------------
// dense univariate helpers over Z (variable "q"), used only inside gcd
// ---------------------------------------------------------------------------
namespace detail {

using UniQ = std::vector<mpz_class>;  // coefficient of q^i at index i

inline void uq_trim(UniQ& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline bool uq_is_zero(const UniQ& a) { return a.empty(); }

inline int uq_deg(const UniQ& a) { return static_cast<int>(a.size()) - 1; }

inline UniQ uq_mul(const UniQ& a, const UniQ& b) {
    if (a.empty() || b.empty()) return {};
    UniQ r(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    uq_trim(r);
    return r;
}

inline UniQ uq_sub(const UniQ& a, const UniQ& b) {
    UniQ r = a;
    if (b.size() > r.size()) r.resize(b.size(), mpz_class(0));
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    uq_trim(r);
    return r;
}

inline UniQ uq_scale(const UniQ& a, const mpz_class& c) {
    if (c == 0) return {};
    UniQ r = a;
    for (auto& x : r) x *= c;
    return r;
}

inline mpz_class uq_content(const UniQ& a) {
    mpz_class g = 0;
    for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

inline UniQ uq_divexact_z(const UniQ& a, const mpz_class& c) {
    UniQ r = a;
    for (auto& x : r) {
        mpz_class qx, rem;
        mpz_tdiv_qr(qx.get_mpz_t(), rem.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
        if (rem != 0) throw std::logic_error("uq_divexact_z: not exact");
        x = qx;
    }
    return r;
}

inline UniQ uq_primitive(const UniQ& a) {
    if (a.empty()) return a;
    mpz_class c = uq_content(a);
    if (a.back() < 0) c = -c;
    return uq_divexact_z(a, c);
}

// pseudo-remainder of a by b (deg a >= deg b, b nonzero)
inline UniQ uq_prem(UniQ a, const UniQ& b) {
    const int db = uq_deg(b);
    const mpz_class& lb = b.back();
    while (uq_deg(a) >= db && !a.empty()) {
        int shift = uq_deg(a) - db;
        mpz_class la = a.back();
        a = uq_scale(a, lb);
        UniQ sub(shift, mpz_class(0));
        sub.insert(sub.end(), b.begin(), b.end());
        a = uq_sub(a, uq_scale(sub, la));
    }
    return a;
}

inline UniQ uq_abs(UniQ a) {
    if (!a.empty() && a.back() < 0)
        for (auto& x : a) x = -x;
    return a;
}

inline UniQ uq_gcd(UniQ a, UniQ b) {
    if (uq_is_zero(a)) return uq_abs(b);
    if (uq_is_zero(b)) return uq_abs(a);
    mpz_class cont;
    mpz_gcd(cont.get_mpz_t(), uq_content(a).get_mpz_t(), uq_content(b).get_mpz_t());
    a = uq_primitive(a);
    b = uq_primitive(b);
    if (uq_deg(a) < uq_deg(b)) std::swap(a, b);
    while (!uq_is_zero(b)) {
        UniQ r = uq_prem(a, b);
        a = b;
        b = uq_primitive(r);
    }
    UniQ g = uq_scale(a, cont);
    uq_trim(g);
    return g;
}

// exact division a / b in Z[q]
inline UniQ uq_divexact(UniQ a, const UniQ& b) {
    if (uq_is_zero(b)) throw std::logic_error("uq_divexact: division by zero");
    if (uq_is_zero(a)) return {};
    const int db = uq_deg(b);
    int dq = uq_deg(a) - db;
    if (dq < 0) throw std::logic_error("uq_divexact: not divisible");
    UniQ quot(dq + 1, mpz_class(0));
    while (!uq_is_zero(a)) {
        int shift = uq_deg(a) - db;
        if (shift < 0) throw std::logic_error("uq_divexact: not divisible");
        mpz_class c, rem;
        mpz_tdiv_qr(c.get_mpz_t(), rem.get_mpz_t(), a.back().get_mpz_t(),
                    b.back().get_mpz_t());
        if (rem != 0) throw std::logic_error("uq_divexact: not divisible");
        quot[shift] = c;
        UniQ sub(shift, mpz_class(0));
        sub.insert(sub.end(), b.begin(), b.end());
        a = uq_sub(a, uq_scale(sub, c));
        if (!a.empty() && uq_deg(a) >= db + shift)
            throw std::logic_error("uq_divexact: not divisible");
    }
    uq_trim(quot);
    return quot;
}

// dense poly in t with Z[q] coefficients
using TQPoly = std::vector<UniQ>;  // coefficient of t^j at index j

inline void tq_trim(TQPoly& a) {
    while (!a.empty() && uq_is_zero(a.back())) a.pop_back();
}

inline bool tq_is_zero(const TQPoly& a) { return a.empty(); }

inline int tq_deg(const TQPoly& a) { return static_cast<int>(a.size()) - 1; }

inline TQPoly tq_mul(const TQPoly& a, const TQPoly& b) {
    if (a.empty() || b.empty()) return {};
    TQPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (uq_is_zero(a[i]) || uq_is_zero(b[j])) continue;
            UniQ p = uq_mul(a[i], b[j]);
            if (r[i + j].size() < p.size()) r[i + j].resize(p.size(), mpz_class(0));
            for (std::size_t k = 0; k < p.size(); ++k) r[i + j][k] += p[k];
            uq_trim(r[i + j]);
        }
    tq_trim(r);
    return r;
}

inline TQPoly tq_sub(const TQPoly& a, const TQPoly& b) {
    TQPoly r = a;
    if (b.size() > r.size()) r.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = uq_sub(r[i], b[i]);
    tq_trim(r);
    return r;
}

inline TQPoly tq_scale_uq(const TQPoly& a, const UniQ& c) {
    TQPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = uq_mul(a[i], c);
    tq_trim(r);
    return r;
}

inline UniQ tq_content(const TQPoly& a) {
    UniQ g;
    for (const auto& c : a) g = uq_gcd(g, c);
    return g;
}

inline TQPoly tq_divexact_uq(const TQPoly& a, const UniQ& c) {
    TQPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = uq_is_zero(a[i]) ? UniQ{} : uq_divexact(a[i], c);
    tq_trim(r);
    return r;
}

inline TQPoly tq_primitive(const TQPoly& a) {
    if (a.empty()) return a;
    return tq_divexact_uq(a, tq_content(a));
}

inline TQPoly tq_prem(TQPoly a, const TQPoly& b) {
    const int db = tq_deg(b);
    const UniQ& lb = b.back();
    while (tq_deg(a) >= db && !a.empty()) {
        int shift = tq_deg(a) - db;
        UniQ la = a.back();
        a = tq_scale_uq(a, lb);
        TQPoly sub(shift);
        for (const auto& c : b) sub.push_back(c);
        a = tq_sub(a, tq_scale_uq(sub, la));
    }
    return a;
}

inline TQPoly tq_gcd(TQPoly a, TQPoly b) {
    if (tq_is_zero(a)) return b;
    if (tq_is_zero(b)) return a;
    UniQ cont = uq_gcd(tq_content(a), tq_content(b));
    a = tq_primitive(a);
    b = tq_primitive(b);
    if (tq_deg(a) < tq_deg(b)) std::swap(a, b);
    while (!tq_is_zero(b)) {
        TQPoly r = tq_prem(a, b);
        a = b;
        b = tq_primitive(r);
    }
    return tq_scale_uq(a, cont);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// IntPoly2: sparse integer polynomial in q,t with nonnegative exponents
// ---------------------------------------------------------------------------
class IntPoly2 {
public:
    // key = (q-exponent, t-exponent)
    using TermMap = std::map<std::pair<int, int>, mpz_class>;

    IntPoly2() = default;
    explicit IntPoly2(long c) {
        if (c != 0) terms_[{0, 0}] = c;
    }
    explicit IntPoly2(const mpz_class& c) {
        if (c != 0) terms_[{0, 0}] = c;
    }
    static IntPoly2 monomial(const mpz_class& c, int qe, int te) {
        if (qe < 0 || te < 0) throw std::invalid_argument("IntPoly2: negative exponent");
        IntPoly2 p;
        if (c != 0) p.terms_[{qe, te}] = c;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == std::make_pair(0, 0) &&
               terms_.begin()->second == 1;
    }

    void add_term(int qe, int te, const mpz_class& c) {
        if (c == 0) return;
        auto key = std::make_pair(qe, te);
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_[key] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend IntPoly2 operator+(const IntPoly2& a, const IntPoly2& b) {
        IntPoly2 r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, c);
        return r;
    }
    friend IntPoly2 operator-(const IntPoly2& a, const IntPoly2& b) {
        IntPoly2 r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, -c);
        return r;
    }
    friend IntPoly2 operator-(const IntPoly2& a) {
        IntPoly2 r;
        for (const auto& [k, c] : a.terms_) r.terms_[k] = -c;
        return r;
    }
    friend IntPoly2 operator*(const IntPoly2& a, const IntPoly2& b) {
        IntPoly2 r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return r;
    }
    friend bool operator==(const IntPoly2& a, const IntPoly2& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const IntPoly2& a, const IntPoly2& b) { return !(a == b); }

    // graded-lex with q < t: compare total degree, then t-exponent, then q-exponent
    static bool grlex_less(std::pair<int, int> a, std::pair<int, int> b) {
        int da = a.first + a.second, db = b.first + b.second;
        if (da != db) return da < db;
        if (a.second != b.second) return a.second < b.second;
        return a.first < b.first;
    }

    // maximal term under graded-lex (q < t); polynomial must be nonzero
    std::pair<std::pair<int, int>, mpz_class> leading_term() const {
        if (terms_.empty()) throw std::logic_error("leading_term of zero");
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (grlex_less(best->first, it->first)) best = it;
        return *best;
    }

    // minimal term under graded-lex (q < t); first term in serialization order
    std::pair<std::pair<int, int>, mpz_class> min_term() const {
        if (terms_.empty()) throw std::logic_error("min_term of zero");
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (grlex_less(it->first, best->first)) best = it;
        return *best;
    }

    int min_t_exponent() const {
        if (terms_.empty()) throw std::logic_error("min_t_exponent of zero");
        int m = std::numeric_limits<int>::max();
        for (const auto& [k, c] : terms_)
            if (k.second < m) m = k.second;
        return m;
    }
    int max_q_exponent() const {
        int m = 0;
        for (const auto& [k, c] : terms_)
            if (k.first > m) m = k.first;
        return m;
    }
    int max_t_exponent() const {
        int m = 0;
        for (const auto& [k, c] : terms_)
            if (k.second > m) m = k.second;
        return m;
    }

    // exponent substitution q -> q^k, t -> t^k
    IntPoly2 frobenius(int k) const {
        IntPoly2 r;
        for (const auto& [key, c] : terms_) r.terms_[{key.first * k, key.second * k}] = c;
        return r;
    }
    // swap of roles used by q -> 1/q clearing: q^e -> q^(dq - e)
    IntPoly2 reverse_q(int dq) const {
        IntPoly2 r;
        for (const auto& [key, c] : terms_) r.add_term(dq - key.first, key.second, c);
        return r;
    }

    mpq_class eval(const mpq_class& q0, const mpq_class& t0) const {
        mpq_class r = 0;
        for (const auto& [k, c] : terms_) {
            mpq_class term(c);
            for (int i = 0; i < k.first; ++i) term *= q0;
            for (int i = 0; i < k.second; ++i) term *= t0;
            r += term;
        }
        return r;
    }

    detail::TQPoly to_dense() const {
        detail::TQPoly d;
        for (const auto& [k, c] : terms_) {
            if (static_cast<int>(d.size()) <= k.second) d.resize(k.second + 1);
            auto& uq = d[k.second];
            if (static_cast<int>(uq.size()) <= k.first) uq.resize(k.first + 1, mpz_class(0));
            uq[k.first] = c;
        }
        return d;
    }
    static IntPoly2 from_dense(const detail::TQPoly& d) {
        IntPoly2 p;
        for (std::size_t j = 0; j < d.size(); ++j)
            for (std::size_t i = 0; i < d[j].size(); ++i)
                if (d[j][i] != 0) p.terms_[{static_cast<int>(i), static_cast<int>(j)}] = d[j][i];
        return p;
    }

    static IntPoly2 gcd(const IntPoly2& a, const IntPoly2& b) {
        if (a.is_zero()) return b.sign_normalized();
        if (b.is_zero()) return a.sign_normalized();
        IntPoly2 g = from_dense(detail::tq_gcd(a.to_dense(), b.to_dense()));
        return g.sign_normalized();
    }

    IntPoly2 divexact(const IntPoly2& b) const {
        if (b.is_zero()) throw std::logic_error("IntPoly2::divexact by zero");
        if (is_zero()) return IntPoly2();
        detail::TQPoly da = to_dense(), db = b.to_dense();
        detail::TQPoly quot;
        while (!detail::tq_is_zero(da)) {
            int shift = detail::tq_deg(da) - detail::tq_deg(db);
            if (shift < 0) throw std::logic_error("IntPoly2::divexact: not divisible");
            detail::UniQ c = detail::uq_divexact(da.back(), db.back());
            if (static_cast<int>(quot.size()) <= shift) quot.resize(shift + 1);
            quot[shift] = c;
            detail::TQPoly sub(shift);
            for (const auto& x : db) sub.push_back(x);
            da = detail::tq_sub(da, detail::tq_scale_uq(sub, c));
            if (!da.empty() && detail::tq_deg(da) >= detail::tq_deg(db) + shift)
                throw std::logic_error("IntPoly2::divexact: not divisible");
        }
        return from_dense(quot);
    }

    // sign flipped so the first serialized term has positive coefficient
    IntPoly2 sign_normalized() const {
        if (is_zero()) return *this;
        if (min_term().second < 0) return -*this;
        return *this;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::vector<std::pair<std::pair<int, int>, mpz_class>> v(terms_.begin(), terms_.end());
        std::sort(v.begin(), v.end(),
                  [](const auto& a, const auto& b) { return grlex_less(a.first, b.first); });
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : v) {
            mpz_class a = c;
            if (first) {
                if (a < 0) {
                    os << "-";
                    a = -a;
                }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            bool has_var = (k.first > 0 || k.second > 0);
            if (a != 1 || !has_var) {
                os << a.get_str();
                if (has_var) os << "*";
            }
            if (k.first > 0) {
                os << "q";
                if (k.first > 1) os << "^" << k.first;
                if (k.second > 0) os << "*";
            }
            if (k.second > 0) {
                os << "t";
                if (k.second > 1) os << "^" << k.second;
            }
        }
        return os.str();
    }

private:
    TermMap terms_;
};

// ---------------------------------------------------------------------------
// RatQT: reduced rational function in q,t
// ---------------------------------------------------------------------------
class DivisionByZeroError : public std::domain_error {
public:
    DivisionByZeroError() : std::domain_error("RatQT: division by zero") {}
};
class PoleError : public std::domain_error {
public:
    PoleError() : std::domain_error("RatQT: denominator vanishes at specialization") {}
};

class RatQT {
public:
    static constexpr int kValInfinity = std::numeric_limits<int>::max();

    RatQT() : num_(), den_(1) {}
    RatQT(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    RatQT(const IntPoly2& num, const IntPoly2& den) : num_(num), den_(den) { normalize(); }
    explicit RatQT(const mpq_class& r)
        : num_(mpz_class(r.get_num())), den_(mpz_class(r.get_den())) {
        normalize();
    }

    static RatQT zero() { return RatQT(); }
    static RatQT one() { return RatQT(1); }
    static RatQT q() { return from_poly(IntPoly2::monomial(1, 1, 0)); }
    static RatQT t() { return from_poly(IntPoly2::monomial(1, 0, 1)); }
    static RatQT from_poly(const IntPoly2& p) {
        RatQT r;
        r.num_ = p;
        r.den_ = IntPoly2(1);
        return r;
    }
    // q^a * t^b with a, b possibly negative
    static RatQT qt_monomial(int a, int b, const mpz_class& c = 1) {
        IntPoly2 num = IntPoly2::monomial(c, a > 0 ? a : 0, b > 0 ? b : 0);
        IntPoly2 den = IntPoly2::monomial(1, a < 0 ? -a : 0, b < 0 ? -b : 0);
        return RatQT(num, den);
    }

    const IntPoly2& num() const { return num_; }
    const IntPoly2& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    friend RatQT operator+(const RatQT& a, const RatQT& b) {
        return RatQT(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatQT operator-(const RatQT& a, const RatQT& b) {
        return RatQT(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatQT operator-(const RatQT& a) {
        RatQT r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend RatQT operator*(const RatQT& a, const RatQT& b) {
        return RatQT(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatQT operator/(const RatQT& a, const RatQT& b) {
        if (b.is_zero()) throw DivisionByZeroError();
        return RatQT(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatQT& operator+=(const RatQT& b) { return *this = *this + b; }
    RatQT& operator-=(const RatQT& b) { return *this = *this - b; }
    RatQT& operator*=(const RatQT& b) { return *this = *this * b; }
    RatQT& operator/=(const RatQT& b) { return *this = *this / b; }

    friend bool operator==(const RatQT& a, const RatQT& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatQT& a, const RatQT& b) { return !(a == b); }

    RatQT inverse() const {
        if (is_zero()) throw DivisionByZeroError();
        return RatQT(den_, num_);
    }

    RatQT pow(int e) const {
        if (e < 0) return inverse().pow(-e);
        RatQT r = one(), base = *this;
        while (e > 0) {
            if (e & 1) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    // q -> q^k, t -> t^k
    RatQT frobenius(int k) const { return RatQT(num_.frobenius(k), den_.frobenius(k)); }

    // q -> t (valid when the denominator does not vanish on q = t)
    RatQT subst_q_to_t() const {
        auto sub = [](const IntPoly2& p) {
            IntPoly2 r;
            for (const auto& [k, c] : p.terms()) r.add_term(0, k.first + k.second, c);
            return r;
        };
        IntPoly2 d = sub(den_);
        if (d.is_zero()) throw PoleError();
        return RatQT(sub(num_), d);
    }

    // q -> 1/q
    RatQT subst_q_inverse() const {
        if (is_zero()) return zero();
        int dn = num_.max_q_exponent(), dd = den_.max_q_exponent();
        IntPoly2 n = num_.reverse_q(dn);
        IntPoly2 d = den_.reverse_q(dd);
        // a(1/q)/b(1/q) = q^(dd-dn) * n / d
        if (dd >= dn)
            return RatQT(n * IntPoly2::monomial(1, dd - dn, 0), d);
        return RatQT(n, d * IntPoly2::monomial(1, dn - dd, 0));
    }

    int t_adic_val() const {
        if (is_zero()) return kValInfinity;
        return num_.min_t_exponent() - den_.min_t_exponent();
    }

    mpq_class specialize(const mpq_class& q0, const mpq_class& t0) const {
        mpq_class d = den_.eval(q0, t0);
        if (d == 0) throw PoleError();
        mpq_class n = num_.eval(q0, t0);
        mpq_class r = n / d;
        r.canonicalize();
        return r;
    }

    std::string to_string() const {
        auto wrap = [](const IntPoly2& p) {
            std::string s = p.to_string();
            if (p.terms().size() > 1) return "(" + s + ")";
            return s;
        };
        if (den_.is_one()) return wrap(num_);
        return wrap(num_) + "/" + wrap(den_);
    }

    static RatQT parse(const std::string& s);

private:
    void normalize() {
        if (den_.is_zero()) throw DivisionByZeroError();
        if (num_.is_zero()) {
            den_ = IntPoly2(1);
            return;
        }
        IntPoly2 g = IntPoly2::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_.divexact(g);
            den_ = den_.divexact(g);
        }
        if (den_.min_term().second < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    IntPoly2 num_, den_;
};

// ---------------------------------------------------------------------------
// small recursive-descent parser for the "num/den" serialization
// ---------------------------------------------------------------------------
namespace detail {

class QTParser {
public:
    explicit QTParser(const std::string& s) : s_(s) {}

    RatQT parse() {
        RatQT num = parse_sum();
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            RatQT den = parse_term();
            num = num / den;
        }
        skip_ws();
        if (pos_ != s_.size()) throw std::invalid_argument("RatQT parse: trailing input");
        return num;
    }

private:
    RatQT parse_sum() {
        RatQT r = parse_term();
        while (true) {
            skip_ws();
            char c = peek();
            if (c == '+') {
                ++pos_;
                r += parse_term();
            } else if (c == '-') {
                ++pos_;
                r -= parse_term();
            } else {
                return r;
            }
        }
    }

    RatQT parse_term() {
        skip_ws();
        bool neg = false;
        while (peek() == '+' || peek() == '-') {
            if (peek() == '-') neg = !neg;
            ++pos_;
            skip_ws();
        }
        RatQT r = RatQT::one();
        bool any = false;
        while (true) {
            skip_ws();
            char c = peek();
            if (c == '(') {
                ++pos_;
                RatQT inner = parse_sum();
                skip_ws();
                if (peek() != ')') throw std::invalid_argument("RatQT parse: expected ')'");
                ++pos_;
                int e = parse_exponent();
                r *= inner.pow(e);
                any = true;
            } else if (c == 'q' || c == 't') {
                ++pos_;
                int e = parse_exponent();
                r *= (c == 'q' ? RatQT::q() : RatQT::t()).pow(e);
                any = true;
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t start = pos_;
                while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
                mpz_class v(s_.substr(start, pos_ - start));
                int e = parse_exponent();
                RatQT base = RatQT::from_poly(IntPoly2(v));
                r *= base.pow(e);
                any = true;
            } else {
                break;
            }
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                continue;
            }
            break;
        }
        if (!any) throw std::invalid_argument("RatQT parse: expected term");
        return neg ? -r : r;
    }

    int parse_exponent() {
        skip_ws();
        if (peek() != '^') return 1;
        ++pos_;
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        }
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) throw std::invalid_argument("RatQT parse: bad exponent");
        int e = std::stoi(s_.substr(start, pos_ - start));
        return neg ? -e : e;
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline RatQT RatQT::parse(const std::string& s) { return detail::QTParser(s).parse(); }

}  // namespace macdlab

#endif  // MACDLAB_QT_HPP
