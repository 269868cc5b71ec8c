#ifndef MACDLAB_COMBINATORICS_HPP
#define MACDLAB_COMBINATORICS_HPP

// Compositions, partitions, Bruhat order on Z^n, column diagrams and
// non-attacking fillings with their statistics.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace macdlab {

using Composition = std::vector<int>;  // finite sequence of nonnegative ints
using Partition = std::vector<int>;    // weakly decreasing, positive parts

inline int comp_size(const Composition& mu) {
    return std::accumulate(mu.begin(), mu.end(), 0);
}

inline bool is_reduced(const Composition& mu) { return mu.empty() || mu.back() != 0; }

inline bool is_partition(const std::vector<int>& v) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] < v[i + 1]) return false;
    return v.empty() || v.back() >= 1;
}

// weakly decreasing rearrangement with zeros dropped
inline Partition sorted_partition(const Composition& mu) {
    Partition p;
    for (int x : mu)
        if (x != 0) p.push_back(x);
    std::sort(p.begin(), p.end(), std::greater<int>());
    return p;
}

// beta_mu(i) = #{j <= i : mu_j <= mu_i} + #{j > i : mu_i > mu_j}, 1-based i
inline int beta_count(const Composition& mu, int i) {
    if (i < 1 || i > static_cast<int>(mu.size()))
        throw std::out_of_range("beta_count: index out of range");
    int c = 0;
    for (int j = 1; j <= static_cast<int>(mu.size()); ++j) {
        if (j <= i && mu[j - 1] <= mu[i - 1]) ++c;
        if (j > i && mu[i - 1] > mu[j - 1]) ++c;
    }
    return c;
}

inline Composition parse_composition(const std::string& s) {
    Composition mu;
    if (s.empty()) return mu;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) mu.push_back(std::stoi(part));
    return mu;
}

inline std::string format_composition(const Composition& mu) {
    std::ostringstream os;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (i) os << ",";
        os << mu[i];
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Bruhat order
// ---------------------------------------------------------------------------
namespace detail {

// strict dominance on weakly decreasing vectors of equal sum
inline bool dominance_lt(const std::vector<int>& a, const std::vector<int>& b) {
    if (a == b) return false;
    std::size_t n = std::max(a.size(), b.size());
    int sa = 0, sb = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sa += i < a.size() ? a[i] : 0;
        sb += i < b.size() ? b[i] : 0;
        if (sa > sb) return false;
    }
    return sa == sb;
}

// minimal-length permutation sigma (as image list, 1-based values) with
// lambda_{sigma(i)} = alpha_i for the weakly decreasing rearrangement lambda
inline std::vector<int> minimal_sorting_perm(const std::vector<int>& alpha) {
    const int n = static_cast<int>(alpha.size());
    std::vector<int> lambda = alpha;
    std::sort(lambda.begin(), lambda.end(), std::greater<int>());
    std::vector<bool> used(n, false);
    std::vector<int> sigma(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            if (!used[k] && lambda[k] == alpha[i]) {
                used[k] = true;
                sigma[i] = k + 1;
                break;
            }
        }
    }
    return sigma;
}

// strong Bruhat order on permutations via the sorted-prefix criterion
inline bool perm_bruhat_leq(const std::vector<int>& s, const std::vector<int>& g) {
    const int n = static_cast<int>(s.size());
    std::vector<int> ps, pg;
    for (int i = 0; i < n - 1; ++i) {
        ps.push_back(s[i]);
        pg.push_back(g[i]);
        std::vector<int> a = ps, b = pg;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        for (int k = 0; k <= i; ++k)
            if (a[k] > b[k]) return false;
    }
    return true;
}

}  // namespace detail

inline bool bruhat_less(const std::vector<int>& alpha, const std::vector<int>& beta) {
    if (alpha.size() != beta.size())
        throw std::invalid_argument("bruhat_less: length mismatch");
    if (alpha == beta) return false;
    std::vector<int> la = alpha, lb = beta;
    std::sort(la.begin(), la.end(), std::greater<int>());
    std::sort(lb.begin(), lb.end(), std::greater<int>());
    if (la != lb) return detail::dominance_lt(la, lb);
    std::vector<int> s = detail::minimal_sorting_perm(alpha);
    std::vector<int> g = detail::minimal_sorting_perm(beta);
    if (s == g) return false;
    return detail::perm_bruhat_leq(s, g);
}

inline bool bruhat_leq(const std::vector<int>& alpha, const std::vector<int>& beta) {
    return alpha == beta || bruhat_less(alpha, beta);
}

// gamma immediately above alpha through the two generating relations,
// restricted to nonnegative vectors
inline std::vector<Composition> bruhat_covers_up(const Composition& alpha) {
    std::set<Composition> out;
    const int n = static_cast<int>(alpha.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (alpha[i] > alpha[j]) {
                Composition g = alpha;
                std::swap(g[i], g[j]);
                out.insert(g);
            }
            if (alpha[i] >= 1) {
                Composition ap = alpha;
                ap[i] -= 1;
                ap[j] += 1;
                if (ap[j] - ap[i] > 1) {
                    std::swap(ap[i], ap[j]);
                    out.insert(ap);
                }
            }
        }
    return {out.begin(), out.end()};
}

// ---------------------------------------------------------------------------
// diagrams and fillings
// ---------------------------------------------------------------------------

// box of dg'(mu): column i (1-based), row j >= 1; row 0 is the augmented row
struct Box {
    int i = 0, j = 0;
    friend bool operator==(const Box&, const Box&) = default;
    friend auto operator<=>(const Box&, const Box&) = default;
};

struct Filling {
    Composition shape;
    int n_labels = 0;
    // labels[c][r] = label of box (c+1, r+1)
    std::vector<std::vector<int>> labels;

    int label(int i, int j) const {
        if (j == 0) return i;  // augmented row
        return labels[i - 1][j - 1];
    }
    std::vector<Box> boxes() const {
        std::vector<Box> v;
        for (int i = 1; i <= static_cast<int>(shape.size()); ++i)
            for (int j = 1; j <= shape[i - 1]; ++j) v.push_back({i, j});
        return v;
    }
    // exponent of x_k (1-based) in x^sigma
    std::vector<int> x_exponents() const {
        std::vector<int> e(n_labels, 0);
        for (const auto& col : labels)
            for (int lab : col) e[lab - 1] += 1;
        return e;
    }
};

inline bool in_diagram(const Composition& mu, int i, int j) {
    if (i < 1 || i > static_cast<int>(mu.size())) return false;
    if (j == 0) return true;  // augmented
    return j >= 1 && j <= mu[i - 1];
}

inline int leg_count(const Composition& mu, Box u) { return mu[u.i - 1] - u.j; }

inline int arm_count(const Composition& mu, Box u) {
    int a = 0;
    const int n = static_cast<int>(mu.size());
    for (int ip = 1; ip < u.i; ++ip)  // arm^left: same row, smaller column
        if (mu[ip - 1] >= u.j && mu[ip - 1] <= mu[u.i - 1]) ++a;
    for (int ip = u.i + 1; ip <= n; ++ip)  // arm^right: row below, in augmented diagram
        if (in_diagram(mu, ip, u.j - 1) && mu[ip - 1] < mu[u.i - 1]) ++a;
    return a;
}

// attacking predicate for distinct boxes of the augmented diagram
inline bool attacks(Box u, Box v) {
    if (u == v) return false;
    if (u.j == v.j) return true;
    if (u.j == v.j + 1) return v.i > u.i;  // v in lower row, strictly right
    if (v.j == u.j + 1) return u.i > v.i;
    return false;
}

struct FillingStats {
    int maj = 0, coinv = 0, inv = 0, abs_inv = 0;
    std::vector<Box> descents;
    // boxes u in dg'(mu) with label(u) != label(d(u)), with their (leg, arm)
    std::vector<std::tuple<Box, int, int>> unequal_below;
};

inline FillingStats filling_stats(const Filling& f) {
    const Composition& mu = f.shape;
    const int n = static_cast<int>(mu.size());
    FillingStats st;
    auto bxs = f.boxes();
    int arm_total = 0, arm_des = 0;
    for (Box u : bxs) {
        int a = arm_count(mu, u), l = leg_count(mu, u);
        arm_total += a;
        int lab = f.label(u.i, u.j), below = f.label(u.i, u.j - 1);
        if (lab > below) {
            st.descents.push_back(u);
            st.maj += l + 1;
            arm_des += a;
        }
        if (lab != below) st.unequal_below.emplace_back(u, l, a);
    }
    // |Inv|: attacking pairs of the augmented diagram inverted in reading order
    std::vector<Box> aug = bxs;
    for (int i = 1; i <= n; ++i) aug.push_back({i, 0});
    auto reading_less = [](Box a, Box b) {
        if (a.j != b.j) return a.j > b.j;  // higher rows first
        return a.i > b.i;                  // right to left
    };
    for (std::size_t p = 0; p < aug.size(); ++p)
        for (std::size_t r = p + 1; r < aug.size(); ++r) {
            Box u = aug[p], v = aug[r];
            if (!attacks(u, v)) continue;
            if (!reading_less(u, v)) std::swap(u, v);
            if (f.label(u.i, u.j) > f.label(v.i, v.j)) ++st.abs_inv;
        }
    int pairs_leq = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (mu[i] <= mu[j]) ++pairs_leq;
    st.inv = st.abs_inv - pairs_leq - arm_des;
    st.coinv = arm_total - st.inv;
    return st;
}

// optional constraint: label tail_start + i must occur exactly nu[i] times
struct TailConstraint {
    int tail_start = 0;  // labels 1..tail_start are unconstrained
    Partition nu;
};

// enumerate non-attacking fillings in reading order with pruning; the shape
// is padded with zero columns to length n_labels so that the augmented row
// always has n_labels boxes
inline void enumerate_nonattacking(const Composition& shape_in, int n_labels,
                                   const std::optional<TailConstraint>& tail,
                                   const std::function<void(const Filling&)>& yield) {
    if (n_labels < static_cast<int>(shape_in.size()))
        throw std::invalid_argument("enumerate_nonattacking: too few labels");
    Composition shape = shape_in;
    shape.resize(n_labels, 0);
    const int n = n_labels;
    if (tail) {
        for (int i = 0; i < static_cast<int>(tail->nu.size()); ++i)
            if (tail->tail_start + i + 1 > n_labels)
                throw std::invalid_argument("enumerate_nonattacking: tail label out of range");
    }
    Filling f;
    f.shape = shape;
    f.n_labels = n_labels;
    f.labels.resize(n);
    for (int i = 0; i < n; ++i) f.labels[i].assign(shape[i], 0);

    // boxes of dg'(mu) in reading order
    std::vector<Box> order;
    int maxrow = 0;
    for (int x : shape) maxrow = std::max(maxrow, x);
    for (int j = maxrow; j >= 1; --j)
        for (int i = n; i >= 1; --i)
            if (j <= shape[i - 1]) order.push_back({i, j});

    std::vector<int> label_count(n_labels + 1, 0);
    int remaining = static_cast<int>(order.size());

    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
        if (pos == order.size()) {
            yield(f);
            return;
        }
        Box u = order[pos];
        for (int lab = 1; lab <= n_labels; ++lab) {
            // attacking constraints against already-assigned boxes
            bool ok = true;
            for (int ip = u.i + 1; ip <= n && ok; ++ip)  // same row, to the right
                if (u.j <= shape[ip - 1] && f.labels[ip - 1][u.j - 1] == lab) ok = false;
            for (int ip = 1; ip < u.i && ok; ++ip)  // row above, to the left
                if (u.j + 1 <= shape[ip - 1] && f.labels[ip - 1][u.j] == lab) ok = false;
            if (u.j == 1 && lab > u.i) ok = false;  // augmented row boxes to the right
            if (!ok) continue;
            if (tail) {
                int idx = lab - tail->tail_start;  // 1-based tail index
                if (idx >= 1) {
                    int quota = idx <= static_cast<int>(tail->nu.size()) ? tail->nu[idx - 1] : 0;
                    if (label_count[lab] + 1 > quota) continue;
                }
            }
            f.labels[u.i - 1][u.j - 1] = lab;
            ++label_count[lab];
            --remaining;
            // prune: enough boxes left to meet every remaining tail quota
            bool feasible = true;
            if (tail) {
                int deficit = 0;
                for (int idx = 1; idx <= static_cast<int>(tail->nu.size()); ++idx)
                    deficit += std::max(0, tail->nu[idx - 1] -
                                               label_count[tail->tail_start + idx]);
                feasible = deficit <= remaining;
            }
            if (feasible) rec(pos + 1);
            f.labels[u.i - 1][u.j - 1] = 0;
            --label_count[lab];
            ++remaining;
        }
    };
    rec(0);
}

inline std::vector<Filling> nonattacking_fillings(
    const Composition& shape, int n_labels,
    const std::optional<TailConstraint>& tail = std::nullopt) {
    std::vector<Filling> out;
    enumerate_nonattacking(shape, n_labels, tail,
                           [&](const Filling& f) { out.push_back(f); });
    return out;
}

}  // namespace macdlab

#endif  // MACDLAB_COMBINATORICS_HPP
