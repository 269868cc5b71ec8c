#ifndef MACDLAB_LINALG_HPP
#define MACDLAB_LINALG_HPP

// Exact dense linear algebra over Q(q,t) and over Q, small systems only.

#include <macdlab/qt.hpp>

#include <optional>
#include <stdexcept>
#include <vector>

namespace macdlab {

class SingularSystemError : public std::runtime_error {
public:
    explicit SingularSystemError(const std::string& what) : std::runtime_error(what) {}
};

namespace linalg {

// rough cost measure used for pivot selection
inline std::size_t ratqt_weight(const RatQT& x) {
    return x.num().terms().size() + x.den().terms().size();
}

// Solve A x = b exactly; A may have more rows than columns but the system must
// be consistent with a unique solution.
inline std::vector<RatQT> solve_unique(std::vector<std::vector<RatQT>> a,
                                       std::vector<RatQT> b) {
    const std::size_t rows = a.size();
    if (rows == 0) return {};
    const std::size_t cols = a[0].size();
    std::vector<int> pivot_col_of_row(rows, -1);
    std::size_t prow = 0;
    for (std::size_t c = 0; c < cols; ++c) {
        // pick the lightest nonzero pivot in column c
        std::size_t best = rows;
        for (std::size_t r = prow; r < rows; ++r) {
            if (a[r][c].is_zero()) continue;
            if (best == rows || ratqt_weight(a[r][c]) < ratqt_weight(a[best][c])) best = r;
        }
        if (best == rows) throw SingularSystemError("solve_unique: rank deficient");
        std::swap(a[best], a[prow]);
        std::swap(b[best], b[prow]);
        RatQT inv = a[prow][c].inverse();
        for (std::size_t cc = c; cc < cols; ++cc) a[prow][cc] *= inv;
        b[prow] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == prow || a[r][c].is_zero()) continue;
            RatQT f = a[r][c];
            for (std::size_t cc = c; cc < cols; ++cc) a[r][cc] -= f * a[prow][cc];
            b[r] -= f * b[prow];
        }
        pivot_col_of_row[prow] = static_cast<int>(c);
        ++prow;
        if (prow == rows && c + 1 < cols)
            throw SingularSystemError("solve_unique: rank deficient");
    }
    // consistency of leftover rows
    for (std::size_t r = prow; r < rows; ++r)
        if (!b[r].is_zero()) throw SingularSystemError("solve_unique: inconsistent");
    std::vector<RatQT> x(cols);
    for (std::size_t r = 0; r < prow; ++r) x[pivot_col_of_row[r]] = b[r];
    return x;
}

inline RatQT determinant(std::vector<std::vector<RatQT>> a) {
    const std::size_t n = a.size();
    RatQT det = RatQT::one();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t best = n;
        for (std::size_t r = c; r < n; ++r) {
            if (a[r][c].is_zero()) continue;
            if (best == n || ratqt_weight(a[r][c]) < ratqt_weight(a[best][c])) best = r;
        }
        if (best == n) return RatQT::zero();
        if (best != c) {
            std::swap(a[best], a[c]);
            det = -det;
        }
        det *= a[c][c];
        RatQT inv = a[c][c].inverse();
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a[r][c].is_zero()) continue;
            RatQT f = a[r][c] * inv;
            for (std::size_t cc = c; cc < n; ++cc) a[r][cc] -= f * a[c][cc];
        }
    }
    return det;
}

inline int rank_mpq(std::vector<std::vector<mpq_class>> a) {
    if (a.empty()) return 0;
    const std::size_t rows = a.size(), cols = a[0].size();
    std::size_t prow = 0;
    for (std::size_t c = 0; c < cols && prow < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t r = prow; r < rows; ++r)
            if (a[r][c] != 0) {
                sel = r;
                break;
            }
        if (sel == rows) continue;
        std::swap(a[sel], a[prow]);
        for (std::size_t r = prow + 1; r < rows; ++r) {
            if (a[r][c] == 0) continue;
            mpq_class f = a[r][c] / a[prow][c];
            for (std::size_t cc = c; cc < cols; ++cc) a[r][cc] -= f * a[prow][cc];
        }
        ++prow;
    }
    return static_cast<int>(prow);
}

// basis of the nullspace of A over Q
inline std::vector<std::vector<mpq_class>> nullspace_mpq(std::vector<std::vector<mpq_class>> a) {
    if (a.empty()) return {};
    const std::size_t rows = a.size(), cols = a[0].size();
    std::vector<int> pivot_of_col(cols, -1);
    std::size_t prow = 0;
    for (std::size_t c = 0; c < cols && prow < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t r = prow; r < rows; ++r)
            if (a[r][c] != 0) {
                sel = r;
                break;
            }
        if (sel == rows) continue;
        std::swap(a[sel], a[prow]);
        mpq_class inv = 1 / a[prow][c];
        for (std::size_t cc = c; cc < cols; ++cc) a[prow][cc] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == prow || a[r][c] == 0) continue;
            mpq_class f = a[r][c];
            for (std::size_t cc = c; cc < cols; ++cc) a[r][cc] -= f * a[prow][cc];
        }
        pivot_of_col[c] = static_cast<int>(prow);
        ++prow;
    }
    std::vector<std::vector<mpq_class>> basis;
    for (std::size_t c = 0; c < cols; ++c) {
        if (pivot_of_col[c] != -1) continue;
        std::vector<mpq_class> v(cols, mpq_class(0));
        v[c] = 1;
        for (std::size_t cc = 0; cc < cols; ++cc)
            if (pivot_of_col[cc] != -1) v[cc] = -a[pivot_of_col[cc]][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

inline std::vector<std::vector<RatQT>> inverse(const std::vector<std::vector<RatQT>>& a) {
    const std::size_t n = a.size();
    std::vector<std::vector<RatQT>> inv(n, std::vector<RatQT>(n));
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<RatQT> e(n);
        e[j] = RatQT::one();
        auto col = solve_unique(a, e);
        for (std::size_t i = 0; i < n; ++i) inv[i][j] = col[i];
    }
    return inv;
}

}  // namespace linalg
}  // namespace macdlab

#endif  // MACDLAB_LINALG_HPP
