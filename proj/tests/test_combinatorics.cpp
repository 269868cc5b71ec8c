#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <macdlab/combinatorics.hpp>

#include <random>
#include <set>

using namespace macdlab;

TEST_CASE("sort and reduced") {
    CHECK(sorted_partition({0, 2, 0, 1}) == Partition{2, 1});
    CHECK(sorted_partition({}) == Partition{});
    CHECK(sorted_partition({3, 3, 1}) == Partition{3, 3, 1});
    CHECK(is_reduced({}));
    CHECK(is_reduced({2, 1}));
    CHECK_FALSE(is_reduced({2, 0}));
    CHECK(parse_composition("3,2,0,1") == Composition{3, 2, 0, 1});
    CHECK(format_composition({3, 2, 0, 1}) == "3,2,0,1");
    CHECK(parse_composition("") == Composition{});
}

TEST_CASE("beta counts") {
    CHECK(beta_count({1}, 1) == 1);
    CHECK(beta_count({1, 1, 1}, 2) == 2);
    CHECK(beta_count({2, 0}, 1) == 2);
    // (1,1,1): beta = (1,2,3) so exponents l+1-beta = (3,2,1)
    CHECK(beta_count({1, 1, 1}, 1) == 1);
    CHECK(beta_count({1, 1, 1}, 3) == 3);
    CHECK_THROWS_AS(beta_count({1}, 2), std::out_of_range);
}

TEST_CASE("bruhat basics") {
    CHECK(bruhat_less({1, 0}, {0, 1}));
    CHECK_FALSE(bruhat_less({0, 1}, {1, 0}));
    CHECK_FALSE(bruhat_less({0, 1}, {0, 1}));
    // weakly decreasing is minimal in its orbit
    Composition v{3, 1, 0};
    std::vector<Composition> orbit;
    Composition p = v;
    std::sort(p.begin(), p.end());
    do {
        if (p != v) CHECK(bruhat_less(v, p));
        orbit.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    // cross-multiset: dominance of sorts
    CHECK(bruhat_less({1, 1, 0}, {2, 0, 0}));
    CHECK(bruhat_less({0, 1, 1}, {2, 0, 0}));
    CHECK_FALSE(bruhat_less({2, 0, 0}, {1, 1, 0}));
    CHECK_THROWS_AS(bruhat_less({1}, {1, 0}), std::invalid_argument);
}

TEST_CASE("bruhat is a strict partial order on S4 orbits") {
    for (Composition base : {Composition{3, 1, 0, 0}, Composition{2, 1, 1, 0},
                             Composition{2, 2, 0, 0}, Composition{3, 2, 1, 0}}) {
        std::vector<Composition> orbit;
        Composition p = base;
        std::sort(p.begin(), p.end());
        do orbit.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        for (const auto& a : orbit) CHECK_FALSE(bruhat_less(a, a));
        for (const auto& a : orbit)
            for (const auto& b : orbit) {
                if (bruhat_less(a, b)) CHECK_FALSE(bruhat_less(b, a));
                for (const auto& c : orbit)
                    if (bruhat_less(a, b) && bruhat_less(b, c)) CHECK(bruhat_less(a, c));
            }
    }
}

TEST_CASE("bruhat agrees with cover closure on orbit posets") {
    for (Composition base : {Composition{2, 1, 0}, Composition{3, 1, 0, 0},
                             Composition{2, 1, 1, 0}}) {
        std::vector<Composition> orbit;
        Composition p = base;
        std::sort(p.begin(), p.end());
        do orbit.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        // closure of swap covers within the orbit
        std::map<Composition, std::set<Composition>> above;
        for (const auto& a : orbit)
            for (const auto& g : bruhat_covers_up(a)) {
                std::vector<int> sa = a, sg = g;
                std::sort(sa.begin(), sa.end());
                std::sort(sg.begin(), sg.end());
                if (sa == sg) above[a].insert(g);
            }
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& a : orbit) {
                auto cur = above[a];
                for (const auto& b : cur)
                    for (const auto& c : above[b])
                        if (above[a].insert(c).second) changed = true;
            }
        }
        for (const auto& a : orbit)
            for (const auto& b : orbit) {
                if (a == b) continue;
                CHECK(bruhat_less(a, b) == (above[a].count(b) > 0));
            }
    }
}

TEST_CASE("covers_up elements are above") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> len(2, 4), part(0, 3);
    for (int trial = 0; trial < 50; ++trial) {
        Composition a(len(rng));
        for (auto& x : a) x = part(rng);
        for (const auto& g : bruhat_covers_up(a)) {
            CHECK(bruhat_less(a, g));
            for (int x : g) CHECK(x >= 0);
        }
    }
}

TEST_CASE("worked filling statistics for a mixed shape") {
    Composition mu{3, 2, 0, 1, 0, 0};
    Filling f;
    f.shape = mu;
    f.n_labels = 6;
    f.labels = {{1, 4, 6}, {2, 1}, {}, {3}, {}, {}};
    // descent box u = (1,2) labeled 4
    Box u{1, 2};
    CHECK(arm_count(mu, u) == 2);
    CHECK(leg_count(mu, u) == 1);
    auto st = filling_stats(f);
    CHECK(st.maj == 3);
    CHECK(st.abs_inv == 21);
    CHECK(st.inv == 14);
    CHECK(st.coinv == 1);
    CHECK(f.x_exponents() == std::vector<int>{2, 1, 1, 1, 0, 1});
}

TEST_CASE("empty shape") {
    Composition mu{0, 0, 0};
    auto fs = nonattacking_fillings(mu, 3);
    REQUIRE(fs.size() == 1);
    auto st = filling_stats(fs[0]);
    CHECK(st.maj == 0);
    CHECK(st.coinv == 0);
    CHECK(st.inv == 0);
    // |Inv| counts the augmented-row pairs, which read right to left
    CHECK(st.abs_inv == 3);
}

TEST_CASE("partition row 1 is forced") {
    for (Partition lam : {Partition{3, 1}, Partition{2, 2, 1}, Partition{4}}) {
        Composition mu = lam;
        auto fs = nonattacking_fillings(mu, static_cast<int>(mu.size()) + 2);
        CHECK(!fs.empty());
        for (const auto& f : fs)
            for (int i = 1; i <= static_cast<int>(lam.size()); ++i) CHECK(f.label(i, 1) == i);
    }
}

namespace {

bool nonattacking_brute(const Filling& f) {
    std::vector<Box> aug = f.boxes();
    for (int i = 1; i <= static_cast<int>(f.shape.size()); ++i) aug.push_back({i, 0});
    for (std::size_t a = 0; a < aug.size(); ++a)
        for (std::size_t b = a + 1; b < aug.size(); ++b)
            if (attacks(aug[a], aug[b]) &&
                f.label(aug[a].i, aug[a].j) == f.label(aug[b].i, aug[b].j))
                return false;
    return true;
}

long brute_count(Composition shape, int n_labels) {
    shape.resize(n_labels, 0);
    Filling f;
    f.shape = shape;
    f.n_labels = n_labels;
    f.labels.resize(shape.size());
    for (std::size_t i = 0; i < shape.size(); ++i) f.labels[i].assign(shape[i], 1);
    auto bxs = f.boxes();
    long count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t p) {
        if (p == bxs.size()) {
            if (nonattacking_brute(f)) ++count;
            return;
        }
        for (int lab = 1; lab <= n_labels; ++lab) {
            f.labels[bxs[p].i - 1][bxs[p].j - 1] = lab;
            rec(p + 1);
        }
    };
    rec(0);
    return count;
}

}  // namespace

TEST_CASE("enumeration equals brute force") {
    for (auto& [shape, n] : std::vector<std::pair<Composition, int>>{
             {{2, 1}, 2}, {{2, 1}, 3}, {{0, 2, 1}, 3}, {{1, 0, 2, 1}, 4},
             {{3, 2}, 3}, {{2, 2, 2}, 4}}) {
        auto fs = nonattacking_fillings(shape, n);
        std::set<std::vector<std::vector<int>>> seen;
        for (const auto& f : fs) {
            CHECK(nonattacking_brute(f));
            CHECK(seen.insert(f.labels).second);  // exactly once
        }
        CHECK(static_cast<long>(fs.size()) == brute_count(shape, n));
    }
}

TEST_CASE("regression count for a mixed shape") {
    auto fs = nonattacking_fillings({3, 2, 0, 1, 0, 0}, 6);
    static long frozen = -1;
    long cnt = static_cast<long>(fs.size());
    CHECK(cnt > 0);
    // frozen regression value, computed once by brute force below on first run
    // (shape has 6 boxes; brute force 6^6 checks)
    CHECK(cnt == brute_count({3, 2, 0, 1, 0, 0}, 6));
    (void)frozen;
}

TEST_CASE("tail constraint enumeration") {
    // fillings of mu*0^l with labels n+i used exactly nu_i times
    Composition mu{2, 1};
    Partition nu{2, 1};
    Composition shape = mu;
    shape.insert(shape.end(), nu.size(), 0);
    TailConstraint tc{static_cast<int>(mu.size()), nu};
    auto fs = nonattacking_fillings(shape, static_cast<int>(mu.size() + nu.size()), tc);
    auto all = nonattacking_fillings(shape, static_cast<int>(mu.size() + nu.size()));
    long matching = 0;
    for (const auto& f : all) {
        auto e = f.x_exponents();
        bool ok = true;
        for (std::size_t i = 0; i < nu.size(); ++i)
            if (e[mu.size() + i] != nu[i]) ok = false;
        if (ok) ++matching;
    }
    CHECK(static_cast<long>(fs.size()) == matching);
    for (const auto& f : fs) {
        auto e = f.x_exponents();
        for (std::size_t i = 0; i < nu.size(); ++i) CHECK(e[mu.size() + i] == nu[i]);
    }
}

TEST_CASE("statistic dependence under zero-padding") {
    std::mt19937 rng(17);
    std::vector<Composition> shapes{{2, 1}, {1, 2}, {3, 0, 1}, {2, 2}};
    for (const auto& mu : shapes) {
        int n = static_cast<int>(mu.size());
        int nonzero = 0;
        for (int x : mu)
            if (x != 0) ++nonzero;
        for (int k = 0; k <= 2; ++k) {
            Composition muk = mu;
            muk.insert(muk.end(), k, 0);
            auto fills = nonattacking_fillings(muk, n + k);
            std::shuffle(fills.begin(), fills.end(), rng);
            fills.resize(std::min<std::size_t>(fills.size(), 5));
            for (const auto& f : fills) {
                auto st = filling_stats(f);
                for (int m = k; m <= k + 3; ++m) {
                    Filling fm;
                    fm.shape = mu;
                    fm.shape.insert(fm.shape.end(), m, 0);
                    fm.n_labels = n + m;
                    fm.labels = f.labels;
                    fm.labels.resize(n + m);
                    auto stm = filling_stats(fm);
                    CHECK(stm.maj == st.maj);
                    CHECK(stm.coinv == st.coinv);
                    CHECK(stm.inv == st.inv + nonzero * (m - k));
                    CHECK(stm.abs_inv ==
                          st.abs_inv + (n + k) * (m - k) + (m - k) * (m - k - 1) / 2);
                }
            }
        }
    }
}
