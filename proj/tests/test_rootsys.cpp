#include "obdim/rootsys.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <vector>

using namespace obdim;

namespace {

using Vec = std::vector<int>;

// Orthonormal-coordinate oracle, independent of the library's Cartan path.
struct Ortho {
    std::vector<Vec> simple;
    std::vector<Vec> roots;  // all roots, both signs
};

Vec e(int dim, int i, int v = 1) {
    Vec x(static_cast<std::size_t>(dim), 0);
    x[static_cast<std::size_t>(i)] = v;
    return x;
}

Vec plus(Vec a, const Vec& b, int s = 1) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
    return a;
}

Ortho classical(char fam, int n) {
    Ortho o;
    const int dim = fam == 'A' ? n + 1 : n;
    if (fam == 'A') {
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j)
                if (i != j) o.roots.push_back(plus(e(dim, i), e(dim, j), -1));
        for (int i = 0; i < n; ++i) o.simple.push_back(plus(e(dim, i), e(dim, i + 1), -1));
        return o;
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int a : {1, -1})
                for (int b : {1, -1}) o.roots.push_back(plus(e(dim, i, a), e(dim, j, b)));
    for (int i = 0; i < n; ++i)
        for (int a : {1, -1}) {
            if (fam == 'B' || fam == 'X') o.roots.push_back(e(dim, i, a));
            if (fam == 'C' || fam == 'X') o.roots.push_back(e(dim, i, 2 * a));
        }
    for (int i = 0; i + 1 < n; ++i) o.simple.push_back(plus(e(dim, i), e(dim, i + 1), -1));
    if (fam == 'B' || fam == 'X') o.simple.push_back(e(dim, n - 1));
    if (fam == 'C') o.simple.push_back(e(dim, n - 1, 2));
    if (fam == 'D') o.simple.push_back(plus(e(dim, n - 2), e(dim, n - 1)));
    return o;
}

// E8 in doubled coordinates (all entries even or all odd).
Ortho e8_doubled() {
    Ortho o;
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
            for (int a : {2, -2})
                for (int b : {2, -2}) o.roots.push_back(plus(e(8, i, a), e(8, j, b)));
    for (int mask = 0; mask < 256; ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) % 2) continue;
        Vec v(8);
        for (int i = 0; i < 8; ++i) v[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? -1 : 1;
        o.roots.push_back(v);
    }
    o.simple.push_back({1, -1, -1, -1, -1, -1, -1, 1});
    o.simple.push_back(plus(e(8, 0, 2), e(8, 1, 2)));
    for (int i = 0; i < 6; ++i) o.simple.push_back(plus(e(8, i + 1, 2), e(8, i, 2), -1));
    return o;
}

Ortho f4_doubled() {
    Ortho o;
    for (int i = 0; i < 4; ++i) {
        o.roots.push_back(e(4, i, 2));
        o.roots.push_back(e(4, i, -2));
        for (int j = i + 1; j < 4; ++j)
            for (int a : {2, -2})
                for (int b : {2, -2}) o.roots.push_back(plus(e(4, i, a), e(4, j, b)));
    }
    for (int mask = 0; mask < 16; ++mask) {
        Vec v(4);
        for (int i = 0; i < 4; ++i) v[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? -1 : 1;
        o.roots.push_back(v);
    }
    o.simple = {{0, 2, -2, 0}, {0, 0, 2, -2}, {0, 0, 0, 2}, {1, -1, -1, -1}};
    return o;
}

Ortho g2() {
    Ortho o;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            o.roots.push_back(plus(e(3, i), e(3, j), -1));
            const int k = 3 - i - j;
            Vec l = e(3, i, 2);
            l[static_cast<std::size_t>(j)] = -1;
            l[static_cast<std::size_t>(k)] = -1;
            if (j < k) {
                o.roots.push_back(l);
                o.roots.push_back(plus(Vec(3, 0), l, -1));
            }
        }
    o.simple = {{1, -1, 0}, {-2, 1, 1}};
    return o;
}

// Coordinates over the simple roots by floating least squares, rounded and
// then verified exactly in integers.
Vec coordinates(const std::vector<Vec>& simple, const Vec& v) {
    const std::size_t r = simple.size(), d = v.size();
    std::vector<std::vector<double>> g(r, std::vector<double>(r + 1, 0.0));
    for (std::size_t a = 0; a < r; ++a) {
        for (std::size_t b = 0; b < r; ++b)
            for (std::size_t k = 0; k < d; ++k) g[a][b] += simple[a][k] * simple[b][k];
        for (std::size_t k = 0; k < d; ++k) g[a][r] += simple[a][k] * v[k];
    }
    for (std::size_t c = 0; c < r; ++c) {
        std::size_t p = c;
        for (std::size_t i = c + 1; i < r; ++i)
            if (std::fabs(g[i][c]) > std::fabs(g[p][c])) p = i;
        std::swap(g[p], g[c]);
        for (std::size_t i = 0; i < r; ++i) {
            if (i == c) continue;
            const double f = g[i][c] / g[c][c];
            for (std::size_t j = c; j <= r; ++j) g[i][j] -= f * g[c][j];
        }
    }
    Vec out(r);
    for (std::size_t i = 0; i < r; ++i) out[i] = static_cast<int>(std::lround(g[i][r] / g[i][i]));
    Vec back(d, 0);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < d; ++k) back[k] += out[i] * simple[i][k];
    EXPECT_EQ(back, v) << "root is not an integral combination of simple roots";
    return out;
}

std::set<Vec> oracle_positives(const Ortho& o) {
    std::set<Vec> pos;
    for (const auto& root : o.roots) {
        const Vec c = coordinates(o.simple, root);
        bool nonneg = true, nonpos = true;
        for (int x : c) {
            nonneg = nonneg && x >= 0;
            nonpos = nonpos && x <= 0;
        }
        EXPECT_TRUE(nonneg || nonpos);
        if (nonneg) pos.insert(c);
    }
    return pos;
}

std::set<Vec> positives_of(const RootSystem& rs) { return {rs.positive().begin(), rs.positive().end()}; }

int classical_count(Family f, int n) {
    switch (f) {
        case Family::A: return n * (n + 1) / 2;
        case Family::B:
        case Family::C: return n * n;
        case Family::D: return n * (n - 1);
        case Family::BC: return n * n + n;
        case Family::E6: return 36;
        case Family::E7: return 63;
        case Family::E8: return 120;
        case Family::F4: return 24;
        case Family::G2: return 6;
    }
    return -1;
}

std::vector<RootSystemType> all_types() {
    std::vector<RootSystemType> t;
    for (int n = 1; n <= 8; ++n) t.push_back({Family::A, n});
    for (int n = 2; n <= 8; ++n) t.push_back({Family::B, n});
    for (int n = 2; n <= 8; ++n) t.push_back({Family::C, n});
    for (int n = 4; n <= 8; ++n) t.push_back({Family::D, n});
    t.push_back({Family::E6, 6});
    t.push_back({Family::E7, 7});
    t.push_back({Family::E8, 8});
    t.push_back({Family::F4, 4});
    t.push_back({Family::G2, 2});
    for (int n = 1; n <= 8; ++n) t.push_back({Family::BC, n});
    return t;
}

}  // namespace

TEST(RootSys, ClassicalMatchesOrthonormalOracle) {
    for (int n = 1; n <= 8; ++n)
        EXPECT_EQ(positives_of(build_root_system({Family::A, n})), oracle_positives(classical('A', n))) << "A" << n;
    for (int n = 2; n <= 8; ++n) {
        EXPECT_EQ(positives_of(build_root_system({Family::B, n})), oracle_positives(classical('B', n))) << "B" << n;
        EXPECT_EQ(positives_of(build_root_system({Family::C, n})), oracle_positives(classical('C', n))) << "C" << n;
    }
    for (int n = 4; n <= 8; ++n)
        EXPECT_EQ(positives_of(build_root_system({Family::D, n})), oracle_positives(classical('D', n))) << "D" << n;
    for (int n = 1; n <= 8; ++n)
        EXPECT_EQ(positives_of(build_root_system({Family::BC, n})), oracle_positives(classical('X', n))) << "BC" << n;
}

TEST(RootSys, ExceptionalMatchesOrthonormalOracle) {
    const auto e8 = oracle_positives(e8_doubled());
    EXPECT_EQ(e8.size(), 120u);
    EXPECT_EQ(positives_of(build_root_system({Family::E8, 8})), e8);
    // E6 and E7: E8 roots supported on the first 6 / 7 nodes.
    for (int r : {6, 7}) {
        std::set<Vec> sub;
        for (const auto& v : e8) {
            bool inside = true;
            for (int k = r; k < 8; ++k) inside = inside && v[static_cast<std::size_t>(k)] == 0;
            if (inside) sub.insert(Vec(v.begin(), v.begin() + r));
        }
        const auto fam = r == 6 ? Family::E6 : Family::E7;
        EXPECT_EQ(positives_of(build_root_system({fam, r})), sub) << "E" << r;
    }
    EXPECT_EQ(positives_of(build_root_system({Family::F4, 4})), oracle_positives(f4_doubled()));
    EXPECT_EQ(positives_of(build_root_system({Family::G2, 2})), oracle_positives(g2()));
}

TEST(RootSys, CountsAndNegationClosure) {
    for (const auto& t : all_types()) {
        const auto rs = build_root_system(t);
        EXPECT_EQ(static_cast<int>(rs.positive().size()), classical_count(t.family, t.rank)) << to_string(t);
        for (const auto& r : rs.roots()) {
            EXPECT_TRUE(rs.contains(negate(r)));
            bool nonneg = true, nonpos = true;
            for (int c : r) {
                nonneg = nonneg && c >= 0;
                nonpos = nonpos && c <= 0;
            }
            EXPECT_TRUE(nonneg || nonpos);
        }
        for (int m : rs.multiplicities()) EXPECT_EQ(m, 1);
    }
}

TEST(RootSys, HighestRootsMatchTableAndBruteForce) {
    struct Row {
        RootSystemType t;
        Vec theta;
    };
    const std::vector<Row> table = {
        {{Family::A, 4}, {1, 1, 1, 1}},
        {{Family::B, 4}, {1, 2, 2, 2}},
        {{Family::C, 4}, {2, 2, 2, 1}},
        {{Family::D, 6}, {1, 2, 2, 2, 1, 1}},
        {{Family::E6, 6}, {1, 2, 2, 3, 2, 1}},
        {{Family::E7, 7}, {2, 2, 3, 4, 3, 2, 1}},
        {{Family::E8, 8}, {2, 3, 4, 6, 5, 4, 3, 2}},
        {{Family::F4, 4}, {2, 3, 4, 2}},
        {{Family::G2, 2}, {3, 2}},
        {{Family::BC, 3}, {2, 2, 2}},
    };
    for (const auto& row : table) {
        const auto rs = build_root_system(row.t);
        EXPECT_EQ(highest_root(rs), row.theta) << to_string(row.t);
        int best = -1, ties = 0;
        Vec arg;
        for (const auto& r : rs.positive()) {
            const int h = height(r);
            if (h > best) {
                best = h;
                ties = 1;
                arg = r;
            } else if (h == best) {
                ++ties;
            }
        }
        EXPECT_EQ(ties, 1);
        EXPECT_EQ(arg, row.theta);
    }
}

TEST(RootSys, SmallRankExamples) {
    const auto bc1 = build_root_system({Family::BC, 1});
    const auto bc1_roots = bc1.roots();
    std::set<Vec> all(bc1_roots.begin(), bc1_roots.end());
    EXPECT_EQ(all, (std::set<Vec>{{-2}, {-1}, {1}, {2}}));

    const auto a2 = build_root_system({Family::A, 2});
    EXPECT_EQ(a2.size(), 6u);
    EXPECT_EQ(positives_of(a2), (std::set<Vec>{{1, 0}, {0, 1}, {1, 1}}));

    // C_2 in orthonormal terms: y1-y2 = a1, 2y2 = a2, y1+y2 = a1+a2, 2y1 = 2a1+a2.
    EXPECT_EQ(positives_of(build_root_system({Family::C, 2})), (std::set<Vec>{{1, 0}, {0, 1}, {1, 1}, {2, 1}}));
}

TEST(RootSys, Hat) {
    const auto a3 = build_root_system({Family::A, 3});
    for (int i = 0; i < 3; ++i) EXPECT_EQ(hat(a3, i), a3.simple(i));
    const auto bc3 = build_root_system({Family::BC, 3});
    EXPECT_EQ(hat(bc3, 2), (Vec{0, 0, 2}));
    EXPECT_EQ(hat(bc3, 0), (Vec{1, 0, 0}));
    EXPECT_EQ(hat(build_root_system({Family::BC, 1}), 0), (Vec{2}));
    EXPECT_THROW(hat(a3, Vec{1, 1, 0}), NotSimpleRoot);
    EXPECT_THROW(hat(a3, 5), NotSimpleRoot);
}

TEST(RootSys, IsElement) {
    const auto a2 = build_root_system({Family::A, 2});
    EXPECT_TRUE(is_element(a2, {0, 0}));
    EXPECT_TRUE(is_element(a2, {1, 1}));
    EXPECT_TRUE(is_element(a2, {-1, -1}));
    EXPECT_FALSE(is_element(a2, {2, 0}));
    EXPECT_FALSE(is_element(a2, {1, -1}));
    EXPECT_FALSE(is_element(a2, {1, 1, 0}));
}

TEST(RootSys, PhiIPlusPartitionAndClosure) {
    for (const auto& t : all_types()) {
        const auto rs = build_root_system(t);
        std::multiset<Vec> seen;
        int total = 0;
        for (int i = 1; i <= rs.rank(); ++i) {
            const auto part = phi_i_plus(rs, i);
            EXPECT_TRUE(closed_under_addition(rs, part)) << to_string(t) << " i=" << i;
            seen.insert(part.begin(), part.end());
            total += dim_n_i(rs, i);
        }
        EXPECT_EQ(seen, (std::multiset<Vec>(rs.positive().begin(), rs.positive().end()))) << to_string(t);
        EXPECT_EQ(total, dim_positive(rs));
    }
    const auto a2 = build_root_system({Family::A, 2});
    EXPECT_EQ(phi_i_plus(a2, 1), (std::vector<Vec>{{1, 0}}));
    const auto p2 = phi_i_plus(a2, 2);
    EXPECT_EQ(std::set<Vec>(p2.begin(), p2.end()), (std::set<Vec>{{0, 1}, {1, 1}}));
}

TEST(RootSys, PhiNOfCnIsLongAndMixedSums) {
    // Roots of shape y_i + y_j and 2 y_i, i.e. those with a_n coefficient 1 or
    // more; in Delta coordinates exactly the roots involving a_n.
    for (int n = 2; n <= 6; ++n) {
        const auto rs = build_root_system({Family::C, n});
        const auto part = phi_i_plus(rs, n);
        EXPECT_EQ(static_cast<int>(part.size()), n * (n + 1) / 2);
        EXPECT_EQ(dim_n_i(rs, n), n * (n + 1) / 2);
        for (int i = 1; i < n; ++i) EXPECT_EQ(dim_n_i(rs, i), i);
    }
}

TEST(RootSys, DimNiForSLn) {
    for (int n = 2; n <= 9; ++n) {
        const auto rs = build_root_system({Family::A, n - 1});
        for (int i = 1; i < n; ++i) EXPECT_EQ(dim_n_i(rs, i), i);
    }
}

TEST(RootSys, SOMultiplicities) {
    for (int q = 1; q <= 6; ++q)
        for (int n = 2 * q; n <= 14; ++n) {
            if (n == 2) continue;
            const auto rs = build_so_root_system(n, q);
            EXPECT_EQ(dim_n_i(rs, q), q * (q - 1) / 2 + q * (n - 2 * q)) << n << "," << q;
            EXPECT_EQ(dim_positive(rs), q * (q - 1) + q * (n - 2 * q));
            for (int i = 1; i < q; ++i) EXPECT_EQ(dim_n_i(rs, i), i);
        }
    EXPECT_THROW(build_so_root_system(2, 1), InvalidRank);
    EXPECT_THROW(build_so_root_system(5, 3), InvalidRank);
}

TEST(RootSys, RankValidation) {
    EXPECT_THROW(build_root_system({Family::A, 0}), InvalidRank);
    EXPECT_THROW(build_root_system({Family::C, 1}), InvalidRank);
    EXPECT_THROW(build_root_system({Family::D, 3}), InvalidRank);
    EXPECT_THROW(build_root_system({Family::E8, 7}), InvalidRank);
    EXPECT_THROW(build_root_system({Family::BC, 0}), InvalidRank);
    EXPECT_TRUE(build_root_system({Family::B, 2}).nonstandard());
    EXPECT_FALSE(build_root_system({Family::B, 3}).nonstandard());
    EXPECT_EQ(parse_type("E8").family, Family::E8);
    EXPECT_EQ(parse_type("BC3").rank, 3);
    EXPECT_THROW(parse_type("Q4"), InvalidRank);
}

TEST(RootSys, ReducibleIsBlockDiagonal) {
    const auto rs = build_root_system(std::vector<RootSystemType>{{Family::A, 2}, {Family::G2, 2}});
    EXPECT_EQ(rs.rank(), 4);
    EXPECT_EQ(rs.positive().size(), 9u);
    EXPECT_EQ(rs.components().size(), 2u);
    EXPECT_FALSE(rs.contains({1, 0, 1, 0}));
    EXPECT_TRUE(rs.contains({0, 0, 3, 2}));
}

TEST(RootSys, MultiplicityOverride) {
    const auto rs = build_root_system({Family::B, 3});
    const auto heavy = rs.with_multiplicity({0, 0, 1}, 4);
    EXPECT_EQ(heavy.multiplicity({0, 0, -1}), 4);
    EXPECT_EQ(rs.multiplicity({0, 0, 1}), 1);
    EXPECT_THROW(rs.with_multiplicity({2, 0, 0}, 2), Error);
}
