#pragma once

#include "obdim/errors.hpp"
#include "obdim/rational.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace obdim {

/// Off-diagonal matrix position (1-based); a vertex of the cuspidal complex,
/// read as the arrow row -> col.
struct Position {
    int row = 0;
    int col = 0;
    auto operator<=>(const Position&) const = default;
};

/// A vertex of a signed double: the underlying vertex with sign +1 or -1.
template <class V>
struct Signed {
    V vertex{};
    int sign = 1;
    auto operator<=>(const Signed&) const = default;
};

inline std::string label(const std::string& s) { return s; }
inline std::string label(const Position& p) { return std::to_string(p.row) + "," + std::to_string(p.col); }
template <class V>
std::string label(const Signed<V>& v) {
    return label(v.vertex) + (v.sign > 0 ? "+" : "-");
}

using Simplex = std::vector<int>;

/// Finite simplicial complex stored by its vertex list and maximal simplices
/// (sorted vertex index vectors).  Faces are implied.
template <class V>
class SimplicialComplex {
public:
    using vertex_type = V;

    SimplicialComplex() = default;

    /// With normalize set, duplicates and non-maximal simplices are dropped
    /// (quadratic); builders that already produce maximal sets skip it.
    SimplicialComplex(std::vector<V> vertices, std::vector<Simplex> simplices, bool normalize = true)
        : vertices_(std::move(vertices)), maximal_(std::move(simplices)) {
        for (auto& s : maximal_) {
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
            for (int v : s)
                if (v < 0 || static_cast<std::size_t>(v) >= vertices_.size())
                    throw BadSimplex("simplex refers to a vertex outside the complex");
        }
        if (normalize) reduce();
        std::sort(maximal_.begin(), maximal_.end());
    }

    const std::vector<V>& vertices() const { return vertices_; }
    const std::vector<Simplex>& maximal() const { return maximal_; }
    std::size_t vertex_count() const { return vertices_.size(); }

    int dimension() const {
        int d = -1;
        for (const auto& s : maximal_) d = std::max(d, static_cast<int>(s.size()) - 1);
        return d;
    }

    std::optional<int> index_of(const V& v) const {
        auto it = std::find(vertices_.begin(), vertices_.end(), v);
        if (it == vertices_.end()) return std::nullopt;
        return static_cast<int>(it - vertices_.begin());
    }

    /// True if the given (not necessarily sorted) index set is a face.
    bool contains(Simplex s) const {
        std::sort(s.begin(), s.end());
        return std::any_of(maximal_.begin(), maximal_.end(),
                           [&](const Simplex& m) { return std::includes(m.begin(), m.end(), s.begin(), s.end()); });
    }

    /// All nonempty faces grouped by dimension.  Exponential in the largest
    /// simplex, so only for small complexes.
    std::vector<std::vector<Simplex>> faces() const {
        std::vector<std::set<Simplex>> by_dim(static_cast<std::size_t>(std::max(dimension() + 1, 0)));
        for (const auto& m : maximal_) {
            const std::size_t k = m.size();
            if (k > 24) throw Error("faces: simplex too large to enumerate");
            for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
                Simplex f;
                for (std::size_t b = 0; b < k; ++b)
                    if (mask & (1u << b)) f.push_back(m[b]);
                by_dim[f.size() - 1].insert(std::move(f));
            }
        }
        std::vector<std::vector<Simplex>> out;
        for (auto& s : by_dim) out.emplace_back(s.begin(), s.end());
        return out;
    }

    std::vector<std::size_t> f_vector() const {
        std::vector<std::size_t> f;
        for (const auto& layer : faces()) f.push_back(layer.size());
        return f;
    }

    /// Maximal simplices as sorted label sets, for comparing complexes whose
    /// vertices are listed in different orders.
    std::set<std::vector<std::string>> canonical() const {
        std::set<std::vector<std::string>> out;
        for (const auto& s : maximal_) {
            std::vector<std::string> names;
            for (int v : s) names.push_back(label(vertices_[static_cast<std::size_t>(v)]));
            std::sort(names.begin(), names.end());
            out.insert(std::move(names));
        }
        return out;
    }

private:
    void reduce() {
        std::sort(maximal_.begin(), maximal_.end(),
                  [](const Simplex& a, const Simplex& b) { return a.size() != b.size() ? a.size() > b.size() : a < b; });
        maximal_.erase(std::unique(maximal_.begin(), maximal_.end()), maximal_.end());
        std::vector<Simplex> kept;
        for (auto& s : maximal_) {
            bool covered = std::any_of(kept.begin(), kept.end(), [&](const Simplex& m) {
                return std::includes(m.begin(), m.end(), s.begin(), s.end());
            });
            if (!covered) kept.push_back(std::move(s));
        }
        maximal_ = std::move(kept);
    }

    std::vector<V> vertices_;
    std::vector<Simplex> maximal_;
};

/// Join of two complexes with disjoint vertex labels: vertices of x come
/// first, simplices are unions of a simplex of x and one of y.
template <class V>
SimplicialComplex<V> join(const SimplicialComplex<V>& x, const SimplicialComplex<V>& y) {
    std::vector<V> verts = x.vertices();
    for (const auto& v : y.vertices()) {
        if (std::find(x.vertices().begin(), x.vertices().end(), v) != x.vertices().end())
            throw BadVertex("join: vertex " + label(v) + " occurs in both complexes");
        verts.push_back(v);
    }
    const int shift = static_cast<int>(x.vertex_count());
    std::vector<Simplex> out;
    if (x.maximal().empty() || y.maximal().empty()) {
        for (const auto& s : x.maximal()) out.push_back(s);
        for (const auto& t : y.maximal()) {
            Simplex u;
            for (int v : t) u.push_back(v + shift);
            out.push_back(std::move(u));
        }
        return SimplicialComplex<V>(std::move(verts), std::move(out), false);
    }
    out.reserve(x.maximal().size() * y.maximal().size());
    for (const auto& s : x.maximal())
        for (const auto& t : y.maximal()) {
            Simplex u = s;
            for (int v : t) u.push_back(v + shift);
            out.push_back(std::move(u));
        }
    return SimplicialComplex<V>(std::move(verts), std::move(out), false);
}

/// Signed double: each vertex doubled with a sign; a set is a simplex iff
/// forgetting signs is injective and lands on a simplex.
template <class V>
SimplicialComplex<Signed<V>> build_SC(const SimplicialComplex<V>& c) {
    std::vector<Signed<V>> verts;
    for (const auto& v : c.vertices()) {
        verts.push_back({v, +1});
        verts.push_back({v, -1});
    }
    std::vector<Simplex> out;
    for (const auto& s : c.maximal()) {
        const std::size_t k = s.size();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
            Simplex lift;
            for (std::size_t b = 0; b < k; ++b) lift.push_back(2 * s[b] + ((mask >> b) & 1 ? 1 : 0));
            out.push_back(std::move(lift));
        }
    }
    return SimplicialComplex<Signed<V>>(std::move(verts), std::move(out), false);
}

namespace detail {

// Rank of a sparse matrix over Q; rows are column->value maps.
inline std::size_t rational_rank(std::vector<std::map<int, Rational>> rows) {
    std::size_t rank = 0;
    std::map<int, std::map<int, Rational>> pivots;  // pivot column -> reduced row
    for (auto& row : rows) {
        while (!row.empty()) {
            auto lead = row.begin();
            auto p = pivots.find(lead->first);
            if (p == pivots.end()) {
                pivots.emplace(lead->first, std::move(row));
                ++rank;
                break;
            }
            const Rational f = lead->second / p->second.begin()->second;
            for (const auto& [col, val] : p->second) {
                Rational& x = row[col];
                x -= f * val;
                if (x == 0) row.erase(col);
            }
        }
    }
    return rank;
}

}  // namespace detail

/// Rational betti numbers b_0..b_dim by exact boundary-matrix ranks.
template <class V>
std::vector<long> homology(const SimplicialComplex<V>& x) {
    const auto faces = x.faces();
    const std::size_t top = faces.size();
    std::vector<std::size_t> rank(top + 1, 0);  // rank[k] = rank of boundary C_k -> C_{k-1}
    for (std::size_t k = 1; k < top; ++k) {
        std::map<Simplex, int> index;
        for (std::size_t i = 0; i < faces[k - 1].size(); ++i) index.emplace(faces[k - 1][i], static_cast<int>(i));
        std::vector<std::map<int, Rational>> rows;
        rows.reserve(faces[k].size());
        for (const auto& s : faces[k]) {
            std::map<int, Rational> row;
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                Simplex f;
                for (std::size_t j = 0; j < s.size(); ++j)
                    if (j != drop) f.push_back(s[j]);
                row[index.at(f)] = (drop % 2 == 0) ? 1 : -1;
            }
            rows.push_back(std::move(row));
        }
        rank[k] = detail::rational_rank(std::move(rows));
    }
    std::vector<long> betti;
    for (std::size_t k = 0; k < top; ++k)
        betti.push_back(static_cast<long>(faces[k].size()) - static_cast<long>(rank[k]) -
                        static_cast<long>(rank[k + 1]));
    return betti;
}

/// Reduced Euler characteristic -1 + f_0 - f_1 + ...
inline long reduced_euler(const std::vector<std::size_t>& f) {
    long chi = -1;
    for (std::size_t k = 0; k < f.size(); ++k) chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(f[k]);
    return chi;
}

template <class V>
long reduced_euler(const SimplicialComplex<V>& x) {
    return reduced_euler(x.f_vector());
}

// ---------------------------------------------------------------------------
// Cuspidal complex C(n) and its signed double

/// An arrow set on {1..n} is acyclic (as a digraph).  Kahn's algorithm.
inline bool is_acyclic(int n, const std::vector<Position>& arrows) {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n + 1));
    std::vector<int> indeg(static_cast<std::size_t>(n + 1), 0);
    for (const auto& a : arrows) {
        if (a.row < 1 || a.row > n || a.col < 1 || a.col > n || a.row == a.col) return false;
        out[static_cast<std::size_t>(a.row)].push_back(a.col);
        ++indeg[static_cast<std::size_t>(a.col)];
    }
    std::vector<int> ready;
    for (int v = 1; v <= n; ++v)
        if (indeg[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
    int seen = 0;
    while (!ready.empty()) {
        int v = ready.back();
        ready.pop_back();
        ++seen;
        for (int w : out[static_cast<std::size_t>(v)])
            if (--indeg[static_cast<std::size_t>(w)] == 0) ready.push_back(w);
    }
    return seen == n;
}

inline std::vector<Position> off_diagonal_positions(int n) {
    std::vector<Position> v;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) v.push_back({i, j});
    return v;
}

/// C(n): vertices are off-diagonal positions; a set is a simplex iff its
/// arrows form an acyclic digraph.  The maximal simplices are the n!
/// transitive tournaments, i.e. strictly upper triangular positions after a
/// simultaneous permutation of rows and columns.
inline SimplicialComplex<Position> build_C(int n) {
    if (n < 2) throw InvalidRank("build_C needs n >= 2");
    auto verts = off_diagonal_positions(n);
    auto idx = [&](int i, int j) { return (i - 1) * (n - 1) + (j < i ? j - 1 : j - 2); };
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<Simplex> out;
    do {
        Simplex s;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) s.push_back(idx(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]));
        out.push_back(std::move(s));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return SimplicialComplex<Position>(std::move(verts), std::move(out), false);
}

/// Membership in SC(C(n)) without materializing it.
inline bool sc_contains(int n, const std::vector<Signed<Position>>& simplex) {
    std::vector<Position> arrows;
    for (const auto& v : simplex) {
        if (v.sign != 1 && v.sign != -1) return false;
        arrows.push_back(v.vertex);
    }
    std::sort(arrows.begin(), arrows.end());
    if (std::adjacent_find(arrows.begin(), arrows.end()) != arrows.end()) return false;
    return is_acyclic(n, arrows);
}

/// The full subcomplex of SC(C(n)) spanned by the 2(k+1) lifts of a
/// k-simplex of C(n), found by testing every vertex subset against SC.
inline SimplicialComplex<Signed<Position>> sc_preimage(int n, const std::vector<Position>& simplex) {
    if (!is_acyclic(n, simplex)) throw BadSimplex("sc_preimage: not a simplex of C(n)");
    std::vector<Signed<Position>> verts;
    for (const auto& p : simplex) {
        verts.push_back({p, +1});
        verts.push_back({p, -1});
    }
    const std::size_t m = verts.size();
    if (m > 20) throw Error("sc_preimage: simplex too large");
    std::vector<Simplex> found;
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        std::vector<Signed<Position>> cand;
        Simplex s;
        for (std::size_t b = 0; b < m; ++b)
            if (mask & (1u << b)) {
                cand.push_back(verts[b]);
                s.push_back(static_cast<int>(b));
            }
        if (sc_contains(n, cand)) found.push_back(std::move(s));
    }
    return SimplicialComplex<Signed<Position>>(std::move(verts), std::move(found), true);
}

// ---------------------------------------------------------------------------
// Obstructor complexes

/// Join S^a * S^{k_1}_+ * ... * S^{k_r}_+ where S^k_+ is a k-sphere plus a
/// disjoint point; the plain sphere factor is optional.
struct ObstructorShape {
    std::optional<int> sphere_dim;
    std::vector<int> plus_dims;

    bool operator==(const ObstructorShape&) const = default;

    std::string str() const {
        std::string out;
        if (sphere_dim) out = "S^" + std::to_string(*sphere_dim);
        for (int k : plus_dims) out += (out.empty() ? "" : "*") + std::string("S^") + std::to_string(k) + "_+";
        return out.empty() ? "(empty)" : out;
    }
};

/// m for which the join is an m-obstructor complex.
inline int obstructor_m(const ObstructorShape& shape) {
    const int r = static_cast<int>(shape.plus_dims.size());
    const int sum = std::accumulate(shape.plus_dims.begin(), shape.plus_dims.end(), 0);
    if (shape.sphere_dim) return *shape.sphere_dim + sum + 2 * r - 1;
    return sum + 2 * r - 2;
}

/// Octahedral k-sphere: join of k+1 zero-spheres, vertices "<tag>x<i><sign>".
inline SimplicialComplex<std::string> octahedral_sphere(int k, const std::string& tag = "") {
    if (k < 0) throw InvalidRank("sphere dimension must be nonnegative");
    SimplicialComplex<std::string> acc;
    for (int i = 0; i <= k; ++i) {
        SimplicialComplex<std::string> s0({tag + "x" + std::to_string(i) + "+", tag + "x" + std::to_string(i) + "-"},
                                          {{0}, {1}}, false);
        acc = (i == 0) ? s0 : join(acc, s0);
    }
    return acc;
}

/// S^k_+: octahedral k-sphere with a disjoint vertex "<tag>p".
inline SimplicialComplex<std::string> sphere_plus_point(int k, const std::string& tag = "") {
    auto s = octahedral_sphere(k, tag);
    auto verts = s.vertices();
    auto simplices = s.maximal();
    verts.push_back(tag + "p");
    simplices.push_back({static_cast<int>(verts.size()) - 1});
    return SimplicialComplex<std::string>(std::move(verts), std::move(simplices), false);
}

/// Iterated join realizing a shape; factor j is tagged "f<j>:".
inline SimplicialComplex<std::string> realize(const ObstructorShape& shape) {
    SimplicialComplex<std::string> acc;
    bool first = true;
    int j = 0;
    auto add = [&](SimplicialComplex<std::string> f) {
        acc = first ? std::move(f) : join(acc, f);
        first = false;
    };
    if (shape.sphere_dim) add(octahedral_sphere(*shape.sphere_dim, "f" + std::to_string(j++) + ":"));
    for (int k : shape.plus_dims) add(sphere_plus_point(k, "f" + std::to_string(j++) + ":"));
    return acc;
}

/// One join factor of L(n): the lifts of <1k, 2k, ..., (k-1)k> together with
/// the extra vertex (k, k-1)+.
struct LFactor {
    int k = 0;
    std::vector<int> sphere_vertices;
    int point_vertex = -1;
};

struct LComplex {
    int n = 0;
    SimplicialComplex<Signed<Position>> complex;
    std::vector<LFactor> factors;
};

/// L(n) = join over k = 2..n of ( pi^{-1}<1k,...,(k-1)k>  disjoint union  {k(k-1)+} ).
inline LComplex extract_L(int n) {
    if (n < 2) throw InvalidRank("extract_L needs n >= 2");
    std::vector<Signed<Position>> verts;
    std::vector<LFactor> factors;
    std::vector<std::vector<Simplex>> pieces;
    for (int k = 2; k <= n; ++k) {
        LFactor f;
        f.k = k;
        std::vector<Position> column;
        for (int i = 1; i < k; ++i) column.push_back({i, k});
        const int base = static_cast<int>(verts.size());
        for (const auto& p : column) {
            f.sphere_vertices.push_back(static_cast<int>(verts.size()));
            verts.push_back({p, +1});
            f.sphere_vertices.push_back(static_cast<int>(verts.size()));
            verts.push_back({p, -1});
        }
        f.point_vertex = static_cast<int>(verts.size());
        verts.push_back({Position{k, k - 1}, +1});
        std::vector<Simplex> local;
        const std::size_t len = column.size();
        for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
            Simplex s;
            for (std::size_t b = 0; b < len; ++b) s.push_back(base + 2 * static_cast<int>(b) + ((mask >> b) & 1 ? 1 : 0));
            local.push_back(std::move(s));
        }
        local.push_back({f.point_vertex});
        pieces.push_back(std::move(local));
        factors.push_back(std::move(f));
    }
    std::vector<Simplex> acc{{}};
    for (const auto& piece : pieces) {
        std::vector<Simplex> next;
        next.reserve(acc.size() * piece.size());
        for (const auto& a : acc)
            for (const auto& p : piece) {
                Simplex u = a;
                u.insert(u.end(), p.begin(), p.end());
                next.push_back(std::move(u));
            }
        acc = std::move(next);
    }
    return {n, SimplicialComplex<Signed<Position>>(std::move(verts), std::move(acc), false), std::move(factors)};
}

/// Shape read off the factor structure of L(n): each factor contributes
/// S^{k-2}_+.
inline ObstructorShape shape_of(const LComplex& l) {
    ObstructorShape s;
    for (const auto& f : l.factors) s.plus_dims.push_back(static_cast<int>(f.sphere_vertices.size()) / 2 - 1);
    return s;
}

struct LVerification {
    bool subcomplex_of_sc = false;
    bool isomorphic = false;
    std::size_t maximal_simplices = 0;
    ObstructorShape shape;
    std::vector<std::pair<std::string, std::string>> bijection;  // L label -> join label

    bool ok() const { return subcomplex_of_sc && isomorphic; }
};

/// Checks every maximal simplex of L(n) lies in SC(C(n)) and that an explicit
/// vertex bijection carries L(n) onto realize(shape) simplex for simplex.
inline LVerification verify_L(const LComplex& l) {
    LVerification out;
    out.shape = shape_of(l);
    out.maximal_simplices = l.complex.maximal().size();
    const auto& verts = l.complex.vertices();

    out.subcomplex_of_sc = true;
    for (const auto& s : l.complex.maximal()) {
        std::vector<Signed<Position>> cand;
        for (int v : s) cand.push_back(verts[static_cast<std::size_t>(v)]);
        if (!sc_contains(l.n, cand)) {
            out.subcomplex_of_sc = false;
            break;
        }
    }

    const auto target = realize(out.shape);
    std::vector<int> image(verts.size(), -1);
    for (std::size_t j = 0; j < l.factors.size(); ++j) {
        const auto& f = l.factors[j];
        const std::string tag = "f" + std::to_string(j) + ":";
        for (std::size_t a = 0; a < f.sphere_vertices.size(); ++a) {
            const auto& v = verts[static_cast<std::size_t>(f.sphere_vertices[a])];
            const std::string name = tag + "x" + std::to_string(v.vertex.row - 1) + (v.sign > 0 ? "+" : "-");
            auto idx = target.index_of(name);
            if (!idx) return out;
            image[static_cast<std::size_t>(f.sphere_vertices[a])] = *idx;
        }
        auto idx = target.index_of(tag + "p");
        if (!idx) return out;
        image[static_cast<std::size_t>(f.point_vertex)] = *idx;
    }
    std::vector<int> sorted = image;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() < 0 || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
        sorted.size() != target.vertex_count())
        return out;

    std::set<Simplex> mapped;
    for (const auto& s : l.complex.maximal()) {
        Simplex t;
        for (int v : s) t.push_back(image[static_cast<std::size_t>(v)]);
        std::sort(t.begin(), t.end());
        mapped.insert(std::move(t));
    }
    std::set<Simplex> wanted(target.maximal().begin(), target.maximal().end());
    out.isomorphic = (mapped == wanted) && mapped.size() == l.complex.maximal().size();
    for (std::size_t v = 0; v < verts.size(); ++v)
        out.bijection.emplace_back(label(verts[v]), target.vertices()[static_cast<std::size_t>(image[v])]);
    return out;
}

}  // namespace obdim
