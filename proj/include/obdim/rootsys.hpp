#pragma once

// Root systems in simple-root coordinates.
//
// A root is stored as its integer coefficient vector over the simple roots
// Delta.  Classical families are generated from the usual orthonormal
// (e_i) pictures and converted; exceptional families are generated from
// their Cartan matrices by root strings.  Reducible systems are direct sums
// with block-diagonal coordinates.

#include "obdim/errors.hpp"
#include "obdim/rational.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace obdim {

enum class Family { A, B, C, D, E6, E7, E8, F4, G2, BC };

struct RootSystemType {
    Family family = Family::A;
    int rank = 1;

    friend bool operator==(const RootSystemType&, const RootSystemType&) = default;
};

using Root = std::vector<int>;

inline std::string family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::D: return "D";
        case Family::E6: return "E";
        case Family::E7: return "E";
        case Family::E8: return "E";
        case Family::F4: return "F";
        case Family::G2: return "G";
        case Family::BC: return "BC";
    }
    return "?";
}

inline std::string to_string(const RootSystemType& t) {
    return family_name(t.family) + std::to_string(t.rank);
}

/// Parses names such as "A3", "BC1", "E8", "G2" (case-insensitive family).
inline RootSystemType parse_type(const std::string& text) {
    std::string fam;
    std::size_t pos = 0;
    while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) {
        fam += static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos])));
        ++pos;
    }
    if (pos == text.size() || fam.empty()) throw InvalidRank("cannot parse root system type '" + text + "'");
    int rank = 0;
    try {
        std::size_t used = 0;
        rank = std::stoi(text.substr(pos), &used);
        if (pos + used != text.size()) throw InvalidRank("trailing characters in type '" + text + "'");
    } catch (const std::logic_error&) {
        throw InvalidRank("cannot parse rank in type '" + text + "'");
    }
    if (fam == "A") return {Family::A, rank};
    if (fam == "B") return {Family::B, rank};
    if (fam == "C") return {Family::C, rank};
    if (fam == "D") return {Family::D, rank};
    if (fam == "BC") return {Family::BC, rank};
    if (fam == "F") return {Family::F4, rank};
    if (fam == "G") return {Family::G2, rank};
    if (fam == "E") {
        if (rank == 6) return {Family::E6, 6};
        if (rank == 7) return {Family::E7, 7};
        if (rank == 8) return {Family::E8, 8};
        throw InvalidRank("type E exists only in ranks 6, 7, 8");
    }
    throw InvalidRank("unknown root system family '" + fam + "'");
}

/// Throws InvalidRank when the rank is outside the family's range.
/// Returns true when the rank is accepted but below the usual irreducibility
/// threshold (B_2, which coincides with C_2).
inline bool validate_type(const RootSystemType& t) {
    auto fail = [&](const std::string& why) {
        throw InvalidRank("invalid rank " + std::to_string(t.rank) + " for family " + family_name(t.family) + ": " + why);
    };
    switch (t.family) {
        case Family::A: if (t.rank < 1) fail("need rank >= 1"); return false;
        case Family::B: if (t.rank < 2) fail("need rank >= 2"); return t.rank == 2;
        case Family::C: if (t.rank < 2) fail("need rank >= 2"); return false;
        case Family::D: if (t.rank < 4) fail("need rank >= 4"); return false;
        case Family::E6: if (t.rank != 6) fail("E6 has rank 6"); return false;
        case Family::E7: if (t.rank != 7) fail("E7 has rank 7"); return false;
        case Family::E8: if (t.rank != 8) fail("E8 has rank 8"); return false;
        case Family::F4: if (t.rank != 4) fail("F4 has rank 4"); return false;
        case Family::G2: if (t.rank != 2) fail("G2 has rank 2"); return false;
        case Family::BC: if (t.rank < 1) fail("need rank >= 1"); return false;
    }
    return false;
}

/// One irreducible block of a root system.
struct Component {
    std::string label;        // e.g. "C3", "BC1"
    std::vector<int> nodes;   // 0-based simple root indices, ascending
    bool nonstandard = false;
};

inline int height(const Root& r) { return std::accumulate(r.begin(), r.end(), 0); }

inline Root negate(Root r) {
    for (auto& c : r) c = -c;
    return r;
}

inline Root add(const Root& a, const Root& b) {
    Root out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline Root subtract(const Root& a, const Root& b) {
    Root out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

inline bool is_zero(const Root& r) {
    return std::all_of(r.begin(), r.end(), [](int c) { return c == 0; });
}

inline std::string format_root(const Root& r) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
    os << ']';
    return os.str();
}

class RootSystem;
RootSystem direct_sum(const std::vector<RootSystem>& parts);

/// Finite root system with simple roots, positive roots and multiplicities.
/// Immutable once built.
class RootSystem {
public:
    RootSystem() = default;

    int rank() const { return rank_; }

    /// Positive roots ordered by height, then lexicographically.
    const std::vector<Root>& positive() const { return positive_; }

    /// Multiplicity dim g_alpha of each positive root (aligned with positive()).
    const std::vector<int>& multiplicities() const { return mult_; }

    const std::vector<Component>& components() const { return components_; }
    const std::vector<RootSystemType>& type_spec() const { return types_; }
    const std::string& label() const { return label_; }

    bool nonstandard() const {
        return std::any_of(components_.begin(), components_.end(), [](const Component& c) { return c.nonstandard; });
    }

    Root simple(int i) const {
        Root r(static_cast<std::size_t>(rank_), 0);
        r.at(static_cast<std::size_t>(i)) = 1;
        return r;
    }

    /// All roots: positives followed by their negatives.
    std::vector<Root> roots() const {
        std::vector<Root> all = positive_;
        for (const auto& r : positive_) all.push_back(negate(r));
        return all;
    }

    std::size_t size() const { return 2 * positive_.size(); }

    /// True iff v is a root (zero excluded).
    bool contains(const Root& v) const {
        if (static_cast<int>(v.size()) != rank_) return false;
        if (index_.count(v)) return true;
        return index_.count(negate(v)) > 0;
    }

    /// Membership in Phi union {0}.
    bool is_element(const Root& v) const {
        if (static_cast<int>(v.size()) != rank_) return false;
        return is_zero(v) || contains(v);
    }

    /// Index of a positive root, or nullopt.
    std::optional<std::size_t> positive_index(const Root& v) const {
        auto it = index_.find(v);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    int multiplicity(const Root& v) const {
        if (auto i = positive_index(v)) return mult_[*i];
        if (auto i = positive_index(negate(v))) return mult_[*i];
        throw Error("multiplicity requested for a non-root " + format_root(v));
    }

    /// Returns a copy with the multiplicity of +-v replaced.
    RootSystem with_multiplicity(const Root& v, int m) const {
        if (m < 1) throw Error("multiplicities must be positive");
        RootSystem copy = *this;
        auto i = positive_index(v);
        if (!i) i = positive_index(negate(v));
        if (!i) throw Error("cannot set multiplicity of non-root " + format_root(v));
        copy.mult_[*i] = m;
        return copy;
    }

    bool is_simple(const Root& v) const {
        if (static_cast<int>(v.size()) != rank_) return false;
        int ones = 0;
        for (int c : v) {
            if (c == 1) ++ones;
            else if (c != 0) return false;
        }
        return ones == 1;
    }

    /// Builds a system from ambient (e.g. orthonormal) coordinates.  `simple`
    /// lists Delta in the desired order; `positives` the positive roots with
    /// their multiplicities.  Coordinates are converted exactly; components
    /// and their labels are inferred.
    static RootSystem from_ambient(const std::vector<std::vector<int>>& simple,
                                   const std::vector<std::vector<int>>& positives,
                                   const std::vector<int>& multiplicity,
                                   std::vector<RootSystemType> types = {},
                                   bool nonstandard = false);

    /// Builds a reduced system from a Cartan matrix A (A_ij = <alpha_i, alpha_j^vee>)
    /// by root strings.
    static RootSystem from_cartan(const std::vector<std::vector<int>>& cartan,
                                  std::vector<RootSystemType> types = {});

    friend RootSystem direct_sum(const std::vector<RootSystem>& parts);

private:
    void finalize(std::vector<Root> positives, std::vector<int> mults, bool nonstandard);

    int rank_ = 0;
    std::vector<Root> positive_;
    std::vector<int> mult_;
    std::map<Root, std::size_t> index_;
    std::vector<Component> components_;
    std::vector<RootSystemType> types_;
    std::string label_;
};

namespace detail {

/// Exact solve of sum_i c_i * basis[i] = v.  Returns nullopt when v is not in
/// the span.  basis vectors must be linearly independent.
inline std::optional<std::vector<Rational>> solve_in_basis(const std::vector<std::vector<int>>& basis,
                                                          const std::vector<int>& v) {
    const std::size_t r = basis.size();
    const std::size_t m = v.size();
    // Augmented m x (r+1) system.
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(r + 1));
    for (std::size_t row = 0; row < m; ++row) {
        for (std::size_t col = 0; col < r; ++col) a[row][col] = basis[col].at(row);
        a[row][r] = v[row];
    }
    std::size_t pivot_row = 0;
    std::vector<std::size_t> pivot_cols;
    for (std::size_t col = 0; col < r && pivot_row < m; ++col) {
        std::size_t p = pivot_row;
        while (p < m && a[p][col] == 0) ++p;
        if (p == m) continue;
        std::swap(a[p], a[pivot_row]);
        const Rational inv = 1 / a[pivot_row][col];
        for (auto& x : a[pivot_row]) x *= inv;
        for (std::size_t other = 0; other < m; ++other) {
            if (other == pivot_row || a[other][col] == 0) continue;
            const Rational f = a[other][col];
            for (std::size_t k = col; k <= r; ++k) a[other][k] -= f * a[pivot_row][k];
        }
        pivot_cols.push_back(col);
        ++pivot_row;
    }
    for (std::size_t row = pivot_row; row < m; ++row)
        if (a[row][r] != 0) return std::nullopt;
    if (pivot_cols.size() != r) throw Error("simple roots are linearly dependent");
    std::vector<Rational> c(r);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) c[pivot_cols[i]] = a[i][r];
    return c;
}

inline bool root_less(const Root& a, const Root& b) {
    const int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a > b;
}

}  // namespace detail

/// Classifies an irreducible block from its positive roots (Delta coordinates
/// restricted to the block's nodes).
inline std::string classify_component(const std::vector<Root>& positives, int nodes) {
    const int k = nodes;
    std::set<Root> set(positives.begin(), positives.end());
    bool reduced = true;
    int max_coeff = 0;
    for (const auto& r : positives) {
        for (int c : r) max_coeff = std::max(max_coeff, c);
        Root twice = r;
        for (auto& c : twice) c *= 2;
        if (set.count(twice)) reduced = false;
    }
    const std::size_t n = positives.size();
    const auto name = [](const std::string& f, int rank) { return f + std::to_string(rank); };
    if (!reduced) return name("BC", k);
    if (max_coeff <= 1) return name("A", k);
    if (k == 2) return n == 6 ? "G2" : "B2";
    if (k == 4 && n == 24) return "F4";
    if (k == 6 && n == 36) return "E6";
    if (k == 7 && n == 63) return "E7";
    if (k == 8 && n == 120) return "E8";
    if (n == static_cast<std::size_t>(k * (k - 1))) return name("D", k);
    if (n == static_cast<std::size_t>(k * k)) {
        // B_k vs C_k: the node with highest-root coefficient 1 lies on the
        // double bond exactly for C_k.
        const Root& theta = positives.back();
        int one = -1;
        for (int i = 0; i < k; ++i)
            if (theta[static_cast<std::size_t>(i)] == 1) one = i;
        bool on_double = false;
        for (int j = 0; j < k; ++j) {
            if (j == one) continue;
            Root a(static_cast<std::size_t>(k), 0);
            a[static_cast<std::size_t>(one)] = 1;
            a[static_cast<std::size_t>(j)] = 2;
            Root b(static_cast<std::size_t>(k), 0);
            b[static_cast<std::size_t>(one)] = 2;
            b[static_cast<std::size_t>(j)] = 1;
            if (set.count(a) || set.count(b)) on_double = true;
        }
        return name(on_double ? "C" : "B", k);
    }
    return name("X", k);
}

inline void RootSystem::finalize(std::vector<Root> positives, std::vector<int> mults, bool nonstandard) {
    std::vector<std::size_t> order(positives.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return detail::root_less(positives[a], positives[b]); });
    positive_.clear();
    mult_.clear();
    index_.clear();
    for (std::size_t i : order) {
        if (index_.count(positives[i])) throw Error("duplicate positive root " + format_root(positives[i]));
        index_[positives[i]] = positive_.size();
        positive_.push_back(positives[i]);
        mult_.push_back(mults[i]);
    }
    // Components: nodes i, j joined iff alpha_i + alpha_j is a root.
    std::vector<int> comp(static_cast<std::size_t>(rank_), -1);
    int ncomp = 0;
    for (int s = 0; s < rank_; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        std::vector<int> stack{s};
        comp[static_cast<std::size_t>(s)] = ncomp;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < rank_; ++v) {
                if (comp[static_cast<std::size_t>(v)] >= 0) continue;
                if (contains(add(simple(u), simple(v)))) {
                    comp[static_cast<std::size_t>(v)] = ncomp;
                    stack.push_back(v);
                }
            }
        }
        ++ncomp;
    }
    components_.clear();
    for (int c = 0; c < ncomp; ++c) {
        Component block;
        for (int i = 0; i < rank_; ++i)
            if (comp[static_cast<std::size_t>(i)] == c) block.nodes.push_back(i);
        std::vector<Root> local;
        for (const auto& r : positive_) {
            bool inside = true;
            for (int i = 0; i < rank_; ++i)
                if (r[static_cast<std::size_t>(i)] != 0 && comp[static_cast<std::size_t>(i)] != c) inside = false;
            if (!inside) continue;
            Root sub;
            for (int i : block.nodes) sub.push_back(r[static_cast<std::size_t>(i)]);
            local.push_back(sub);
        }
        block.label = classify_component(local, static_cast<int>(block.nodes.size()));
        block.nonstandard = nonstandard;
        components_.push_back(block);
    }
    if (label_.empty()) {
        for (std::size_t i = 0; i < components_.size(); ++i) label_ += (i ? "x" : "") + components_[i].label;
    }
}

inline RootSystem RootSystem::from_ambient(const std::vector<std::vector<int>>& simple,
                                           const std::vector<std::vector<int>>& positives,
                                           const std::vector<int>& multiplicity,
                                           std::vector<RootSystemType> types, bool nonstandard) {
    if (positives.size() != multiplicity.size()) throw Error("one multiplicity per positive root required");
    RootSystem rs;
    rs.rank_ = static_cast<int>(simple.size());
    rs.types_ = std::move(types);
    std::vector<Root> coords;
    for (const auto& v : positives) {
        auto c = detail::solve_in_basis(simple, v);
        if (!c) throw Error("positive root outside the span of the simple roots");
        Root r;
        for (const auto& q : *c) {
            if (denominator(q) != 1) throw Error("non-integral simple-root coordinates");
            const int value = static_cast<int>(numerator(q).convert_to<long>());
            if (value < 0) throw Error("positive root with a negative coefficient");
            r.push_back(value);
        }
        coords.push_back(r);
    }
    rs.finalize(std::move(coords), multiplicity, nonstandard);
    if (!rs.types_.empty() && rs.types_.size() == 1 && rs.components_.size() == 1)
        rs.label_ = to_string(rs.types_.front());
    return rs;
}

inline RootSystem RootSystem::from_cartan(const std::vector<std::vector<int>>& cartan,
                                          std::vector<RootSystemType> types) {
    const int r = static_cast<int>(cartan.size());
    RootSystem rs;
    rs.rank_ = r;
    rs.types_ = std::move(types);
    std::set<Root> known;
    std::vector<Root> layer;
    for (int i = 0; i < r; ++i) {
        Root s(static_cast<std::size_t>(r), 0);
        s[static_cast<std::size_t>(i)] = 1;
        layer.push_back(s);
        known.insert(s);
    }
    std::vector<Root> all = layer;
    while (!layer.empty()) {
        std::vector<Root> next;
        for (const auto& beta : layer) {
            for (int i = 0; i < r; ++i) {
                // p: how far the alpha_i-string extends downward from beta.
                int p = 0;
                Root down = beta;
                while (true) {
                    down[static_cast<std::size_t>(i)] -= 1;
                    if (!known.count(down)) break;
                    ++p;
                }
                int pairing = 0;  // <beta, alpha_i^vee>
                for (int j = 0; j < r; ++j)
                    pairing += beta[static_cast<std::size_t>(j)] * cartan[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
                const int q = p - pairing;
                if (q > 0) {
                    Root up = beta;
                    up[static_cast<std::size_t>(i)] += 1;
                    if (known.insert(up).second) {
                        next.push_back(up);
                        all.push_back(up);
                    }
                }
            }
        }
        layer = std::move(next);
    }
    rs.finalize(all, std::vector<int>(all.size(), 1), false);
    if (rs.types_.size() == 1 && rs.components_.size() == 1) rs.label_ = to_string(rs.types_.front());
    return rs;
}

inline RootSystem direct_sum(const std::vector<RootSystem>& parts) {
    RootSystem rs;
    int offset = 0;
    for (const auto& p : parts) rs.rank_ += p.rank_;
    std::vector<Root> roots;
    std::vector<int> mults;
    bool nonstandard = false;
    for (const auto& p : parts) {
        for (std::size_t k = 0; k < p.positive_.size(); ++k) {
            Root r(static_cast<std::size_t>(rs.rank_), 0);
            for (int i = 0; i < p.rank_; ++i) r[static_cast<std::size_t>(offset + i)] = p.positive_[k][static_cast<std::size_t>(i)];
            roots.push_back(r);
            mults.push_back(p.mult_[k]);
        }
        for (const auto& t : p.types_) rs.types_.push_back(t);
        nonstandard = nonstandard || p.nonstandard();
        offset += p.rank_;
    }
    rs.finalize(roots, mults, nonstandard);
    // Carry over component labels from the parts, which know their types.
    std::size_t c = 0;
    for (const auto& p : parts)
        for (const auto& comp : p.components_) {
            if (c < rs.components_.size()) {
                rs.components_[c].label = comp.label;
                rs.components_[c].nonstandard = comp.nonstandard;
            }
            ++c;
        }
    rs.label_.clear();
    for (std::size_t i = 0; i < rs.components_.size(); ++i) rs.label_ += (i ? "x" : "") + rs.components_[i].label;
    return rs;
}

/// Bourbaki Cartan matrix (A_ij = <alpha_i, alpha_j^vee>) of a reduced type.
inline std::vector<std::vector<int>> cartan_matrix(const RootSystemType& t) {
    validate_type(t);
    const int n = t.rank;
    std::vector<std::vector<int>> a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    auto at = [&](int i, int j) -> int& { return a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]; };
    for (int i = 1; i <= n; ++i) at(i, i) = 2;
    auto bond = [&](int i, int j) { at(i, j) = -1; at(j, i) = -1; };
    switch (t.family) {
        case Family::A:
            for (int i = 1; i < n; ++i) bond(i, i + 1);
            break;
        case Family::B:
            for (int i = 1; i < n; ++i) bond(i, i + 1);
            at(n - 1, n) = -2;  // alpha_n short
            break;
        case Family::C:
            for (int i = 1; i < n; ++i) bond(i, i + 1);
            at(n, n - 1) = -2;  // alpha_n long
            break;
        case Family::D:
            for (int i = 1; i < n - 1; ++i) bond(i, i + 1);
            bond(n - 2, n);
            break;
        case Family::E6:
        case Family::E7:
        case Family::E8:
            bond(1, 3);
            bond(3, 4);
            bond(2, 4);
            for (int i = 4; i < n; ++i) bond(i, i + 1);
            break;
        case Family::F4:
            bond(1, 2);
            bond(2, 3);
            bond(3, 4);
            at(2, 3) = -2;  // alpha_2 long, alpha_3 short
            break;
        case Family::G2:
            at(1, 2) = -1;  // alpha_1 short
            at(2, 1) = -3;
            break;
        case Family::BC:
            throw Error("BC has no Cartan matrix (unreduced)");
    }
    return a;
}

namespace detail {

inline std::vector<int> unit(int dim, int i, int value = 1) {
    std::vector<int> v(static_cast<std::size_t>(dim), 0);
    v[static_cast<std::size_t>(i)] = value;
    return v;
}

inline std::vector<int> combo(int dim, int i, int a, int j, int b) {
    std::vector<int> v(static_cast<std::size_t>(dim), 0);
    v[static_cast<std::size_t>(i)] += a;
    v[static_cast<std::size_t>(j)] += b;
    return v;
}

struct AmbientData {
    std::vector<std::vector<int>> simple;
    std::vector<std::vector<int>> positive;
    // Tags for each positive root: 0 = e_i - e_j, 1 = e_i + e_j, 2 = e_i, 3 = 2 e_i.
    std::vector<int> kind;
};

/// Orthonormal models of the classical families (Bourbaki simple roots).
inline AmbientData classical_ambient(Family f, int n) {
    AmbientData d;
    const int dim = f == Family::A ? n + 1 : n;
    const int pairs_upto = f == Family::A ? n + 1 : n;
    for (int i = 0; i < pairs_upto; ++i)
        for (int j = i + 1; j < pairs_upto; ++j) {
            d.positive.push_back(combo(dim, i, 1, j, -1));
            d.kind.push_back(0);
        }
    if (f != Family::A) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                d.positive.push_back(combo(dim, i, 1, j, 1));
                d.kind.push_back(1);
            }
    }
    if (f == Family::B || f == Family::BC)
        for (int i = 0; i < n; ++i) {
            d.positive.push_back(unit(dim, i));
            d.kind.push_back(2);
        }
    if (f == Family::C || f == Family::BC)
        for (int i = 0; i < n; ++i) {
            d.positive.push_back(unit(dim, i, 2));
            d.kind.push_back(3);
        }
    const int chain = f == Family::A ? n : n - 1;
    for (int i = 0; i < chain; ++i) d.simple.push_back(combo(dim, i, 1, i + 1, -1));
    switch (f) {
        case Family::B:
        case Family::BC: d.simple.push_back(unit(dim, n - 1)); break;
        case Family::C: d.simple.push_back(unit(dim, n - 1, 2)); break;
        case Family::D: d.simple.push_back(combo(dim, n - 2, 1, n - 1, 1)); break;
        default: break;
    }
    return d;
}

}  // namespace detail

/// Builds the root system of the given type with all multiplicities 1.
inline RootSystem build_root_system(const RootSystemType& t) {
    const bool nonstandard = validate_type(t);
    switch (t.family) {
        case Family::A:
        case Family::B:
        case Family::C:
        case Family::D:
        case Family::BC: {
            const auto amb = detail::classical_ambient(t.family, t.rank);
            return RootSystem::from_ambient(amb.simple, amb.positive, std::vector<int>(amb.positive.size(), 1), {t},
                                            nonstandard);
        }
        default:
            return RootSystem::from_cartan(cartan_matrix(t), {t});
    }
}

/// Reducible system as a direct sum of irreducible types.
inline RootSystem build_root_system(const std::vector<RootSystemType>& types) {
    if (types.empty()) throw InvalidRank("empty type list");
    if (types.size() == 1) return build_root_system(types.front());
    std::vector<RootSystem> parts;
    for (const auto& t : types) parts.push_back(build_root_system(t));
    return direct_sum(parts);
}

/// Relative root system of SO(Q) with Witt index q on an n-dimensional space:
/// type B_q with short-root multiplicity n - 2q, or D_q when n = 2q.
inline RootSystem build_so_root_system(int n, int q) {
    if (q < 1 || n < 2 * q) throw InvalidRank("SO(Q) needs q >= 1 and n >= 2q");
    if (n == 2 && q == 1) throw InvalidRank("SO(1,1) is a torus: no roots");
    const int aniso = n - 2 * q;
    std::vector<std::vector<int>> simple;
    std::vector<std::vector<int>> positive;
    std::vector<int> mult;
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j) {
            positive.push_back(detail::combo(q, i, 1, j, -1));
            mult.push_back(1);
            positive.push_back(detail::combo(q, i, 1, j, 1));
            mult.push_back(1);
        }
    for (int i = 0; i + 1 < q; ++i) simple.push_back(detail::combo(q, i, 1, i + 1, -1));
    RootSystemType type{Family::B, q};
    bool nonstandard = false;
    if (aniso > 0) {
        for (int i = 0; i < q; ++i) {
            positive.push_back(detail::unit(q, i));
            mult.push_back(aniso);
        }
        simple.push_back(detail::unit(q, q - 1));
        nonstandard = q < 3;
    } else {
        simple.push_back(detail::combo(q, q - 2, 1, q - 1, 1));
        type = {Family::D, q};
        nonstandard = q < 4;
    }
    return RootSystem::from_ambient(simple, positive, mult, {type}, nonstandard);
}

/// alpha-hat: 2 alpha when 2 alpha is a root, otherwise alpha.
inline Root hat(const RootSystem& rs, const Root& alpha) {
    if (!rs.is_simple(alpha)) throw NotSimpleRoot("hat() needs a simple root, got " + format_root(alpha));
    Root twice = alpha;
    for (auto& c : twice) c *= 2;
    return rs.contains(twice) ? twice : alpha;
}

inline Root hat(const RootSystem& rs, int simple_index) {
    if (simple_index < 0 || simple_index >= rs.rank()) throw NotSimpleRoot("simple root index out of range");
    return hat(rs, rs.simple(simple_index));
}

/// Phi union {0} membership.
inline bool is_element(const RootSystem& rs, const Root& v) { return rs.is_element(v); }

/// Positive roots supported on alpha_1..alpha_i with positive alpha_i
/// coefficient (i is 1-based).
inline std::vector<Root> phi_i_plus(const RootSystem& rs, int i) {
    if (i < 1 || i > rs.rank()) throw InvalidRank("phi_i_plus index out of range");
    std::vector<Root> out;
    for (const auto& r : rs.positive()) {
        if (r[static_cast<std::size_t>(i - 1)] <= 0) continue;
        bool supported = true;
        for (int k = i; k < rs.rank(); ++k)
            if (r[static_cast<std::size_t>(k)] != 0) supported = false;
        if (supported) out.push_back(r);
    }
    return out;
}

/// True when alpha + alpha' in Phi implies alpha + alpha' in the set.
inline bool closed_under_addition(const RootSystem& rs, const std::vector<Root>& set) {
    std::set<Root> members(set.begin(), set.end());
    for (const auto& a : set)
        for (const auto& b : set) {
            const Root s = add(a, b);
            if (rs.contains(s) && !members.count(s)) return false;
        }
    return true;
}

/// Multiplicity-weighted size of phi_i_plus.
inline int dim_n_i(const RootSystem& rs, int i) {
    int total = 0;
    for (const auto& r : phi_i_plus(rs, i)) total += rs.multiplicity(r);
    return total;
}

inline int dim_positive(const RootSystem& rs) {
    return std::accumulate(rs.multiplicities().begin(), rs.multiplicities().end(), 0);
}

/// Roots of the subsystem spanned by the given simple roots (support inside).
inline std::vector<Root> subsystem_positive(const RootSystem& rs, const std::vector<int>& nodes) {
    std::vector<bool> allowed(static_cast<std::size_t>(rs.rank()), false);
    for (int i : nodes) allowed[static_cast<std::size_t>(i)] = true;
    std::vector<Root> out;
    for (const auto& r : rs.positive()) {
        bool inside = true;
        for (int k = 0; k < rs.rank(); ++k)
            if (r[static_cast<std::size_t>(k)] != 0 && !allowed[static_cast<std::size_t>(k)]) inside = false;
        if (inside) out.push_back(r);
    }
    return out;
}

/// Connected components of the Dynkin diagram restricted to `nodes`.
inline std::vector<std::vector<int>> diagram_components(const RootSystem& rs, const std::vector<int>& nodes) {
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(static_cast<std::size_t>(rs.rank()), false);
    std::vector<bool> allowed(static_cast<std::size_t>(rs.rank()), false);
    for (int i : nodes) allowed[static_cast<std::size_t>(i)] = true;
    std::vector<int> sorted = nodes;
    std::sort(sorted.begin(), sorted.end());
    for (int s : sorted) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<int> comp;
        std::vector<int> stack{s};
        seen[static_cast<std::size_t>(s)] = true;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int v : sorted) {
                if (seen[static_cast<std::size_t>(v)] || !allowed[static_cast<std::size_t>(v)]) continue;
                if (rs.contains(add(rs.simple(u), rs.simple(v)))) {
                    seen[static_cast<std::size_t>(v)] = true;
                    stack.push_back(v);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(comp);
    }
    return comps;
}

/// Highest root of the irreducible subsystem on `component` (a connected
/// node set): the unique positive root of maximal height.
inline Root highest_root(const RootSystem& rs, const std::vector<int>& component) {
    const auto roots = subsystem_positive(rs, component);
    if (roots.empty()) throw Error("empty component");
    return *std::max_element(roots.begin(), roots.end(), detail::root_less);
}

inline Root highest_root(const RootSystem& rs) {
    if (rs.components().size() != 1) throw Error("highest root needs an irreducible system");
    return highest_root(rs, rs.components().front().nodes);
}

}  // namespace obdim
