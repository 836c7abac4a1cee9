#pragma once

// Ordering of the hatted simple roots and the U/D witness conditions.
//
// Given a labeling of a prefix of the ordering (the last labeled node, the
// focus, is always a D-node) a witness is a pair sigma, mu in Phi u {0} with
//   (1) mu - sigma = hat(focus),
//   (2) sigma - phi is never a positive multiple of a D-node,
//   (3) phi - sigma is never a positive multiple of a U-node,
// for all phi in Phi u {0}.

#include "obdim/errors.hpp"
#include "obdim/rational.hpp"
#include "obdim/rootsys.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace obdim {

enum class NodeLabel { U, D };

inline char label_char(NodeLabel l) { return l == NodeLabel::U ? 'U' : 'D'; }

struct Labeling {
    std::vector<int> order;          // simple-root indices in key order
    std::vector<NodeLabel> labels;   // labels[k] belongs to order[k], k <= focus
    std::size_t focus = 0;           // position of the focus in `order`

    int focus_node() const { return order.at(focus); }

    /// Throws when labels do not cover exactly positions 0..focus or the focus
    /// is not a D-node.
    void validate() const {
        if (focus >= order.size()) throw Error("labeling focus outside the order");
        if (labels.size() != focus + 1) throw Error("labels must cover positions 0..focus");
        if (labels[focus] != NodeLabel::D) throw Error("the focus must be labeled D");
    }

    std::string describe() const {
        std::ostringstream os;
        for (std::size_t k = 0; k <= focus && k < labels.size(); ++k)
            os << (k ? " " : "") << "a" << order[k] + 1 << ':' << label_char(labels[k]);
        return os.str();
    }
};

/// Builds the labeling for a focus position from a bitmask over the
/// predecessors (bit k set means order[k] is a D-node).
inline Labeling make_labeling(const std::vector<int>& order, std::size_t focus, std::uint64_t d_mask) {
    Labeling lab;
    lab.order = order;
    lab.focus = focus;
    for (std::size_t k = 0; k < focus; ++k) lab.labels.push_back(((d_mask >> k) & 1U) ? NodeLabel::D : NodeLabel::U);
    lab.labels.push_back(NodeLabel::D);
    return lab;
}

struct KeyWitness {
    Root sigma;
    Root mu;
};

/// True iff v = c * delta for some rational c > 0.
inline bool positive_multiple(const Root& v, const Root& delta) {
    if (is_zero(v) || is_zero(delta)) return false;
    // Find a reference coordinate where delta is nonzero.
    std::size_t ref = 0;
    while (delta[ref] == 0) ++ref;
    // c = v[ref] / delta[ref]; need c > 0 and v * delta[ref] == delta * v[ref].
    if (static_cast<long>(v[ref]) * delta[ref] <= 0) return false;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (static_cast<long>(v[i]) * delta[ref] != static_cast<long>(delta[i]) * v[ref]) return false;
    return true;
}

namespace detail {

inline bool is_type_a(const RootSystem& rs, const std::vector<int>& comp) {
    for (const auto& r : subsystem_positive(rs, comp)) {
        for (int c : r)
            if (c > 1) return false;
    }
    return true;
}

/// Path order of a type-A component starting from `start` (an endpoint).
inline std::vector<int> path_from(const RootSystem& rs, const std::vector<int>& comp, int start) {
    std::vector<int> path{start};
    int prev = -1;
    int cur = start;
    while (path.size() < comp.size()) {
        int next = -1;
        for (int v : comp) {
            if (v == cur || v == prev) continue;
            if (rs.contains(add(rs.simple(cur), rs.simple(v)))) {
                next = v;
                break;
            }
        }
        if (next < 0) throw Error("component is not a path");
        prev = cur;
        cur = next;
        path.push_back(cur);
    }
    return path;
}

inline std::vector<int> endpoints(const RootSystem& rs, const std::vector<int>& comp) {
    std::vector<int> ends;
    for (int u : comp) {
        int degree = 0;
        for (int v : comp)
            if (u != v && rs.contains(add(rs.simple(u), rs.simple(v)))) ++degree;
        if (degree <= 1) ends.push_back(u);
    }
    return ends;
}

}  // namespace detail

/// Nodes of an irreducible non-A component at which sigma = -theta works:
/// theta - hat(alpha) lies in Phi u {0} and theta is the only root whose
/// alpha-coefficient reaches theta's.
inline std::vector<int> circled_candidates(const RootSystem& rs, const std::vector<int>& comp) {
    const Root theta = highest_root(rs, comp);
    const auto roots = subsystem_positive(rs, comp);
    std::vector<int> out;
    for (int i : comp) {
        const Root a_hat = hat(rs, i);
        if (!rs.is_element(subtract(theta, a_hat))) continue;
        const int top = theta[static_cast<std::size_t>(i)];
        int reaching = 0;
        for (const auto& r : roots)
            if (r[static_cast<std::size_t>(i)] >= top) ++reaching;
        if (reaching == 1) out.push_back(i);
    }
    return out;
}

inline int circled_node(const RootSystem& rs, const std::vector<int>& comp) {
    const auto c = circled_candidates(rs, comp);
    if (c.empty()) throw Error("no admissible top node in component");
    return c.front();
}

namespace detail {

inline std::vector<int> order_nodes(const RootSystem& rs, const std::vector<int>& nodes);

inline std::vector<int> order_component(const RootSystem& rs, const std::vector<int>& comp) {
    if (is_type_a(rs, comp)) {
        const auto ends = endpoints(rs, comp);
        return path_from(rs, comp, ends.front());
    }
    const int top = circled_node(rs, comp);
    std::vector<int> rest;
    for (int v : comp)
        if (v != top) rest.push_back(v);
    auto order = order_nodes(rs, rest);
    order.push_back(top);
    return order;
}

inline std::vector<int> order_nodes(const RootSystem& rs, const std::vector<int>& nodes) {
    std::vector<int> order;
    if (nodes.empty()) return order;
    for (const auto& comp : diagram_components(rs, nodes)) {
        const auto part = order_component(rs, comp);
        order.insert(order.end(), part.begin(), part.end());
    }
    return order;
}

}  // namespace detail

/// Ordering of hat(Delta), returned as simple-root indices.  Type A blocks are
/// ordered along the diagram; other blocks end with their circled node and
/// recurse on the remaining subdiagram.
inline std::vector<int> key_ordering(const RootSystem& rs) {
    std::vector<int> all(static_cast<std::size_t>(rs.rank()));
    for (int i = 0; i < rs.rank(); ++i) all[static_cast<std::size_t>(i)] = i;
    return detail::order_nodes(rs, all);
}

/// Component of the labeled subdiagram that contains the focus.
inline std::vector<int> focus_component(const RootSystem& rs, const Labeling& lab) {
    std::vector<int> labeled(lab.order.begin(), lab.order.begin() + static_cast<std::ptrdiff_t>(lab.focus) + 1);
    for (const auto& comp : diagram_components(rs, labeled))
        for (int v : comp)
            if (v == lab.focus_node()) return comp;
    throw Error("focus not found among labeled nodes");
}

struct Violation {
    int condition = 0;  // 1, 2 or 3
    Root phi;
    int node = -1;      // simple index of the offending D/U node
};

struct WitnessCheck {
    bool ok = false;
    std::vector<Violation> violations;

    std::string describe() const {
        std::ostringstream os;
        for (const auto& v : violations) {
            os << "condition (" << v.condition << ")";
            if (v.condition != 1) os << " phi=" << format_root(v.phi) << " node=a" << v.node + 1;
            os << '\n';
        }
        return os.str();
    }
};

/// Checks conditions (1)-(3) over all phi in Phi u {0}; every violated
/// (condition, phi, node) triple is reported.
inline WitnessCheck verify_witness(const RootSystem& rs, const Labeling& lab, const KeyWitness& w) {
    lab.validate();
    WitnessCheck out;
    const Root a_hat = hat(rs, lab.focus_node());
    if (!rs.is_element(w.sigma) || !rs.is_element(w.mu) || subtract(w.mu, w.sigma) != a_hat)
        out.violations.push_back({1, {}, lab.focus_node()});
    std::vector<Root> elements = rs.roots();
    elements.emplace_back(static_cast<std::size_t>(rs.rank()), 0);
    for (const auto& phi : elements) {
        for (std::size_t k = 0; k <= lab.focus; ++k) {
            const int node = lab.order[k];
            const Root delta = hat(rs, node);
            if (lab.labels[k] == NodeLabel::D) {
                if (positive_multiple(subtract(w.sigma, phi), delta)) out.violations.push_back({2, phi, node});
            } else {
                if (positive_multiple(subtract(phi, w.sigma), delta)) out.violations.push_back({3, phi, node});
            }
        }
    }
    out.ok = out.violations.empty();
    return out;
}

/// The witness prescribed by the constructive argument: for a type-A block
/// sigma is minus the sum of the nodes from the start of the D-run ending at
/// the focus; otherwise sigma is minus the block's highest root.
inline KeyWitness key_witness(const RootSystem& rs, const Labeling& lab) {
    lab.validate();
    const int f = lab.focus_node();
    const auto comp = focus_component(rs, lab);
    const Root a_hat = hat(rs, f);
    KeyWitness w;
    if (detail::is_type_a(rs, comp)) {
        std::vector<int> path;
        if (comp.size() == 1) {
            path = {f};
        } else {
            const auto ends = detail::endpoints(rs, comp);
            const int start = ends.front() == f ? ends.back() : ends.front();
            path = detail::path_from(rs, comp, start);
        }
        if (path.back() != f) throw NoWitness("focus is not an end of its type-A block: " + lab.describe());
        std::vector<NodeLabel> label_of(static_cast<std::size_t>(rs.rank()), NodeLabel::U);
        for (std::size_t k = 0; k <= lab.focus; ++k) label_of[static_cast<std::size_t>(lab.order[k])] = lab.labels[k];
        std::size_t l = path.size() - 1;
        while (l > 0 && label_of[static_cast<std::size_t>(path[l - 1])] == NodeLabel::D) --l;
        w.sigma.assign(static_cast<std::size_t>(rs.rank()), 0);
        for (std::size_t p = l; p < path.size(); ++p) w.sigma[static_cast<std::size_t>(path[p])] -= 1;
    } else {
        const auto cands = circled_candidates(rs, comp);
        if (std::find(cands.begin(), cands.end(), f) == cands.end())
            throw NoWitness("focus is not the top node of its block: " + lab.describe());
        w.sigma = negate(highest_root(rs, comp));
    }
    w.mu = add(w.sigma, a_hat);
    const auto check = verify_witness(rs, lab, w);
    if (!check.ok) throw NoWitness("constructive witness fails for " + lab.describe() + ":\n" + check.describe());
    return w;
}

struct KeyReport {
    std::string type;
    std::vector<int> order;
    std::uint64_t labelings = 0;
    std::uint64_t witnesses = 0;             // full quantification over Phi
    std::uint64_t component_witnesses = 0;   // restricted to the focus block
    std::uint64_t constructive_ok = 0;       // key_witness verified
    double max_search_seconds = 0.0;
    double total_seconds = 0.0;
    std::optional<std::string> first_failure;

    bool pass() const {
        return !first_failure && witnesses == labelings && component_witnesses == labelings &&
               constructive_ok == labelings;
    }
};

namespace detail {

/// For each element sigma of a root set: bit j of `down` is set when
/// sigma - c*hat(alpha_j) lies in the set u {0} for some c > 0; `up` likewise
/// for sigma + c*hat(alpha_j).
struct BlockTable {
    std::vector<Root> elements;
    std::vector<std::uint64_t> down;
    std::vector<std::uint64_t> up;
};

inline BlockTable block_table(const RootSystem& rs, const std::vector<Root>& elements, const std::set<Root>& members) {
    BlockTable t;
    t.elements = elements;
    const int r = rs.rank();
    for (const auto& s : elements) {
        std::uint64_t down = 0, up = 0;
        for (int j = 0; j < r; ++j) {
            // hat(alpha_j) is a multiple of the unit vector e_j, so positive
            // rational multiples of it are exactly k e_j with k >= 1.  Root
            // coordinates lie in [-6, 6], so k <= 12 suffices.
            for (int k = 1; k <= 12; ++k) {
                Root lo = s, hi = s;
                lo[static_cast<std::size_t>(j)] -= k;
                hi[static_cast<std::size_t>(j)] += k;
                if (members.count(lo)) down |= (std::uint64_t{1} << j);
                if (members.count(hi)) up |= (std::uint64_t{1} << j);
            }
        }
        t.down.push_back(down);
        t.up.push_back(up);
    }
    return t;
}

inline std::optional<std::size_t> find_witness(const BlockTable& t, const std::set<Root>& members, const Root& a_hat,
                                               std::uint64_t d_mask, std::uint64_t u_mask) {
    for (std::size_t s = 0; s < t.elements.size(); ++s) {
        if ((t.down[s] & d_mask) || (t.up[s] & u_mask)) continue;
        if (members.count(add(t.elements[s], a_hat))) return s;
    }
    return std::nullopt;
}

}  // namespace detail

/// Brute-force search for a witness (full quantification); nullopt if none.
inline std::optional<KeyWitness> search_witness(const RootSystem& rs, const Labeling& lab) {
    lab.validate();
    std::vector<Root> elements = rs.roots();
    elements.emplace_back(static_cast<std::size_t>(rs.rank()), 0);
    const std::set<Root> members(elements.begin(), elements.end());
    const auto table = detail::block_table(rs, elements, members);
    std::uint64_t d_mask = 0, u_mask = 0;
    for (std::size_t k = 0; k <= lab.focus; ++k)
        (lab.labels[k] == NodeLabel::D ? d_mask : u_mask) |= std::uint64_t{1} << lab.order[k];
    const Root a_hat = hat(rs, lab.focus_node());
    if (auto s = detail::find_witness(table, members, a_hat, d_mask, u_mask)) {
        KeyWitness w{table.elements[*s], add(table.elements[*s], a_hat)};
        return w;
    }
    return std::nullopt;
}

/// Runs every focus position of `order` against every U/D labeling of its
/// predecessors.  A labeling counts as witnessed when the brute-force search
/// over Phi u {0} finds sigma, mu.  The search is repeated restricted to the
/// focus block, and the constructive witness is checked as well.
/// Throws LemmaFailure on the first unwitnessed labeling when requested.
inline KeyReport exhaustive_verify(const RootSystem& rs, const std::vector<int>& order, bool throw_on_failure = true) {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    KeyReport rep;
    rep.type = rs.label();
    rep.order = order;
    if (rs.rank() > 60) throw Error("rank too large for exhaustive verification");

    std::vector<Root> elements = rs.roots();
    elements.emplace_back(static_cast<std::size_t>(rs.rank()), 0);
    const std::set<Root> members(elements.begin(), elements.end());
    const auto table = detail::block_table(rs, elements, members);

    for (std::size_t p = 0; p < order.size(); ++p) {
        const Root a_hat = hat(rs, order[p]);
        const std::uint64_t count = std::uint64_t{1} << p;
        for (std::uint64_t mask = 0; mask < count; ++mask) {
            const auto t0 = clock::now();
            const Labeling lab = make_labeling(order, p, mask);
            ++rep.labelings;
            std::uint64_t d_mask = std::uint64_t{1} << order[p], u_mask = 0;
            for (std::size_t k = 0; k < p; ++k)
                (((mask >> k) & 1U) ? d_mask : u_mask) |= std::uint64_t{1} << order[k];

            const auto found = detail::find_witness(table, members, a_hat, d_mask, u_mask);
            if (found) {
                ++rep.witnesses;
            } else if (!rep.first_failure) {
                rep.first_failure = lab.describe();
            }

            // Restriction to the block of the labeled subdiagram holding the focus.
            const auto comp = focus_component(rs, lab);
            std::vector<Root> local = subsystem_positive(rs, comp);
            const std::size_t npos = local.size();
            for (std::size_t i = 0; i < npos; ++i) local.push_back(negate(local[i]));
            local.emplace_back(static_cast<std::size_t>(rs.rank()), 0);
            const std::set<Root> local_members(local.begin(), local.end());
            std::uint64_t comp_bits = 0;
            for (int v : comp) comp_bits |= std::uint64_t{1} << v;
            bool local_found = false;
            for (const auto& s : local) {
                if (!local_members.count(add(s, a_hat))) continue;
                bool good = true;
                for (const auto& phi : local) {
                    for (int j : comp) {
                        const std::uint64_t bit = std::uint64_t{1} << j;
                        if (!((d_mask | u_mask) & bit)) continue;
                        const Root delta = hat(rs, j);
                        if ((d_mask & bit) && positive_multiple(subtract(s, phi), delta)) good = false;
                        if ((u_mask & bit) && positive_multiple(subtract(phi, s), delta)) good = false;
                        if (!good) break;
                    }
                    if (!good) break;
                }
                if (good) {
                    local_found = true;
                    break;
                }
            }
            if (local_found) ++rep.component_witnesses;

            try {
                key_witness(rs, lab);
                ++rep.constructive_ok;
            } catch (const NoWitness&) {
                if (!rep.first_failure) rep.first_failure = "constructive: " + lab.describe();
            }
            const double secs = std::chrono::duration<double>(clock::now() - t0).count();
            rep.max_search_seconds = std::max(rep.max_search_seconds, secs);
        }
    }
    rep.total_seconds = std::chrono::duration<double>(clock::now() - start).count();
    if (throw_on_failure && rep.first_failure)
        throw LemmaFailure("no witness for " + rep.type + " labeling " + *rep.first_failure);
    return rep;
}

inline KeyReport exhaustive_verify(const RootSystem& rs, bool throw_on_failure = true) {
    return exhaustive_verify(rs, key_ordering(rs), throw_on_failure);
}

}  // namespace obdim
