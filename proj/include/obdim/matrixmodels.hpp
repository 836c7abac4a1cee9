#pragma once

#include "obdim/complexes.hpp"
#include "obdim/errors.hpp"
#include "obdim/matrix.hpp"
#include "obdim/rational.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace obdim {

using SignedPosition = Signed<Position>;
using SignedComplex = SimplicialComplex<SignedPosition>;

/// A point of an open cone: barycentric weights on a simplex and a radius.
struct ConePoint {
    std::vector<SignedPosition> simplex;
    std::vector<Rational> weights;
    Rational radius = 0;

    void validate() const {
        if (radius < 0) throw Error("cone point radius must be nonnegative");
        if (simplex.size() != weights.size()) throw DimensionMismatch("cone point: weights do not match simplex");
        if (simplex.empty()) {
            if (radius != 0) throw Error("cone point with empty simplex must be the cone point");
            return;
        }
        Rational sum = 0;
        for (const auto& w : weights) {
            if (w < 0) throw Error("cone point weights must be nonnegative");
            sum += w;
        }
        if (sum != 1) throw Error("cone point weights must sum to 1");
    }

    /// Coordinate of each vertex: weight times radius.
    std::vector<Rational> coordinates() const {
        std::vector<Rational> c;
        for (const auto& w : weights) c.push_back(w * radius);
        return c;
    }

    /// Point whose coordinates are the given nonnegative values.
    static ConePoint from_values(std::vector<SignedPosition> simplex, const std::vector<Rational>& values) {
        ConePoint p;
        p.simplex = std::move(simplex);
        for (const auto& v : values) p.radius += v;
        for (const auto& v : values) p.weights.push_back(p.radius == 0 ? Rational(0) : Rational(v / p.radius));
        if (p.radius == 0) {
            if (!p.simplex.empty()) p.weights.assign(p.simplex.size(), Rational(1, static_cast<long>(p.simplex.size())));
        }
        p.validate();
        return p;
    }

    ConePoint at_radius(const Rational& t) const {
        ConePoint q = *this;
        q.radius = t;
        return q;
    }
};

/// A map from the cone on a complex of signed positions into SL_n.
struct ConeMap {
    std::string name;
    std::size_t n = 0;
    std::function<ExactMatrix(const ConePoint&)> eval;

    ExactMatrix operator()(const ConePoint& p) const { return eval(p); }
};

// ---------------------------------------------------------------------------
// Heisenberg groups

/// Upper unitriangular matrix with sign * weight * t in each simplex position.
inline ExactMatrix heisenberg_map(int n, const ConePoint& p) {
    p.validate();
    ExactMatrix g = ExactMatrix::identity(static_cast<std::size_t>(n));
    const auto coords = p.coordinates();
    for (std::size_t i = 0; i < p.simplex.size(); ++i) {
        const auto& v = p.simplex[i];
        if (v.vertex.row < 1 || v.vertex.col > n || v.vertex.row >= v.vertex.col)
            throw BadVertex("heisenberg_map: " + label(v) + " is not above the diagonal");
        g.at1(v.vertex.row, v.vertex.col) += v.sign * coords[i];
    }
    return g;
}

/// The octahedral sphere on the above-diagonal positions: domain of the
/// Heisenberg map.
inline SignedComplex heisenberg_domain(int n) {
    std::vector<Position> above;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) above.push_back({i, j});
    Simplex all(above.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    return build_SC(SimplicialComplex<Position>(above, {all}, false));
}

inline ConeMap heisenberg_cone_map(int n) {
    return {"heisenberg", static_cast<std::size_t>(n), [n](const ConePoint& p) { return heisenberg_map(n, p); }};
}

// ---------------------------------------------------------------------------
// SL_n split map

/// First guess: all signed entries placed in one unipotent-looking matrix.
inline ExactMatrix naive_map(int n, const ConePoint& p) {
    p.validate();
    ExactMatrix g = ExactMatrix::identity(static_cast<std::size_t>(n));
    const auto coords = p.coordinates();
    for (std::size_t i = 0; i < p.simplex.size(); ++i) {
        const auto& v = p.simplex[i];
        if (v.vertex.row == v.vertex.col) throw BadVertex("naive_map: diagonal vertex " + label(v));
        g.at1(v.vertex.row, v.vertex.col) += v.sign * coords[i];
    }
    return g;
}

/// U * Lambda: above-diagonal assignments go to the upper unitriangular U,
/// below-diagonal ones to the lower unitriangular Lambda.
inline ExactMatrix split_map(int n, const ConePoint& p) {
    p.validate();
    const auto sz = static_cast<std::size_t>(n);
    ExactMatrix u = ExactMatrix::identity(sz);
    ExactMatrix lower = ExactMatrix::identity(sz);
    const auto coords = p.coordinates();
    for (std::size_t i = 0; i < p.simplex.size(); ++i) {
        const auto& v = p.simplex[i];
        if (v.vertex.row == v.vertex.col) throw BadVertex("split_map: diagonal vertex " + label(v));
        ExactMatrix& target = v.vertex.row < v.vertex.col ? u : lower;
        target.at1(v.vertex.row, v.vertex.col) += v.sign * coords[i];
    }
    return u * lower;
}

/// Is the signed simplex a face of L(n)?  Per factor k it may use lifts of
/// distinct positions (i,k), i<k, or the single vertex (k,k-1)+.
inline bool in_L(int n, const std::vector<SignedPosition>& simplex) {
    std::vector<std::set<int>> rows(static_cast<std::size_t>(n + 1));
    std::vector<bool> point(static_cast<std::size_t>(n + 1), false);
    for (const auto& v : simplex) {
        const int i = v.vertex.row, k = v.vertex.col;
        if (v.sign != 1 && v.sign != -1) return false;
        if (k >= 2 && k <= n && i >= 1 && i < k) {
            if (!rows[static_cast<std::size_t>(k)].insert(i).second) return false;
        } else if (i >= 2 && i <= n && k == i - 1 && v.sign == 1) {
            if (point[static_cast<std::size_t>(i)]) return false;
            point[static_cast<std::size_t>(i)] = true;
        } else {
            return false;
        }
    }
    for (int k = 2; k <= n; ++k)
        if (point[static_cast<std::size_t>(k)] && !rows[static_cast<std::size_t>(k)].empty()) return false;
    return true;
}

enum class PsiDomain { L, SC };

/// Psi on the cone over L(n) (or over all of SC(C(n))): the split map
/// restricted to that domain.
inline ExactMatrix psi_sl(int n, const ConePoint& p, PsiDomain domain = PsiDomain::L) {
    const bool ok = domain == PsiDomain::L ? in_L(n, p.simplex) : sc_contains(n, p.simplex);
    if (!ok) {
        std::string s;
        for (const auto& v : p.simplex) s += (s.empty() ? "" : ",") + label(v);
        throw BadSimplex("psi_sl: <" + s + "> is not a simplex of " + (domain == PsiDomain::L ? "L" : "SC"));
    }
    return split_map(n, p);
}

inline ConeMap psi_cone_map(int n, PsiDomain domain = PsiDomain::L) {
    return {"psi", static_cast<std::size_t>(n), [n, domain](const ConePoint& p) { return psi_sl(n, p, domain); }};
}

inline SignedComplex psi_domain(int n) { return extract_L(n).complex; }

// ---------------------------------------------------------------------------
// Fibrations

/// f(x, y) = embed(alpha(x)) * section(beta(y)) on the cone over a join
/// K_H * K_Q.  A join point is split by which vertices lie in K_H; each
/// half is renormalized to a cone point with radius the sum of its
/// coordinates.
inline ConeMap fibration_compose(const ConeMap& alpha, const ConeMap& beta,
                                 std::function<ExactMatrix(const ExactMatrix&)> section,
                                 std::function<ExactMatrix(const ExactMatrix&)> embed,
                                 std::function<bool(const SignedPosition&)> in_h, std::size_t n) {
    auto eval = [=](const ConePoint& p) {
        p.validate();
        const auto coords = p.coordinates();
        std::vector<SignedPosition> hs, qs;
        std::vector<Rational> hv, qv;
        for (std::size_t i = 0; i < p.simplex.size(); ++i) {
            if (in_h(p.simplex[i])) {
                hs.push_back(p.simplex[i]);
                hv.push_back(coords[i]);
            } else {
                qs.push_back(p.simplex[i]);
                qv.push_back(coords[i]);
            }
        }
        const ExactMatrix a = embed(alpha(ConePoint::from_values(hs, hv)));
        const ExactMatrix b = section(beta(ConePoint::from_values(qs, qv)));
        if (a.size() != n || b.size() != n) throw DimensionMismatch("fibration_compose: factors land in different groups");
        return a * b;
    };
    return {"fibration(" + alpha.name + "," + beta.name + ")", n, eval};
}

/// Constant map to the identity; the cone on the empty complex.
inline ConeMap trivial_cone_map(std::size_t n) {
    return {"trivial", n, [n](const ConePoint&) { return ExactMatrix::identity(n); }};
}

// ---------------------------------------------------------------------------
// Divergence and properness harness

struct RadiusSchedule {
    int first_exponent = 0;
    int last_exponent = 20;

    std::vector<Rational> radii() const {
        std::vector<Rational> r;
        for (int e = first_exponent; e <= last_exponent; ++e) r.push_back(Rational(BigInt(1) << e));
        return r;
    }
};

struct HarnessConfig {
    RadiusSchedule schedule;
    double margin = 10.0 * std::log(2.0);
    int samples = 8;
    std::uint64_t seed = 20240611;
    int monotone_from_exponent = 10;
};

/// Deterministic interior points of a simplex: the barycenter, then
/// seeded integer weights in [1,16], normalized.
inline std::vector<std::vector<Rational>> sample_weights(std::size_t k, const HarnessConfig& cfg, std::uint64_t salt) {
    std::vector<std::vector<Rational>> out;
    out.emplace_back(k, Rational(1, static_cast<long>(k)));
    std::mt19937_64 rng(cfg.seed ^ (salt * 0x9E3779B97F4A7C15ull));
    std::uniform_int_distribution<int> pick(1, 16);
    for (int s = 1; s < cfg.samples; ++s) {
        std::vector<int> raw(k);
        int total = 0;
        for (auto& x : raw) total += (x = pick(rng));
        std::vector<Rational> w;
        for (int x : raw) w.push_back(Rational(x, total));
        out.push_back(std::move(w));
    }
    return out;
}

inline std::uint64_t simplex_salt(const std::vector<SignedPosition>& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (const auto& v : s) {
        for (int x : {v.vertex.row, v.vertex.col, v.sign}) {
            h ^= static_cast<std::uint64_t>(x + 1000);
            h *= 1099511628211ull;
        }
    }
    return h;
}

inline std::string simplex_label(const std::vector<SignedPosition>& s) {
    std::string out = "<";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + label(s[i]);
    return out + ">";
}

struct PairResult {
    std::string sigma;
    std::string tau;
    bool admissible = true;
    std::vector<double> distance;  // minimum over samples, per radius
    double growth = 0;             // minimum over samples of last - first
    bool pass = false;
};

/// D(map(p_t), map(q_t)) along paired samples p_k in cone(sigma), q_k in
/// cone(tau) at equal radius.
inline PairResult divergence_test(const ConeMap& map, const std::vector<SignedPosition>& sigma,
                                  const std::vector<SignedPosition>& tau, const HarnessConfig& cfg = {}) {
    PairResult r;
    r.sigma = simplex_label(sigma);
    r.tau = simplex_label(tau);
    std::set<SignedPosition> a(sigma.begin(), sigma.end());
    const bool disjoint = std::none_of(tau.begin(), tau.end(), [&](const SignedPosition& v) { return a.count(v) > 0; });
    if (sigma.empty() || tau.empty() || !disjoint) {
        r.admissible = false;
        return r;
    }
    const auto radii = cfg.schedule.radii();
    const auto ws = sample_weights(sigma.size(), cfg, simplex_salt(sigma));
    const auto wt = sample_weights(tau.size(), cfg, simplex_salt(tau));
    r.distance.assign(radii.size(), HUGE_VAL);
    r.growth = HUGE_VAL;
    for (std::size_t k = 0; k < ws.size(); ++k) {
        ConePoint p{sigma, ws[k], 0};
        ConePoint q{tau, wt[k], 0};
        std::vector<double> d;
        for (const auto& t : radii) d.push_back(distance_proxy(map(p.at_radius(t)), map(q.at_radius(t))));
        for (std::size_t i = 0; i < d.size(); ++i) r.distance[i] = std::min(r.distance[i], d[i]);
        r.growth = std::min(r.growth, d.back() - d.front());
    }
    r.pass = r.growth >= cfg.margin;
    return r;
}

enum class PairMode {
    All,     // every vertex-disjoint pair of faces
    Maximal  // vertex-disjoint pairs of maximal simplices
};

struct DivergenceReport {
    std::string map;
    PairMode mode = PairMode::All;
    std::vector<PairResult> pairs;

    std::size_t failures() const {
        return static_cast<std::size_t>(std::count_if(pairs.begin(), pairs.end(), [](const PairResult& p) { return !p.pass; }));
    }
    bool pass() const { return !pairs.empty() && failures() == 0; }
};

inline std::vector<SignedPosition> resolve(const SignedComplex& c, const Simplex& s) {
    std::vector<SignedPosition> out;
    for (int v : s) out.push_back(c.vertices()[static_cast<std::size_t>(v)]);
    return out;
}

/// Runs divergence_test over unordered vertex-disjoint pairs of the domain.
/// D is symmetric, so each unordered pair is tested once.
inline DivergenceReport divergence_suite(const ConeMap& map, const SignedComplex& domain, PairMode mode,
                                         const HarnessConfig& cfg = {}) {
    DivergenceReport rep;
    rep.map = map.name;
    rep.mode = mode;
    std::vector<Simplex> cells;
    if (mode == PairMode::Maximal) {
        cells = domain.maximal();
    } else {
        for (const auto& layer : domain.faces()) cells.insert(cells.end(), layer.begin(), layer.end());
    }
    for (std::size_t i = 0; i < cells.size(); ++i)
        for (std::size_t j = i + 1; j < cells.size(); ++j) {
            const auto& a = cells[i];
            const auto& b = cells[j];
            Simplex both;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
            if (!both.empty()) continue;
            rep.pairs.push_back(divergence_test(map, resolve(domain, a), resolve(domain, b), cfg));
        }
    return rep;
}

struct RayResult {
    std::string simplex;
    std::vector<double> size;
    bool monotone = false;
    double growth = 0;
    bool pass = false;
};

struct PropernessReport {
    std::string map;
    std::vector<RayResult> rays;

    std::size_t failures() const {
        return static_cast<std::size_t>(std::count_if(rays.begin(), rays.end(), [](const RayResult& r) { return !r.pass; }));
    }
    bool pass() const { return !rays.empty() && failures() == 0; }
};

/// size(map(p_t)) along sampled rays: nondecreasing from radius
/// 2^monotone_from_exponent on, with total growth at least the margin.
inline PropernessReport properness_test(const ConeMap& map, const SignedComplex& domain, const HarnessConfig& cfg = {}) {
    PropernessReport rep;
    rep.map = map.name;
    const auto radii = cfg.schedule.radii();
    const std::size_t from = static_cast<std::size_t>(
        std::clamp(cfg.monotone_from_exponent - cfg.schedule.first_exponent, 0, static_cast<int>(radii.size()) - 1));
    for (const auto& s : domain.maximal()) {
        const auto simplex = resolve(domain, s);
        for (const auto& w : sample_weights(simplex.size(), cfg, simplex_salt(simplex))) {
            RayResult r;
            r.simplex = simplex_label(simplex);
            ConePoint p{simplex, w, 0};
            for (const auto& t : radii) r.size.push_back(size_of(map(p.at_radius(t))));
            r.monotone = std::is_sorted(r.size.begin() + static_cast<std::ptrdiff_t>(from), r.size.end());
            r.growth = r.size.back() - r.size.front();
            r.pass = r.monotone && r.growth >= cfg.margin;
            rep.rays.push_back(std::move(r));
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Split-map separation experiment

/// S = (U Lambda)^{-1} U' Lambda' after checking the hypotheses: U, U' upper
/// unitriangular, Lambda, Lambda' lower unitriangular supported on the first
/// subdiagonal, and l_{j+1,j} l'_{j+1,j} = 0.
inline ExactMatrix lemma25_S(const ExactMatrix& u, const ExactMatrix& lam, const ExactMatrix& u2, const ExactMatrix& lam2) {
    const std::size_t n = u.size();
    if (lam.size() != n || u2.size() != n || lam2.size() != n) throw DimensionMismatch("lemma25_S: sizes differ");
    if (!u.is_upper_unitriangular() || !u2.is_upper_unitriangular()) throw Error("lemma25_S: U must be upper unitriangular");
    if (!lam.is_lower_unitriangular() || !lam2.is_lower_unitriangular())
        throw Error("lemma25_S: Lambda must be lower unitriangular");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j + 1 < i; ++j)
            if (lam(i, j) != 0 || lam2(i, j) != 0) throw Error("lemma25_S: Lambda must live on the first subdiagonal");
    for (std::size_t j = 0; j + 1 < n; ++j)
        if (lam(j + 1, j) != 0 && lam2(j + 1, j) != 0) throw Error("lemma25_S: subdiagonal slots must not overlap");
    return (u * lam).inverse() * (u2 * lam2);
}

struct Lemma25Sample {
    ExactMatrix u, lam, u2, lam2, s;
    Rational max_entry;
};

inline Lemma25Sample lemma25_sample(int n, long magnitude, std::mt19937_64& rng) {
    const auto sz = static_cast<std::size_t>(n);
    std::uniform_int_distribution<long> entry(-magnitude, magnitude);
    std::uniform_int_distribution<long> nonzero(1, magnitude);
    std::uniform_int_distribution<int> coin(0, 1);
    auto upper = [&] {
        ExactMatrix m = ExactMatrix::identity(sz);
        for (std::size_t i = 0; i < sz; ++i)
            for (std::size_t j = i + 1; j < sz; ++j) m(i, j) = entry(rng);
        return m;
    };
    Lemma25Sample smp{upper(), ExactMatrix::identity(sz), upper(), ExactMatrix::identity(sz), {}, 0};
    std::uniform_int_distribution<std::size_t> slot(0, sz - 2);
    const std::size_t forced = slot(rng);
    for (std::size_t j = 0; j + 1 < sz; ++j) {
        const long value = (j == forced ? magnitude : nonzero(rng)) * (coin(rng) ? 1 : -1);
        (coin(rng) ? smp.lam : smp.lam2)(j + 1, j) = value;
    }
    smp.s = lemma25_S(smp.u, smp.lam, smp.u2, smp.lam2);
    smp.max_entry = smp.s.max_abs();
    return smp;
}

struct Lemma25Stats {
    int n = 0;
    long magnitude = 0;
    int samples = 0;
    Rational min_max_entry;
};

/// Minimum over seeded samples of the largest |S| entry, where every sample
/// has largest subdiagonal magnitude exactly M.
inline Lemma25Stats lemma25_experiment(int n, long magnitude, int samples, std::uint64_t seed) {
    if (n < 2) throw InvalidRank("lemma25_experiment needs n >= 2");
    if (magnitude < 1 || samples < 1) throw Error("lemma25_experiment: magnitude and samples must be positive");
    std::mt19937_64 rng(seed);
    Lemma25Stats st{n, magnitude, samples, 0};
    for (int k = 0; k < samples; ++k) {
        const auto smp = lemma25_sample(n, magnitude, rng);
        st.min_max_entry = k == 0 ? smp.max_entry : std::min(st.min_max_entry, smp.max_entry);
    }
    return st;
}

// ---------------------------------------------------------------------------
// Adjoint spot checks

/// One instance of the slope property: g = u d exp(t zeta) with u upper
/// unitriangular, d diagonal of determinant 1, and zeta = E_{zeta_pos}.  The
/// E_sigma component of g E_mu g^{-1} must be t * (d_k / d_l) * c, where
/// sigma = (k, l) and c is the E_sigma coefficient of [zeta, E_mu].
struct SlopeInstance {
    Position mu, sigma, zeta;
    Rational expected_slope;
    std::vector<Rational> t_values;
    std::vector<Rational> components;
    bool linear = false;
};

inline SlopeInstance lhs_slope_instance(int n, Position mu, Position sigma, Position zeta, std::mt19937_64& rng) {
    const auto sz = static_cast<std::size_t>(n);
    std::uniform_int_distribution<long> entry(-9, 9);
    std::uniform_int_distribution<long> positive(1, 9);
    ExactMatrix u = ExactMatrix::identity(sz);
    for (std::size_t i = 0; i < sz; ++i)
        for (std::size_t j = i + 1; j < sz; ++j) u(i, j) = entry(rng);
    std::vector<Rational> d;
    Rational prod = 1;
    for (std::size_t i = 0; i + 1 < sz; ++i) {
        d.push_back(Rational(positive(rng), positive(rng)));
        prod *= d.back();
    }
    d.push_back(1 / prod);
    const ExactMatrix dm = ExactMatrix::diagonal(d);
    const ExactMatrix z = ExactMatrix::unit(sz, zeta.row, zeta.col);
    const ExactMatrix e_mu = ExactMatrix::unit(sz, mu.row, mu.col);

    SlopeInstance inst{mu, sigma, zeta, 0, {}, {}, false};
    const Rational c = bracket(z, e_mu).at1(sigma.row, sigma.col);
    inst.expected_slope = d[static_cast<std::size_t>(sigma.row - 1)] / d[static_cast<std::size_t>(sigma.col - 1)] * c;
    inst.linear = true;
    for (long t : {0L, 1L, 2L, 5L, 13L}) {
        const Rational tr(t);
        const ExactMatrix g = u * dm * exp_nilpotent(tr * z);
        const Rational comp = adjoint_component(g, mu.row, mu.col, sigma.row, sigma.col);
        inst.t_values.push_back(tr);
        inst.components.push_back(comp);
        if (comp != tr * inst.expected_slope) inst.linear = false;
    }
    return inst;
}

/// The SL_3 instance from the labeling with focus node 2 and node 1 labeled
/// D: sigma = -(alpha1+alpha2) <-> E31, mu = -alpha1 <-> E21, zeta = E32.
inline std::vector<SlopeInstance> lhs_spot_check_sl3(int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<SlopeInstance> out;
    for (int k = 0; k < count; ++k) out.push_back(lhs_slope_instance(3, {2, 1}, {3, 1}, {3, 2}, rng));
    return out;
}

}  // namespace obdim
