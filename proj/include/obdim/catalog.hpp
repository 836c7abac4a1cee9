#pragma once

#include "obdim/complexes.hpp"
#include "obdim/errors.hpp"
#include "obdim/rootsys.hpp"

#include <optional>
#include <string>
#include <vector>

namespace obdim {

enum class GroupKind { SL_Z, SL_O, Sp_Z, Sp_O, SO_Q };

inline std::string kind_name(GroupKind k) {
    switch (k) {
        case GroupKind::SL_Z: return "SL_Z";
        case GroupKind::SL_O: return "SL_O";
        case GroupKind::Sp_Z: return "Sp_Z";
        case GroupKind::Sp_O: return "Sp_O";
        case GroupKind::SO_Q: return "SO_Q";
    }
    return "?";
}

/// A cataloged arithmetic group.  Number rings enter only through the
/// numbers (r, s) of real and complex places; SO(Q) through the ambient
/// dimension n, the Witt index q and the dimension of X_M.
struct GroupSpec {
    GroupKind kind = GroupKind::SL_Z;
    int n = 2;
    int r = 1;
    int s = 0;
    int q = 0;
    std::optional<int> dim_xm;
    bool sqrt2 = false;  // SL_n(Z[sqrt 2]): reported with its own two-place display

    static GroupSpec sl_z(int n) { return {GroupKind::SL_Z, n, 1, 0, 0, std::nullopt, false}; }
    static GroupSpec sl_o(int n, int r, int s) { return {GroupKind::SL_O, n, r, s, 0, std::nullopt, false}; }
    static GroupSpec sl_sqrt2(int n) { return {GroupKind::SL_O, n, 2, 0, 0, std::nullopt, true}; }
    static GroupSpec sp_z(int n) { return {GroupKind::Sp_Z, n, 1, 0, 0, std::nullopt, false}; }
    static GroupSpec sp_o(int n, int r, int s) { return {GroupKind::Sp_O, n, r, s, 0, std::nullopt, false}; }
    static GroupSpec so_q(int n, int q, std::optional<int> dim_xm) {
        return {GroupKind::SO_Q, n, 1, 0, q, dim_xm, false};
    }

    int degree() const { return r + 2 * s; }

    std::string name() const {
        const std::string nn = std::to_string(n);
        switch (kind) {
            case GroupKind::SL_Z: return "SL_" + nn + "(Z)";
            case GroupKind::SL_O:
                if (sqrt2) return "SL_" + nn + "(Z[sqrt2])";
                return "SL_" + nn + "(O; r=" + std::to_string(r) + ",s=" + std::to_string(s) + ")";
            case GroupKind::Sp_Z: return "Sp_" + std::to_string(2 * n) + "(Z)";
            case GroupKind::Sp_O:
                return "Sp_" + std::to_string(2 * n) + "(O; r=" + std::to_string(r) + ",s=" + std::to_string(s) + ")";
            case GroupKind::SO_Q:
                return "SO(Q; n=" + nn + ",q=" + std::to_string(q) + ",dimXM=" +
                       (dim_xm ? std::to_string(*dim_xm) : std::string("?")) + ")";
        }
        return "?";
    }

    void validate() const {
        auto bad = [&](const std::string& why) { throw InvalidGroupSpec(name() + ": " + why); };
        switch (kind) {
            case GroupKind::SL_Z:
                if (n < 2) bad("n must be at least 2");
                break;
            case GroupKind::SL_O:
                if (n < 2) bad("n must be at least 2");
                if (r < 0 || s < 0 || r + s < 1) bad("need r, s >= 0 and r + s >= 1");
                break;
            case GroupKind::Sp_Z:
                if (n < 2) bad("n must be at least 2");
                break;
            case GroupKind::Sp_O:
                if (n < 2) bad("n must be at least 2");
                if (r < 0 || s < 0 || r + s < 1) bad("need r, s >= 0 and r + s >= 1");
                break;
            case GroupKind::SO_Q:
                if (q < 1 || n < 2 * q) bad("need q >= 1 and n >= 2q");
                if (n == 2) bad("SO(1,1) is a torus, not semisimple");
                if (dim_xm && *dim_xm < 0) bad("dim X_M must be nonnegative");
                break;
        }
    }
};

/// Relative root system with multiplicities (dim g_alpha over R).
inline RootSystem root_data(const GroupSpec& g) {
    g.validate();
    auto scaled = [](RootSystem rs, int d) {
        if (d == 1) return rs;
        for (const auto& r : std::vector<Root>(rs.positive())) rs = rs.with_multiplicity(r, d);
        return rs;
    };
    switch (g.kind) {
        case GroupKind::SL_Z: return build_root_system({Family::A, g.n - 1});
        case GroupKind::SL_O: return scaled(build_root_system({Family::A, g.n - 1}), g.degree());
        case GroupKind::Sp_Z: return build_root_system({Family::C, g.n});
        case GroupKind::Sp_O: return scaled(build_root_system({Family::C, g.n}), g.degree());
        case GroupKind::SO_Q: return build_so_root_system(g.n, g.q);
    }
    throw InvalidGroupSpec("unknown group kind");
}

/// dim X_M: the unit-rank contribution for number rings, 0 over Z, and
/// the caller's value for SO(Q).
inline int dim_xm(const GroupSpec& g) {
    g.validate();
    switch (g.kind) {
        case GroupKind::SL_Z:
        case GroupKind::Sp_Z: return 0;
        case GroupKind::SL_O: return (g.n - 1) * (g.r + g.s - 1);
        case GroupKind::Sp_O: return g.n * (g.r + g.s - 1);
        case GroupKind::SO_Q:
            if (!g.dim_xm) throw MissingAnisotropicDimension(g.name() + ": dim X_M must be supplied");
            return *g.dim_xm;
    }
    return 0;
}

/// Closed forms for dim G/K; SO(Q) via dim X_M + dim U + q.
inline int dim_symmetric(const GroupSpec& g) {
    g.validate();
    const int n = g.n;
    switch (g.kind) {
        case GroupKind::SL_Z: return n * (n + 1) / 2 - 1;
        case GroupKind::SL_O: return g.r * (n * (n + 1) / 2 - 1) + g.s * (n * n - 1);
        case GroupKind::Sp_Z: return n * n + n;
        case GroupKind::Sp_O: return g.r * n * (n + 1) + g.s * n * (2 * n + 1);
        case GroupKind::SO_Q: {
            const int q = g.q;
            return dim_xm(g) + q * (q - 1) + q * (n - 2 * q) + q;
        }
    }
    return 0;
}

/// Join L_M * L_1 * ... * L_r: a sphere of dimension dim X_M - 1 (absent
/// when dim X_M = 0) and S^{dim N_i - 1}_+ for each simple root in the
/// standard order.
inline ObstructorShape lemma_a_shape(const RootSystem& rs, int dim_xm_value) {
    ObstructorShape s;
    if (dim_xm_value > 0) s.sphere_dim = dim_xm_value - 1;
    for (int i = 1; i <= rs.rank(); ++i) s.plus_dims.push_back(dim_n_i(rs, i) - 1);
    return s;
}

/// Shape as displayed for each family.  For Sp_2n(O) the display puts a
/// sphere of dimension (n-1)(r+2s)-1 in front; that sphere does not match
/// dim X_M = n(r+s-1) (already at r=1, s=0 it disagrees with Sp_2n(Z)), so
/// the display is reported separately and this function returns the shape
/// with the sphere rebuilt from dim X_M.
inline ObstructorShape obstructor_shape(const GroupSpec& g) {
    g.validate();
    ObstructorShape s;
    const int n = g.n;
    const int d = g.degree();
    switch (g.kind) {
        case GroupKind::SL_Z:
            for (int k = 0; k <= n - 2; ++k) s.plus_dims.push_back(k);
            break;
        case GroupKind::SL_O:
            if (g.sqrt2) {
                s.sphere_dim = n - 2;
                for (int i = 1; i <= n - 1; ++i) s.plus_dims.push_back(2 * i - 1);
            } else {
                for (int p = 2; p <= n; ++p) s.plus_dims.push_back((p - 1) * d + (g.r + g.s - 1) - 1);
            }
            break;
        case GroupKind::Sp_Z:
            for (int k = 0; k <= n - 2; ++k) s.plus_dims.push_back(k);
            s.plus_dims.push_back((n + 2) * (n - 1) / 2);
            break;
        case GroupKind::Sp_O: {
            const int xm = dim_xm(g);
            if (xm > 0) s.sphere_dim = xm - 1;
            for (int i = 1; i <= n - 1; ++i) s.plus_dims.push_back(i * d - 1);
            s.plus_dims.push_back(n * (n + 1) * d / 2 - 1);
            break;
        }
        case GroupKind::SO_Q: {
            const int xm = dim_xm(g);
            const int q = g.q;
            if (xm > 0) s.sphere_dim = xm - 1;
            for (int k = 0; k <= q - 2; ++k) s.plus_dims.push_back(k);
            s.plus_dims.push_back(q * (n - 2 * q) + q * (q - 1) / 2 - 1);
            break;
        }
    }
    return s;
}

/// The Sp_2n(O) shape exactly as displayed, with the (n-1)(r+2s)-1 sphere.
inline ObstructorShape sp_o_displayed_shape(const GroupSpec& g) {
    if (g.kind != GroupKind::Sp_O) throw InvalidGroupSpec("displayed shape only exists for Sp_2n(O)");
    g.validate();
    ObstructorShape s;
    const int d = g.degree();
    if ((g.n - 1) * d > 0) s.sphere_dim = (g.n - 1) * d - 1;
    for (int i = 1; i <= g.n - 1; ++i) s.plus_dims.push_back(i * d - 1);
    s.plus_dims.push_back(g.n * (g.n + 1) * d / 2 - 1);
    return s;
}

struct DimensionReport {
    GroupSpec spec;
    int dim_symmetric = 0;
    ObstructorShape obstructor;
    int m = 0;
    bool identity_holds = false;

    ObstructorShape generic;  // from root data and dim X_M
    int generic_m = 0;
    int root_count_dim = 0;  // dim X_M + sum of dim g_alpha + rank
    bool cross_check = false;

    std::optional<ObstructorShape> displayed;  // Sp_2n(O) only
    std::optional<bool> display_consistent;
};

/// m + 2 = dim G/K, with the root-data count as an independent second path.
inline DimensionReport identity_check(const GroupSpec& g) {
    DimensionReport rep;
    rep.spec = g;
    rep.dim_symmetric = dim_symmetric(g);
    rep.obstructor = obstructor_shape(g);
    rep.m = obstructor_m(rep.obstructor);
    rep.identity_holds = rep.m + 2 == rep.dim_symmetric;

    const RootSystem rs = root_data(g);
    const int xm = dim_xm(g);
    rep.generic = lemma_a_shape(rs, xm);
    rep.generic_m = obstructor_m(rep.generic);
    rep.root_count_dim = xm + dim_positive(rs) + rs.rank();
    rep.cross_check = rep.generic_m == rep.m && rep.root_count_dim == rep.dim_symmetric;

    if (g.kind == GroupKind::Sp_O) {
        rep.displayed = sp_o_displayed_shape(g);
        rep.display_consistent = obstructor_m(*rep.displayed) + 2 == rep.dim_symmetric;
    }
    return rep;
}

/// Every spec of the standard identity grid.
inline std::vector<GroupSpec> catalog_grid() {
    std::vector<GroupSpec> out;
    for (int n = 2; n <= 12; ++n) out.push_back(GroupSpec::sl_z(n));
    for (int n = 2; n <= 8; ++n) out.push_back(GroupSpec::sl_sqrt2(n));
    for (int n = 2; n <= 8; ++n)
        for (int s = 0; 2 * s <= 6; ++s)
            for (int r = 0; r + 2 * s <= 6; ++r)
                if (r + s >= 1) out.push_back(GroupSpec::sl_o(n, r, s));
    for (int n = 2; n <= 10; ++n) out.push_back(GroupSpec::sp_z(n));
    for (int q = 1; q <= 6; ++q)
        for (int n = 2 * q; n <= 14; ++n) {
            if (n == 2) continue;
            for (int xm = 0; xm <= 3; ++xm) out.push_back(GroupSpec::so_q(n, q, xm));
        }
    return out;
}

}  // namespace obdim
