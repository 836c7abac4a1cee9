// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "obdim/catalog.hpp"
#include "obdim/complexes.hpp"
#include "obdim/lemmakey.hpp"
#include "obdim/matrixmodels.hpp"
#include "obdim/rootsys.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace obdim;

namespace {

using clock_type = std::chrono::steady_clock;

constexpr double kLemmaKeySeconds = 30.0;
constexpr double kDivergenceSeconds = 120.0;
constexpr int kLemma25Samples = 100;
constexpr std::uint64_t kLemma25Seed = 2025;
constexpr std::uint64_t kSlopeSeed = 314159;

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body) {
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("[%s] %d %s: %s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), o.detail.c_str());
    std::fflush(stdout);
}

std::vector<RootSystemType> lemma_key_types() {
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

Outcome lemma_key() {
    const auto t0 = clock_type::now();
    std::uint64_t labelings = 0, witnessed = 0;
    std::string first_bad;
    for (const auto& t : lemma_key_types()) {
        const auto rep = exhaustive_verify(build_root_system(t), false);
        labelings += rep.labelings;
        if (rep.pass()) witnessed += rep.labelings;
        if (!rep.pass() && first_bad.empty())
            first_bad = to_string(t) + " " + rep.first_failure.value_or("");
    }
    const double secs = seconds_since(t0);
    std::ostringstream os;
    os << lemma_key_types().size() << " types, " << labelings << " labelings, " << witnessed << " witnessed, "
       << labelings - witnessed << " failures, " << secs << "s (limit " << kLemmaKeySeconds << "s)";
    if (!first_bad.empty()) os << "; first failure " << first_bad;
    return {witnessed == labelings && secs < kLemmaKeySeconds, os.str()};
}

Outcome dimensions() {
    int checked = 0, bad = 0;
    std::string first_bad;
    auto check = [&](const GroupSpec& g, std::optional<int> want_m, std::optional<int> want_dim) {
        const auto r = identity_check(g);
        ++checked;
        bool ok = r.identity_holds && r.cross_check;
        if (want_m) ok = ok && r.m == *want_m;
        if (want_dim) ok = ok && r.dim_symmetric == *want_dim;
        if (!ok) {
            ++bad;
            if (first_bad.empty()) first_bad = g.name();
        }
    };
    for (int n = 2; n <= 12; ++n) check(GroupSpec::sl_z(n), (n * n + n) / 2 - 3, (n * n + n) / 2 - 1);
    for (int n = 2; n <= 8; ++n) check(GroupSpec::sl_sqrt2(n), n * n + n - 4, n * n + n - 2);
    for (int n = 2; n <= 8; ++n)
        for (int s = 0; 2 * s <= 6; ++s)
            for (int r = 0; r + 2 * s <= 6; ++r)
                if (r + s >= 1) check(GroupSpec::sl_o(n, r, s), std::nullopt, r * ((n * n + n) / 2 - 1) + s * (n * n - 1));
    for (int n = 2; n <= 10; ++n) check(GroupSpec::sp_z(n), std::nullopt, n * n + n);
    for (int q = 1; q <= 6; ++q)
        for (int n = std::max(2 * q, 3); n <= 14; ++n)
            for (int xm = 0; xm <= 3; ++xm) check(GroupSpec::so_q(n, q, xm), std::nullopt, std::nullopt);
    std::ostringstream os;
    os << checked << " group specs, " << bad << " mismatches (exact integer equality)";
    if (!first_bad.empty()) os << "; first " << first_bad;
    return {bad == 0, os.str()};
}

Outcome complex_suite() {
    std::ostringstream os;
    bool ok = true;
    const auto c3 = build_C(3);
    const auto f = c3.f_vector();
    const auto betti = homology(c3);
    const long chi = reduced_euler(f) + 1;
    const bool c3_ok = f == std::vector<std::size_t>{6, 12, 6} && chi == 0 && betti == std::vector<long>{1, 1, 0};
    ok = ok && c3_ok;
    os << "C(3) f=(" << f[0] << "," << f[1] << "," << f[2] << ") chi=" << chi << " betti=(" << betti[0] << "," << betti[1]
       << "," << betti[2] << ")";

    std::size_t preimages = 0, bad_pre = 0;
    for (int n = 2; n <= 5; ++n) {
        const auto c = build_C(n);
        for (const auto& layer : c.faces()) {
            if (layer.front().size() > 4) break;
            for (const auto& s : layer) {
                std::vector<Position> arrows;
                for (int v : s) arrows.push_back(c.vertices()[static_cast<std::size_t>(v)]);
                const auto pre = sc_preimage(n, arrows);
                const int k = static_cast<int>(s.size()) - 1;
                std::vector<long> want(static_cast<std::size_t>(k + 1), 0);
                want[0] += 1;
                want[static_cast<std::size_t>(k)] += 1;
                ++preimages;
                if (pre.maximal().size() != (std::size_t{1} << (k + 1)) || homology(pre) != want) ++bad_pre;
            }
        }
    }
    ok = ok && bad_pre == 0;
    os << "; " << preimages << " SC-preimages (n<=5, k<=3), " << bad_pre << " bad";

    int l_ok = 0;
    for (int n = 2; n <= 6; ++n) {
        const auto v = verify_L(extract_L(n));
        const ObstructorShape& s = v.shape;
        const bool good = v.ok() && s == obstructor_shape(GroupSpec::sl_z(n)) && 2 * obstructor_m(s) == n * n + n - 6;
        if (good) ++l_ok;
    }
    ok = ok && l_ok == 5;
    os << "; L(n) iso to S^0_+*...*S^{n-2}_+ with m=n^2/2+n/2-3 for " << l_ok << "/5 of n=2..6";
    return {ok, os.str()};
}

Outcome example_matrices() {
    using SP = SignedPosition;
    bool ok = true;
    for (long big : {7L, 1000L, 1000000007L}) {
        const Rational R(big);
        const auto a = psi_sl(3, ConePoint::from_values({SP{{1, 2}, 1}, SP{{2, 3}, 1}, SP{{1, 3}, 1}}, {R, 1, 1}),
                              PsiDomain::SC);
        const auto bpt = ConePoint::from_values({SP{{1, 3}, -1}, SP{{3, 2}, 1}}, {R, 1});
        const ExactMatrix bounded{{1, -1, -1}, {0, 0, -1}, {0, 1, 1}};
        const ExactMatrix far{{1, -R - 1, -1}, {0, 0, -1}, {0, 1, 1}};
        ok = ok && a.inverse() * naive_map(3, bpt) == bounded;
        ok = ok && a.inverse() * psi_sl(3, bpt, PsiDomain::SC) == far;
    }
    for (long x : {0L, 1L, 4L, 9L})
        for (long y : {0L, 3L, 10L}) {
            const auto g = psi_sl(3, ConePoint::from_values({SP{{2, 3}, 1}, SP{{3, 1}, 1}}, {Rational(x), Rational(y)}),
                                  PsiDomain::SC);
            const ExactMatrix want{{1, 0, 0}, {Rational(x * y), 1, x}, {y, 0, 1}};
            ok = ok && g == want;
        }
    return {ok, "A^-1 B = [[1,-1,-1],[0,0,-1],[0,1,1]], A^-1 B' = [[1,-R-1,-1],[0,0,-1],[0,1,1]] for R in "
                "{7,1000,1000000007}; cone on <23+,31+> gives [[1,0,0],[xy,1,x],[y,0,1]] on a 4x3 grid"};
}

Outcome divergence() {
    const auto t0 = clock_type::now();
    const HarnessConfig cfg;  // radii 2^0..2^20, margin 10 log 2, 8 samples
    std::ostringstream os;
    bool ok = true;
    struct Job {
        ConeMap map;
        SignedComplex domain;
        PairMode mode;
    };
    std::vector<Job> jobs = {{heisenberg_cone_map(3), heisenberg_domain(3), PairMode::All},
                             {heisenberg_cone_map(4), heisenberg_domain(4), PairMode::Maximal},
                             {psi_cone_map(3), psi_domain(3), PairMode::All},
                             {psi_cone_map(4), psi_domain(4), PairMode::Maximal}};
    for (const auto& job : jobs) {
        const auto d = divergence_suite(job.map, job.domain, job.mode, cfg);
        const auto p = properness_test(job.map, job.domain, cfg);
        double worst = HUGE_VAL;
        for (const auto& r : d.pairs) worst = std::min(worst, r.growth);
        ok = ok && d.pass() && p.pass();
        os << job.map.name << "(n=" << job.map.n << ") " << d.pairs.size() << " pairs/" << d.failures() << " fail, "
           << p.rays.size() << " rays/" << p.failures() << " fail, min growth " << worst / std::log(2.0) << " log2; ";
    }
    const double secs = seconds_since(t0);
    os << secs << "s (limit " << kDivergenceSeconds << "s, margin " << cfg.margin / std::log(2.0) << " log2)";
    return {ok && secs < kDivergenceSeconds, os.str()};
}

Outcome lemma25() {
    std::ostringstream os;
    bool ok = true;
    for (int n : {3, 4}) {
        Rational prev = -1;
        os << "n=" << n << ":";
        Rational last = 0;
        for (long m = 10; m <= 1000000; m *= 10) {
            const auto s = lemma25_experiment(n, m, kLemma25Samples, kLemma25Seed);
            if (!(s.min_max_entry > prev)) ok = false;
            prev = s.min_max_entry;
            last = s.min_max_entry;
            os << " " << s.min_max_entry.str();
        }
        if (!(last > 1000)) ok = false;
        os << "; ";
    }
    os << kLemma25Samples << " samples per M, strictly increasing and > 10^3 at M=10^6";
    return {ok, os.str()};
}

Outcome adjoint() {
    bool ok = true;
    const auto id = ExactMatrix::identity(3);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            for (int k = 1; k <= 3; ++k)
                for (int l = 1; l <= 3; ++l)
                    if (i != j && k != l) ok = ok && adjoint_component(id, i, j, k, l) == Rational((i == k && j == l) ? 1 : 0);
    for (long t : {-2L, 1L, 5L}) {
        const auto g = exp_nilpotent(Rational(t) * ExactMatrix::unit(3, 2, 1));
        ok = ok && adjoint_component(g, 1, 3, 2, 3) == Rational(t);
    }
    const auto d = ExactMatrix::diagonal({Rational(2), Rational(3, 7), Rational(7, 6)});
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            if (i != j) ok = ok && adjoint_component(d, i, j, i, j) == d.at1(i, i) / d.at1(j, j);
    int linear = 0;
    for (const auto& inst : lhs_spot_check_sl3(20, kSlopeSeed)) linear += inst.linear ? 1 : 0;
    ok = ok && linear == 20;
    std::ostringstream os;
    os << "identity, exp(tE21) E13->E23 = t, diagonal d_i/d_j exact; adjoint slope linear in " << linear
       << "/20 seeded SL_3 instances";
    return {ok, os.str()};
}

}  // namespace

int main() {
    report(1, "Lemma key exhaustive verification", lemma_key);
    report(2, "Dimension identities m+2 = dim G/K", dimensions);
    report(3, "Complex suite (C, SC, L)", complex_suite);
    report(4, "3x3 matrix regressions", example_matrices);
    report(5, "Divergence and properness", divergence);
    report(6, "Split-map separation growth", lemma25);
    report(7, "Adjoint spot checks", adjoint);
    std::printf("%d of 7 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
