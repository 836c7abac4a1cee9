// obdim: command-line front end for the root system, complex and catalog checks.

#include "obdim/catalog.hpp"
#include "obdim/complexes.hpp"
#include "obdim/json.hpp"
#include "obdim/lemmakey.hpp"
#include "obdim/matrixmodels.hpp"
#include "obdim/rootsys.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace obdim;

namespace {

struct Options {
    bool json_out = false;
    std::string type;
    bool all = false;
    int so_n = 0, so_q = 0;
    int n = 3;
    std::string complex_kind = "cuspidal";
    bool betti = false;
    std::string group = "sl", ring = "Z", places;
    int q = 1;
    std::optional<int> dim_xm;
    std::string map = "heisenberg", mode;
    int samples = 8;
    std::uint64_t seed = 20240611;
    int lemma_samples = 100;
};

std::string tuple_str(const std::vector<long>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::string tuple_str(const std::vector<std::size_t>& v) {
    return tuple_str(std::vector<long>(v.begin(), v.end()));
}

// (dim G/K, [k_1,...,k_r], m, identity) with a leading "S^a*" when a sphere factor exists
std::string dims_line(const DimensionReport& r) {
    std::ostringstream os;
    os << "(" << r.dim_symmetric << ", ";
    if (r.obstructor.sphere_dim) os << "S^" << *r.obstructor.sphere_dim << "*";
    os << "[";
    for (std::size_t i = 0; i < r.obstructor.plus_dims.size(); ++i) os << (i ? "," : "") << r.obstructor.plus_dims[i];
    os << "], " << r.m << ", " << (r.identity_holds ? "true" : "false") << ")";
    return os.str();
}

void emit(const std::string& name, const json& j, const Options& o) {
    if (o.json_out) std::cout << j.dump(2) << "\n";
    if (const char* dir = std::getenv("OBDIM_OUT_DIR")) {
        std::filesystem::create_directories(dir);
        std::ofstream(std::filesystem::path(dir) / (name + ".json")) << j.dump(2) << "\n";
    }
}

std::pair<int, int> parse_places(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw InvalidGroupSpec("--places expects r,s");
    return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
}

int cmd_rootsys(const Options& o) {
    const RootSystem rs = o.so_n > 0 ? build_so_root_system(o.so_n, o.so_q) : build_root_system(parse_type(o.type));
    if (!o.json_out) {
        std::cout << rs.label() << ": rank " << rs.rank() << ", " << rs.positive().size() << " positive roots, dim N "
                  << dim_positive(rs) << "\n";
        for (int i = 0; i < rs.rank(); ++i) std::cout << "  simple " << i << ": " << format_root(rs.simple(i)) << "\n";
        std::cout << "  highest root " << format_root(highest_root(rs)) << "\n";
    }
    emit("rootsys", to_json(rs), o);
    return 0;
}

int cmd_lemma_key(const Options& o) {
    std::vector<std::string> types;
    if (o.all) {
        for (int n = 1; n <= 8; ++n) types.push_back("A" + std::to_string(n));
        for (int n = 2; n <= 8; ++n) types.push_back("B" + std::to_string(n));
        for (int n = 2; n <= 8; ++n) types.push_back("C" + std::to_string(n));
        for (int n = 4; n <= 8; ++n) types.push_back("D" + std::to_string(n));
        for (const char* t : {"E6", "E7", "E8", "F4", "G2"}) types.push_back(t);
        for (int n = 1; n <= 8; ++n) types.push_back("BC" + std::to_string(n));
    } else {
        types.push_back(o.type);
    }
    bool ok = true;
    json arr = json::array();
    for (const auto& t : types) {
        const auto rep = exhaustive_verify(build_root_system(parse_type(t)), false);
        ok = ok && rep.pass();
        if (!o.json_out)
            std::cout << rep.type << ": " << rep.labelings << " labelings, " << rep.witnesses << " witnesses, "
                      << (rep.pass() ? "PASS" : "FAIL") << " (" << rep.total_seconds << "s)"
                      << (rep.first_failure ? " first failure " + *rep.first_failure : "") << "\n";
        arr.push_back(to_json(rep));
    }
    emit("lemma-key", o.all ? arr : arr[0], o);
    return ok ? 0 : 1;
}

template <class V>
void print_complex(const std::string& name, const SimplicialComplex<V>& c, const Options& o) {
    if (!o.json_out) {
        std::cout << name << ": " << c.vertex_count() << " vertices, " << c.maximal().size() << " maximal simplices, f-vector "
                  << tuple_str(c.f_vector());
        if (o.betti) std::cout << ", betti " << tuple_str(homology(c));
        std::cout << "\n";
    }
}

int cmd_complex(const Options& o) {
    json j;
    bool ok = true;
    if (o.complex_kind == "cuspidal") {
        const auto c = build_C(o.n);
        print_complex("C(" + std::to_string(o.n) + ")", c, o);
        j = to_json(c);
        j["f_vector"] = c.f_vector();
        if (o.betti) j["betti"] = homology(c);
    } else if (o.complex_kind == "signed") {
        const auto c = build_SC(build_C(o.n));
        print_complex("SC(" + std::to_string(o.n) + ")", c, o);
        j = to_json(c);
        if (o.betti) j["betti"] = homology(c);
    } else if (o.complex_kind == "L") {
        const auto l = extract_L(o.n);
        const auto v = verify_L(l);
        ok = v.ok();
        print_complex("L(" + std::to_string(o.n) + ")", l.complex, o);
        if (!o.json_out)
            std::cout << "  shape " << v.shape.str() << ", m " << obstructor_m(v.shape) << ", subcomplex of SC "
                      << (v.subcomplex_of_sc ? "yes" : "no") << ", isomorphic " << (v.isomorphic ? "yes" : "no") << ", "
                      << (ok ? "PASS" : "FAIL") << "\n";
        j = to_json(l.complex);
        j["f_vector"] = l.complex.f_vector();
        j["shape"] = to_json(v.shape);
        j["m"] = obstructor_m(v.shape);
        j["isomorphic"] = v.isomorphic;
        j["subcomplex_of_sc"] = v.subcomplex_of_sc;
        if (o.betti) j["betti"] = homology(l.complex);
    }
    emit("complex", j, o);
    return ok ? 0 : 1;
}

GroupSpec spec_from(const Options& o) {
    if (o.group == "sl") {
        if (o.ring == "Z") return GroupSpec::sl_z(o.n);
        if (o.ring == "sqrt2") return GroupSpec::sl_sqrt2(o.n);
        if (o.ring == "O") {
            const auto [r, s] = parse_places(o.places);
            return GroupSpec::sl_o(o.n, r, s);
        }
    } else if (o.group == "sp") {
        if (o.ring == "Z") return GroupSpec::sp_z(o.n);
        if (o.ring == "O") {
            const auto [r, s] = parse_places(o.places);
            return GroupSpec::sp_o(o.n, r, s);
        }
    } else if (o.group == "so") {
        return GroupSpec::so_q(o.n, o.q, o.dim_xm);
    }
    throw InvalidGroupSpec("unsupported --group/--ring combination " + o.group + "/" + o.ring);
}

int cmd_dims(const Options& o) {
    std::vector<GroupSpec> specs = o.all ? catalog_grid() : std::vector<GroupSpec>{spec_from(o)};
    bool ok = true;
    json arr = json::array();
    for (const auto& g : specs) {
        const auto r = identity_check(g);
        const bool good = r.identity_holds && r.cross_check;
        ok = ok && good;
        if (!o.json_out) {
            std::cout << g.name() << " " << dims_line(r) << " " << r.obstructor.str() << (good ? " PASS" : " FAIL");
            if (r.displayed)
                std::cout << "; displayed " << r.displayed->str() << (*r.display_consistent ? "" : " (inconsistent)");
            std::cout << "\n";
        }
        arr.push_back(to_json(r));
    }
    emit("dims", o.all ? arr : arr[0], o);
    return ok ? 0 : 1;
}

int cmd_diverge(const Options& o) {
    HarnessConfig cfg;
    cfg.samples = o.samples;
    cfg.seed = o.seed;
    ConeMap map;
    SignedComplex domain;
    if (o.map == "heisenberg") {
        map = heisenberg_cone_map(o.n);
        domain = heisenberg_domain(o.n);
    } else if (o.map == "psi") {
        map = psi_cone_map(o.n);
        domain = psi_domain(o.n);
    } else {
        throw CLI::ValidationError("--map", "expected heisenberg or psi");
    }
    PairMode mode = o.n <= 3 ? PairMode::All : PairMode::Maximal;
    if (o.mode == "all") mode = PairMode::All;
    if (o.mode == "maximal") mode = PairMode::Maximal;
    const auto d = divergence_suite(map, domain, mode, cfg);
    const auto p = properness_test(map, domain, cfg);
    const bool ok = d.pass() && p.pass();
    if (!o.json_out)
        std::cout << map.name << " n=" << o.n << ": " << d.pairs.size() << " pairs, " << d.failures() << " divergence failures, "
                  << p.rays.size() << " rays, " << p.failures() << " properness failures, " << (ok ? "PASS" : "FAIL") << "\n";
    emit("diverge", json{{"divergence", to_json(d)}, {"properness", to_json(p)}}, o);
    return ok ? 0 : 1;
}

int cmd_lemma25(const Options& o) {
    json arr = json::array();
    Rational prev = -1;
    bool ok = true;
    for (long m = 10; m <= 1000000; m *= 10) {
        const auto s = lemma25_experiment(o.n, m, o.lemma_samples, o.seed);
        ok = ok && s.min_max_entry > prev;
        prev = s.min_max_entry;
        if (!o.json_out) std::cout << "M=" << m << " min max|S| = " << s.min_max_entry.str() << "\n";
        arr.push_back(to_json(s));
    }
    if (!o.json_out) std::cout << (ok ? "PASS" : "FAIL") << "\n";
    emit("lemma25", arr, o);
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"obstructor dimension toolkit"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json_out, "print JSON instead of text");

    auto* rs = app.add_subcommand("rootsys", "root system data");
    rs->add_option("--type", o.type, "type such as A3, BC2, E8");
    rs->add_option("--so-n", o.so_n, "relative roots of SO(n) with Witt index --so-q");
    rs->add_option("--so-q", o.so_q);

    auto* lk = app.add_subcommand("lemma-key", "exhaustive key-lemma verification");
    auto* lk_type = lk->add_option("--type", o.type);
    lk->add_flag("--all", o.all)->excludes(lk_type);

    auto* cx = app.add_subcommand("complex", "cuspidal, signed and L complexes");
    auto kind = [&o](const std::string& k) {
        return [&o, k](int n) {
            o.complex_kind = k;
            o.n = n;
        };
    };
    auto* cx_c = cx->add_option_function<int>("--cuspidal", kind("cuspidal"), "C(n)")->check(CLI::Range(2, 7));
    auto* cx_s = cx->add_option_function<int>("--signed", kind("signed"), "SC(C(n))")->check(CLI::Range(2, 5));
    auto* cx_l = cx->add_option_function<int>("--L", kind("L"), "L(n)")->check(CLI::Range(2, 7));
    cx_c->excludes(cx_s)->excludes(cx_l);
    cx_s->excludes(cx_l);
    cx->add_flag("--betti", o.betti);

    auto* dm = app.add_subcommand("dims", "dimension identity m + 2 = dim G/K");
    dm->add_option("--group", o.group)->check(CLI::IsMember({"sl", "sp", "so"}));
    dm->add_option("--n", o.n);
    dm->add_option("--ring", o.ring)->check(CLI::IsMember({"Z", "O", "sqrt2"}));
    dm->add_option("--places", o.places, "r,s");
    dm->add_option("--q", o.q);
    dm->add_option("--dim-xm", o.dim_xm);
    dm->add_flag("--all", o.all);

    auto* dv = app.add_subcommand("diverge", "divergence and properness harness");
    dv->add_option("--map", o.map)->check(CLI::IsMember({"heisenberg", "psi"}));
    dv->add_option("--n", o.n)->check(CLI::Range(2, 5));
    dv->add_option("--mode", o.mode)->check(CLI::IsMember({"all", "maximal"}));
    dv->add_option("--samples", o.samples);
    dv->add_option("--seed", o.seed);

    auto* lm = app.add_subcommand("lemma25", "growth of S(U, Lambda) against M");
    lm->add_option("--n", o.n)->check(CLI::Range(2, 6));
    lm->add_option("--samples", o.lemma_samples);
    lm->add_option("--seed", o.seed);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*rs) {
            if (o.type.empty() && o.so_n == 0) throw CLI::ValidationError("rootsys", "--type or --so-n is required");
            return cmd_rootsys(o);
        }
        if (*lk) {
            if (o.type.empty() && !o.all) throw CLI::ValidationError("lemma-key", "--type or --all is required");
            return cmd_lemma_key(o);
        }
        if (*cx) return cmd_complex(o);
        if (*dm) return cmd_dims(o);
        if (*dv) return cmd_diverge(o);
        if (*lm) return cmd_lemma25(o);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
