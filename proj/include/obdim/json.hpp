#pragma once

// JSON views of the library's reports.  Requires nlohmann/json (json.hpp).

#include "obdim/catalog.hpp"
#include "obdim/complexes.hpp"
#include "obdim/lemmakey.hpp"
#include "obdim/matrixmodels.hpp"
#include "obdim/rootsys.hpp"

#include <json.hpp>

#include <cmath>
#include <string>

namespace obdim {

using nlohmann::json;

inline json to_json(const RootSystem& rs) {
    json types = json::array();
    for (const auto& t : rs.type_spec()) types.push_back({{"family", family_name(t.family)}, {"rank", t.rank}});
    json simple = json::array();
    for (int i = 0; i < rs.rank(); ++i) simple.push_back(rs.simple(i));
    json mult = json::object();
    for (std::size_t i = 0; i < rs.positive().size(); ++i) mult[std::to_string(i)] = rs.multiplicities()[i];
    const auto& ts = rs.type_spec();
    return {{"family", ts.size() == 1 ? family_name(ts.front().family) : std::string("reducible")},
            {"rank", rs.rank()},
            {"label", rs.label()},
            {"components", types},
            {"nonstandard", rs.nonstandard()},
            {"simple", simple},
            {"positives", rs.positive()},
            {"multiplicity", mult}};
}

template <class V>
json to_json(const SimplicialComplex<V>& c) {
    json verts = json::array();
    for (const auto& v : c.vertices()) verts.push_back(label(v));
    return {{"vertices", verts}, {"maximal", c.maximal()}};
}

inline json to_json(const ObstructorShape& s) {
    json j = {{"plus_dims", s.plus_dims}, {"text", s.str()}};
    j["sphere_dim"] = s.sphere_dim ? json(*s.sphere_dim) : json(nullptr);
    return j;
}

inline json to_json(const KeyReport& r) {
    json order = json::array();
    for (int i : r.order) order.push_back(i + 1);
    json j = {{"type", r.type},
              {"order", order},
              {"labelings", r.labelings},
              {"witnesses", r.witnesses},
              {"component_witnesses", r.component_witnesses},
              {"constructive_ok", r.constructive_ok},
              {"max_search_seconds", r.max_search_seconds},
              {"total_seconds", r.total_seconds},
              {"pass", r.pass()}};
    j["first_failure"] = r.first_failure ? json(*r.first_failure) : json(nullptr);
    return j;
}

inline json to_json(const DimensionReport& r) {
    json j = {{"group", r.spec.name()},
              {"kind", kind_name(r.spec.kind)},
              {"dim_symmetric", r.dim_symmetric},
              {"obstructor", to_json(r.obstructor)},
              {"m", r.m},
              {"identity_holds", r.identity_holds},
              {"generic", to_json(r.generic)},
              {"generic_m", r.generic_m},
              {"root_count_dim", r.root_count_dim},
              {"cross_check", r.cross_check}};
    if (r.displayed) {
        j["displayed"] = to_json(*r.displayed);
        j["display_consistent"] = *r.display_consistent;
    }
    return j;
}

// Infinite values (never produced for admissible pairs) are written as null.
inline json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

inline json to_json(const PairResult& p) {
    json d = json::array();
    for (double x : p.distance) d.push_back(finite_or_null(x));
    return {{"sigma", p.sigma}, {"tau", p.tau},         {"admissible", p.admissible},
            {"D", d},           {"growth", finite_or_null(p.growth)}, {"verdict", p.pass ? "PASS" : "FAIL"}};
}

inline json to_json(const DivergenceReport& r) {
    json pairs = json::array();
    for (const auto& p : r.pairs) pairs.push_back(to_json(p));
    return {{"map", r.map},
            {"mode", r.mode == PairMode::All ? "all" : "maximal"},
            {"pairs", pairs},
            {"failures", r.failures()},
            {"verdict", r.pass() ? "PASS" : "FAIL"}};
}

inline json to_json(const PropernessReport& r) {
    json rays = json::array();
    for (const auto& ray : r.rays)
        rays.push_back({{"simplex", ray.simplex},
                        {"size", ray.size},
                        {"monotone", ray.monotone},
                        {"growth", ray.growth},
                        {"verdict", ray.pass ? "PASS" : "FAIL"}});
    return {{"map", r.map}, {"rays", rays}, {"failures", r.failures()}, {"verdict", r.pass() ? "PASS" : "FAIL"}};
}

inline json to_json(const Lemma25Stats& s) {
    return {{"n", s.n}, {"M", s.magnitude}, {"samples", s.samples}, {"min_max_entry", s.min_max_entry.str()}};
}

}  // namespace obdim
