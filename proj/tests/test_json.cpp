#include "obdim/json.hpp"

#include <gtest/gtest.h>

using namespace obdim;

TEST(Json, RootSystem) {
    const auto j = to_json(build_root_system({Family::C, 2}));
    EXPECT_EQ(j["family"], "C");
    EXPECT_EQ(j["rank"], 2);
    EXPECT_EQ(j["simple"], json::parse("[[1,0],[0,1]]"));
    EXPECT_EQ(j["positives"].size(), 4u);
    EXPECT_EQ(j["multiplicity"].size(), 4u);
    EXPECT_EQ(j["multiplicity"]["0"], 1);
    const auto so = to_json(build_so_root_system(9, 3));
    int total = 0;
    for (const auto& [k, m] : so["multiplicity"].items()) total += m.get<int>();
    EXPECT_EQ(total, 3 * 2 + 3 * 3);
}

TEST(Json, Complex) {
    const auto j = to_json(build_C(3));
    EXPECT_EQ(j["vertices"].size(), 6u);
    EXPECT_EQ(j["vertices"][0], "1,2");
    EXPECT_EQ(j["maximal"].size(), 6u);
    const auto l = to_json(extract_L(2).complex);
    EXPECT_EQ(l["vertices"], json::parse(R"(["1,2+","1,2-","2,1+"])"));
}

TEST(Json, Reports) {
    const auto d = to_json(identity_check(GroupSpec::sl_z(3)));
    EXPECT_EQ(d["dim_symmetric"], 5);
    EXPECT_EQ(d["m"], 3);
    EXPECT_EQ(d["identity_holds"], true);
    EXPECT_EQ(d["obstructor"]["plus_dims"], json::parse("[0,1]"));
    EXPECT_TRUE(d["obstructor"]["sphere_dim"].is_null());

    const auto k = to_json(exhaustive_verify(build_root_system({Family::A, 2})));
    EXPECT_EQ(k["labelings"], 3);
    EXPECT_EQ(k["pass"], true);

    HarnessConfig cfg;
    cfg.samples = 2;
    const auto r = to_json(divergence_suite(heisenberg_cone_map(3), heisenberg_domain(3), PairMode::Maximal, cfg));
    EXPECT_EQ(r["verdict"], "PASS");
    EXPECT_EQ(r["pairs"][0]["D"].size(), 21u);

    const auto s = to_json(lemma25_experiment(2, 10, 4, 1));
    EXPECT_EQ(s["M"], 10);
}
