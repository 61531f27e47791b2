#include <catch_amalgamated.hpp>

#include "common.hpp"

using namespace ljv;
using namespace ljv::test;

TEST_CASE("invariants of the running example")
{
    auto arr = example1();
    auto dec = decompose(arr);
    auto dr = depth_reg(arr, dec);
    CHECK(dr.depth == 3);
    CHECK(dr.reg == 2);
    auto cc = conn_and_cd(arr, dec);
    CHECK(cc.c_affine == 2);
    CHECK(cc.c_proj == 1);
    CHECK(cc.cd == 4);
    CHECK(ara_linear(arr, dec, build_tableau(dec)) == 4);
    auto r = invariants(arr, dec);
    CHECK(r.projdim == 4);
    CHECK(*r.ara == 4);
}

TEST_CASE("a single linear space of codimension 2")
{
    auto arr = linear({"x1", "x2", "x3", "x4"}, {{"x1", "x2"}});
    auto dec = decompose(arr);
    auto dr = depth_reg(arr, dec);
    CHECK(dr.depth == 2);
    CHECK(dr.reg == 1);
    CHECK(ara_linear(arr, dec, build_tableau(dec)) == 2);
    CHECK(conn_and_cd(arr, dec).cd == 2);
    CHECK(conn_and_cd(arr, dec).c_affine == 1);
}

TEST_CASE("two planes meeting in a line, against the oracle")
{
    std::vector<std::string> v = {"x1", "x2", "x3", "x4"};
    auto arr = linear(v, {{"x1"}, {"x2"}});
    auto dec = decompose(arr);
    CHECK(depth_reg(arr, dec).depth == 3);
    MonomialIdeal mi{v, {0b0011}};
    CHECK(oracle_invariants(mi).depth == 3);
}

TEST_CASE("Cohen-Macaulay verdicts")
{
    auto arr = example1();
    auto v = cm_check(arr, decompose(arr));
    REQUIRE(v.cm);
    CHECK_FALSE(*v.cm);

    std::vector<std::string> w = {"x1", "x2", "x3", "x4"};
    auto planes = linear(w, {{"x1", "x2"}, {"x1", "x3"}});
    auto v2 = cm_check(planes, decompose(planes));
    REQUIRE(v2.cm);
    CHECK(*v2.cm);
    MonomialIdeal mi{w, {0b0001, 0b0110}};
    CHECK(oracle_invariants(mi).depth == 2);

    // three coordinate planes in 5 variables, each new one meeting the union in a line
    std::vector<std::string> u = {"x1", "x2", "x3", "x4", "x5"};
    auto chain = linear(u, {{"x1", "x2", "x3"}, {"x1", "x2", "x4"}, {"x1", "x3", "x4"}});
    auto v3 = cm_check(chain, decompose(chain));
    REQUIRE(v3.cm);
    CHECK(*v3.cm);
    auto cx = complex_from_facets(u, {0b11000, 0b10100, 0b10010});
    auto oi = oracle_invariants(cx.ideal());
    CHECK(oi.depth == 2);
}

TEST_CASE("extensions keep the depth")
{
    auto arr = example1();
    auto ext = extend_arrangement(arr, {1, 1, 1, 1});
    CHECK(ext.arrangement.vars.size() == 11);
    CHECK(depth_reg(ext.arrangement, decompose(ext.arrangement)).depth == 3);

    auto same = extend_arrangement(arr, {0, 0, 0, 0});
    for (std::size_t i = 0; i < arr.size(); ++i) CHECK(same.arrangement.components[i].linear == arr.components[i].linear);
    CHECK(same.generator_delta.empty());

    std::vector<std::string> v = {"x1", "x2", "x3", "x4"};
    auto planes = linear(v, {{"x1", "x2"}, {"x1", "x3"}});
    auto e2 = extend_arrangement(planes, {1, 0});
    auto before = check_order(planes), after = check_order(e2.arrangement);
    CHECK(after.pass);
    CHECK(after.witness == before.witness);
}

TEST_CASE("non-linear components need metadata")
{
    auto arr = parse_arrangement("vars a b c d; component C { linear: a; gens: b*d - c^2; } component L { linear: b, c; }");
    REQUIRE(check_order(arr).pass);
    CHECK_THROWS_AS(depth_reg(arr, decompose(arr)), MissingMetadata);
    auto ok = parse_arrangement("vars a b c d; component C { linear: a; gens: b*d - c^2; meta: depth=2, reg=2, is_CM=true, dim=2; }"
                                " component L { linear: b, c; }");
    auto dr = depth_reg(ok, decompose(ok));
    CHECK(dr.depth <= 2);
    CHECK(dr.reg == 2);
    CHECK_FALSE(dr.assumptions.empty());
}

TEST_CASE("Ferrer arrangement for (2,1)")
{
    auto f = ferrer({2, 1});
    auto dec = decompose(f.arrangement);
    auto r = invariants(f.arrangement, dec);
    CHECK(r.cd == 2);
    CHECK(r.projdim == 2);
    CHECK(oracle_invariants(f.ideal).projdim == 2);
}

TEST_CASE("four-way identity on random arrangements")
{
    for (const auto& arr : random_arrangements(100, 29)) {
        auto dec = decompose(arr);
        auto r = invariants(arr, dec);
        REQUIRE(r.ara);
        CHECK(*r.ara == r.projdim);
        CHECK(r.cd == r.projdim);
        CHECK(r.projdim == r.n - r.depth);
        CHECK(r.conn_dim_affine == r.depth - 1);
        CHECK(r.reg == 2);
    }
}

TEST_CASE("JSON report")
{
    auto arr = example1();
    auto j = to_json(invariants(arr, decompose(arr)));
    CHECK(j["depth"] == 3);
    CHECK(j["ara"] == 4);
}
