#include <catch_amalgamated.hpp>

#include <numeric>

#include "common.hpp"

using namespace ljv;
using namespace ljv::test;

TEST_CASE("parsing the running example")
{
    auto arr = example1();
    REQUIRE(arr.size() == 4);
    std::vector<std::size_t> dims;
    for (const auto& c : arr.components) dims.push_back(c.linear.dim());
    CHECK(dims == std::vector<std::size_t>{3, 4, 4, 4});
    CHECK(arr.vars == kEx1Vars);
}

TEST_CASE("text and JSON documents agree")
{
    auto json = parse_arrangement(R"({"vars": ["a","b","c","x","y","z","u"], "components": [
        {"name": "J1", "linear": ["a","b","c"]}, {"name": "J2", "linear": ["y","z","a","b"]},
        {"name": "J3", "linear": ["x","z-u","b","c"]}, {"name": "J4", "linear": ["x-u","y-u","a","c"]}]})");
    auto text = example1();
    REQUIRE(json.size() == text.size());
    for (std::size_t i = 0; i < json.size(); ++i) CHECK(json.components[i].linear == text.components[i].linear);
}

TEST_CASE("round trip through the text form")
{
    auto arr = example1();
    auto again = parse_arrangement(to_text(arr));
    for (std::size_t i = 0; i < arr.size(); ++i) CHECK(again.components[i].linear == arr.components[i].linear);
}

TEST_CASE("single component")
{
    auto arr = parse_arrangement("vars a b c; component Q { linear: a, b; }");
    CHECK(arr.size() == 1);
    CHECK(check_order(arr).pass);
    auto res = find_order(arr);
    CHECK(res.found);
    CHECK(res.order == std::vector<std::size_t>{0});
}

TEST_CASE("nested linear components are rejected")
{
    CHECK_THROWS_AS(parse_arrangement("vars a b; component J1 { linear: a; } component J2 { linear: a, b; }"), InclusionError);
}

TEST_CASE("malformed input reports a location")
{
    try {
        parse_arrangement("vars a b c;\ncomponent J1 { linear: a, b; }\ncomponent J2 { linear: a + ; }\n");
        FAIL("no error");
    }
    catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
    CHECK_THROWS_AS(parse_arrangement("vars a b; component J1 { linear: q; }"), ParseError);
    CHECK_THROWS_AS(parse_arrangement("vars a b; component J1 { linear: a*b; }"), ParseError);
}

TEST_CASE("metadata and extra generators")
{
    auto arr = parse_arrangement("vars a b c d; component C { linear: a; gens: b*d - c^2; meta: depth=2, reg=2, is_CM=true; }"
                                 " component L { linear: b, c; }");
    CHECK(arr.components[0].extra_gens.size() == 1);
    CHECK(*arr.components[0].meta.depth == 2);
    CHECK(*arr.components[0].meta.is_CM);
    CHECK_THROWS(parse_arrangement("vars a b; component C { linear: a; gens: b; }"));
}

TEST_CASE("the running example is linearly joined in the given order")
{
    auto rep = check_order(example1());
    CHECK(rep.pass);
    REQUIRE(rep.witness.size() == 4);
    for (std::size_t k = 1; k < 4; ++k) CHECK(rep.witness[k].has_value());
}

TEST_CASE("two skew lines pass: every pair of linear spaces is linearly joined")
{
    auto arr = linear({"x0", "x1", "x2", "x3"}, {{"x2", "x3"}, {"x0", "x1"}});
    CHECK(check_order(arr).pass);
    CHECK(find_order(arr).found);
}

TEST_CASE("three coordinate lines in the plane fail in every order")
{
    auto arr = linear({"x", "y", "z"}, {{"x"}, {"y"}, {"z"}});
    auto rep = check_order(arr);
    CHECK_FALSE(rep.pass);
    CHECK(rep.failed_at == std::optional<std::size_t>(2));
    auto res = find_order(arr);
    CHECK_FALSE(res.found);
    CHECK(res.definitive);
}

TEST_CASE("order search on a shuffled example")
{
    auto arr = example1().reordered({3, 1, 0, 2});
    CHECK_FALSE(check_order(arr).pass);
    auto res = find_order(arr);
    REQUIRE(res.found);
    CHECK(check_order(arr.reordered(res.order)).pass);
}

TEST_CASE("search budget")
{
    auto arr = linear({"x", "y", "z"}, {{"x"}, {"y"}, {"z"}});
    CHECK_THROWS_AS(find_order(arr, 2), SearchBudgetExceeded);
}

TEST_CASE("witnesses satisfy W_k = L_k ∩ L_witness on random arrangements")
{
    for (const auto& arr : random_arrangements(150, 3)) {
        auto rep = check_order(arr);
        REQUIRE(rep.pass);
        auto qs = arr.linear_parts();
        LinearSpace d = qs[0];
        for (std::size_t k = 1; k < qs.size(); ++k) {
            REQUIRE(rep.witness[k]);
            // in ideal terms: Q_k + Q_j = Q_k + D_{k-1}
            CHECK(sum(qs[k], qs[*rep.witness[k]]) == sum(qs[k], d));
            d = intersect(d, qs[k]);
        }
    }
}

TEST_CASE("check_order is reproducible and order-sensitive on random input")
{
    std::mt19937_64 rng(5);
    for (const auto& arr : random_arrangements(60, 4)) {
        std::vector<std::size_t> perm(arr.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        auto shuffled = arr.reordered(perm);
        auto a = check_order(shuffled), b = check_order(shuffled);
        CHECK(a.pass == b.pass);
        CHECK(a.witness == b.witness);
        auto res = find_order(shuffled);
        REQUIRE(res.found);
        CHECK(check_order(shuffled.reordered(res.order)).pass);
    }
}
