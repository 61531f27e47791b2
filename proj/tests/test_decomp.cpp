#include <catch_amalgamated.hpp>

#include "common.hpp"

using namespace ljv;
using namespace ljv::test;

TEST_CASE("decomposition chain of the running example")
{
    auto dec = decompose(example1());
    REQUIRE(dec.size() == 4);
    CHECK(dec.D[0] == space(kEx1Vars, {"a", "b", "c"}));
    CHECK(dec.D[1] == space(kEx1Vars, {"a", "b"}));
    CHECK(dec.D[2] == space(kEx1Vars, {"b"}));
    CHECK(dec.D[3].dim() == 0);
    CHECK(dec.Delta[1] == space(kEx1Vars, {"c"}));
    CHECK(dec.Delta[2] == space(kEx1Vars, {"a"}));
    CHECK(dec.Delta[3] == space(kEx1Vars, {"b"}));
    CHECK(dec.P[1] == space(kEx1Vars, {"y", "z"}));
    CHECK(dec.P[2] == space(kEx1Vars, {"x", "z-u", "c"}));
    CHECK(dec.P[3] == space(kEx1Vars, {"x-u", "y-u", "a", "c"}));
    CHECK(dec.certificate.all());
}

TEST_CASE("two components sharing a coordinate")
{
    std::vector<std::string> v = {"x1", "x2", "x3"};
    auto dec = decompose(linear(v, {{"x2", "x3"}, {"x1", "x3"}}));
    CHECK(dec.D_tail == space(v, {"x3"}));
    CHECK(dec.Delta[1] == space(v, {"x2"}));
    CHECK(dec.P[1] == space(v, {"x1"}));
    auto g = quadric_generators(dec, 1);
    CHECK(detail::same_up_to_scalar(g, {poly(v, "x1*x2"), poly(v, "x3")}));
}

TEST_CASE("single component")
{
    auto dec = decompose(linear({"a", "b", "c"}, {{"a", "b"}}));
    CHECK(dec.size() == 1);
    CHECK(dec.D[0] == dec.Q[0]);
    CHECK(dec.P[0].dim() == 0);
    auto g = intersection_generators(linear({"a", "b", "c"}, {{"a", "b"}}), dec, 0);
    CHECK(detail::same_up_to_scalar(g, {poly({"a", "b", "c"}, "a"), poly({"a", "b", "c"}, "b")}));
}

TEST_CASE("two hyperplanes")
{
    std::vector<std::string> v = {"a", "b"};
    auto dec = decompose(linear(v, {{"a"}, {"b"}}));
    CHECK(detail::same_up_to_scalar(quadric_generators(dec, 1), {poly(v, "a*b")}));
}

TEST_CASE("quadric generators of the full running example")
{
    auto arr = example1();
    auto dec = decompose(arr);
    auto g = quadric_generators(dec, 3);
    auto want = detail::parse_all({"c*y", "c*z", "a*x", "a*(z-u)", "a*c", "b*(x-u)", "b*(y-u)", "a*b", "b*c"}, kEx1Vars);
    CHECK(g.size() == 9);
    CHECK(detail::same_up_to_scalar(g, want));
    CHECK(quadric_ideal_matches(g, arr.linear_parts()));
}

TEST_CASE("intersection of the first three components")
{
    auto arr = example1();
    auto dec = decompose(arr);
    auto qs = arr.linear_parts();
    std::vector<LinearSpace> first3(qs.begin(), qs.begin() + 3);
    auto printed = detail::parse_all({"b", "a*c", "a*z - a*u", "a*x", "c*z", "c*y"}, kEx1Vars);
    // the printed generators and the computed ones both generate J_1 ∩ J_2 ∩ J_3
    CHECK(quadric_ideal_matches(printed, first3));
    CHECK(quadric_ideal_matches(intersection_generators(arr, dec, 2), first3));
}

TEST_CASE("the l = 2 example has the same zero set as the intersection over small fields")
{
    std::vector<std::string> v = {"x1", "x2", "x3", "x4"};
    auto arr = linear(v, {{"x2", "x3"}, {"x1", "x3"}});
    auto g = quadric_generators(decompose(arr), 1);
    for (int p : {2, 3}) {
        int total = 1;
        for (int i = 0; i < 4; ++i) total *= p;
        for (int m = 0; m < total; ++m) {
            std::vector<long long> x(4);
            for (int i = 0, t = m; i < 4; ++i, t /= p) x[i] = t % p;
            bool zero_g = true;
            for (const auto& f : g) {
                long long val = f.evaluate<long long>(x, [](const Rational& c) { return static_cast<long long>(numerator(c)); });
                if (((val % p) + p) % p) zero_g = false;
            }
            bool on = (x[1] == 0 && x[2] == 0) || (x[0] == 0 && x[2] == 0);
            CHECK(zero_g == on);
        }
    }
}

TEST_CASE("decomposition identities and generator exactness on random arrangements")
{
    for (const auto& arr : random_arrangements(120, 17)) {
        auto dec = decompose(arr);
        auto qs = arr.linear_parts();
        CHECK(dec.certificate.all());
        for (std::size_t i = 1; i < dec.size(); ++i) {
            CHECK(sum(dec.D[i], dec.Delta[i]) == dec.D[i - 1]);
            CHECK(intersect(dec.D[i], dec.Delta[i]).dim() == 0);
            CHECK(sum(dec.P[i], dec.D[i]) == dec.Q[i]);
            CHECK(intersect(dec.P[i], dec.D[i]).dim() == 0);
        }
        for (std::size_t k = 1; k < dec.size(); ++k) {
            std::vector<LinearSpace> prefix(qs.begin(), qs.begin() + static_cast<long>(k + 1));
            auto g = quadric_generators(dec, k);
            // independent check in Sym^2: same degree-2 part as the intersection
            CHECK(quadric_ideal_matches(g, prefix));
            for (const auto& f : g)
                for (const auto& q : prefix) CHECK(in_linear_ideal(f, q));
        }
    }
}

TEST_CASE("axioms hold for the running example")
{
    auto arr = example1();
    auto cert = verify_axioms(arr, decompose(arr));
    CHECK(cert.all());
}
