#include <catch_amalgamated.hpp>

#include "common.hpp"

using namespace ljv;
using namespace ljv::test;

TEST_CASE("intersection of two components of the running example")
{
    auto d = intersect(space(kEx1Vars, {"a", "b", "c"}), space(kEx1Vars, {"y", "z", "a", "b"}));
    CHECK(d == space(kEx1Vars, {"a", "b"}));
}

TEST_CASE("complement by pivot exclusion")
{
    auto b = space(kEx1Vars, {"b"});
    auto q = space(kEx1Vars, {"x", "z-u", "b", "c"});
    auto c = complement(b, q);
    CHECK(c == space(kEx1Vars, {"x", "z-u", "c"}));
    CHECK(sum(b, c) == q);
    CHECK(intersect(b, c).dim() == 0);
}

TEST_CASE("identity cases")
{
    auto a = space(kEx1Vars, {"a+b", "x-2*u"});
    CHECK(intersect(a, a) == a);
    CHECK(sum(a, LinearSpace(kEx1Vars)) == a);
    CHECK(complement(a, a).dim() == 0);
}

TEST_CASE("complement of a space not contained in the target throws")
{
    CHECK_THROWS_AS(complement(space(kEx1Vars, {"x"}), space(kEx1Vars, {"a"})), NotASubspace);
}

TEST_CASE("mismatched ambients throw")
{
    CHECK_THROWS_AS(sum(space({"a", "b"}, {"a"}), space({"a", "c"}, {"a"})), AmbientError);
}

TEST_CASE("reduction modulo a linear ideal")
{
    CHECK(linear_ideal_reduce(poly(kEx1Vars, "a*x"), space(kEx1Vars, {"a", "b", "c"})).is_zero());
    CHECK(linear_ideal_reduce(poly(kEx1Vars, "x*z"), space(kEx1Vars, {"z-u"})) == poly(kEx1Vars, "x*u"));
    CHECK(in_linear_ideal(poly(kEx1Vars, "b*(y-u)"), space(kEx1Vars, {"x-u", "y-u", "a", "c"})));
    CHECK_FALSE(in_linear_ideal(poly(kEx1Vars, "b*y"), space(kEx1Vars, {"x-u", "y-u", "a", "c"})));
}

TEST_CASE("reduction agrees with substitution at random points")
{
    // x*z modulo (z - u) must equal x*z evaluated on z = u
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(-9, 9);
    auto r = linear_ideal_reduce(poly(kEx1Vars, "x*z + a*z^2 - 3*u*z"), space(kEx1Vars, {"z-u"}));
    for (int k = 0; k < 20; ++k) {
        std::vector<Rational> pt;
        for (std::size_t i = 0; i < kEx1Vars.size(); ++i) pt.push_back(Rational(d(rng)));
        pt[5] = pt[6];
        auto lhs = poly(kEx1Vars, "x*z + a*z^2 - 3*u*z").evaluate<Rational>(pt, [](const Rational& q) { return q; });
        auto rhs = r.evaluate<Rational>(pt, [](const Rational& q) { return q; });
        CHECK(lhs == rhs);
    }
}

TEST_CASE("projection along a complement")
{
    auto a = space(kEx1Vars, {"x", "z-u"});
    auto b = space(kEx1Vars, {"u"});
    auto p = project_along(form(kEx1Vars, "x+z"), a, b);
    CHECK(proportional(p, form(kEx1Vars, "x+z-u")));
}

TEST_CASE("dimension formula and complements on random subspaces")
{
    std::mt19937_64 rng(11);
    std::vector<std::string> vars = {"x1", "x2", "x3", "x4", "x5", "x6"};
    std::uniform_int_distribution<int> coef(-2, 2);
    std::uniform_int_distribution<int> count(0, 4);
    auto draw = [&]() {
        std::vector<LinearForm> rows(count(rng), LinearForm(vars.size()));
        for (auto& r : rows)
            for (auto& x : r) x = coef(rng);
        return LinearSpace(vars, rows);
    };
    for (int k = 0; k < 200; ++k) {
        auto a = draw(), b = draw();
        auto s = sum(a, b), i = intersect(a, b);
        CHECK(s.dim() + i.dim() == a.dim() + b.dim());
        CHECK(a.contains(i));
        CHECK(b.contains(i));
        auto c = complement(i, a);
        CHECK(sum(i, c) == a);
        CHECK(c.dim() + i.dim() == a.dim());
        // every intersection vector found by brute force over small combinations lies in i
        for (const auto& v : a.basis())
            if (b.contains(v)) CHECK(i.contains(v));
    }
}

TEST_CASE("kernel vectors annihilate the matrix")
{
    std::vector<std::vector<Rational>> m = {{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 1, 0}};
    auto ker = kernel(m, 4);
    CHECK(ker.size() == 4 - matrix_rank(m, 4));
    for (const auto& c : ker)
        for (const auto& row : m) {
            Rational s = 0;
            for (std::size_t j = 0; j < 4; ++j) s += row[j] * c[j];
            CHECK(s == 0);
        }
}

TEST_CASE("rank over a prime field")
{
    using F = ModP<7>;
    std::vector<std::vector<F>> m = {{F(1), F(2)}, {F(3), F(6)}};
    CHECK(matrix_rank(m, 2) == 1);
    std::vector<std::vector<F>> n = {{F(1), F(2)}, {F(3), F(5)}};
    CHECK(matrix_rank(n, 2) == 2);
}

TEST_CASE("polynomial products and printing")
{
    auto p = product(kEx1Vars, form(kEx1Vars, "b"), form(kEx1Vars, "x-u"));
    CHECK(p == poly(kEx1Vars, "b*x - b*u"));
    CHECK(p.degree() == 2);
    CHECK(poly(kEx1Vars, "(a+b)^2") == poly(kEx1Vars, "a^2 + 2*a*b + b^2"));
}
