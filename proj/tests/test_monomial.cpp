#include <catch_amalgamated.hpp>

#include "common.hpp"

using namespace ljv;
using namespace ljv::test;

namespace {

std::set<std::string> facet_names(const SimplicialComplexModel& cx)
{
    std::set<std::string> out;
    for (auto f : cx.facets) {
        std::string s;
        for (std::size_t i = 0; i < cx.n(); ++i)
            if (f >> i & 1u) s += cx.vertices[i];
        out.insert(s);
    }
    return out;
}

}  // namespace

TEST_CASE("facets of the complex of I_1")
{
    auto cx = parse_squarefree(examples::i1_text());
    CHECK(facet_names(cx) == std::set<std::string>{"abc", "bcd", "bce", "cf"});
    CHECK(cx.minimal_nonfaces.size() == 7);
}

TEST_CASE("parsing forms")
{
    auto a = parse_squarefree("vars: x1 x2 x3; x1*x3");
    CHECK(a.minimal_nonfaces == std::vector<std::uint32_t>{0b101});
    auto b = parse_squarefree("vars: x1 x2 x3; facets: {x1,x2} {x2,x3}");
    CHECK(b.minimal_nonfaces == std::vector<std::uint32_t>{0b101});
    auto c = parse_squarefree("vars: a b c;");
    CHECK(c.facets == std::vector<std::uint32_t>{0b111});
    CHECK(c.minimal_nonfaces.empty());
    CHECK_THROWS_AS(parse_squarefree("vars: a b; aab"), InputError);
    CHECK_THROWS_AS(parse_squarefree("vars: a b; aq"), InputError);
}

TEST_CASE("recognition of I_1")
{
    auto rec = recognize_two_linear(parse_squarefree(examples::i1_text()));
    CHECK(rec.accepted);
    CHECK(rec.connected);
    CHECK_FALSE(rec.d_tree);
}

TEST_CASE("the 4-cycle is rejected, in agreement with the oracle")
{
    auto cx = parse_squarefree("vars: x1 x2 x3 x4; x1*x3 x2*x4");
    CHECK_FALSE(recognize_two_linear(cx).accepted);
    CHECK(oracle_invariants(cx.ideal()).reg == 2);
}

TEST_CASE("non-flag complexes are rejected")
{
    auto cx = parse_squarefree("vars: x y z; x*y*z");
    auto rec = recognize_two_linear(cx);
    CHECK_FALSE(rec.accepted);
    CHECK(oracle_invariants(cx.ideal()).reg == 2);
}

TEST_CASE("a simplex has the zero ideal: not 2-linear, but a one-facet arrangement")
{
    auto cx = parse_squarefree("vars: a b c;");
    auto rec = recognize_two_linear(cx);
    CHECK_FALSE(rec.accepted);
    CHECK(oracle_invariants(cx.ideal()).reg == 0);
    auto fo = facet_order_to_arrangement(cx, rec);
    CHECK(fo.facets.size() == 1);
    CHECK(fo.arrangement.size() == 1);
}

TEST_CASE("single facet plus a cone point gives a two-component order")
{
    auto cx = parse_squarefree("vars: a b c; facets: {a,b} {b,c}");
    auto p = run_complex_pipeline(cx);
    REQUIRE(p.recognition.accepted);
    CHECK(p.recognition.d_tree);
    CHECK(p.order->arrangement.size() == 2);
    CHECK(p.tableau->line_count() == 1);
}

TEST_CASE("facet orders of I_1 and I_3")
{
    auto p1 = run_complex_pipeline(parse_squarefree(examples::i1_text()));
    REQUIRE(p1.order);
    CHECK(p1.order->facets.size() == 4);
    CHECK(check_order(p1.order->arrangement).pass);
    auto p3 = run_complex_pipeline(parse_squarefree(examples::i3_text()));
    REQUIRE(p3.tableau);
    CHECK(p3.tableau->line_count() == 8);
    auto p2 = run_complex_pipeline(parse_squarefree(examples::i2_text()));
    CHECK(*p2.invariants->ara == 7);
}

TEST_CASE("Ferrer ideals")
{
    auto one = ferrer({1});
    CHECK(one.ideal.gens == std::vector<std::uint32_t>{0b11});
    CHECK(one.projdim == 1);
    auto f = ferrer({2, 1});
    std::set<std::string> gens;
    for (auto g : f.ideal.gens) gens.insert(f.ideal.monomial_str(g));
    CHECK(gens == std::set<std::string>{"x1*y1", "x1*y2", "x2*y1"});
    CHECK(f.projdim == 2);
    CHECK(f.c == 1);
    auto g = ferrer({3, 2, 2, 1});
    CHECK(g.projdim == 4);
    CHECK(oracle_invariants(g.ideal).projdim == 4);
    for (int n = 1; n <= 6; ++n) {
        auto row = ferrer(std::vector<int>{n});
        CHECK(row.projdim == n);
        CHECK(static_cast<int>(row.ideal.gens.size()) == n);
        CHECK(oracle_invariants(row.ideal).projdim == n);
    }
    CHECK_THROWS_AS(ferrer({1, 2}), InputError);
    CHECK_THROWS_AS(ferrer({}), InputError);
}

TEST_CASE("Ferrer arrangements are linearly joined and match the oracle")
{
    for (auto lam : std::vector<std::vector<int>>{{2, 1}, {3, 3, 1}, {4, 2, 2, 1}, {5, 5, 5}, {4, 3, 2, 1}}) {
        auto f = ferrer(lam);
        CHECK(check_order(f.arrangement).pass);
        auto dec = decompose(f.arrangement);
        CHECK(ara_linear(f.arrangement, dec, build_tableau(dec)) == f.projdim);
        auto oi = oracle_invariants(f.ideal);
        CHECK(oi.projdim == f.projdim);
        CHECK(oi.depth - 1 == f.c);
    }
}

TEST_CASE("simplicial ideal of the 2x2-minor example")
{
    auto spec = parse_simplicial_spec(examples::simplicial_example_json());
    auto r = simplicial_ideal(spec);
    REQUIRE(r.components.size() == 3);
    const std::vector<std::string> m1 = {"b*y2 - y1^2", "b*c - y1*y2", "y1*c - y2^2"};
    const std::vector<std::string> m2 = {"a*z2 - z1^2", "a*c - z1*z2", "z1*c - z2^2"};
    auto with = [](std::vector<std::string> a, std::vector<std::string> b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    };
    CHECK(detail::same_set(r.components[0], detail::parse_all(with(m1, {"a", "e", "z1", "z2"}), spec.vars)));
    CHECK(detail::same_set(r.components[1], detail::parse_all(with(with(m1, m2), {"d", "e"}), spec.vars)));
    CHECK(detail::same_set(r.components[2], detail::parse_all(with(m2, {"b", "d", "y1", "y2"}), spec.vars)));
    CHECK(r.hypothesis_ok);
    CHECK_FALSE(r.assumptions.empty());
}

TEST_CASE("simplicial ideal with no local generators is the Stanley-Reisner ideal")
{
    SimplicialIdealSpec spec;
    spec.vars = {"a", "b", "c", "d", "e", "f"};
    spec.parts = {{"G1", {"b", "c", "e"}, {}, {}, {}}, {"G2", {"b", "c", "d"}, {}, {}, {}}, {"G3", {"a", "b", "c"}, {}, {}, {}},
                  {"G4", {"c", "f"}, {}, {}, {}}};
    auto r = simplicial_ideal(spec);
    auto cx = complex_from_facets(spec.vars, {0b010110, 0b001110, 0b000111, 0b100100});
    auto want = cx.minimal_nonfaces, got = r.transversals;
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    CHECK(got == want);
}

TEST_CASE("two disjoint parts give all cross products")
{
    SimplicialIdealSpec spec;
    spec.vars = {"a", "b", "c", "d"};
    spec.parts = {{"G1", {"a", "b"}, {}, {}, {}}, {"G2", {"c", "d"}, {}, {}, {}}};
    auto r = simplicial_ideal(spec);
    std::set<std::uint32_t> got(r.transversals.begin(), r.transversals.end());
    CHECK(got == std::set<std::uint32_t>{0b0101, 0b0110, 0b1001, 0b1010});
    // zero set over GF(2): exactly the points vanishing on one of the parts' complements
    for (std::uint32_t x = 0; x < 16; ++x) {
        bool zero = std::all_of(got.begin(), got.end(), [&](std::uint32_t m) { return (x & m) != m; });
        bool on = (x & 0b1100) == 0 || (x & 0b0011) == 0;
        CHECK(zero == on);
    }
}

TEST_CASE("complex extensions keep the depth")
{
    auto cx = parse_squarefree(examples::i1_text());
    int d0 = oracle_invariants(cx.ideal()).depth;
    auto one = extend_complex(cx, {{"w"}, {}, {}, {}});
    CHECK(oracle_invariants(one.complex.ideal()).depth == d0);
    CHECK_FALSE(one.generator_delta.empty());
    auto none = extend_complex(cx, {{}, {}, {}, {}});
    CHECK(none.complex.minimal_nonfaces == cx.minimal_nonfaces);
    CHECK(none.generator_delta.empty());
    auto simplex = complex_from_facets({"a", "b"}, {0b11});
    auto s = extend_complex(simplex, {{"w"}});
    CHECK(s.generator_delta.empty());
    CHECK(s.complex.minimal_nonfaces.empty());
    CHECK_THROWS_AS(extend_complex(cx, {{"a"}, {}, {}, {}}), InputError);
}

TEST_CASE("arithmetical rank of the extension example")
{
    auto r = simplicial_ara(parse_ara_spec(examples::ara_example_json()));
    CHECK(r.card_G == 11);
    CHECK(r.height == 8);
    CHECK(*r.ara_base == 2);
    CHECK(*r.ara_upper == 8);
    CHECK(*r.ara == 8);
    CHECK(r.stci);
    CHECK_FALSE(r.extension_disjoint);
}

TEST_CASE("linear parts reduce to the base complex")
{
    AraSpec spec;
    for (std::string f : {"bce", "bcd", "abc", "cf"}) {
        AraPart p;
        for (char ch : f) p.base.push_back(std::string(1, ch));
        p.ara = 0;
        p.is_stci = true;
        spec.parts.push_back(p);
    }
    auto r = simplicial_ara(spec);
    auto base = run_complex_pipeline(parse_squarefree(examples::i1_text()));
    CHECK(*r.ara == *base.invariants->ara);
    CHECK(*r.cd == *r.ara);
}

TEST_CASE("d-tree base with stci parts")
{
    AraSpec spec;
    AraPart p1{{"a", "b"}, {"u"}, 1, true, true};
    AraPart p2{{"b", "c"}, {"v"}, 1, true, true};
    spec.parts = {p1, p2};
    auto r = simplicial_ara(spec);
    CHECK(r.base_d_tree);
    CHECK(r.stci);
    REQUIRE(r.ara);
    CHECK(*r.ara == r.card_G - *r.depth_base);
    CHECK(*r.ara == r.height);
    CHECK(*r.projdim == *r.ara);
}

TEST_CASE("recognition agrees with the oracle on random graphs")
{
    std::mt19937_64 rng(31);
    for (int k = 0; k < 150; ++k) {
        std::size_t n = std::uniform_int_distribution<std::size_t>(2, 8)(rng);
        auto adj = random_graph(n, std::uniform_real_distribution<double>(0.3, 0.95)(rng), rng);
        auto cx = complex_from_ideal(detail::clique_complex_ideal(adj));
        auto rec = recognize_two_linear(cx);
        auto oi = oracle_invariants(cx.ideal());
        CHECK(rec.accepted == (oi.reg == 1));
        if (rec.accepted) {
            auto p = run_complex_pipeline(cx);
            CHECK(p.invariants->depth == oi.depth);
            CHECK(*p.invariants->ara == oi.projdim);
            CHECK(p.tableau->line_count() + p.dec->D_tail.dim() == static_cast<std::size_t>(oi.projdim));
        }
    }
}
