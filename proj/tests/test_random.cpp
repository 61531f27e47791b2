#include <catch_amalgamated.hpp>

#include "common.hpp"

using namespace ljv;

TEST_CASE("random arrangements are deterministic per seed")
{
    auto a = test::random_arrangements(20, 99), b = test::random_arrangements(20, 99);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(to_text(a[i]) == to_text(b[i]));
}

TEST_CASE("random arrangements satisfy the generator contract")
{
    RandomArrangementOptions opt;
    opt.max_components = 6;
    for (const auto& arr : test::random_arrangements(100, 1, opt)) {
        CHECK(arr.vars.size() >= 3);
        CHECK(arr.vars.size() <= 10);
        CHECK(arr.size() >= 2);
        CHECK(arr.size() <= 6);
        CHECK(check_order(arr).pass);
        CHECK_NOTHROW(validate(arr));
    }
}

TEST_CASE("random graphs are symmetric and loop-free")
{
    std::mt19937_64 rng(2);
    for (int k = 0; k < 50; ++k) {
        auto adj = random_graph(7, 0.5, rng);
        for (std::size_t u = 0; u < 7; ++u) {
            CHECK_FALSE(adj[u] >> u & 1u);
            for (std::size_t v = 0; v < 7; ++v) CHECK((adj[u] >> v & 1u) == (adj[v] >> u & 1u));
        }
    }
}
