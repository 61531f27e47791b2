/**
 * Shared helpers for the unit tests.
 */

#ifndef LJV_TESTS_COMMON_HPP
#define LJV_TESTS_COMMON_HPP

#include <string>
#include <vector>

#include "ljv/acceptance.hpp"

namespace ljv::test {

inline const std::vector<std::string> kEx1Vars = {"a", "b", "c", "x", "y", "z", "u"};

inline LinearSpace space(const std::vector<std::string>& vars, const std::vector<std::string>& forms)
{
    std::vector<LinearForm> rows;
    for (const auto& f : forms) rows.push_back(poly_to_linear(parse_poly(f, vars)));
    return LinearSpace(vars, rows);
}

inline LinearForm form(const std::vector<std::string>& vars, const std::string& f) { return poly_to_linear(parse_poly(f, vars)); }

inline Poly poly(const std::vector<std::string>& vars, const std::string& f) { return parse_poly(f, vars); }

inline Arrangement example1() { return parse_arrangement(examples::example1_text()); }

inline Arrangement linear(const std::vector<std::string>& vars, const std::vector<std::vector<std::string>>& comps)
{
    Arrangement a{vars, {}};
    for (std::size_t i = 0; i < comps.size(); ++i) a.components.push_back({"Q" + std::to_string(i + 1), space(vars, comps[i]), {}, {}});
    return a;
}

/** Draws n random linearly joined arrangements with a fixed seed. */
inline std::vector<Arrangement> random_arrangements(std::size_t n, std::uint64_t seed, RandomArrangementOptions opt = {})
{
    std::mt19937_64 rng(seed);
    std::vector<Arrangement> out;
    while (out.size() < n)
        if (auto a = random_linearly_joined(rng, opt)) out.push_back(*a);
    return out;
}

}  // namespace ljv::test

#endif
