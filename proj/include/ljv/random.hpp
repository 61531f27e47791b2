/**
 * Random linearly joined arrangements and random graphs for property tests.
 */

#ifndef LJV_RANDOM_HPP
#define LJV_RANDOM_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "arrangement.hpp"

namespace ljv {

struct RandomArrangementOptions {
    std::size_t min_vars = 3, max_vars = 10;
    std::size_t min_components = 2, max_components = 5;
    /** Attempts before giving up on one draw. */
    std::size_t attempts = 200;
};

namespace detail {

inline Rational random_coefficient(std::mt19937_64& rng)
{
    static const int coeffs[] = {1, -1, 2};
    return Rational(coeffs[std::uniform_int_distribution<int>(0, 2)(rng)]);
}

/** A form with one or two nonzero coordinates drawn from {1, -1, 2}. */
inline LinearForm random_sparse_form(std::size_t n, std::mt19937_64& rng)
{
    LinearForm v(n, Rational(0));
    std::size_t k = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(2, n))(rng);
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    for (std::size_t i = 0; i < k; ++i) v[idx[i]] = random_coefficient(rng);
    return v;
}

inline bool coin(std::mt19937_64& rng) { return std::uniform_int_distribution<int>(0, 1)(rng) == 1; }

}  // namespace detail

/**
 * Draws a linearly joined arrangement of linear spaces.  Each new Q_k is
 * built from a complement of D_{k-1} inside some earlier Q_j, perturbed by
 * elements of D_{k-1}, plus part of D_{k-1} and a few random forms; draws
 * that are not linearly joined in the given order or that contain an
 * inclusion are rejected.
 *
 * @return std::nullopt when no draw succeeds within the attempt budget
 */
inline std::optional<Arrangement> random_linearly_joined(std::mt19937_64& rng, const RandomArrangementOptions& opt = {})
{
    const std::size_t n = std::uniform_int_distribution<std::size_t>(opt.min_vars, opt.max_vars)(rng);
    const std::size_t l = std::uniform_int_distribution<std::size_t>(opt.min_components, opt.max_components)(rng);
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < n; ++i) vars.push_back("x" + std::to_string(i + 1));

    for (std::size_t attempt = 0; attempt < opt.attempts; ++attempt) {
        std::vector<LinearSpace> qs;
        std::vector<LinearForm> first;
        std::size_t r0 = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
        for (std::size_t i = 0; i < r0; ++i) first.push_back(detail::random_sparse_form(n, rng));
        qs.emplace_back(vars, first);
        LinearSpace d = qs[0];
        bool ok = qs[0].dim() < n;
        for (std::size_t k = 1; k < l && ok; ++k) {
            std::size_t j = std::uniform_int_distribution<std::size_t>(0, k - 1)(rng);
            LinearSpace c = complement(d, qs[j]);
            std::vector<LinearForm> rows;
            for (auto s : c.basis()) {
                if (!d.empty() && detail::coin(rng)) {
                    const auto& dv = d.basis()[std::uniform_int_distribution<std::size_t>(0, d.dim() - 1)(rng)];
                    Rational sign = detail::coin(rng) ? Rational(1) : Rational(-1);
                    for (std::size_t t = 0; t < n; ++t) s[t] += sign * dv[t];
                }
                rows.push_back(s);
            }
            for (const auto& dv : d.basis())
                if (detail::coin(rng)) rows.push_back(dv);
            std::size_t extra = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
            for (std::size_t t = 0; t < extra; ++t) rows.push_back(detail::random_sparse_form(n, rng));
            LinearSpace q(vars, rows);
            if (q.empty() || q.dim() == n) {
                ok = false;
                break;
            }
            qs.push_back(q);
            d = intersect(d, q);
        }
        if (!ok) continue;
        bool inclusion = false;
        for (std::size_t a = 0; a < qs.size() && !inclusion; ++a)
            for (std::size_t b = 0; b < qs.size() && !inclusion; ++b)
                if (a != b && qs[b].contains(qs[a])) inclusion = true;
        if (inclusion) continue;
        Arrangement arr{vars, {}};
        for (std::size_t k = 0; k < qs.size(); ++k) arr.components.push_back({"Q" + std::to_string(k + 1), qs[k], {}, {}});
        if (check_order(arr).pass) return arr;
    }
    return std::nullopt;
}

/** Adjacency bitmasks of a G(n, p) graph. */
inline std::vector<std::uint32_t> random_graph(std::size_t n, double p, std::mt19937_64& rng)
{
    std::vector<std::uint32_t> adj(n, 0);
    std::bernoulli_distribution edge(p);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (edge(rng)) adj[u] |= 1u << v, adj[v] |= 1u << u;
    return adj;
}

}  // namespace ljv

#endif
