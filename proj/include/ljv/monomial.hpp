/**
 * Square-free monomial side: Stanley-Reisner complexes, recognition of
 * ideals with 2-linear resolution, linearly joined facet orders, Ferrer
 * ideals, simplicial ideals and extensions of complexes.
 */

#ifndef LJV_MONOMIAL_HPP
#define LJV_MONOMIAL_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "arrangement.hpp"
#include "decomp.hpp"
#include "invariants.hpp"
#include "oracle.hpp"
#include "parse.hpp"
#include "tableau.hpp"

namespace ljv {

/** Largest vertex count handled by subset enumeration. */
inline constexpr std::size_t kMaxComplexVertices = 24;

struct SimplicialComplexModel {
    std::vector<std::string> vertices;
    /** Facets as bitmasks over vertices, inclusion-free. */
    std::vector<std::uint32_t> facets;
    /** Minimal non-faces; the Stanley-Reisner ideal generators. */
    std::vector<std::uint32_t> minimal_nonfaces;

    std::size_t n() const { return vertices.size(); }

    bool is_face(std::uint32_t s) const
    {
        return std::any_of(facets.begin(), facets.end(), [&](std::uint32_t f) { return (s & f) == s; });
    }

    bool adjacent(std::size_t u, std::size_t v) const { return u != v && is_face((1u << u) | (1u << v)); }

    std::vector<std::pair<std::size_t, std::size_t>> skeleton() const
    {
        std::vector<std::pair<std::size_t, std::size_t>> e;
        for (std::size_t u = 0; u < n(); ++u)
            for (std::size_t v = u + 1; v < n(); ++v)
                if (adjacent(u, v)) e.push_back({u, v});
        return e;
    }

    MonomialIdeal ideal() const { return {vertices, minimal_nonfaces}; }

    std::string set_str(std::uint32_t m) const
    {
        std::string s = "{";
        for (std::size_t i = 0; i < n(); ++i)
            if (m >> i & 1u) s += (s.size() > 1 ? "," : "") + vertices[i];
        return s + "}";
    }
};

namespace detail {

inline void check_vertex_count(std::size_t n)
{
    if (n > kMaxComplexVertices) throw InputError("complexes are limited to " + std::to_string(kMaxComplexVertices) + " vertices");
}

/** Maximal masks among those satisfying the face predicate. */
template <class Pred>
inline std::vector<std::uint32_t> maximal_faces(std::size_t n, Pred is_face)
{
    const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
    std::vector<std::uint32_t> out;
    for (std::uint32_t s = full;; --s) {
        if (is_face(s)) {
            bool maximal = true;
            for (std::size_t i = 0; i < n && maximal; ++i)
                if (!(s >> i & 1u) && is_face(s | (1u << i))) maximal = false;
            if (maximal) out.push_back(s);
        }
        if (s == 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

/** Complex whose faces are the sets containing no generator of the ideal. */
inline SimplicialComplexModel complex_from_ideal(MonomialIdeal ideal)
{
    detail::check_vertex_count(ideal.n());
    ideal.minimalize();
    SimplicialComplexModel cx;
    cx.vertices = ideal.vars;
    cx.minimal_nonfaces = ideal.gens;
    cx.facets = detail::maximal_faces(ideal.n(), [&](std::uint32_t s) { return ideal.is_face(s); });
    return cx;
}

/** Complex with the given facets; non-maximal entries are dropped. */
inline SimplicialComplexModel complex_from_facets(const std::vector<std::string>& vertices, std::vector<std::uint32_t> facets)
{
    detail::check_vertex_count(vertices.size());
    SimplicialComplexModel cx;
    cx.vertices = vertices;
    std::vector<std::uint32_t> kept;
    for (auto f : facets) {
        bool inside = false;
        for (auto g : facets)
            if (g != f && (f & g) == f) inside = true;
        if (!inside && std::find(kept.begin(), kept.end(), f) == kept.end()) kept.push_back(f);
    }
    cx.facets = kept;
    const std::size_t n = vertices.size();
    const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
    for (std::uint32_t s = 1; s <= full && s != 0; ++s) {
        if (cx.is_face(s)) continue;
        bool minimal = true;
        for (std::size_t i = 0; i < n && minimal; ++i)
            if ((s >> i & 1u) && !cx.is_face(s & ~(1u << i))) minimal = false;
        if (minimal) cx.minimal_nonfaces.push_back(s);
        if (s == full) break;
    }
    return cx;
}

namespace detail {

inline std::vector<std::string> split_monomial(const std::string& tok, const std::vector<std::string>& vars, bool have_vars)
{
    std::vector<std::string> parts;
    if (tok.find('*') != std::string::npos) {
        std::stringstream ss(tok);
        std::string p;
        while (std::getline(ss, p, '*'))
            if (!p.empty()) parts.push_back(p);
        return parts;
    }
    if (!have_vars) {
        for (char c : tok) parts.push_back(std::string(1, c));
        return parts;
    }
    std::size_t i = 0;
    while (i < tok.size()) {
        std::size_t best = 0;
        for (const auto& v : vars)
            if (v.size() > best && tok.compare(i, v.size(), v) == 0) best = v.size();
        if (!best) throw InputError("cannot split monomial '" + tok + "' into declared variables");
        parts.push_back(tok.substr(i, best));
        i += best;
    }
    return parts;
}

inline std::string strip(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace detail

/**
 * Reads a square-free monomial ideal or a facet list.
 *
 * Monomial form: optional "vars: a b c;" then monomials separated by
 * whitespace or commas, written "fd" (single-letter variables) or "x1*x3".
 * Facet form: optional "vars: ...;" then "facets: {a,b,c} {b,c,d}".
 * Without a vars line the vertices are the names that occur, sorted.
 *
 * @throws InputError on non-square-free monomials or unknown names
 */
inline SimplicialComplexModel parse_squarefree(const std::string& text)
{
    std::string body;
    for (std::istringstream in(text); ;) {
        std::string line;
        if (!std::getline(in, line)) break;
        auto h = line.find('#');
        if (h != std::string::npos) line = line.substr(0, h);
        body += line + "\n";
    }
    std::vector<std::string> vars;
    bool have_vars = false;
    auto vpos = body.find("vars:");
    if (vpos != std::string::npos) {
        auto end = body.find_first_of(";\n", vpos);
        std::istringstream vs(body.substr(vpos + 5, end - vpos - 5));
        for (std::string v; vs >> v;) vars.push_back(v);
        body.erase(vpos, end == std::string::npos ? std::string::npos : end - vpos + 1);
        have_vars = true;
        std::set<std::string> uniq(vars.begin(), vars.end());
        if (uniq.size() != vars.size()) throw InputError("duplicate vertex name");
    }
    auto index_of = [&](const std::string& v) -> std::size_t {
        auto it = std::find(vars.begin(), vars.end(), v);
        if (it == vars.end()) throw InputError("unknown vertex '" + v + "'");
        return static_cast<std::size_t>(it - vars.begin());
    };

    auto fpos = body.find("facets:");
    if (fpos != std::string::npos) {
        std::string rest = body.substr(fpos + 7);
        std::vector<std::vector<std::string>> sets;
        std::size_t i = 0;
        while ((i = rest.find('{', i)) != std::string::npos) {
            auto j = rest.find('}', i);
            if (j == std::string::npos) throw InputError("unterminated facet");
            std::vector<std::string> f;
            std::stringstream ss(rest.substr(i + 1, j - i - 1));
            for (std::string v; std::getline(ss, v, ',');)
                if (auto t = detail::strip(v); !t.empty()) f.push_back(t);
            sets.push_back(f);
            i = j + 1;
        }
        if (!have_vars) {
            std::set<std::string> all;
            for (const auto& f : sets) all.insert(f.begin(), f.end());
            vars.assign(all.begin(), all.end());
        }
        detail::check_vertex_count(vars.size());
        std::vector<std::uint32_t> masks;
        for (const auto& f : sets) {
            std::uint32_t m = 0;
            for (const auto& v : f) m |= 1u << index_of(v);
            masks.push_back(m);
        }
        if (masks.empty()) masks.push_back(0);
        return complex_from_facets(vars, masks);
    }

    std::vector<std::vector<std::string>> monos;
    for (auto& c : body)
        if (c == ',' || c == ';') c = ' ';
    std::istringstream ms(body);
    for (std::string tok; ms >> tok;) monos.push_back(detail::split_monomial(tok, vars, have_vars));
    if (!have_vars) {
        std::set<std::string> all;
        for (const auto& m : monos) all.insert(m.begin(), m.end());
        vars.assign(all.begin(), all.end());
    }
    detail::check_vertex_count(vars.size());
    MonomialIdeal ideal{vars, {}};
    for (const auto& m : monos) {
        std::uint32_t mask = 0;
        for (const auto& v : m) {
            std::uint32_t bit = 1u << index_of(v);
            if (mask & bit) throw InputError("monomial is not square-free: repeated variable '" + v + "'");
            mask |= bit;
        }
        ideal.gens.push_back(mask);
    }
    return complex_from_ideal(ideal);
}

struct Recognition {
    bool accepted = false;
    std::string reason;
    /** Vertices in peel order with their neighborhoods at removal time. */
    std::vector<std::size_t> peel_order;
    std::vector<std::uint32_t> neighborhoods;
    /** The complete graph left after peeling. */
    std::uint32_t final_clique = 0;
    bool connected = true;
    /** Every peel glues along exactly d = |final clique| - 1 vertices. */
    bool d_tree = false;
    int d = 0;
};

/**
 * Fröberg recognition: the complex must be flag (all minimal non-faces are
 * edges) and its 1-skeleton must reduce to a complete graph by removing
 * extremal vertices, whose neighborhoods are cliques.  The extremal vertex
 * of least degree is removed first, ties by name.  Isolated vertices count
 * as extremal, so disconnected skeletons with chordal components are
 * accepted and flagged as not connected.  The zero ideal is rejected.
 */
inline Recognition recognize_two_linear(const SimplicialComplexModel& cx)
{
    Recognition r;
    if (cx.minimal_nonfaces.empty()) {
        r.reason = "the ideal is zero (the complex is a simplex)";
        return r;
    }
    for (auto g : cx.minimal_nonfaces) {
        int size = std::popcount(g);
        if (size != 2) {
            r.reason = (size == 1 ? "vertex " + cx.set_str(g) + " is not a face (degree-1 generator)"
                                  : "minimal non-face " + cx.set_str(g) + " of size " + std::to_string(size) + " (not flag)");
            return r;
        }
    }
    const std::size_t n = cx.n();
    std::vector<std::uint32_t> nbr(n, 0);
    for (auto [u, v] : cx.skeleton()) {
        nbr[u] |= 1u << v;
        nbr[v] |= 1u << u;
    }
    auto is_clique = [&](std::uint32_t s) {
        for (std::size_t u = 0; u < n; ++u)
            if ((s >> u & 1u) && (nbr[u] & s) != (s & ~(1u << u))) return false;
        return true;
    };
    std::uint32_t alive = n == 32 ? ~0u : (1u << n) - 1;
    while (!is_clique(alive)) {
        std::optional<std::size_t> best;
        for (std::size_t v = 0; v < n; ++v) {
            if (!(alive >> v & 1u)) continue;
            std::uint32_t nb = nbr[v] & alive;
            if (!is_clique(nb)) continue;
            if (!best) best = v;
            else {
                int dv = std::popcount(nb), db = std::popcount(nbr[*best] & alive);
                if (dv < db || (dv == db && cx.vertices[v] < cx.vertices[*best])) best = v;
            }
        }
        if (!best) {
            r.reason = "no extremal vertex among " + cx.set_str(alive) + " (skeleton not chordal)";
            return r;
        }
        std::uint32_t nb = nbr[*best] & alive;
        if (nb == 0) r.connected = false;
        r.peel_order.push_back(*best);
        r.neighborhoods.push_back(nb);
        alive &= ~(1u << *best);
    }
    r.accepted = true;
    r.final_clique = alive;
    r.d = std::max(0, std::popcount(alive) - 1);
    r.d_tree = r.connected && std::all_of(r.neighborhoods.begin(), r.neighborhoods.end(), [&](std::uint32_t nb) { return std::popcount(nb) == r.d; });
    r.reason = r.connected ? (r.d_tree ? "generalized tree (" + std::to_string(r.d) + "-tree)" : "generalized tree")
                           : "chordal with several connected components";
    return r;
}

struct FacetOrder {
    /** Facets in linearly joined order. */
    std::vector<std::uint32_t> facets;
    /** Vertex indices (into the complex) in arrangement variable order. */
    std::vector<std::size_t> var_order;
    /** Q_j = span of the variables not in facet j. */
    Arrangement arrangement;
};

/**
 * Facets in attach order: the final clique first, then the peeled vertices
 * in reverse.  Attaching v to its neighborhood N extends the facet N when N
 * is a facet so far, and opens the facet N ∪ {v} otherwise.  Variables are
 * ordered the same way.  A simplex gives the single facet of all vertices.
 *
 * @throws InternalInconsistency if the derived order is not linearly joined
 */
inline FacetOrder facet_order_to_arrangement(const SimplicialComplexModel& cx, const Recognition& rec)
{
    const bool simplex = cx.minimal_nonfaces.empty();
    if (!rec.accepted && !simplex) throw InputError("complex was not recognized: " + rec.reason);
    FacetOrder fo;
    std::vector<std::size_t> clique;
    for (std::size_t v = 0; v < cx.n(); ++v)
        if (simplex || (rec.final_clique >> v & 1u)) clique.push_back(v);
    std::sort(clique.begin(), clique.end(), [&](std::size_t a, std::size_t b) { return cx.vertices[a] < cx.vertices[b]; });
    fo.var_order = clique;
    if (simplex) {
        fo.facets.push_back(cx.n() == 32 ? ~0u : (1u << cx.n()) - 1);
    }
    else if (rec.final_clique || rec.peel_order.empty())
        fo.facets.push_back(rec.final_clique);
    for (std::size_t k = simplex ? 0 : rec.peel_order.size(); k-- > 0;) {
        std::size_t v = rec.peel_order[k];
        std::uint32_t nb = rec.neighborhoods[k];
        fo.var_order.push_back(v);
        auto it = std::find(fo.facets.begin(), fo.facets.end(), nb);
        if (it != fo.facets.end() && nb != 0) *it |= 1u << v;
        else if (fo.facets.size() == 1 && fo.facets[0] == 0) fo.facets[0] = 1u << v;
        else fo.facets.push_back(nb | (1u << v));
    }
    std::vector<std::string> vars;
    for (auto v : fo.var_order) vars.push_back(cx.vertices[v]);
    const std::size_t n = vars.size();
    fo.arrangement.vars = vars;
    for (std::size_t j = 0; j < fo.facets.size(); ++j) {
        std::vector<LinearForm> rows;
        for (std::size_t pos = 0; pos < n; ++pos)
            if (!(fo.facets[j] >> fo.var_order[pos] & 1u)) rows.push_back(unit_form(n, pos));
        fo.arrangement.components.push_back({"F" + std::to_string(j + 1), LinearSpace(vars, rows), {}, {}});
    }
    validate(fo.arrangement);
    if (!check_order(fo.arrangement).pass) throw InternalInconsistency("derived facet order is not linearly joined");
    return fo;
}

struct FerrerResult {
    std::vector<int> lambda;
    MonomialIdeal ideal;
    Arrangement arrangement;
    int projdim = 0;
    int ara = 0;
    int cd = 0;
    /** c(S/I_λ) = min_i ((λ_1 - λ_i) + (m - i)). */
    int c = 0;
};

/**
 * Ferrer ideal of a partition: variables x_1..x_m, y_1..y_n (n = λ_1),
 * generators x_i y_j for j ≤ λ_i.  Rows with equal parts form the blocks
 * Δ; the component ideals are Q_1 = (x_1..x_m) and, for the block of value
 * v, the y_1..y_v together with the x of all blocks with larger values.
 *
 * @throws InputError unless λ is weakly decreasing and positive
 */
inline FerrerResult ferrer(const std::vector<int>& lambda)
{
    if (lambda.empty()) throw InputError("empty partition");
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] < 1) throw InputError("partition parts must be positive");
        if (i && lambda[i] > lambda[i - 1]) throw InputError("partition parts must be weakly decreasing");
    }
    FerrerResult r;
    r.lambda = lambda;
    const int m = static_cast<int>(lambda.size()), ny = lambda[0];
    std::vector<std::string> vars;
    for (int i = 1; i <= m; ++i) vars.push_back("x" + std::to_string(i));
    for (int j = 1; j <= ny; ++j) vars.push_back("y" + std::to_string(j));
    const std::size_t n = vars.size();
    if (n > 32) throw InputError("partition too large");
    r.ideal.vars = vars;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < lambda[i]; ++j) r.ideal.gens.push_back((1u << i) | (1u << (m + j)));

    std::vector<LinearForm> xs;
    for (int i = 0; i < m; ++i) xs.push_back(unit_form(n, i));
    r.arrangement.vars = vars;
    r.arrangement.components.push_back({"Q1", LinearSpace(vars, xs), {}, {}});
    // blocks in order of decreasing value; the component for the block of
    // value v comes after those of smaller values
    std::vector<std::pair<int, int>> blocks;  // (first row, value)
    for (int i = 0; i < m; ++i)
        if (!i || lambda[i] != lambda[i - 1]) blocks.push_back({i, lambda[i]});
    for (std::size_t b = blocks.size(); b-- > 0;) {
        std::vector<LinearForm> rows;
        for (int j = 0; j < blocks[b].second; ++j) rows.push_back(unit_form(n, m + j));
        for (int i = 0; i < blocks[b].first; ++i) rows.push_back(unit_form(n, i));
        r.arrangement.components.push_back({"Q" + std::to_string(r.arrangement.size() + 1), LinearSpace(vars, rows), {}, {}});
    }
    validate(r.arrangement);
    for (int i = 0; i < m; ++i) r.projdim = std::max(r.projdim, lambda[i] + i);
    r.ara = r.cd = r.projdim;
    r.c = m - 1;
    for (int i = 0; i < m; ++i) r.c = std::min(r.c, (lambda[0] - lambda[i]) + (m - 1 - i));
    return r;
}

struct SimplicialPart {
    std::string name;
    std::vector<std::string> vertices;
    std::vector<Poly> gens;
    std::optional<int> dim, deg;
};

struct SimplicialIdealSpec {
    std::vector<std::string> vars;
    std::vector<SimplicialPart> parts;
};

struct SimplicialIdealResult {
    /** I_{i,j} generators (i = j: L_i minus every other L_j). */
    std::vector<std::vector<std::vector<Poly>>> I;
    std::vector<std::vector<Poly>> I_part;
    std::vector<Poly> I_G;
    /** Minimal monomials of ∩_j (G \ G_j). */
    std::vector<std::uint32_t> transversals;
    std::vector<Poly> P_G;
    /** Components (I_j, G \ G_j) as generator lists. */
    std::vector<std::vector<Poly>> components;
    bool hypothesis_ok = true;
    std::vector<std::string> hypothesis_failures;
    std::optional<int> dim, deg;
    std::vector<std::string> assumptions;
};

namespace detail {

inline void add_unique(std::vector<Poly>& out, const Poly& p)
{
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
}

inline std::uint32_t support_mask(const Poly& p)
{
    std::uint32_t m = 0;
    for (auto i : p.support()) m |= 1u << i;
    return m;
}

/** Every monomial of f meets the variable set s. */
inline bool monomials_meet(const Poly& f, std::uint32_t s)
{
    for (const auto& [e, c] : f.terms()) {
        bool hit = false;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] && (s >> i & 1u)) hit = true;
        if (!hit) return false;
    }
    return true;
}

}  // namespace detail

/** Minimal square-free monomials meeting every set in the list. */
inline std::vector<std::uint32_t> minimal_transversals(const std::vector<std::uint32_t>& sets)
{
    std::vector<std::uint32_t> acc{0};
    for (auto s : sets) {
        std::vector<std::uint32_t> next;
        for (auto t : acc) {
            if (t & s) next.push_back(t);
            else
                for (std::uint32_t rest = s; rest; rest &= rest - 1) next.push_back(t | (rest & (~rest + 1)));
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        acc.clear();
        for (auto t : next) {
            bool dominated = false;
            for (auto u : next)
                if (u != t && (u & t) == u) dominated = true;
            if (!dominated) acc.push_back(t);
        }
    }
    std::sort(acc.begin(), acc.end(), [](std::uint32_t a, std::uint32_t b) {
        return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b) : a < b;
    });
    return acc;
}

/**
 * P_G = (I_G, ∩_j (G \ G_j)) and its claimed decomposition ∩_j (I_j, G \ G_j).
 * Primality of the I_j is not checked and is recorded as an assumption.
 *
 * @throws InputError when a generator of L_i leaves G_i or has degree < 2
 */
inline SimplicialIdealResult simplicial_ideal(const SimplicialIdealSpec& spec)
{
    const std::size_t s = spec.parts.size(), n = spec.vars.size();
    if (n > 32) throw InputError("too many variables");
    SimplicialIdealResult r;
    std::vector<std::uint32_t> G(s, 0);
    std::uint32_t all = 0;
    for (std::size_t i = 0; i < s; ++i) {
        for (const auto& v : spec.parts[i].vertices) {
            auto it = std::find(spec.vars.begin(), spec.vars.end(), v);
            if (it == spec.vars.end()) throw InputError("unknown vertex '" + v + "'");
            G[i] |= 1u << (it - spec.vars.begin());
        }
        all |= G[i];
        for (const auto& g : spec.parts[i].gens) {
            if ((detail::support_mask(g) & ~G[i]) != 0) throw InputError("generator " + g.str() + " of " + spec.parts[i].name + " leaves its part");
            if (g.degree() < 2) throw InputError("generator " + g.str() + " has degree < 2");
        }
    }
    r.I.assign(s, std::vector<std::vector<Poly>>(s));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) {
            for (const auto& g : spec.parts[i].gens) {
                if (i != j) {
                    if ((detail::support_mask(g) & ~(G[i] & G[j])) == 0) r.I[i][j].push_back(g);
                }
                else {
                    bool elsewhere = false;
                    for (std::size_t k = 0; k < s; ++k)
                        if (k != i && std::find(spec.parts[k].gens.begin(), spec.parts[k].gens.end(), g) != spec.parts[k].gens.end())
                            elsewhere = true;
                    if (!elsewhere) r.I[i][i].push_back(g);
                }
            }
        }
    r.I_part.assign(s, {});
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < s; ++j)
            for (const auto& g : r.I[i][j]) detail::add_unique(r.I_part[i], g);
        for (const auto& g : r.I_part[i]) detail::add_unique(r.I_G, g);
    }
    std::vector<std::uint32_t> comps;
    for (std::size_t j = 0; j < s; ++j) comps.push_back(all & ~G[j]);
    r.transversals = minimal_transversals(comps);
    r.P_G = r.I_G;
    MonomialIdeal tm{spec.vars, r.transversals};
    for (const auto& p : tm.polys()) detail::add_unique(r.P_G, p);
    for (std::size_t j = 0; j < s; ++j) {
        auto c = r.I_part[j];
        for (std::size_t v = 0; v < n; ++v)
            if (comps[j] >> v & 1u) c.push_back(Poly::variable(spec.vars, v));
        r.components.push_back(c);
    }
    for (std::size_t k = 0; k < s; ++k)
        for (std::size_t l = 0; l < s; ++l)
            for (std::size_t j = 0; j < s; ++j) {
                if (j == k || j == l) continue;
                for (const auto& g : r.I[k][l])
                    if (!detail::monomials_meet(g, comps[j])) {
                        r.hypothesis_ok = false;
                        r.hypothesis_failures.push_back("I_{" + std::to_string(k + 1) + "," + std::to_string(l + 1) + "} generator " + g.str() +
                                                        " not in (G \\ G_" + std::to_string(j + 1) + ")");
                    }
            }
    r.assumptions.push_back("each I_i is assumed prime");
    bool have = std::all_of(spec.parts.begin(), spec.parts.end(), [](const SimplicialPart& p) { return p.dim.has_value(); });
    if (have) {
        int d = 0;
        for (const auto& p : spec.parts) d = std::max(d, *p.dim);
        r.dim = d;
        bool have_deg = true;
        int deg = 0;
        for (const auto& p : spec.parts)
            if (*p.dim == d) {
                if (!p.deg) have_deg = false;
                else deg += *p.deg;
            }
        if (have_deg) r.deg = deg;
    }
    return r;
}

/** Reads {"vars": [...], "parts": [{"name", "vertices", "gens", "meta": {"dim", "deg"}}]}. */
inline SimplicialIdealSpec parse_simplicial_spec(const std::string& text)
{
    SimplicialIdealSpec spec;
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    }
    catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("JSON: ") + e.what());
    }
    try {
        spec.vars = j.at("vars").get<std::vector<std::string>>();
        for (const auto& p : j.at("parts")) {
            SimplicialPart part;
            part.name = p.value("name", "G" + std::to_string(spec.parts.size() + 1));
            part.vertices = p.at("vertices").get<std::vector<std::string>>();
            for (const auto& g : p.value("gens", std::vector<std::string>{})) part.gens.push_back(parse_poly(g, spec.vars));
            if (p.contains("meta")) {
                if (p["meta"].contains("dim")) part.dim = p["meta"]["dim"].get<int>();
                if (p["meta"].contains("deg")) part.deg = p["meta"]["deg"].get<int>();
            }
            spec.parts.push_back(part);
        }
    }
    catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("simplicial spec: ") + e.what());
    }
    return spec;
}

struct ComplexExtension {
    SimplicialComplexModel complex;
    /** Products y·z with y in F'_i and z in G_j \ F_i, j != i. */
    std::vector<std::uint32_t> generator_delta;
};

/**
 * Extension with facets G_i = F_i ∪ F'_i for fresh vertex sets F'_i.
 *
 * @param base complex with facets F_1..F_s
 * @param extra one list of fresh vertex names per facet
 * @throws InputError when fresh sets overlap each other or the base
 * @throws InternalInconsistency when the extended ideal differs from the
 *         base generators plus the products y·z
 */
inline ComplexExtension extend_complex(const SimplicialComplexModel& base, const std::vector<std::vector<std::string>>& extra)
{
    if (extra.size() != base.facets.size()) throw InputError("need one fresh vertex set per facet");
    std::vector<std::string> vertices = base.vertices;
    std::set<std::string> seen(vertices.begin(), vertices.end());
    std::vector<std::uint32_t> fresh(extra.size(), 0);
    for (std::size_t i = 0; i < extra.size(); ++i)
        for (const auto& v : extra[i]) {
            if (!seen.insert(v).second) throw InputError("fresh vertex '" + v + "' overlaps another vertex set");
            fresh[i] |= 1u << vertices.size();
            vertices.push_back(v);
        }
    detail::check_vertex_count(vertices.size());
    ComplexExtension ext;
    std::vector<std::uint32_t> facets;
    for (std::size_t i = 0; i < extra.size(); ++i) facets.push_back(base.facets[i] | fresh[i]);
    ext.complex = complex_from_facets(vertices, facets);
    for (std::size_t i = 0; i < extra.size(); ++i)
        for (std::size_t j = 0; j < extra.size(); ++j) {
            if (i == j) continue;
            std::uint32_t zs = facets[j] & ~base.facets[i];
            for (std::uint32_t ys = fresh[i]; ys; ys &= ys - 1)
                for (std::uint32_t z = zs; z; z &= z - 1) ext.generator_delta.push_back((ys & (~ys + 1)) | (z & (~z + 1)));
        }
    std::sort(ext.generator_delta.begin(), ext.generator_delta.end());
    ext.generator_delta.erase(std::unique(ext.generator_delta.begin(), ext.generator_delta.end()), ext.generator_delta.end());
    std::vector<std::uint32_t> expect = base.minimal_nonfaces;
    expect.insert(expect.end(), ext.generator_delta.begin(), ext.generator_delta.end());
    MonomialIdeal mi{vertices, expect};
    mi.minimalize();
    auto got = ext.complex.minimal_nonfaces;
    std::sort(got.begin(), got.end());
    if (got != mi.gens) throw InternalInconsistency("extended ideal is not generated by the base ideal and the products yz");
    return ext;
}

/** Pipeline on a recognized complex: facet order, decomposition, tableau. */
struct ComplexPipeline {
    Recognition recognition;
    std::optional<FacetOrder> order;
    std::optional<LJDecomposition> dec;
    std::optional<Tableau> tableau;
    std::optional<InvariantReport> invariants;
};

inline ComplexPipeline run_complex_pipeline(const SimplicialComplexModel& cx)
{
    ComplexPipeline p;
    p.recognition = recognize_two_linear(cx);
    if (!p.recognition.accepted) return p;
    p.order = facet_order_to_arrangement(cx, p.recognition);
    p.dec = decompose(p.order->arrangement);
    p.tableau = build_tableau(*p.dec);
    p.invariants = invariants(p.order->arrangement, *p.dec);
    return p;
}

struct AraPart {
    std::vector<std::string> base;   // F_i
    std::vector<std::string> fresh;  // F'_i
    std::optional<int> ara;          // upper bound for ara(I_i)
    bool is_stci = false;
    bool is_CM = false;
};

struct AraSpec {
    std::vector<AraPart> parts;
    /** Upper bound for ara(I_1 + ... + I_s), when known directly. */
    std::optional<int> ara_total;
};

struct AraResult {
    int card_G = 0;
    int height = 0;
    int dim = 0;
    std::optional<int> ara_base;
    std::optional<int> depth_base;
    std::optional<int> ara_upper;
    std::optional<int> ara;
    std::optional<int> cd, projdim, c;
    bool stci = false;
    bool extension_disjoint = true;
    bool base_recognized = false;
    bool base_d_tree = false;
    std::vector<std::string> used;
    std::vector<std::string> not_applicable;
};

/**
 * Arithmetical rank of P_G for toric parts fully parametrized on F_i:
 * ht(P_G) = card G - max card F_i; ara(P_G) ≤ Σ ara(I_i) + ara(I_Δ(F)),
 * and ara = ht (set-theoretic complete intersection) whenever the bound
 * meets the height.  With disjoint fresh sets and a generalized-tree base
 * of stci parts, ara = cd = card G - depth(K[F]/I_Δ(F)) and
 * c = card G - ara - 1; with CM parts also projdim = ara.
 *
 * @throws MissingMetadata when no ara bound is available for a part
 */
inline AraResult simplicial_ara(const AraSpec& spec)
{
    AraResult r;
    std::vector<std::string> F, G;
    auto add = [](std::vector<std::string>& v, const std::string& x) {
        if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
    };
    std::set<std::string> fresh_seen;
    for (const auto& p : spec.parts) {
        for (const auto& v : p.base) add(F, v), add(G, v);
        for (const auto& v : p.fresh) {
            if (!fresh_seen.insert(v).second) r.extension_disjoint = false;
            add(G, v);
        }
    }
    for (const auto& v : fresh_seen)
        if (std::find(F.begin(), F.end(), v) != F.end()) r.extension_disjoint = false;
    std::sort(F.begin(), F.end());
    r.card_G = static_cast<int>(G.size());
    for (const auto& p : spec.parts) r.dim = std::max(r.dim, static_cast<int>(p.base.size()));
    r.height = r.card_G - r.dim;
    r.used.push_back("dim K[G_i]/I_i = card F_i (I_i fully parametrized on F_i)");

    std::vector<std::uint32_t> facets;
    for (const auto& p : spec.parts) {
        std::uint32_t m = 0;
        for (const auto& v : p.base) m |= 1u << (std::find(F.begin(), F.end(), v) - F.begin());
        facets.push_back(m);
    }
    auto base = complex_from_facets(F, facets);
    auto rec = recognize_two_linear(base);
    r.base_recognized = rec.accepted && rec.connected;
    r.base_d_tree = rec.d_tree;
    if (rec.accepted) {
        auto pipe = run_complex_pipeline(base);
        r.depth_base = pipe.invariants->depth;
        r.ara_base = *pipe.invariants->ara;
        r.used.push_back("ara(I_Δ(F)) = card F - depth(K[F]/I_Δ(F)) = " + std::to_string(*r.ara_base) + " from the facet tableau");
    }
    else
        r.not_applicable.push_back("base complex not recognized: " + rec.reason);

    std::optional<int> parts_sum = 0;
    for (const auto& p : spec.parts) {
        if (p.ara) *parts_sum += *p.ara;
        else if (p.is_stci) *parts_sum += static_cast<int>(p.fresh.size());
        else {
            parts_sum.reset();
            break;
        }
    }
    std::optional<int> toric = parts_sum;
    if (spec.ara_total && (!toric || *spec.ara_total < *toric)) toric = spec.ara_total;
    if (!toric) throw MissingMetadata("parts", "ara of each I_i or of their sum");
    if (r.ara_base) {
        r.ara_upper = *toric + *r.ara_base;
        r.used.push_back("P_G = rad(Σ I_i + I_Δ(F)), so ara(P_G) ≤ " + std::to_string(*toric) + " + " + std::to_string(*r.ara_base));
        if (*r.ara_upper <= r.height) {
            r.ara = r.height;
            r.stci = true;
            r.used.push_back("ht(P_G) ≤ ara(P_G) ≤ " + std::to_string(*r.ara_upper) + " = ht(P_G)");
        }
    }
    bool all_stci = std::all_of(spec.parts.begin(), spec.parts.end(), [](const AraPart& p) { return p.is_stci; });
    bool all_cm = std::all_of(spec.parts.begin(), spec.parts.end(), [](const AraPart& p) { return p.is_CM; });
    if (!r.extension_disjoint) r.not_applicable.push_back("fresh vertex sets are not pairwise disjoint and disjoint from F");
    if (!all_stci) r.not_applicable.push_back("some I_i is not marked stci");
    if (r.extension_disjoint && all_stci && r.base_recognized) {
        int ara = r.card_G - *r.depth_base;
        r.ara = ara;
        r.cd = ara;
        r.c = r.card_G - ara - 1;
        r.used.push_back("generalized-tree base with stci parts: ara = cd = card G - depth(K[F]/I_Δ(F))");
        if (r.base_d_tree) {
            r.stci = true;
            r.used.push_back("d-tree base: P_G is a set-theoretic complete intersection");
        }
        if (all_cm) {
            r.projdim = ara;
            r.used.push_back("Cohen-Macaulay parts: projdim = ara");
        }
    }
    return r;
}

/** Reads {"parts": [{"base", "fresh", "ara", "stci", "cm"}], "ara_total"}. */
inline AraSpec parse_ara_spec(const std::string& text)
{
    AraSpec spec;
    try {
        auto j = nlohmann::json::parse(text);
        for (const auto& p : j.at("parts")) {
            AraPart part;
            part.base = p.at("base").get<std::vector<std::string>>();
            part.fresh = p.value("fresh", std::vector<std::string>{});
            if (p.contains("ara")) part.ara = p["ara"].get<int>();
            part.is_stci = p.value("stci", false);
            part.is_CM = p.value("cm", false);
            spec.parts.push_back(part);
        }
        if (j.contains("ara_total")) spec.ara_total = j["ara_total"].get<int>();
    }
    catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("ara spec: ") + e.what());
    }
    return spec;
}

}  // namespace ljv

#endif
