/**
 * Triangle tableaux of quadric products whose line sums generate the ideal
 * of a linearly joined linear arrangement up to radical.
 *
 * Layout: elements x_1..x_m multiply the diagonals X_i = (x_{i,0}, ...,
 * x_{i,s_i}) with x_{i,0} the common apex.  The product x_i·x_{i,t} lies on
 * line i+t (1-based).
 */

#ifndef LJV_TABLEAU_HPP
#define LJV_TABLEAU_HPP

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "decomp.hpp"
#include "exactlin.hpp"

namespace ljv {

struct AlgorithmInvariantViolation : std::runtime_error {
    std::size_t line;
    int property;
    AlgorithmInvariantViolation(std::size_t line_, int property_, const std::string& msg)
        : std::runtime_error("tableau invariant " + std::to_string(property_) + " violated (line " + std::to_string(line_) + "): " + msg),
          line(line_), property(property_)
    {
    }
};

struct PropertyFailure : std::runtime_error {
    int property;
    PropertyFailure(int property_, const std::string& msg)
        : std::runtime_error("property " + std::to_string(property_) + ": " + msg), property(property_)
    {
    }
};

struct NoSVWitness : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TableauEntry {
    std::size_t element;   // i, 0-based
    std::size_t position;  // t
    LinearForm left, right;
};

struct Tableau {
    std::vector<std::string> vars;
    LinearForm apex;
    std::vector<LinearForm> elements;
    std::vector<std::vector<LinearForm>> diagonals;
    LinearSpace D_tail;

    bool empty() const { return elements.empty(); }

    std::size_t line_count() const
    {
        std::size_t l = 0;
        for (std::size_t i = 0; i < elements.size(); ++i) l = std::max(l, i + diagonals[i].size());
        return l;
    }

    /** lines()[j] holds the entries of line j+1, left diagonal first. */
    std::vector<std::vector<TableauEntry>> lines() const
    {
        std::vector<std::vector<TableauEntry>> out(line_count());
        for (std::size_t i = elements.size(); i-- > 0;)
            for (std::size_t t = 0; t < diagonals[i].size(); ++t)
                out[i + t].push_back({i, t, elements[i], diagonals[i][t]});
        return out;
    }

    std::size_t entry_count() const
    {
        std::size_t c = 0;
        for (const auto& d : diagonals) c += d.size();
        return c;
    }

    /** X_{i,s} = span(x_{i,0..s}). */
    LinearSpace prefix_span(std::size_t i, std::size_t s) const
    {
        std::vector<LinearForm> rows(diagonals[i].begin(), diagonals[i].begin() + std::min(s + 1, diagonals[i].size()));
        return LinearSpace(vars, rows);
    }
};

enum class PickRule {
    /** Prefer x_{i,t} when it lies in Q_l, otherwise x_i. */
    DiagonalFirst,
    /** Prefer x_i when it lies in Q_l, otherwise x_{i,t}. */
    MultiplierFirst
};

struct TableauOptions {
    PickRule pick = PickRule::DiagonalFirst;
};

namespace detail {

inline LinearForm reduce_mod(const LinearSpace& s, const LinearForm& v)
{
    return s.empty() ? v : s.reduce(v);
}

}  // namespace detail

/**
 * Inductive construction over l.  Base l = 2: apex the first Δ_2 element,
 * left multipliers the P_2 basis.  Each later Δ_l element either becomes a
 * new apex (left diagonal, when the apex is outside Q_l) or a new x_1 with a
 * right diagonal whose basis of P_l is chosen by the H_s scan.
 */
inline Tableau build_tableau(const LJDecomposition& dec, const TableauOptions& opt = {})
{
    Tableau tab;
    tab.vars = dec.vars;
    tab.D_tail = dec.D_tail;
    const std::size_t l = dec.size();
    if (l < 2) return tab;
    for (std::size_t i = 1; i < l; ++i)
        if (dec.Delta[i].empty() || dec.P[i].empty())
            throw AlgorithmInvariantViolation(0, 0, "component " + std::to_string(i + 1) + " has an empty Δ or P (nested linear parts)");

    tab.apex = dec.Delta[1].basis()[0];
    for (const auto& p : dec.P[1].basis()) {
        tab.elements.push_back(p);
        tab.diagonals.push_back(dec.Delta[1].basis());
    }

    for (std::size_t step = 2; step < l; ++step) {
        const LinearSpace& q = dec.Q[step];
        const LinearSpace& dl = dec.D[step];
        const LinearSpace& delta = dec.Delta[step];
        LinearSpace w = sum(q, delta);
        tab.apex = normalize_factor(tab.apex, q, delta, w);
        for (auto& e : tab.elements) e = normalize_factor(e, q, delta, w);
        for (auto& d : tab.diagonals) {
            for (std::size_t t = 1; t < d.size(); ++t) d[t] = normalize_factor(d[t], q, delta, w);
            d[0] = tab.apex;
        }

        for (const auto& x : delta.basis()) {
            if (!q.contains(tab.apex)) {
                std::vector<LinearForm> basis = dl.basis();
                for (std::size_t i = 0; i < tab.elements.size(); ++i) {
                    const auto& e = tab.elements[i];
                    if (!q.contains(e))
                        throw AlgorithmInvariantViolation(i + 1, 2, "left multiplier outside Q_" + std::to_string(step + 1));
                    if (LinearSpace(tab.vars, basis).contains(e))
                        throw AlgorithmInvariantViolation(i + 1, 4, "left multipliers dependent modulo D_" + std::to_string(step + 1));
                    basis.push_back(e);
                }
                LinearSpace comp = complement(LinearSpace(tab.vars, basis), q);
                for (auto& d : tab.diagonals) d.insert(d.begin(), x);
                for (const auto& c : comp.basis()) {
                    tab.elements.push_back(c);
                    tab.diagonals.push_back({x});
                }
                tab.apex = x;
            }
            else {
                std::vector<LinearForm> chosen{tab.apex};
                LinearSpace cover = sum(LinearSpace(tab.vars, chosen), dl);
                const std::size_t lines = tab.line_count();
                for (std::size_t k = 1; k <= lines; ++k)
                    for (std::size_t i = 0; i < tab.elements.size(); ++i) {
                        if (k < i + 2) continue;
                        std::size_t t = k - (i + 1);
                        if (t >= tab.diagonals[i].size()) continue;
                        const auto& e = tab.elements[i];
                        const auto& y = tab.diagonals[i][t];
                        if (cover.contains(e) || cover.contains(y)) continue;
                        bool e_in = q.contains(e), y_in = q.contains(y);
                        if (!e_in && !y_in) throw AlgorithmInvariantViolation(k, 5, "product outside Q_" + std::to_string(step + 1));
                        const LinearForm& pick = opt.pick == PickRule::DiagonalFirst ? (y_in ? y : e) : (e_in ? e : y);
                        chosen.push_back(pick);
                        cover = sum(cover, LinearSpace(tab.vars, {pick}));
                    }
                LinearSpace rest = complement(cover, q);
                chosen.insert(chosen.end(), rest.basis().begin(), rest.basis().end());
                tab.elements.insert(tab.elements.begin(), x);
                tab.diagonals.insert(tab.diagonals.begin(), chosen);
            }
        }
    }

    tab.apex = detail::reduce_mod(tab.D_tail, tab.apex);
    for (auto& e : tab.elements) e = detail::reduce_mod(tab.D_tail, e);
    for (auto& d : tab.diagonals)
        for (auto& y : d) y = detail::reduce_mod(tab.D_tail, y);
    return tab;
}

struct TableauReport {
    bool ok = true;
    bool property[6] = {true, true, true, true, true, true};
    std::vector<std::string> failures;

    void fail(int p, const std::string& msg)
    {
        ok = false;
        property[p] = false;
        failures.push_back("property " + std::to_string(p) + ": " + msg);
    }
};

/**
 * Checks the five triangle properties.  Membership and proportionality are
 * taken modulo D_tail.  Property 5 is checked in the form used by the
 * construction: for m > i, the entry of x_m on the line of x_i·x_{i,t} has
 * a factor in X_{i,t}.
 */
inline TableauReport verify_tableau(const Tableau& tab)
{
    TableauReport rep;
    if (tab.empty()) return rep;
    auto red = [&](const LinearForm& v) { return detail::reduce_mod(tab.D_tail, v); };
    const std::size_t m = tab.elements.size();
    if (tab.diagonals.size() != m) {
        rep.fail(4, "diagonal count differs from element count");
        return rep;
    }
    LinearForm apex = red(tab.apex);
    LinearForm x1 = red(tab.elements[0]);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& d = tab.diagonals[i];
        std::string tag = "x_" + std::to_string(i + 1);
        if (d.empty() || !proportional(red(d[0]), apex)) rep.fail(1, tag + " does not start at the apex");
        if (proportional(red(tab.elements[i]), apex)) rep.fail(2, tag + " is the apex");
        for (std::size_t t = 1; t < d.size(); ++t)
            if (proportional(red(d[t]), apex)) rep.fail(2, "apex product off the left diagonal at " + tag);
        if (i > 0) {
            if (proportional(red(tab.elements[i]), x1)) rep.fail(3, tag + " repeats x_1");
            for (const auto& y : d)
                if (proportional(red(y), x1)) rep.fail(3, "x_1 product off the right diagonal at " + tag);
        }
        std::vector<LinearForm> rows;
        for (const auto& y : d) rows.push_back(red(y));
        if (LinearSpace(tab.vars, rows).dim() != d.size()) rep.fail(4, "diagonal of " + tag + " is linearly dependent");
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t t = 0; t < tab.diagonals[i].size(); ++t) {
            std::vector<LinearForm> rows;
            for (std::size_t s = 0; s <= t; ++s) rows.push_back(red(tab.diagonals[i][s]));
            if (!tab.D_tail.empty()) rows.insert(rows.end(), tab.D_tail.basis().begin(), tab.D_tail.basis().end());
            LinearSpace x(tab.vars, rows);
            std::size_t k = i + 1 + t;
            for (std::size_t j = i + 1; j < m; ++j) {
                if (k < j + 1) continue;
                std::size_t u = k - (j + 1);
                if (u >= tab.diagonals[j].size()) continue;
                if (!x.contains(tab.elements[j]) && !x.contains(tab.diagonals[j][u]))
                    rep.fail(5, "entry of x_" + std::to_string(j + 1) + " on line " + std::to_string(k) +
                                    " has no factor in X_{" + std::to_string(i + 1) + "," + std::to_string(t) + "}");
            }
        }
    return rep;
}

/** Throws PropertyFailure on the first failing property. */
inline void require_valid(const Tableau& tab)
{
    auto rep = verify_tableau(tab);
    if (!rep.ok)
        for (int p = 1; p <= 5; ++p)
            if (!rep.property[p]) throw PropertyFailure(p, rep.failures.front());
}

struct SVWitness {
    std::size_t line;            // j, 0-based
    std::size_t a, b;            // indices of p, p'' within the line
    std::size_t witness_line;    // j' < j
    std::size_t witness_index;   // p' within line j'
    unsigned m;                  // exponent
};

struct SVCertificate {
    std::vector<SVWitness> witnesses;
    std::size_t first_line_size = 0;
};

/**
 * Smallest m ∈ {1,2} with p' dividing (p·p'')^m, where the four factors of
 * p·p'' and the two of p' are linear forms; 0 when none exists.
 */
inline unsigned sv_exponent(const std::vector<LinearForm>& factors, const LinearForm& u, const LinearForm& v)
{
    auto count = [&](const LinearForm& f) {
        return std::count_if(factors.begin(), factors.end(), [&](const LinearForm& g) { return proportional(f, g); });
    };
    if (proportional(u, v)) {
        auto c = count(u);
        return c >= 2 ? 1 : c == 1 ? 2 : 0;
    }
    return count(u) >= 1 && count(v) >= 1 ? 1 : 0;
}

/**
 * Certificate for the three conditions: lines cover the entries, the first
 * line has one entry, and every pair on a line has an earlier divisor of a
 * power of its product.
 */
inline SVCertificate sv_verify(const Tableau& tab)
{
    SVCertificate cert;
    auto lines = tab.lines();
    if (lines.empty()) return cert;
    cert.first_line_size = lines[0].size();
    if (lines[0].size() != 1) throw NoSVWitness("first line has " + std::to_string(lines[0].size()) + " entries");
    auto red = [&](const LinearForm& v) { return detail::reduce_mod(tab.D_tail, v); };
    for (std::size_t j = 0; j < lines.size(); ++j)
        for (std::size_t a = 0; a < lines[j].size(); ++a)
            for (std::size_t b = a + 1; b < lines[j].size(); ++b) {
                std::vector<LinearForm> f{red(lines[j][a].left), red(lines[j][a].right), red(lines[j][b].left), red(lines[j][b].right)};
                std::optional<SVWitness> best;
                for (std::size_t jj = 0; jj < j && (!best || best->m > 1); ++jj)
                    for (std::size_t c = 0; c < lines[jj].size(); ++c) {
                        unsigned mm = sv_exponent(f, red(lines[jj][c].left), red(lines[jj][c].right));
                        if (mm && (!best || mm < best->m)) best = SVWitness{j, a, b, jj, c, mm};
                        if (best && best->m == 1) break;
                    }
                if (!best)
                    throw NoSVWitness("no earlier divisor for the pair (" + std::to_string(a) + "," + std::to_string(b) + ") on line " +
                                      std::to_string(j + 1));
                cert.witnesses.push_back(*best);
            }
    return cert;
}

/** Polynomial of one entry. */
inline Poly entry_poly(const Tableau& tab, const TableauEntry& e)
{
    return product(tab.vars, e.left, e.right);
}

/**
 * q_j = sum of the entries of line j, followed by the basis of D_tail.
 */
inline std::vector<Poly> diagonal_sums(const Tableau& tab)
{
    std::vector<Poly> out;
    for (const auto& line : tab.lines()) {
        Poly s(tab.vars);
        for (const auto& e : line) s += entry_poly(tab, e);
        out.push_back(s);
    }
    for (const auto& v : tab.D_tail.basis()) out.push_back(Poly::linear(tab.vars, v));
    return out;
}

/** "b(x-u)" when all variable names are single characters, else "b*(x-u)". */
inline std::string format_product(const LinearForm& a, const LinearForm& b, const std::vector<std::string>& vars)
{
    bool short_names = std::all_of(vars.begin(), vars.end(), [](const std::string& s) { return s.size() == 1; });
    auto f = [&](const LinearForm& v) {
        std::string s = format_linear(v, vars);
        return support_size(v) > 1 || s.find('/') != std::string::npos || (s.size() > 0 && s[0] == '-') ? "(" + s + ")" : s;
    };
    return f(a) + (short_names ? "" : "*") + f(b);
}

inline std::string format_entry(const Tableau& tab, const TableauEntry& e)
{
    return format_product(e.left, e.right, tab.vars);
}

/** Fixed-width triangle, entries comma-separated and right-aligned. */
inline std::string render_text(const Tableau& tab)
{
    std::vector<std::string> rows;
    std::size_t width = 0;
    for (const auto& line : tab.lines()) {
        std::string s;
        for (const auto& e : line) s += (s.empty() ? "" : ", ") + format_entry(tab, e);
        width = std::max(width, s.size());
        rows.push_back(s);
    }
    std::ostringstream os;
    for (std::size_t j = 0; j < rows.size(); ++j)
        os << std::string(width - rows[j].size(), ' ') << rows[j] << "   (" << j + 1 << ")\n";
    return os.str();
}

inline nlohmann::json render_json(const Tableau& tab)
{
    nlohmann::json j;
    j["lines"] = nlohmann::json::array();
    for (const auto& line : tab.lines()) {
        nlohmann::json l = nlohmann::json::array();
        for (const auto& e : line) l.push_back(format_entry(tab, e));
        j["lines"].push_back(l);
    }
    j["sums"] = nlohmann::json::array();
    for (const auto& q : diagonal_sums(tab)) j["sums"].push_back(q.str());
    return j;
}

/**
 * max_{2≤i≤l} (dim P_i + dim D_{i-1} - 1), with D counted modulo D_tail.
 */
inline std::size_t expected_line_count(const LJDecomposition& dec)
{
    std::size_t best = 0;
    for (std::size_t i = 1; i < dec.size(); ++i)
        best = std::max(best, dec.P[i].dim() + dec.D[i - 1].dim() - dec.D_tail.dim() - 1);
    return best;
}

}  // namespace ljv

#endif
