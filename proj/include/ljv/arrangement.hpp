/**
 * Sequences of prime components J_i = (M_i, (Q_i)) and the verification and
 * search of linearly joined orderings.
 */

#ifndef LJV_ARRANGEMENT_HPP
#define LJV_ARRANGEMENT_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "exactlin.hpp"
#include "parse.hpp"

namespace ljv {

struct InclusionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SearchBudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ComponentMeta {
    std::optional<int> depth, reg, dim, deg;
    std::optional<bool> is_CM, is_stci;

    bool empty() const { return !depth && !reg && !dim && !deg && !is_CM && !is_stci; }
};

struct Component {
    std::string name;
    LinearSpace linear;
    std::vector<Poly> extra_gens;
    ComponentMeta meta;

    bool linear_only() const { return extra_gens.empty(); }
};

struct Arrangement {
    std::vector<std::string> vars;
    std::vector<Component> components;

    std::size_t size() const { return components.size(); }

    bool linear_only() const
    {
        return std::all_of(components.begin(), components.end(), [](const Component& c) { return c.linear_only(); });
    }

    std::vector<LinearSpace> linear_parts() const
    {
        std::vector<LinearSpace> out;
        for (const auto& c : components) out.push_back(c.linear);
        return out;
    }

    Arrangement reordered(const std::vector<std::size_t>& order) const
    {
        Arrangement a{vars, {}};
        for (auto i : order) a.components.push_back(components.at(i));
        return a;
    }
};

/**
 * Structural checks: nonempty, ambient agreement, degree of extra
 * generators, distinct names, no inclusion between linear-only components.
 */
inline void validate(const Arrangement& arr)
{
    if (arr.components.empty()) throw InputError("arrangement has no components");
    std::set<std::string> names;
    for (const auto& c : arr.components) {
        if (!names.insert(c.name).second) throw InputError("duplicate component name '" + c.name + "'");
        if (c.linear.vars() != arr.vars) throw AmbientError("component '" + c.name + "' has a different ambient");
        for (const auto& g : c.extra_gens)
            if (g.degree() < 2) throw InputError("extra generator of degree < 2 in component '" + c.name + "'");
    }
    for (std::size_t i = 0; i < arr.size(); ++i)
        for (std::size_t j = 0; j < arr.size(); ++j) {
            if (i == j) continue;
            const auto &a = arr.components[i], &b = arr.components[j];
            if (a.linear_only() && b.linear_only() && b.linear.contains(a.linear))
                throw InclusionError("linear part of '" + a.name + "' is contained in that of '" + b.name + "'");
        }
}

/**
 * Linear-only arrangement from lists of linear forms.
 */
inline Arrangement make_linear_arrangement(const std::vector<std::string>& vars,
                                           const std::vector<std::pair<std::string, std::vector<LinearForm>>>& comps)
{
    Arrangement a{vars, {}};
    for (const auto& [name, rows] : comps) a.components.push_back({name, LinearSpace(vars, rows), {}, {}});
    validate(a);
    return a;
}

namespace detail {

inline void set_meta(ComponentMeta& m, const std::string& key, long long value, bool is_bool, TokenStream* ts)
{
    auto fail = [&](const std::string& msg) {
        if (ts) ts->fail(msg);
        throw InputError(msg);
    };
    if (key == "depth") m.depth = static_cast<int>(value);
    else if (key == "reg") m.reg = static_cast<int>(value);
    else if (key == "dim") m.dim = static_cast<int>(value);
    else if (key == "deg") m.deg = static_cast<int>(value);
    else if (key == "is_CM" || key == "cm" || key == "CM") m.is_CM = value != 0;
    else if (key == "is_stci" || key == "stci") m.is_stci = value != 0;
    else fail("unknown metadata key '" + key + "'");
    (void)is_bool;
}

inline Arrangement parse_text(const std::string& text)
{
    TokenStream ts(tokenize(text));
    Arrangement arr;
    if (ts.peek().kind != Token::Ident || ts.peek().text != "vars") ts.fail("expected 'vars'");
    ts.next();
    std::set<std::string> seen;
    while (ts.peek().kind == Token::Ident) {
        if (!seen.insert(ts.peek().text).second) ts.fail("duplicate variable");
        arr.vars.push_back(ts.next().text);
    }
    ts.expect(";");
    if (arr.vars.empty()) ts.fail("no variables declared");
    std::set<std::string> names;
    while (!ts.at_end()) {
        if (ts.peek().kind != Token::Ident || ts.peek().text != "component") ts.fail("expected 'component'");
        ts.next();
        if (ts.peek().kind != Token::Ident) ts.fail("expected component name");
        Token name_tok = ts.peek();
        Component c;
        c.name = ts.next().text;
        if (!names.insert(c.name).second)
            throw ParseError("duplicate component name '" + c.name + "'", name_tok.line, name_tok.col);
        ts.expect("{");
        std::vector<LinearForm> rows;
        while (!ts.accept("}")) {
            std::string field = ts.expect_ident();
            ts.expect(":");
            if (field == "linear" || field == "gens") {
                if (!ts.is_symbol(";")) {
                    do {
                        Token start = ts.peek();
                        PolyParser pp(ts, arr.vars);
                        Poly p = pp.expr();
                        if (field == "linear") {
                            try {
                                rows.push_back(poly_to_linear(p));
                            }
                            catch (const std::invalid_argument& e) {
                                throw ParseError(e.what(), start.line, start.col);
                            }
                        }
                        else {
                            if (p.degree() < 2)
                                throw ParseError("extra generator must have degree >= 2", start.line, start.col);
                            c.extra_gens.push_back(p);
                        }
                    } while (ts.accept(","));
                }
                ts.expect(";");
            }
            else if (field == "meta") {
                do {
                    std::string key = ts.expect_ident();
                    ts.expect("=");
                    const Token& v = ts.peek();
                    if (v.kind == Token::Number) set_meta(c.meta, key, std::stoll(ts.next().text), false, &ts);
                    else if (v.kind == Token::Ident && (v.text == "true" || v.text == "false"))
                        set_meta(c.meta, key, ts.next().text == "true", true, &ts);
                    else ts.fail("expected number or boolean");
                } while (ts.accept(","));
                ts.expect(";");
            }
            else
                throw ParseError("unknown field '" + field + "'", ts.peek().line, ts.peek().col);
        }
        c.linear = LinearSpace(arr.vars, rows);
        arr.components.push_back(std::move(c));
    }
    return arr;
}

inline Arrangement parse_json(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    }
    catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("json: ") + e.what());
    }
    Arrangement arr;
    try {
        for (const auto& v : j.at("vars")) arr.vars.push_back(v.get<std::string>());
        for (const auto& jc : j.at("components")) {
            Component c;
            c.name = jc.at("name").get<std::string>();
            std::vector<LinearForm> rows;
            if (jc.contains("linear"))
                for (const auto& s : jc["linear"]) rows.push_back(poly_to_linear(parse_poly(s.get<std::string>(), arr.vars)));
            if (jc.contains("gens"))
                for (const auto& s : jc["gens"]) {
                    Poly p = parse_poly(s.get<std::string>(), arr.vars);
                    if (p.degree() < 2) throw InputError("extra generator must have degree >= 2");
                    c.extra_gens.push_back(p);
                }
            if (jc.contains("meta"))
                for (const auto& [k, v] : jc["meta"].items())
                    set_meta(c.meta, k, v.is_boolean() ? (long long)v.get<bool>() : v.get<long long>(), v.is_boolean(), nullptr);
            c.linear = LinearSpace(arr.vars, rows);
            arr.components.push_back(std::move(c));
        }
    }
    catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("json: ") + e.what());
    }
    catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    return arr;
}

}  // namespace detail

/**
 * Parses the text grammar
 *   vars a b c;  component NAME { linear: a, b-c; gens: a*b - c^2; meta: depth=3; }
 * or the equivalent JSON document (detected by a leading '{').
 */
inline Arrangement parse_arrangement(const std::string& document)
{
    auto first = document.find_first_not_of(" \t\r\n");
    Arrangement arr = (first != std::string::npos && document[first] == '{') ? detail::parse_json(document)
                                                                              : detail::parse_text(document);
    validate(arr);
    return arr;
}

inline std::string linear_part_text(const LinearSpace& q)
{
    std::string s;
    for (const auto& r : q.basis()) s += (s.empty() ? "" : ", ") + format_linear(r, q.vars());
    return s;
}

inline std::string to_text(const Arrangement& arr)
{
    std::ostringstream os;
    os << "vars";
    for (const auto& v : arr.vars) os << ' ' << v;
    os << ";\n";
    for (const auto& c : arr.components) {
        os << "component " << c.name << " { linear: " << linear_part_text(c.linear) << ";";
        if (!c.extra_gens.empty()) {
            os << " gens: ";
            for (std::size_t i = 0; i < c.extra_gens.size(); ++i) os << (i ? ", " : "") << c.extra_gens[i].str();
            os << ";";
        }
        std::vector<std::string> kv;
        const auto& m = c.meta;
        if (m.depth) kv.push_back("depth=" + std::to_string(*m.depth));
        if (m.reg) kv.push_back("reg=" + std::to_string(*m.reg));
        if (m.dim) kv.push_back("dim=" + std::to_string(*m.dim));
        if (m.deg) kv.push_back("deg=" + std::to_string(*m.deg));
        if (m.is_CM) kv.push_back(std::string("is_CM=") + (*m.is_CM ? "true" : "false"));
        if (m.is_stci) kv.push_back(std::string("is_stci=") + (*m.is_stci ? "true" : "false"));
        if (!kv.empty()) {
            os << " meta: ";
            for (std::size_t i = 0; i < kv.size(); ++i) os << (i ? ", " : "") << kv[i];
            os << ";";
        }
        os << " }\n";
    }
    return os.str();
}

struct CheckReport {
    bool pass = true;
    /** witness[k] = smallest j < k with Q_j ⊆ Q_k + D_{k-1}; entry 0 unused. */
    std::vector<std::optional<std::size_t>> witness;
    std::optional<std::size_t> failed_at;
    std::optional<std::string> offending_generator;
    bool by_sufficient_axioms = false;
    std::string message;
};

/**
 * Smallest j < k with Q_j ⊆ Q_k + D, where D is the intersection of Q_1..Q_{k-1}.
 */
inline std::optional<std::size_t> joined_witness(const std::vector<LinearSpace>& qs, std::size_t k, const LinearSpace& d)
{
    LinearSpace w = sum(qs[k], d);
    for (std::size_t j = 0; j < k; ++j)
        if (w.contains(qs[j])) return j;
    return std::nullopt;
}

/** First extra generator of some M_i not in (Q_j) for some j != i, as "name: poly". */
inline std::optional<std::string> offending_extra_generator(const Arrangement& arr)
{
    for (std::size_t i = 0; i < arr.size(); ++i)
        for (const auto& g : arr.components[i].extra_gens)
            for (std::size_t j = 0; j < arr.size(); ++j)
                if (j != i && !in_linear_ideal(g, arr.components[j].linear))
                    return arr.components[i].name + ": " + g.str() + " not in (Q of " + arr.components[j].name + ")";
    return std::nullopt;
}

/**
 * Verifies the given order.  Linear-only arrangements use the exact
 * geometric form of condition (*); others the sufficient axioms (joined
 * linear parts and M_i ⊆ (Q_j) for j != i).
 */
inline CheckReport check_order(const Arrangement& arr)
{
    CheckReport rep;
    auto qs = arr.linear_parts();
    rep.witness.assign(qs.size(), std::nullopt);
    rep.by_sufficient_axioms = !arr.linear_only();
    LinearSpace d = qs.empty() ? LinearSpace(arr.vars) : qs[0];
    for (std::size_t k = 1; k < qs.size(); ++k) {
        auto w = joined_witness(qs, k, d);
        if (!w) {
            rep.pass = false;
            rep.failed_at = k;
            rep.message = "condition fails at k=" + std::to_string(k + 1) + " (component " + arr.components[k].name + ")";
            return rep;
        }
        rep.witness[k] = w;
        d = intersect(d, qs[k]);
    }
    if (!arr.linear_only()) {
        if (auto bad = offending_extra_generator(arr)) {
            rep.pass = false;
            rep.offending_generator = bad;
            rep.message = "extra generator outside another component's linear ideal: " + *bad;
            return rep;
        }
        rep.message = "verified-by-sufficient-axioms";
    }
    else
        rep.message = "linearly joined";
    return rep;
}

struct OrderResult {
    bool found = false;
    std::vector<std::size_t> order;
    /** NotFound is definitive for linear-only input, advisory otherwise. */
    bool definitive = true;
    std::size_t nodes = 0;
};

/**
 * Backtracking search for a linearly joined order.  Candidates at each
 * depth are tried by increasing dim(Q_c + D) (largest intersection with the
 * current span first), then by name.
 */
inline OrderResult find_order(const Arrangement& arr, std::size_t budget_nodes = 1000000, std::size_t max_components = 20)
{
    if (arr.size() > max_components)
        throw InputError("arrangement has " + std::to_string(arr.size()) + " components, above the search limit");
    OrderResult res;
    res.definitive = arr.linear_only();
    if (!arr.linear_only() && offending_extra_generator(arr)) return res;
    const auto qs = arr.linear_parts();
    const std::size_t l = qs.size();
    std::vector<std::size_t> by_name(l);
    std::iota(by_name.begin(), by_name.end(), 0);
    std::sort(by_name.begin(), by_name.end(),
              [&](std::size_t a, std::size_t b) { return arr.components[a].name < arr.components[b].name; });

    std::vector<std::size_t> prefix;
    std::vector<bool> used(l, false);

    auto tick = [&]() {
        if (++res.nodes > budget_nodes) throw SearchBudgetExceeded("search budget of " + std::to_string(budget_nodes) + " nodes exhausted");
    };

    auto rec = [&](auto&& self, const LinearSpace& d) -> bool {
        if (prefix.size() == l) return true;
        std::vector<std::pair<std::size_t, std::size_t>> cand;
        for (std::size_t pos = 0; pos < l; ++pos) {
            std::size_t c = by_name[pos];
            if (used[c]) continue;
            cand.push_back({prefix.empty() ? 0 : sum(qs[c], d).dim(), pos});
        }
        std::sort(cand.begin(), cand.end());
        for (const auto& [score, pos] : cand) {
            std::size_t c = by_name[pos];
            tick();
            if (!prefix.empty()) {
                std::vector<LinearSpace> seq;
                for (auto p : prefix) seq.push_back(qs[p]);
                seq.push_back(qs[c]);
                if (!joined_witness(seq, seq.size() - 1, d)) continue;
            }
            prefix.push_back(c);
            used[c] = true;
            if (self(self, prefix.size() == 1 ? qs[c] : intersect(d, qs[c]))) return true;
            used[c] = false;
            prefix.pop_back();
        }
        return false;
    };
    if (rec(rec, LinearSpace(arr.vars))) {
        res.found = true;
        res.order = prefix;
    }
    return res;
}

}  // namespace ljv

#endif
