/**
 * ljv: command-line front end for linearly joined arrangements.
 *
 * Exit status: 0 success, 1 negative verdict, 2 input error, 3 budget or
 * cap exceeded.
 */

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ljv/acceptance.hpp"
#include "ljv/arrangement.hpp"
#include "ljv/decomp.hpp"
#include "ljv/invariants.hpp"
#include "ljv/monomial.hpp"
#include "ljv/oracle.hpp"
#include "ljv/tableau.hpp"

using nlohmann::json;

namespace {

enum Exit { kOk = 0, kNegative = 1, kInput = 2, kBudget = 3 };

struct RunConfig {
    std::string input;
    std::string spec;
    std::string format = "text";
    std::string oracle = "on";
    std::size_t budget_nodes = 1000000;
    std::size_t max_vars = 14;
    std::uint64_t seed = 1;
    std::uint64_t gf = 0;
    std::string lambda;
    std::string blocks;
    std::string fresh;
    std::string betti_or_verify;
    bool ara = false;
};

struct InputFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const RunConfig& cfg)
{
    if (!cfg.spec.empty()) return cfg.spec;
    if (cfg.input.empty()) throw InputFailure("no input: pass --input FILE (or '-') or --spec TEXT");
    if (cfg.input == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(cfg.input);
    if (!in) throw InputFailure("cannot open '" + cfg.input + "'");
    return {std::istreambuf_iterator<char>(in), {}};
}

bool as_json(const RunConfig& cfg) { return cfg.format == "json"; }

json with_schema(json j)
{
    j["schema"] = 1;
    return j;
}

void emit(const RunConfig& cfg, const json& j, const std::string& text)
{
    if (as_json(cfg)) std::cout << with_schema(j).dump(2) << "\n";
    else std::cout << text;
}

std::vector<std::string> space_names(const ljv::LinearSpace& s)
{
    std::vector<std::string> out;
    for (const auto& v : s.basis()) out.push_back(ljv::format_linear(v, s.vars()));
    return out;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep = ", ")
{
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
    return s;
}

std::vector<int> parse_ints(const std::string& s)
{
    std::vector<int> out;
    std::string t = s;
    for (char& c : t)
        if (c == ',') c = ' ';
    std::istringstream in(t);
    for (std::string tok; in >> tok;) {
        try {
            std::size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        }
        catch (const std::logic_error&) {
            throw ljv::InputError("not an integer: '" + tok + "'");
        }
    }
    return out;
}

/** Arrangement in a linearly joined order, searching when the given order fails. */
std::pair<ljv::Arrangement, bool> joined_arrangement(const RunConfig& cfg)
{
    auto arr = ljv::parse_arrangement(read_input(cfg));
    if (ljv::check_order(arr).pass) return {arr, true};
    auto res = ljv::find_order(arr, cfg.budget_nodes);
    if (!res.found) return {arr, false};
    return {arr.reordered(res.order), true};
}

int not_joined(const RunConfig& cfg)
{
    emit(cfg, {{"linearly_joined", false}}, "not linearly joined in any order\n");
    return kNegative;
}

int cmd_check(const RunConfig& cfg)
{
    auto arr = ljv::parse_arrangement(read_input(cfg));
    auto rep = ljv::check_order(arr);
    json j;
    j["pass"] = rep.pass;
    j["message"] = rep.message;
    j["witness"] = json::array();
    std::ostringstream os;
    os << (rep.pass ? "linearly joined" : "not linearly joined") << ": " << rep.message << "\n";
    for (std::size_t k = 1; k < rep.witness.size(); ++k) {
        if (rep.witness[k]) {
            j["witness"].push_back({{"k", arr.components[k].name}, {"j", arr.components[*rep.witness[k]].name}});
            os << "  " << arr.components[k].name << " meets the earlier span inside " << arr.components[*rep.witness[k]].name << "\n";
        }
    }
    if (rep.failed_at) {
        j["failed_at"] = arr.components[*rep.failed_at].name;
        os << "  fails at " << arr.components[*rep.failed_at].name << "\n";
    }
    if (rep.offending_generator) j["offending_generator"] = *rep.offending_generator;
    emit(cfg, j, os.str());
    return rep.pass ? kOk : kNegative;
}

int cmd_order(const RunConfig& cfg)
{
    auto arr = ljv::parse_arrangement(read_input(cfg));
    auto res = ljv::find_order(arr, cfg.budget_nodes);
    json j;
    j["found"] = res.found;
    j["definitive"] = res.definitive;
    j["nodes"] = res.nodes;
    std::vector<std::string> names;
    for (auto i : res.order) names.push_back(arr.components[i].name);
    j["order"] = names;
    std::string text = res.found ? "order: " + join(names, " ") + "\n"
                                 : std::string("no linearly joined order") + (res.definitive ? "" : " (advisory)") + "\n";
    emit(cfg, j, text);
    return res.found ? kOk : kNegative;
}

int cmd_decompose(const RunConfig& cfg)
{
    auto [arr, ok] = joined_arrangement(cfg);
    if (!ok) return not_joined(cfg);
    auto dec = ljv::decompose(arr);
    json j;
    std::ostringstream os;
    std::vector<std::string> order;
    for (const auto& c : arr.components) order.push_back(c.name);
    j["order"] = order;
    os << "order: " << join(order, " ") << "\n";
    j["steps"] = json::array();
    for (std::size_t i = 0; i < dec.size(); ++i) {
        json s = {{"component", arr.components[i].name}, {"Q", space_names(dec.Q[i])}, {"D", space_names(dec.D[i])}};
        os << arr.components[i].name << ": Q = (" << join(space_names(dec.Q[i])) << ")  D = (" << join(space_names(dec.D[i])) << ")";
        if (i > 0) {
            s["Delta"] = space_names(dec.Delta[i]);
            s["P"] = space_names(dec.P[i]);
            os << "  Delta = (" << join(space_names(dec.Delta[i])) << ")  P = (" << join(space_names(dec.P[i])) << ")";
        }
        os << "\n";
        j["steps"].push_back(s);
    }
    std::vector<std::string> gens;
    for (const auto& g : ljv::intersection_generators(arr, dec, dec.size() - 1)) gens.push_back(g.str());
    j["generators"] = gens;
    j["axioms"] = dec.certificate.all();
    j["notes"] = dec.certificate.notes;
    os << "generators: " << join(gens) << "\n";
    for (const auto& n : dec.certificate.notes) os << "note: " << n << "\n";
    emit(cfg, j, os.str());
    return kOk;
}

int cmd_tableau(const RunConfig& cfg)
{
    auto [arr, ok] = joined_arrangement(cfg);
    if (!ok) return not_joined(cfg);
    if (!arr.linear_only()) throw ljv::InputError("tableau requires a linear-only arrangement");
    auto dec = ljv::decompose(arr);
    auto tab = ljv::build_tableau(dec);
    auto rep = ljv::verify_tableau(tab);
    json j = ljv::render_json(tab);
    j["properties_ok"] = rep.ok;
    j["failures"] = rep.failures;
    std::ostringstream os;
    os << ljv::render_text(tab);
    os << "sums:\n";
    for (const auto& q : ljv::diagonal_sums(tab)) os << "  " << q.str() << "\n";
    os << "properties: " << (rep.ok ? "ok" : "FAILED") << "\n";
    for (const auto& f : rep.failures) os << "  " << f << "\n";
    try {
        auto cert = ljv::sv_verify(tab);
        unsigned m = 0;
        for (const auto& w : cert.witnesses) m = std::max(m, w.m);
        j["sv"] = {{"ok", true}, {"max_exponent", m}, {"witnesses", cert.witnesses.size()}};
        os << "sv: ok (" << cert.witnesses.size() << " pairs, max exponent " << m << ")\n";
    }
    catch (const ljv::NoSVWitness& e) {
        j["sv"] = {{"ok", false}, {"error", e.what()}};
        os << "sv: FAILED " << e.what() << "\n";
        rep.ok = false;
    }
    int ara = ljv::ara_linear(arr, dec, tab);
    j["ara"] = ara;
    os << "ara = " << ara << "\n";
    emit(cfg, j, os.str());
    return rep.ok ? kOk : kNegative;
}

std::string invariants_text(const ljv::InvariantReport& r)
{
    std::ostringstream os;
    os << "n = " << r.n << "\ndepth = " << r.depth << "\nreg = " << r.reg << "\nprojdim = " << r.projdim << "\n";
    os << "ara = " << (r.ara ? std::to_string(*r.ara) : "unknown") << "\ncd = " << r.cd << "\n";
    os << "connectedness (affine) = " << r.conn_dim_affine << "\nconnectedness (projective) = " << r.conn_dim_proj << "\n";
    for (const auto& a : r.assumptions) os << "assumption: " << a << "\n";
    return os.str();
}

int cmd_invariants(const RunConfig& cfg)
{
    auto [arr, ok] = joined_arrangement(cfg);
    if (!ok) return not_joined(cfg);
    auto dec = ljv::decompose(arr);
    auto r = ljv::invariants(arr, dec);
    auto cm = ljv::cm_check(arr, dec);
    json j = ljv::to_json(r);
    j["cohen_macaulay"] = cm.cm ? json(*cm.cm) : json(nullptr);
    std::string text = invariants_text(r);
    text += "Cohen-Macaulay: " + std::string(cm.cm ? (*cm.cm ? "yes" : "no") : "undecided") + "\n";
    emit(cfg, j, text);
    return kOk;
}

int cmd_extend(const RunConfig& cfg)
{
    auto [arr, ok] = joined_arrangement(cfg);
    if (!ok) return not_joined(cfg);
    std::vector<std::size_t> sizes;
    for (int v : parse_ints(cfg.blocks)) {
        if (v < 0) throw ljv::InputError("block sizes must be non-negative");
        sizes.push_back(static_cast<std::size_t>(v));
    }
    auto ext = ljv::extend_arrangement(arr, sizes);
    auto dec = ljv::decompose(ext.arrangement);
    json j;
    j["arrangement"] = ljv::to_text(ext.arrangement);
    j["depth"] = ljv::linear_depth(dec);
    std::vector<std::string> delta;
    for (const auto& g : ext.generator_delta) delta.push_back(g.str());
    j["generator_delta"] = delta;
    std::string text = ljv::to_text(ext.arrangement) + "depth = " + std::to_string(ljv::linear_depth(dec)) + " (unchanged)\n" +
                       "new generators: " + join(delta) + "\n";
    emit(cfg, j, text);
    return kOk;
}

int cmd_sr(const RunConfig& cfg)
{
    auto cx = ljv::parse_squarefree(read_input(cfg));
    auto p = ljv::run_complex_pipeline(cx);
    json j;
    std::ostringstream os;
    j["two_linear"] = p.recognition.accepted;
    j["reason"] = p.recognition.reason;
    std::vector<std::string> gens;
    for (auto g : cx.minimal_nonfaces) gens.push_back(cx.ideal().monomial_str(g));
    j["generators"] = gens;
    os << "ideal: (" << join(gens) << ")\n";
    if (!p.recognition.accepted) {
        os << "not 2-linear: " << p.recognition.reason << "\n";
        emit(cfg, j, os.str());
        return kNegative;
    }
    os << "2-linear: " << p.recognition.reason << "\n";
    std::vector<std::string> facets;
    for (auto f : p.order->facets) facets.push_back(cx.set_str(f));
    j["facets"] = facets;
    os << "facet order: " << join(facets, " ") << "\n";
    json tj = ljv::render_json(*p.tableau);
    j["lines"] = tj["lines"];
    j["sums"] = tj["sums"];
    j["line_count"] = p.tableau->line_count();
    j["invariants"] = ljv::to_json(*p.invariants);
    os << p.tableau->line_count() << " lines\n" << ljv::render_text(*p.tableau) << "sums:\n";
    for (const auto& s : tj["sums"]) os << "  " << s.get<std::string>() << "\n";
    os << invariants_text(*p.invariants);
    int code = kOk;
    if (cfg.oracle == "on") {
        auto oi = ljv::oracle_invariants(cx.ideal(), cfg.max_vars);
        bool agree = oi.depth == p.invariants->depth && oi.projdim == p.invariants->projdim && oi.reg == 1;
        j["oracle"] = {{"depth", oi.depth}, {"projdim", oi.projdim}, {"reg", oi.reg}, {"agrees", agree}};
        os << "oracle: depth " << oi.depth << ", projdim " << oi.projdim << ", reg(S/I) " << oi.reg << (agree ? " (agrees)" : " (DISAGREES)") << "\n";
        if (!agree) code = kNegative;
    }
    emit(cfg, j, os.str());
    return code;
}

int cmd_ferrer(const RunConfig& cfg)
{
    auto lambda = parse_ints(cfg.lambda);
    auto f = ljv::ferrer(lambda);
    json j;
    std::vector<std::string> gens;
    for (auto g : f.ideal.gens) gens.push_back(f.ideal.monomial_str(g));
    j["lambda"] = lambda;
    j["generators"] = gens;
    j["projdim"] = f.projdim;
    j["ara"] = f.ara;
    j["cd"] = f.cd;
    j["connectedness"] = f.c;
    j["arrangement"] = ljv::to_text(f.arrangement);
    std::ostringstream os;
    os << "generators: " << join(gens) << "\nprojdim = " << f.projdim << "\nara = " << f.ara << "\ncd = " << f.cd
       << "\nconnectedness = " << f.c << "\n" << ljv::to_text(f.arrangement);
    int code = kOk;
    if (cfg.oracle == "on") {
        auto oi = ljv::oracle_invariants(f.ideal, cfg.max_vars);
        bool agree = oi.projdim == f.projdim && oi.depth - 1 == f.c;
        j["oracle"] = {{"projdim", oi.projdim}, {"depth", oi.depth}, {"agrees", agree}};
        os << "oracle: projdim " << oi.projdim << ", depth " << oi.depth << (agree ? " (agrees)" : " (DISAGREES)") << "\n";
        if (!agree) code = kNegative;
    }
    emit(cfg, j, os.str());
    return code;
}

int cmd_simplicial(const RunConfig& cfg)
{
    std::string text = read_input(cfg);
    std::ostringstream os;
    json j;
    if (cfg.ara) {
        auto r = ljv::simplicial_ara(ljv::parse_ara_spec(text));
        auto opt = [](const std::optional<int>& v) { return v ? json(*v) : json(nullptr); };
        j = {{"card_G", r.card_G}, {"height", r.height}, {"dim", r.dim}, {"ara_base", opt(r.ara_base)}, {"ara_upper", opt(r.ara_upper)},
             {"ara", opt(r.ara)}, {"cd", opt(r.cd)}, {"projdim", opt(r.projdim)}, {"connectedness", opt(r.c)}, {"stci", r.stci},
             {"used", r.used}, {"not_applicable", r.not_applicable}};
        os << "card G = " << r.card_G << "\nheight = " << r.height << "\n";
        if (r.ara_upper) os << "ara <= " << *r.ara_upper << "\n";
        os << "ara = " << (r.ara ? std::to_string(*r.ara) : "unknown") << "\nstci: " << (r.stci ? "yes" : "not established") << "\n";
        for (const auto& u : r.used) os << "used: " << u << "\n";
        for (const auto& u : r.not_applicable) os << "not applicable: " << u << "\n";
        emit(cfg, j, os.str());
        return kOk;
    }
    auto spec = ljv::parse_simplicial_spec(text);
    auto r = ljv::simplicial_ideal(spec);
    auto strs = [](const std::vector<ljv::Poly>& ps) {
        std::vector<std::string> out;
        for (const auto& p : ps) out.push_back(p.str());
        return out;
    };
    j["I_G"] = strs(r.I_G);
    j["P_G"] = strs(r.P_G);
    j["components"] = json::array();
    os << "P_G = (" << join(strs(r.P_G)) << ")\n";
    for (std::size_t i = 0; i < r.components.size(); ++i) {
        j["components"].push_back(strs(r.components[i]));
        os << "component " << i + 1 << ": (" << join(strs(r.components[i])) << ")\n";
    }
    j["hypothesis_ok"] = r.hypothesis_ok;
    j["hypothesis_failures"] = r.hypothesis_failures;
    j["assumptions"] = r.assumptions;
    for (const auto& f : r.hypothesis_failures) os << "hypothesis fails: " << f << "\n";
    for (const auto& a : r.assumptions) os << "assumption: " << a << "\n";
    if (r.dim) os << "dim = " << *r.dim << "\n";
    if (r.deg) os << "deg = " << *r.deg << "\n";
    emit(cfg, j, os.str());
    return r.hypothesis_ok ? kOk : kNegative;
}

int cmd_oracle(const RunConfig& cfg)
{
    if (cfg.betti_or_verify == "betti") {
        auto cx = ljv::parse_squarefree(read_input(cfg));
        auto t = ljv::hochster_betti(cx.ideal(), cfg.max_vars);
        json j;
        j["n"] = t.n;
        j["betti"] = json::array();
        std::ostringstream os;
        os << "Betti numbers of S/I (i, j, beta):\n";
        for (const auto& [k, v] : t.beta)
            if (v) {
                j["betti"].push_back({k.first, k.second, v});
                os << "  " << k.first << " " << k.second << " " << v << "\n";
            }
        j["projdim"] = t.projdim();
        j["reg"] = t.reg();
        j["depth"] = t.depth();
        os << "projdim = " << t.projdim() << "\nreg = " << t.reg() << "\ndepth = " << t.depth() << "\n";
        emit(cfg, j, os.str());
        return kOk;
    }
    auto [arr, ok] = joined_arrangement(cfg);
    if (!ok) return not_joined(cfg);
    auto tab = ljv::build_tableau(ljv::decompose(arr));
    ljv::ContainmentOptions co;
    co.seed = cfg.seed;
    if (cfg.gf == 2) co.mode = ljv::ContainmentMode::GF2Exhaustive;
    else if (cfg.gf) {
        co.mode = ljv::ContainmentMode::GFSample;
        co.p = cfg.gf;
    }
    co.exhaustive_max_vars = std::min<std::size_t>(cfg.max_vars, 30);
    json j;
    std::ostringstream os;
    try {
        auto rep = ljv::vanishing_and_containment(ljv::diagonal_sums(tab), arr, co);
        j = {{"exact_vanishing", rep.exact_vanishing}, {"mode", rep.mode}, {"p", rep.p}, {"points", rep.points}, {"common_zeros", rep.common_zeros},
             {"counterexample", nullptr}};
        os << "exact vanishing: " << (rep.exact_vanishing ? "yes" : "NO") << "\nmode: " << rep.mode << " (p = " << rep.p << ", " << rep.points
           << " points, " << rep.common_zeros << " common zeros, all on the arrangement)\n";
        emit(cfg, j, os.str());
        return rep.exact_vanishing ? kOk : kNegative;
    }
    catch (const ljv::CounterexamplePoint& e) {
        j = {{"counterexample", e.point}, {"p", e.p}};
        emit(cfg, j, std::string(e.what()) + "\n");
        return kNegative;
    }
}

int cmd_selftest(const RunConfig& cfg)
{
    ljv::AcceptanceOptions opt;
    opt.seed = cfg.seed;
    bool all = true;
    json j = json::array();
    auto results = ljv::run_acceptance(opt, [&](const ljv::CriterionResult& r) {
        if (!as_json(cfg)) std::cout << ljv::format_result(r) << std::endl;
    });
    for (const auto& r : results) {
        all = all && r.pass;
        j.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
    }
    if (as_json(cfg)) std::cout << with_schema({{"criteria", j}, {"pass", all}}).dump(2) << "\n";
    return all ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Linearly joined arrangements: orders, decompositions, tableaux and invariants"};
    app.require_subcommand(1);
    RunConfig cfg;
    auto common = [&](CLI::App* sub) {
        sub->add_option("--input,-i", cfg.input, "input file, or '-' for stdin");
        sub->add_option("--spec", cfg.spec, "inline input text");
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--oracle", cfg.oracle, "cross-check with the monomial oracle")->check(CLI::IsMember({"on", "off"}));
        sub->add_option("--budget-nodes", cfg.budget_nodes, "order search budget");
        sub->add_option("--max-vars", cfg.max_vars, "variable cap for the oracle");
        sub->add_option("--seed", cfg.seed, "random seed");
        sub->add_option("--gf", cfg.gf, "finite field for containment checks (2 = exhaustive)");
    };
    std::vector<std::pair<CLI::App*, int (*)(const RunConfig&)>> cmds;
    auto add = [&](const std::string& name, const std::string& help, int (*fn)(const RunConfig&)) {
        auto* sub = app.add_subcommand(name, help);
        common(sub);
        cmds.push_back({sub, fn});
        return sub;
    };
    add("check", "verify that the given order is linearly joined", cmd_check);
    add("order", "search for a linearly joined order", cmd_order);
    add("decompose", "decomposition chain and generators of the intersection", cmd_decompose);
    add("tableau", "build and verify the triangle, print the line sums", cmd_tableau);
    add("invariants", "depth, regularity, projdim, ara, cd, connectedness", cmd_invariants);
    add("extend", "adjoin fresh variable blocks", cmd_extend)->add_option("--blocks", cfg.blocks, "one block size per component")->required();
    add("sr", "square-free monomial pipeline", cmd_sr);
    add("ferrer", "Ferrer ideal of a partition", cmd_ferrer)->add_option("--lambda", cfg.lambda, "partition, e.g. \"3 2 2\"")->required();
    add("simplicial", "simplicial ideal decomposition (--ara for the rank bound)", cmd_simplicial)->add_flag("--ara", cfg.ara, "read an ara spec");
    add("oracle", "betti: Hochster Betti table; verify-radical: containment evidence", cmd_oracle)
        ->add_option("mode", cfg.betti_or_verify, "betti | verify-radical")
        ->required()
        ->check(CLI::IsMember({"betti", "verify-radical"}));
    add("selftest", "run the acceptance suite", cmd_selftest);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInput;
    }
    try {
        for (auto& [sub, fn] : cmds)
            if (sub->parsed()) return fn(cfg);
    }
    catch (const ljv::ParseError& e) {
        std::cerr << "input error at " << e.what() << "\n";
        return kInput;
    }
    catch (const ljv::SearchBudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kBudget;
    }
    catch (const ljv::CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kBudget;
    }
    catch (const ljv::MissingMetadata& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInput;
    }
    catch (const ljv::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInput;
    }
    catch (const InputFailure& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInput;
    }
    catch (const ljv::AmbientError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInput;
    }
    catch (const ljv::InclusionError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInput;
    }
    catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNegative;
    }
    return kOk;
}
