/**
 * Closed-form homological invariants of linearly joined arrangements:
 * depth, regularity, connectedness dimension, cohomological dimension,
 * arithmetical rank, the Cohen-Macaulay criteria and the extension by
 * fresh variable blocks.
 *
 * Dimension conventions: dim_proj(X) = dim_aff(X) - 1, and the empty set
 * has dim_proj = -1.
 */

#ifndef LJV_INVARIANTS_HPP
#define LJV_INVARIANTS_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "arrangement.hpp"
#include "decomp.hpp"
#include "tableau.hpp"

namespace ljv {

struct MissingMetadata : std::runtime_error {
    std::string component;
    MissingMetadata(const std::string& component_, const std::string& what)
        : std::runtime_error("component '" + component_ + "' lacks metadata: " + what), component(component_)
    {
    }
};

struct InternalInconsistency : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * dim_proj(L_{i+1} ∩ (L_1 ∪ ... ∪ L_i)) for i = 1..l-1, i.e.
 * n - dim(Q_{i+1} + D_i) - 1.
 */
inline std::vector<int> stepwise_intersection_dims(const LJDecomposition& dec)
{
    std::vector<int> out;
    const int n = static_cast<int>(dec.vars.size());
    for (std::size_t i = 1; i < dec.size(); ++i) out.push_back(n - static_cast<int>(sum(dec.Q[i], dec.D[i - 1]).dim()) - 1);
    return out;
}

/** depth(S/Q) of the linear part. */
inline int linear_depth(const LJDecomposition& dec)
{
    const int n = static_cast<int>(dec.vars.size());
    if (dec.size() == 1) return n - static_cast<int>(dec.Q[0].dim());
    auto dims = stepwise_intersection_dims(dec);
    return *std::min_element(dims.begin(), dims.end()) + 2;
}

struct DepthReg {
    int depth = 0;
    int reg = 0;
    int linear_depth = 0;
    std::vector<std::string> assumptions;
};

/**
 * depth(S/J) = min(depth S/J_1, ..., depth S/J_l, depth S/Q) and
 * reg(J) = max(2, reg J_i) with reg = 1 for a linear component.  For l = 1
 * the single component's own values are returned.
 *
 * @param arr arrangement in a linearly joined order
 * @param dec its decomposition
 * @throws MissingMetadata when a non-linear component lacks depth or reg
 */
inline DepthReg depth_reg(const Arrangement& arr, const LJDecomposition& dec)
{
    DepthReg r;
    const int n = static_cast<int>(arr.vars.size());
    r.linear_depth = linear_depth(dec);
    r.depth = r.linear_depth;
    r.reg = arr.size() == 1 ? 1 : 2;
    bool all_cm = true;
    for (const auto& c : arr.components) {
        if (c.linear_only()) {
            r.depth = std::min(r.depth, n - static_cast<int>(c.linear.dim()));
            continue;
        }
        std::optional<int> d = c.meta.depth;
        if (!d && c.meta.is_CM.value_or(false) && c.meta.dim) d = c.meta.dim;
        if (!d) throw MissingMetadata(c.name, "depth (or is_CM with dim)");
        if (!c.meta.reg) throw MissingMetadata(c.name, "reg");
        all_cm = all_cm && c.meta.is_CM.value_or(false);
        r.depth = std::min(r.depth, *d);
        r.reg = std::max(r.reg, *c.meta.reg);
        if (arr.size() == 1) r.reg = *c.meta.reg;
    }
    if (!arr.linear_only()) {
        r.assumptions.push_back("component depth and regularity taken from supplied metadata (ambient ring)");
        if (all_cm && r.depth != r.linear_depth)
            throw InternalInconsistency("all components are Cohen-Macaulay but depth(S/J) != depth(S/Q)");
    }
    return r;
}

struct Connectedness {
    /** c(V), projective; -1 for an empty separating intersection. */
    int c_proj = 0;
    /** c(S/I) = c(V) + 1. */
    int c_affine = 0;
    int cd = 0;
    std::vector<std::string> assumptions;
};

/**
 * c(V) = min dim_proj(L_{i+1} ∩ (L_1 ∪ ... ∪ L_i)),
 * cd = max_{i≥2} (dim P_i + dim D_{i-1}) - 1.
 */
inline Connectedness conn_and_cd(const Arrangement& arr, const LJDecomposition& dec)
{
    Connectedness c;
    const int n = static_cast<int>(arr.vars.size());
    if (dec.size() == 1) {
        int depth = n - static_cast<int>(dec.Q[0].dim());
        c.c_affine = depth - 1;
        c.c_proj = c.c_affine - 1;
        c.cd = static_cast<int>(dec.Q[0].dim());
        c.assumptions.push_back("l = 1: c(S/I) reported as depth - 1");
    }
    else {
        auto dims = stepwise_intersection_dims(dec);
        c.c_proj = *std::min_element(dims.begin(), dims.end());
        c.c_affine = c.c_proj + 1;
        int best = 0;
        for (std::size_t i = 1; i < dec.size(); ++i)
            best = std::max(best, static_cast<int>(dec.P[i].dim() + dec.D[i - 1].dim()) - 1);
        c.cd = best;
    }
    if (!arr.linear_only()) c.assumptions.push_back("cd formula assumes every non-linear component is a set-theoretic complete intersection");
    return c;
}

/**
 * ara(Q) = line count + dim D_tail, checked against n - depth(S/Q) and cd.
 *
 * @throws InternalInconsistency when the three values disagree
 */
inline int ara_linear(const Arrangement& arr, const LJDecomposition& dec, const Tableau& tab)
{
    const int n = static_cast<int>(arr.vars.size());
    int ara = dec.size() == 1 ? static_cast<int>(dec.Q[0].dim()) : static_cast<int>(tab.line_count() + dec.D_tail.dim());
    int by_depth = n - linear_depth(dec);
    int cd = conn_and_cd(arr, dec).cd;
    if (ara != by_depth || ara != cd)
        throw InternalInconsistency("ara = " + std::to_string(ara) + ", n - depth = " + std::to_string(by_depth) + ", cd = " + std::to_string(cd));
    return ara;
}

struct CMVerdict {
    /** Empty when the criteria do not decide. */
    std::optional<bool> cm;
    int dim = 0;
    int depth = 0;
    bool pairwise_applicable = false;
    bool chain_holds = false;
    std::vector<std::string> reasons;
};

/**
 * Cohen-Macaulayness of S/J from component dimensions and CM flags.  The
 * stepwise sums J_{i+1} + (J_1 ∩ ... ∩ J_i) equal the linear spaces
 * Q_{i+1} + D_i, so they are CM of dimension n - dim(Q_{i+1} + D_i).
 *
 * @throws MissingMetadata when a non-linear component lacks dim or is_CM
 */
inline CMVerdict cm_check(const Arrangement& arr, const LJDecomposition& dec)
{
    CMVerdict v;
    const int n = static_cast<int>(arr.vars.size());
    std::vector<int> dims;
    bool all_cm = true;
    for (const auto& c : arr.components) {
        if (c.linear_only()) {
            dims.push_back(n - static_cast<int>(c.linear.dim()));
            continue;
        }
        if (!c.meta.dim) throw MissingMetadata(c.name, "dim");
        if (!c.meta.is_CM) throw MissingMetadata(c.name, "is_CM");
        dims.push_back(*c.meta.dim);
        all_cm = all_cm && *c.meta.is_CM;
    }
    v.dim = *std::max_element(dims.begin(), dims.end());
    std::vector<int> sums;
    for (std::size_t i = 1; i < dec.size(); ++i) sums.push_back(n - static_cast<int>(sum(dec.Q[i], dec.D[i - 1]).dim()));
    if (arr.size() == 1) {
        v.cm = all_cm;
        v.depth = v.cm.value() ? v.dim : depth_reg(arr, dec).depth;
        v.reasons.push_back("single component");
        return v;
    }
    bool same_dim = std::all_of(dims.begin(), dims.end(), [&](int d) { return d == dims[0]; });
    if (arr.size() == 2 && all_cm && sums[0] < std::min(dims[0], dims[1])) {
        v.pairwise_applicable = true;
        v.cm = same_dim && sums[0] + 1 == dims[0];
        v.reasons.push_back(v.cm.value() ? "pairwise: equal dimensions and sum of dimension d-1" : "pairwise: dimension condition fails");
    }
    v.chain_holds = all_cm && same_dim && std::all_of(sums.begin(), sums.end(), [&](int s) { return s == dims[0] - 1; });
    if (v.chain_holds) {
        v.cm = true;
        v.reasons.push_back("chain: components CM of dimension " + std::to_string(dims[0]) + ", stepwise sums of dimension " +
                            std::to_string(dims[0] - 1));
    }
    else {
        if (!all_cm) v.reasons.push_back("chain: some component is not CM");
        else if (!same_dim) v.reasons.push_back("chain: components of different dimensions");
        else v.reasons.push_back("chain: some stepwise sum is not of dimension d-1");
    }
    try {
        v.depth = depth_reg(arr, dec).depth;
        if (!v.cm && v.depth < v.dim) {
            v.cm = false;
            v.reasons.push_back("depth " + std::to_string(v.depth) + " < dim " + std::to_string(v.dim));
        }
        else if (!v.cm && all_cm && v.depth == v.dim) {
            v.cm = true;
            v.reasons.push_back("depth equals dimension");
        }
    }
    catch (const MissingMetadata&) {
        v.reasons.push_back("depth unavailable");
    }
    return v;
}

struct Extension {
    Arrangement arrangement;
    /** Products q·f with q in the basis of Q̃_i and f in F_i. */
    std::vector<Poly> generator_delta;
    std::vector<std::vector<std::string>> blocks;
};

/**
 * Adjoins fresh blocks F_1..F_l of the given sizes and sets
 * Q̃_i = Q_i ⊕ (⊕_{j≠i} F_j).  Depth of the linear part is preserved.
 *
 * @param arr linear-only arrangement in a linearly joined order
 * @param block_sizes one non-negative size per component
 * @throws InternalInconsistency if the extended order fails or depth changes
 */
inline Extension extend_arrangement(const Arrangement& arr, const std::vector<std::size_t>& block_sizes)
{
    if (!arr.linear_only()) throw InputError("extension requires a linear-only arrangement");
    if (block_sizes.size() != arr.size()) throw InputError("need one block size per component");
    Extension ext;
    std::set<std::string> taken(arr.vars.begin(), arr.vars.end());
    std::vector<std::string> vars = arr.vars;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        std::vector<std::string> block;
        for (std::size_t k = 0; k < block_sizes[i]; ++k) {
            std::string name = "f" + std::to_string(i + 1) + "_" + std::to_string(k + 1);
            while (taken.count(name)) name += "_";
            taken.insert(name);
            block.push_back(name);
            vars.push_back(name);
        }
        ext.blocks.push_back(block);
    }
    const std::size_t n0 = arr.vars.size(), n = vars.size();
    auto lift = [&](const LinearForm& v) {
        LinearForm w(n, Rational(0));
        std::copy(v.begin(), v.end(), w.begin());
        return w;
    };
    std::vector<std::size_t> offset(arr.size() + 1, n0);
    for (std::size_t i = 0; i < arr.size(); ++i) offset[i + 1] = offset[i] + block_sizes[i];

    ext.arrangement.vars = vars;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        std::vector<LinearForm> rows;
        for (const auto& b : arr.components[i].linear.basis()) rows.push_back(lift(b));
        for (std::size_t j = 0; j < arr.size(); ++j)
            if (j != i)
                for (std::size_t k = offset[j]; k < offset[j + 1]; ++k) rows.push_back(unit_form(n, k));
        ext.arrangement.components.push_back({arr.components[i].name, LinearSpace(vars, rows), {}, {}});
    }
    validate(ext.arrangement);
    for (std::size_t i = 0; i < arr.size(); ++i)
        for (const auto& q : ext.arrangement.components[i].linear.basis())
            for (std::size_t k = offset[i]; k < offset[i + 1]; ++k) ext.generator_delta.push_back(product(vars, q, unit_form(n, k)));

    if (!check_order(ext.arrangement).pass) throw InternalInconsistency("extended arrangement is not linearly joined");
    if (linear_depth(decompose(ext.arrangement)) != linear_depth(decompose(arr))) throw InternalInconsistency("extension changed the depth");
    return ext;
}

struct InvariantReport {
    int n = 0;
    int depth = 0;
    int reg = 0;
    int projdim = 0;
    std::optional<int> ara;
    int cd = 0;
    int conn_dim_affine = 0;
    int conn_dim_proj = 0;
    std::vector<std::string> assumptions;
};

/**
 * All invariants of an arrangement in a linearly joined order.  ara is
 * filled for linear-only arrangements.
 */
inline InvariantReport invariants(const Arrangement& arr, const LJDecomposition& dec)
{
    InvariantReport r;
    r.n = static_cast<int>(arr.vars.size());
    auto dr = depth_reg(arr, dec);
    auto cc = conn_and_cd(arr, dec);
    r.depth = dr.depth;
    r.reg = dr.reg;
    r.projdim = r.n - r.depth;
    r.cd = cc.cd;
    r.conn_dim_affine = cc.c_affine;
    r.conn_dim_proj = cc.c_proj;
    r.assumptions = dr.assumptions;
    r.assumptions.insert(r.assumptions.end(), cc.assumptions.begin(), cc.assumptions.end());
    r.assumptions.push_back("projdim = n - depth (Auslander-Buchsbaum)");
    if (arr.linear_only()) r.ara = ara_linear(arr, dec, build_tableau(dec));
    else r.assumptions.push_back("connectedness of the linear part is reported; c(S/J) = depth - 1 is assumed for non-linear components");
    return r;
}

inline nlohmann::json to_json(const InvariantReport& r)
{
    nlohmann::json j;
    j["n"] = r.n;
    j["depth"] = r.depth;
    j["reg"] = r.reg;
    j["projdim"] = r.projdim;
    j["ara"] = r.ara ? nlohmann::json(*r.ara) : nlohmann::json(nullptr);
    j["cd"] = r.cd;
    j["conn_dim_affine"] = r.conn_dim_affine;
    j["conn_dim_proj"] = r.conn_dim_proj;
    j["assumptions"] = r.assumptions;
    return j;
}

}  // namespace ljv

#endif
