/**
 * The chains D_i, Δ_i, P_i of a linearly joined sequence, the axiom
 * certificate, and the quadric generators of the intersection ideals.
 *
 * Indices are 0-based: component i here is J_{i+1}.
 */

#ifndef LJV_DECOMP_HPP
#define LJV_DECOMP_HPP

#include <string>
#include <vector>

#include "arrangement.hpp"
#include "exactlin.hpp"

namespace ljv {

struct AxiomViolation : std::runtime_error {
    std::size_t k;
    char axiom;
    AxiomViolation(std::size_t k_, char axiom_, const std::string& msg)
        : std::runtime_error("axiom " + std::string(1, axiom_) + ") fails at k=" + std::to_string(k_ + 1) + ": " + msg),
          k(k_), axiom(axiom_)
    {
    }
};

struct AxiomCertificate {
    bool a = true, b = true, c = true, d = true, e = true, f = true;
    /** Failures of d) and e), which are recorded rather than thrown. */
    std::vector<std::string> notes;

    bool all() const { return a && b && c && d && e && f; }
};

struct LJDecomposition {
    std::vector<std::string> vars;
    std::vector<LinearSpace> Q, D, Delta, P;
    LinearSpace D_tail;
    AxiomCertificate certificate;

    std::size_t size() const { return Q.size(); }

    /** D_{j,k} = ⊕_{i=j+1..k} Δ_i. */
    LinearSpace D_jk(std::size_t j, std::size_t k) const
    {
        LinearSpace s(vars);
        for (std::size_t i = j + 1; i <= k && i < Delta.size(); ++i) s = sum(s, Delta[i]);
        return s;
    }

    /** Q_{j,k} = P_j ⊕ D_{j,k}: the ideal of L_j inside the span of L_1..L_k. */
    LinearSpace reduced_Q(std::size_t j, std::size_t k) const { return sum(P[j], D_jk(j, k)); }
};

/** A product of two linear forms d·p. */
struct FactorPair {
    LinearForm left, right;
};

/**
 * Replaces y by its component in Q along Δ when y ∈ Q ⊕ Δ but y ∉ Q.
 * The shift lies in D_{l-1}, so memberships in Q_1..Q_{l-1} are unchanged.
 */
inline LinearForm normalize_factor(const LinearForm& y, const LinearSpace& q, const LinearSpace& delta, const LinearSpace& w)
{
    if (q.contains(y) || !w.contains(y)) return y;
    return project_along(y, q, delta);
}

/**
 * Products Δ_j × P_j for j = 1..k, each earlier factor normalized at every
 * later step so that all products lie in every (Q_i), i ≤ k.
 */
inline std::vector<FactorPair> quadric_factor_pairs(const LJDecomposition& dec, std::size_t k)
{
    std::vector<FactorPair> pairs;
    for (std::size_t l = 1; l <= k && l < dec.size(); ++l) {
        LinearSpace w = sum(dec.Q[l], dec.Delta[l]);
        for (auto& fp : pairs) {
            fp.left = normalize_factor(fp.left, dec.Q[l], dec.Delta[l], w);
            fp.right = normalize_factor(fp.right, dec.Q[l], dec.Delta[l], w);
        }
        for (const auto& d : dec.Delta[l].basis())
            for (const auto& p : dec.P[l].basis()) pairs.push_back({d, p});
    }
    return pairs;
}

/**
 * Generators of ∩_{j≤k} (Q_j): the normalized products followed by the
 * basis of D_k.
 */
inline std::vector<Poly> quadric_generators(const LJDecomposition& dec, std::size_t k)
{
    std::vector<Poly> out;
    for (const auto& fp : quadric_factor_pairs(dec, k)) out.push_back(product(dec.vars, fp.left, fp.right));
    for (const auto& v : dec.D.at(k).basis()) out.push_back(Poly::linear(dec.vars, v));
    return out;
}

/** (M_1,...,M_k, ∩_{j≤k}(Q_j)). */
inline std::vector<Poly> intersection_generators(const Arrangement& arr, const LJDecomposition& dec, std::size_t k)
{
    std::vector<Poly> out;
    for (std::size_t i = 0; i <= k; ++i)
        out.insert(out.end(), arr.components[i].extra_gens.begin(), arr.components[i].extra_gens.end());
    auto q = quadric_generators(dec, k);
    out.insert(out.end(), q.begin(), q.end());
    return out;
}

/** True when one of the two factors lies in s. */
inline bool product_in(const FactorPair& fp, const LinearSpace& s)
{
    return s.contains(fp.left) || s.contains(fp.right);
}

/**
 * Re-verifies axioms a)-f) on a computed decomposition.  b), c), f) throw
 * AxiomViolation; d), e) are recorded in the certificate.
 */
inline AxiomCertificate verify_axioms(const Arrangement& arr, const LJDecomposition& dec)
{
    AxiomCertificate cert;
    const std::size_t l = dec.size();
    for (std::size_t i = 0; i < l; ++i) {
        if (dec.P[i].dim() + dec.D[i].dim() != dec.Q[i].dim() || !(sum(dec.P[i], dec.D[i]) == dec.Q[i]))
            throw AxiomViolation(i, 'b', "Q_i is not D_i ⊕ P_i");
        if (i > 0 && !dec.D[i - 1].contains(dec.D[i])) throw AxiomViolation(i, 'c', "D chain is not decreasing");
    }
    for (std::size_t i = 0; i < l; ++i)
        for (const auto& g : arr.components[i].extra_gens) {
            if (i > 0 && !in_linear_ideal(g, dec.D[i - 1])) {
                cert.d = false;
                cert.notes.push_back("d) " + g.str() + " of " + arr.components[i].name + " not in (D_" + std::to_string(i) + ")");
            }
            for (std::size_t j = i + 1; j < l; ++j)
                if (!in_linear_ideal(g, dec.P[j])) {
                    cert.e = false;
                    cert.notes.push_back("e) " + g.str() + " of " + arr.components[i].name + " not in (P_" + std::to_string(j + 1) + ")");
                }
        }
    for (std::size_t k = 1; k < l; ++k) {
        LinearSpace target = sum(dec.P[k], dec.D[k - 1]);
        for (const auto& fp : quadric_factor_pairs(dec, k - 1))
            if (!product_in(fp, target))
                throw AxiomViolation(k, 'f', "product " + product(dec.vars, fp.left, fp.right).str() + " not in (P_k, D_{k-1})");
    }
    return cert;
}

/**
 * Computes D_i = ∩_{j≤i} Q_j, Δ_i = complement(D_i in D_{i-1}),
 * P_i = complement(D_i in Q_i), with the axiom certificate attached.
 */
inline LJDecomposition decompose(const Arrangement& arr)
{
    LJDecomposition dec;
    dec.vars = arr.vars;
    dec.Q = arr.linear_parts();
    const std::size_t l = dec.Q.size();
    for (std::size_t i = 0; i < l; ++i) {
        if (i == 0) {
            dec.D.push_back(dec.Q[0]);
            dec.Delta.push_back(LinearSpace(arr.vars));
            dec.P.push_back(LinearSpace(arr.vars));
            continue;
        }
        LinearSpace di = intersect(dec.D[i - 1], dec.Q[i]);
        dec.Delta.push_back(complement(di, dec.D[i - 1]));
        dec.P.push_back(complement(di, dec.Q[i]));
        dec.D.push_back(di);
    }
    dec.D_tail = dec.D.back();
    dec.certificate = verify_axioms(arr, dec);
    return dec;
}

}  // namespace ljv

#endif
