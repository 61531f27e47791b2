/**
 * Independent brute-force checks: graded Betti numbers of square-free
 * monomial ideals through reduced homology of induced subcomplexes, zero-set
 * containment over finite fields, and equality of quadric ideals with
 * intersections of linear ideals in degree two.
 */

#ifndef LJV_ORACLE_HPP
#define LJV_ORACLE_HPP

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "arrangement.hpp"
#include "exactlin.hpp"
#include "parse.hpp"

namespace ljv {

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/** Square-free monomial ideal; each generator is a bitmask over vars. */
struct MonomialIdeal {
    std::vector<std::string> vars;
    std::vector<std::uint32_t> gens;

    std::size_t n() const { return vars.size(); }

    /** Drops generators divisible by another generator. */
    void minimalize()
    {
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        std::vector<std::uint32_t> out;
        for (auto g : gens) {
            bool redundant = false;
            for (auto h : gens)
                if (h != g && (h & g) == h) redundant = true;
            if (!redundant) out.push_back(g);
        }
        gens = out;
    }

    bool is_face(std::uint32_t s) const
    {
        for (auto g : gens)
            if ((g & s) == g) return false;
        return true;
    }

    std::string monomial_str(std::uint32_t m) const
    {
        std::string s;
        bool short_names = std::all_of(vars.begin(), vars.end(), [](const std::string& v) { return v.size() == 1; });
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (m >> i & 1u) s += (s.empty() || short_names ? "" : "*") + vars[i];
        return s.empty() ? "1" : s;
    }

    std::vector<Poly> polys() const
    {
        std::vector<Poly> out;
        for (auto g : gens) {
            Exponent e(vars.size(), 0);
            for (std::size_t i = 0; i < vars.size(); ++i) e[i] = g >> i & 1u;
            out.push_back(Poly::monomial(vars, e, Rational(1)));
        }
        return out;
    }
};

namespace detail {

/** Rank of an integer matrix by fraction-free elimination over multiprecision integers. */
inline std::size_t bareiss_rank_mpz(std::vector<std::vector<Integer>> a)
{
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

/**
 * Fraction-free elimination on 64-bit integers; returns nullopt on
 * overflow so that the caller can redo it with multiprecision.
 */
inline std::optional<std::size_t> bareiss_rank_i64(std::vector<std::vector<long long>> a)
{
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    long long prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                long long x, y, d;
                if (__builtin_mul_overflow(a[r][c], a[i][j], &x) || __builtin_mul_overflow(a[i][c], a[r][j], &y) ||
                    __builtin_sub_overflow(x, y, &d))
                    return std::nullopt;
                a[i][j] = d / prev;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

inline std::size_t integer_rank(const std::vector<std::vector<long long>>& a)
{
    if (a.empty() || a[0].empty()) return 0;
    if (auto r = bareiss_rank_i64(a)) return *r;
    std::vector<std::vector<Integer>> b(a.size(), std::vector<Integer>(a[0].size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) b[i][j] = a[i][j];
    return bareiss_rank_mpz(std::move(b));
}

inline std::size_t gf2_rank(const std::vector<std::vector<long long>>& a)
{
    if (a.empty() || a[0].empty()) return 0;
    const std::size_t cols = a[0].size(), words = (cols + 63) / 64;
    std::vector<std::vector<std::uint64_t>> m(a.size(), std::vector<std::uint64_t>(words, 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (a[i][j] & 1) m[i][j / 64] |= std::uint64_t(1) << (j % 64);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && !(m[p][c / 64] >> (c % 64) & 1)) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (i != r && (m[i][c / 64] >> (c % 64) & 1))
                for (std::size_t w = 0; w < words; ++w) m[i][w] ^= m[r][w];
        ++r;
    }
    return r;
}

}  // namespace detail

enum class HomologyField { Rational, GF2 };

/**
 * Reduced Betti numbers dim H̃_k(Δ) for k = -1..dim Δ, where Δ is given by
 * its faces as bitmasks (must include the empty face).
 */
inline std::vector<std::size_t> reduced_homology(const std::vector<std::uint32_t>& faces, HomologyField field = HomologyField::Rational)
{
    int top = -1;
    for (auto f : faces) top = std::max(top, std::popcount(f) - 1);
    // by_dim[k+1] = faces of dimension k
    std::vector<std::vector<std::uint32_t>> by_dim(top + 2);
    for (auto f : faces) by_dim[std::popcount(f)].push_back(f);
    for (auto& v : by_dim) std::sort(v.begin(), v.end());
    // rank of ∂_k : C_k -> C_{k-1}, k = 0..top; stored at index k+1
    std::vector<std::size_t> rank(top + 3, 0);
    for (int k = 0; k <= top; ++k) {
        const auto& cols = by_dim[k + 1];
        const auto& rows = by_dim[k];
        if (cols.empty() || rows.empty()) continue;
        std::map<std::uint32_t, std::size_t> idx;
        for (std::size_t i = 0; i < rows.size(); ++i) idx[rows[i]] = i;
        std::vector<std::vector<long long>> m(rows.size(), std::vector<long long>(cols.size(), 0));
        for (std::size_t j = 0; j < cols.size(); ++j) {
            int sign = 1;
            for (std::uint32_t rest = cols[j]; rest; rest &= rest - 1) {
                std::uint32_t bit = rest & (~rest + 1);
                m[idx.at(cols[j] & ~bit)][j] = sign;
                sign = -sign;
            }
        }
        rank[k + 1] = field == HomologyField::GF2 ? detail::gf2_rank(m) : detail::integer_rank(m);
    }
    std::vector<std::size_t> h(top + 2, 0);
    for (int k = -1; k <= top; ++k) {
        std::size_t ck = by_dim[k + 1].size();
        std::size_t out_rank = k >= 0 ? rank[k + 1] : 0;
        std::size_t in_rank = k + 2 < static_cast<int>(rank.size()) ? rank[k + 2] : 0;
        h[k + 1] = ck - out_rank - in_rank;
    }
    return h;
}

struct BettiTable {
    std::size_t n = 0;
    /** (i, j) -> β_{i,j}(S/I). */
    std::map<std::pair<int, int>, long long> beta;

    long long at(int i, int j) const
    {
        auto it = beta.find({i, j});
        return it == beta.end() ? 0 : it->second;
    }
    int projdim() const
    {
        int p = 0;
        for (const auto& [k, v] : beta)
            if (v) p = std::max(p, k.first);
        return p;
    }
    int reg() const
    {
        int r = 0;
        for (const auto& [k, v] : beta)
            if (v) r = std::max(r, k.second - k.first);
        return r;
    }
    int depth() const { return static_cast<int>(n) - projdim(); }
};

/**
 * β_{i,σ}(S/I) = dim H̃_{|σ|-i-1}(Δ|σ) summed over vertex subsets σ of
 * each size.
 *
 * @param ideal square-free monomial ideal with Stanley-Reisner complex Δ
 * @param cap largest admissible number of variables
 * @param field coefficient field of the homology
 * @throws CapExceeded when the ideal has more than cap variables
 */
inline BettiTable hochster_betti(const MonomialIdeal& ideal, std::size_t cap = 14, HomologyField field = HomologyField::Rational)
{
    const std::size_t n = ideal.n();
    if (n > cap || n > 24) throw CapExceeded(std::to_string(n) + " variables exceed the oracle cap of " + std::to_string(cap));
    const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
    std::vector<char> face(std::size_t(full) + 1);
    for (std::uint32_t s = 0; s <= full; ++s) face[s] = ideal.is_face(s);
    BettiTable t;
    t.n = n;
    for (std::uint32_t sigma = 0; sigma <= full; ++sigma) {
        std::vector<std::uint32_t> faces;
        for (std::uint32_t s = sigma;; s = (s - 1) & sigma) {
            if (face[s]) faces.push_back(s);
            if (s == 0) break;
        }
        auto h = reduced_homology(faces, field);
        const int size = std::popcount(sigma);
        for (std::size_t k1 = 0; k1 < h.size(); ++k1)
            if (h[k1]) {
                int k = static_cast<int>(k1) - 1;
                t.beta[{size - k - 1, size}] += static_cast<long long>(h[k1]);
            }
    }
    return t;
}

struct OracleInvariants {
    int projdim = 0;
    int depth = 0;
    int reg = 0;
    bool two_linear = false;
};

/**
 * two_linear: every generator has degree 2 and reg(S/I) = 1.  The zero
 * ideal is reported as not 2-linear here (reg(S/I) = 0).
 */
inline OracleInvariants oracle_invariants(const MonomialIdeal& ideal, std::size_t cap = 14, HomologyField field = HomologyField::Rational)
{
    auto t = hochster_betti(ideal, cap, field);
    OracleInvariants o;
    o.projdim = t.projdim();
    o.depth = t.depth();
    o.reg = t.reg();
    bool quadratic = std::all_of(ideal.gens.begin(), ideal.gens.end(), [](std::uint32_t g) { return std::popcount(g) == 2; });
    o.two_linear = !ideal.gens.empty() && quadratic && o.reg == 1;
    return o;
}

struct CounterexamplePoint : std::runtime_error {
    std::uint64_t p;
    std::vector<std::uint64_t> point;
    CounterexamplePoint(std::uint64_t p_, std::vector<std::uint64_t> point_)
        : std::runtime_error(describe(p_, point_)), p(p_), point(std::move(point_))
    {
    }

    static std::string describe(std::uint64_t p, const std::vector<std::uint64_t>& pt)
    {
        std::string s = "common zero off the arrangement over GF(" + std::to_string(p) + "): (";
        for (std::size_t i = 0; i < pt.size(); ++i) s += (i ? "," : "") + std::to_string(pt[i]);
        return s + ")";
    }
};

enum class ContainmentMode { Exact, GFSample, GF2Exhaustive, Auto };

struct ContainmentOptions {
    ContainmentMode mode = ContainmentMode::Auto;
    std::uint64_t p = 101;
    std::size_t samples = 10000;
    std::uint64_t seed = 1;
    std::size_t exhaustive_max_vars = 16;
};

struct ContainmentReport {
    bool exact_vanishing = true;
    std::string mode;
    std::uint64_t p = 0;
    std::size_t points = 0;
    std::size_t common_zeros = 0;
};

namespace detail {

inline std::optional<std::uint64_t> rational_mod(const Rational& q, std::uint64_t p)
{
    Integer num = boost::multiprecision::numerator(q), den = boost::multiprecision::denominator(q);
    Integer P = p;
    Integer dm = ((den % P) + P) % P;
    if (dm == 0) return std::nullopt;
    Integer nm = ((num % P) + P) % P;
    // inverse by Fermat
    Integer inv = boost::multiprecision::powm(dm, P - 2, P);
    return static_cast<std::uint64_t>((nm * inv) % P);
}

struct ModPoly {
    std::vector<std::pair<std::vector<unsigned>, std::uint64_t>> terms;
};

inline std::optional<ModPoly> poly_mod(const Poly& f, std::uint64_t p)
{
    ModPoly m;
    for (const auto& [e, c] : f.terms()) {
        auto cm = rational_mod(c, p);
        if (!cm) return std::nullopt;
        if (*cm) m.terms.push_back({e, *cm});
    }
    return m;
}

inline std::uint64_t eval_mod(const ModPoly& f, const std::vector<std::uint64_t>& x, std::uint64_t p)
{
    std::uint64_t acc = 0;
    for (const auto& [e, c] : f.terms) {
        std::uint64_t t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) t = t * x[i] % p;
        acc = (acc + t) % p;
    }
    return acc;
}

}  // namespace detail

/**
 * Evidence for rad(q_0, ..., q_r) = ∩ (Q_i).  Exact mode reduces every q
 * modulo every (Q_i).  Finite-field modes look for a common zero of the q
 * outside ∪ L_i, exhaustively over GF(2)^n or by sampling GF(p)^n; Auto
 * picks the exhaustive mode for small coordinate arrangements, where the
 * reduction mod 2 keeps every linear part intact.  The exact reduction always runs.
 *
 * @throws CounterexamplePoint on a common zero off the arrangement
 */
inline ContainmentReport vanishing_and_containment(const std::vector<Poly>& qs, const Arrangement& arr, const ContainmentOptions& opt = {})
{
    ContainmentReport rep;
    const auto Qs = arr.linear_parts();
    for (const auto& q : qs)
        for (const auto& Q : Qs)
            if (!in_linear_ideal(q, Q)) rep.exact_vanishing = false;
    rep.mode = "exact";
    if (opt.mode == ContainmentMode::Exact) return rep;

    const std::size_t n = arr.vars.size();
    auto convert = [&](std::uint64_t p) -> std::optional<std::pair<std::vector<detail::ModPoly>, std::vector<std::vector<detail::ModPoly>>>> {
        std::vector<detail::ModPoly> mq;
        for (const auto& q : qs) {
            auto m = detail::poly_mod(q, p);
            if (!m) return std::nullopt;
            mq.push_back(*m);
        }
        std::vector<std::vector<detail::ModPoly>> ml;
        for (const auto& Q : Qs) {
            std::vector<detail::ModPoly> forms;
            for (const auto& v : Q.basis()) {
                auto m = detail::poly_mod(Poly::linear(arr.vars, v), p);
                if (!m) return std::nullopt;
                forms.push_back(*m);
            }
            ml.push_back(forms);
        }
        return std::make_pair(mq, ml);
    };

    ContainmentMode mode = opt.mode;
    std::uint64_t p = opt.p;
    auto data = convert(2);
    bool coordinate = std::all_of(Qs.begin(), Qs.end(), [](const LinearSpace& Q) {
        return std::all_of(Q.basis().begin(), Q.basis().end(), [](const LinearForm& v) { return support_size(v) == 1; });
    });
    if (mode == ContainmentMode::Auto)
        mode = (n <= opt.exhaustive_max_vars && data && coordinate) ? ContainmentMode::GF2Exhaustive : ContainmentMode::GFSample;
    if (mode == ContainmentMode::GF2Exhaustive) {
        if (!data) throw std::domain_error("coefficients are not 2-integral");
        if (n > 30) throw CapExceeded("too many variables for exhaustive enumeration");
        p = 2;
    }
    else {
        data = convert(p);
        if (!data) throw std::domain_error("coefficients are not integral at p = " + std::to_string(p));
    }
    const auto& [mq, ml] = *data;
    rep.mode = mode == ContainmentMode::GF2Exhaustive ? "gf2-exhaustive" : "gf-sample";
    rep.p = p;

    auto check_point = [&](const std::vector<std::uint64_t>& x) {
        ++rep.points;
        for (const auto& q : mq)
            if (detail::eval_mod(q, x, p)) return;
        ++rep.common_zeros;
        for (const auto& forms : ml) {
            bool on = true;
            for (const auto& f : forms)
                if (detail::eval_mod(f, x, p)) {
                    on = false;
                    break;
                }
            if (on) return;
        }
        throw CounterexamplePoint(p, x);
    };

    std::vector<std::uint64_t> x(n, 0);
    if (mode == ContainmentMode::GF2Exhaustive) {
        for (std::uint64_t m = 0; m < (std::uint64_t(1) << n); ++m) {
            for (std::size_t i = 0; i < n; ++i) x[i] = m >> i & 1;
            check_point(x);
        }
    }
    else {
        std::mt19937_64 rng(opt.seed);
        std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
        for (std::size_t s = 0; s < opt.samples; ++s) {
            for (auto& c : x) c = dist(rng);
            check_point(x);
        }
    }
    return rep;
}

namespace detail {

/** Coordinates of a degree-2 polynomial over the monomials x_i x_j, i ≤ j. */
inline std::vector<Rational> sym2_vector(const Poly& f)
{
    const std::size_t n = f.vars().size();
    std::vector<Rational> v(n * (n + 1) / 2, Rational(0));
    for (const auto& [e, c] : f.terms()) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            for (unsigned k = 0; k < e[i]; ++k) idx.push_back(i);
        if (idx.size() != 2) throw std::invalid_argument("not a quadric: " + f.str());
        std::size_t i = idx[0], j = idx[1];
        v[j * (j + 1) / 2 + i] = c;
    }
    return v;
}

inline std::vector<std::string> sym2_names(std::size_t n)
{
    std::vector<std::string> out;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i <= j; ++i) out.push_back("m" + std::to_string(i) + "_" + std::to_string(j));
    return out;
}

}  // namespace detail

/**
 * True when the ideal generated by gens (linear forms and quadrics) agrees
 * with ∩ (Q_j) in degrees 1 and 2.
 */
inline bool quadric_ideal_matches(const std::vector<Poly>& gens, const std::vector<LinearSpace>& Qs)
{
    if (Qs.empty()) return gens.empty();
    const auto& vars = Qs[0].vars();
    const std::size_t n = vars.size();
    auto names = detail::sym2_names(n);
    std::vector<LinearForm> lin;
    std::vector<std::vector<Rational>> quad;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (g.degree() == 1) lin.push_back(poly_to_linear(g));
        else quad.push_back(detail::sym2_vector(g));
    }
    LinearSpace l1(vars, lin);
    LinearSpace d = Qs[0];
    for (std::size_t j = 1; j < Qs.size(); ++j) d = intersect(d, Qs[j]);
    if (!(l1 == d)) return false;
    for (const auto& v : l1.basis())
        for (std::size_t k = 0; k < n; ++k) quad.push_back(detail::sym2_vector(product(vars, v, unit_form(n, k))));
    LinearSpace got(names, quad);
    std::optional<LinearSpace> want;
    for (const auto& Q : Qs) {
        std::vector<std::vector<Rational>> rows;
        for (const auto& v : Q.basis())
            for (std::size_t k = 0; k < n; ++k) rows.push_back(detail::sym2_vector(product(vars, v, unit_form(n, k))));
        LinearSpace s(names, rows);
        want = want ? intersect(*want, s) : s;
    }
    return got == *want;
}

}  // namespace ljv

#endif
