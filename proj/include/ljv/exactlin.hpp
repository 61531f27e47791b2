/**
 * Exact linear algebra over the space of linear forms.
 *
 * A linear form in the variables v_1..v_n is a coefficient vector of length
 * n.  Subspaces are stored by their reduced row-echelon basis, so two equal
 * subspaces always have identical representations.  Polynomials are sparse
 * maps from exponent vectors to exact rationals.
 */

#ifndef LJV_EXACTLIN_HPP
#define LJV_EXACTLIN_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace ljv {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

struct AmbientError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotASubspace : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 * Prime field element.  Used by the GF(p) homology and point-sampling modes.
 */
template <std::uint32_t P>
struct ModP {
    std::uint32_t v = 0;

    ModP() = default;
    ModP(long long x) : v(static_cast<std::uint32_t>(((x % (long long)P) + (long long)P) % (long long)P)) {}

    friend ModP operator+(ModP a, ModP b) { return ModP((long long)a.v + b.v); }
    friend ModP operator-(ModP a, ModP b) { return ModP((long long)a.v - (long long)b.v); }
    friend ModP operator*(ModP a, ModP b) { return ModP((long long)a.v * b.v); }
    friend ModP operator/(ModP a, ModP b) { return a * b.inverse(); }
    ModP operator-() const { return ModP(-(long long)v); }
    ModP& operator+=(ModP b) { return *this = *this + b; }
    ModP& operator-=(ModP b) { return *this = *this - b; }
    ModP& operator*=(ModP b) { return *this = *this * b; }
    friend bool operator==(ModP a, ModP b) { return a.v == b.v; }
    friend bool operator!=(ModP a, ModP b) { return a.v != b.v; }

    ModP inverse() const
    {
        if (v == 0) throw std::domain_error("inverse of zero in GF(p)");
        long long r = 1, b = v, e = P - 2;
        while (e > 0) {
            if (e & 1) r = r * b % P;
            b = b * b % P;
            e >>= 1;
        }
        return ModP(r);
    }
};

template <class K>
bool is_zero(const K& x)
{
    return x == K(0);
}

/**
 * In-place reduced row-echelon form.  Zero rows are dropped.
 *
 * @param rows Matrix rows, all of length ncols.
 * @returns Pivot column of each remaining row, strictly increasing.
 */
template <class K>
std::vector<std::size_t> rref_in_place(std::vector<std::vector<K>>& rows, std::size_t ncols)
{
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && is_zero(rows[p][c])) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        K inv = K(1) / rows[r][c];
        for (std::size_t j = c; j < ncols; ++j) rows[r][j] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || is_zero(rows[i][c])) continue;
            K f = rows[i][c];
            for (std::size_t j = c; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
        }
        piv.push_back(c);
        ++r;
    }
    rows.resize(r);
    return piv;
}

template <class K>
std::size_t matrix_rank(std::vector<std::vector<K>> rows, std::size_t ncols)
{
    return rref_in_place(rows, ncols).size();
}

/**
 * Basis of the right kernel {c : M c = 0} of a matrix given by rows.
 */
template <class K>
std::vector<std::vector<K>> kernel(std::vector<std::vector<K>> rows, std::size_t ncols)
{
    auto piv = rref_in_place(rows, ncols);
    std::vector<bool> is_piv(ncols, false);
    for (auto p : piv) is_piv[p] = true;
    std::vector<std::vector<K>> out;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_piv[f]) continue;
        std::vector<K> c(ncols, K(0));
        c[f] = K(1);
        for (std::size_t i = 0; i < piv.size(); ++i) c[piv[i]] = -rows[i][f];
        out.push_back(std::move(c));
    }
    return out;
}

/**
 * Subspace of the linear forms over a named, ordered variable list.
 */
template <class K>
class BasicLinearSpace {
public:
    using Vec = std::vector<K>;

    BasicLinearSpace() = default;

    explicit BasicLinearSpace(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    BasicLinearSpace(std::vector<std::string> vars, std::vector<Vec> rows) : vars_(std::move(vars))
    {
        for (const auto& r : rows)
            if (r.size() != vars_.size()) throw AmbientError("vector length does not match ambient variables");
        pivots_ = rref_in_place(rows, vars_.size());
        basis_ = std::move(rows);
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<Vec>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    std::size_t dim() const { return basis_.size(); }
    std::size_t ambient_dim() const { return vars_.size(); }
    bool empty() const { return basis_.empty(); }

    /** Remainder of v after eliminating the pivot coordinates. */
    Vec reduce(Vec v) const
    {
        check_len(v);
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            K f = v[pivots_[i]];
            if (is_zero(f)) continue;
            for (std::size_t j = pivots_[i]; j < v.size(); ++j) v[j] -= f * basis_[i][j];
        }
        return v;
    }

    bool contains(const Vec& v) const
    {
        auto r = reduce(v);
        return std::all_of(r.begin(), r.end(), [](const K& x) { return is_zero(x); });
    }

    bool contains(const BasicLinearSpace& other) const
    {
        check_ambient(other);
        return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vec& v) { return contains(v); });
    }

    friend bool operator==(const BasicLinearSpace& a, const BasicLinearSpace& b)
    {
        return a.vars_ == b.vars_ && a.basis_ == b.basis_;
    }

    void check_ambient(const BasicLinearSpace& other) const
    {
        if (vars_ != other.vars_) throw AmbientError("operands have different ambient variables");
    }

private:
    void check_len(const Vec& v) const
    {
        if (v.size() != vars_.size()) throw AmbientError("vector length does not match ambient variables");
    }

    std::vector<std::string> vars_;
    std::vector<Vec> basis_;
    std::vector<std::size_t> pivots_;
};

using LinearSpace = BasicLinearSpace<Rational>;
using LinearForm = std::vector<Rational>;

template <class K>
BasicLinearSpace<K> span(const std::vector<std::string>& vars, const std::vector<std::vector<K>>& rows)
{
    return BasicLinearSpace<K>(vars, rows);
}

template <class K>
BasicLinearSpace<K> sum(const BasicLinearSpace<K>& a, const BasicLinearSpace<K>& b)
{
    a.check_ambient(b);
    auto rows = a.basis();
    rows.insert(rows.end(), b.basis().begin(), b.basis().end());
    return BasicLinearSpace<K>(a.vars(), std::move(rows));
}

/**
 * A ∩ B from the kernel of the stacked system sum c_i a_i - sum d_j b_j = 0.
 */
template <class K>
BasicLinearSpace<K> intersect(const BasicLinearSpace<K>& a, const BasicLinearSpace<K>& b)
{
    a.check_ambient(b);
    const std::size_t n = a.ambient_dim(), p = a.dim(), q = b.dim();
    if (p == 0 || q == 0) return BasicLinearSpace<K>(a.vars());
    std::vector<std::vector<K>> m(n, std::vector<K>(p + q, K(0)));
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t k = 0; k < n; ++k) m[k][i] = a.basis()[i][k];
    for (std::size_t j = 0; j < q; ++j)
        for (std::size_t k = 0; k < n; ++k) m[k][p + j] = -b.basis()[j][k];
    std::vector<std::vector<K>> rows;
    for (const auto& c : kernel(std::move(m), p + q)) {
        std::vector<K> v(n, K(0));
        for (std::size_t i = 0; i < p; ++i)
            if (!is_zero(c[i]))
                for (std::size_t k = 0; k < n; ++k) v[k] += c[i] * a.basis()[i][k];
        rows.push_back(std::move(v));
    }
    return BasicLinearSpace<K>(a.vars(), std::move(rows));
}

/**
 * Complement of A inside B: the rows of B's reduced basis whose pivots are
 * not pivots of A.  A ⊕ result = B.
 */
template <class K>
BasicLinearSpace<K> complement(const BasicLinearSpace<K>& a, const BasicLinearSpace<K>& b)
{
    a.check_ambient(b);
    if (!b.contains(a)) throw NotASubspace("complement requested for a space not contained in the target");
    std::vector<std::vector<K>> rows;
    const auto& pa = a.pivots();
    for (std::size_t i = 0; i < b.dim(); ++i)
        if (std::find(pa.begin(), pa.end(), b.pivots()[i]) == pa.end()) rows.push_back(b.basis()[i]);
    return BasicLinearSpace<K>(a.vars(), std::move(rows));
}

enum class SubspaceOp { Span, Intersect, Sum, Complement, Contains };

/**
 * Single entry point for the subspace operations.  For Span the second
 * operand's vectors are appended to A; for Contains the result is bool.
 */
template <class K>
std::variant<BasicLinearSpace<K>, bool> subspace_algebra(SubspaceOp op, const BasicLinearSpace<K>& a,
                                                         const std::variant<BasicLinearSpace<K>, std::vector<std::vector<K>>>& b)
{
    BasicLinearSpace<K> bs = std::holds_alternative<BasicLinearSpace<K>>(b)
                                 ? std::get<BasicLinearSpace<K>>(b)
                                 : BasicLinearSpace<K>(a.vars(), std::get<std::vector<std::vector<K>>>(b));
    switch (op) {
    case SubspaceOp::Span:
    case SubspaceOp::Sum: return sum(a, bs);
    case SubspaceOp::Intersect: return intersect(a, bs);
    case SubspaceOp::Complement: return complement(a, bs);
    case SubspaceOp::Contains: return a.contains(bs);
    }
    return false;
}

/**
 * Component of y in A along B, for y ∈ A ⊕ B.
 */
inline LinearForm project_along(const LinearForm& y, const LinearSpace& a, const LinearSpace& b)
{
    const std::size_t n = a.ambient_dim(), p = a.dim(), q = b.dim();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(p + q + 1, Rational(0)));
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < p; ++i) m[k][i] = a.basis()[i][k];
        for (std::size_t j = 0; j < q; ++j) m[k][p + j] = b.basis()[j][k];
        m[k][p + q] = y[k];
    }
    auto piv = rref_in_place(m, p + q + 1);
    if (!piv.empty() && piv.back() == p + q) throw NotASubspace("vector is not in the direct sum");
    LinearForm out(n, Rational(0));
    for (std::size_t r = 0; r < piv.size(); ++r) {
        if (piv[r] >= p) continue;
        for (std::size_t k = 0; k < n; ++k) out[k] += m[r][p + q] * a.basis()[piv[r]][k];
    }
    return out;
}

inline bool is_zero_form(const LinearForm& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

/** v normalized so that its first nonzero coefficient is 1. */
inline LinearForm monic(LinearForm v)
{
    for (const auto& c : v)
        if (c != 0) {
            Rational f = c;
            for (auto& x : v) x /= f;
            break;
        }
    return v;
}

inline bool proportional(const LinearForm& a, const LinearForm& b)
{
    return !is_zero_form(a) && monic(a) == monic(b);
}

inline LinearForm unit_form(std::size_t n, std::size_t i)
{
    LinearForm v(n, Rational(0));
    v[i] = 1;
    return v;
}

inline std::string format_rational(const Rational& q)
{
    std::ostringstream os;
    os << q;
    return os.str();
}

/**
 * Compact text for a linear form: "x-u", "2*a+1/2*b".
 */
inline std::string format_linear(const LinearForm& v, const std::vector<std::string>& vars)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        Rational c = v[i];
        bool neg = c < 0;
        if (neg) c = -c;
        if (!s.empty()) s += neg ? "-" : "+";
        else if (neg) s += "-";
        if (c != 1) s += format_rational(c) + "*";
        s += vars[i];
    }
    return s.empty() ? "0" : s;
}

/** Number of nonzero coefficients. */
inline std::size_t support_size(const LinearForm& v)
{
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; }));
}

using Exponent = std::vector<unsigned>;

/**
 * Graded reverse lexicographic comparison: true when a precedes b in
 * descending order (a is the larger monomial).
 */
inline bool degrevlex_greater(const Exponent& a, const Exponent& b)
{
    unsigned da = 0, db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    if (da != db) return da > db;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

/**
 * Sparse polynomial with exact rational coefficients.
 */
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static Poly constant(const std::vector<std::string>& vars, const Rational& c)
    {
        Poly p(vars);
        if (c != 0) p.terms_[Exponent(vars.size(), 0)] = c;
        return p;
    }

    static Poly variable(const std::vector<std::string>& vars, std::size_t i)
    {
        Poly p(vars);
        Exponent e(vars.size(), 0);
        e[i] = 1;
        p.terms_[e] = 1;
        return p;
    }

    static Poly linear(const std::vector<std::string>& vars, const LinearForm& v)
    {
        if (v.size() != vars.size()) throw AmbientError("linear form length does not match ambient variables");
        Poly p(vars);
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] == 0) continue;
            Exponent e(vars.size(), 0);
            e[i] = 1;
            p.terms_[e] = v[i];
        }
        return p;
    }

    static Poly monomial(const std::vector<std::string>& vars, const Exponent& e, const Rational& c = 1)
    {
        Poly p(vars);
        if (c != 0) p.terms_[e] = c;
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Exponent, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int degree() const
    {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (auto x : e) s += static_cast<int>(x);
            d = std::max(d, s);
        }
        return d;
    }

    bool is_homogeneous() const
    {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (auto x : e) s += static_cast<int>(x);
            if (d >= 0 && s != d) return false;
            d = s;
        }
        return true;
    }

    /** Indices of variables occurring in some term. */
    std::vector<std::size_t> support() const
    {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < vars_.size(); ++i)
            for (const auto& [e, c] : terms_)
                if (e[i] > 0) {
                    out.push_back(i);
                    break;
                }
        return out;
    }

    Poly& operator+=(const Poly& o)
    {
        check(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Poly& operator-=(const Poly& o)
    {
        check(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b)
    {
        a.check(b);
        Poly r(a.vars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponent e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    friend Poly operator*(const Rational& s, Poly a)
    {
        if (s == 0) return Poly(a.vars_);
        for (auto& [e, c] : a.terms_) c *= s;
        return a;
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.vars_ == b.vars_ && a.terms_ == b.terms_; }

    Poly pow(unsigned k) const
    {
        Poly r = constant(vars_, 1);
        for (unsigned i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    /** Terms in descending degrevlex order. */
    std::vector<std::pair<Exponent, Rational>> sorted_terms() const
    {
        std::vector<std::pair<Exponent, Rational>> t(terms_.begin(), terms_.end());
        std::sort(t.begin(), t.end(), [](const auto& x, const auto& y) { return degrevlex_greater(x.first, y.first); });
        return t;
    }

    std::string str() const
    {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [e, c0] : sorted_terms()) {
            Rational c = c0;
            bool neg = c < 0;
            if (neg) c = -c;
            if (s.empty()) s += neg ? "-" : "";
            else s += neg ? " - " : " + ";
            std::string mono;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += vars_[i];
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty()) s += format_rational(c);
            else if (c == 1) s += mono;
            else s += format_rational(c) + "*" + mono;
        }
        return s;
    }

    /** Value at a point; each coordinate an element of field K. */
    template <class K, class Conv>
    K evaluate(const std::vector<K>& point, Conv conv) const
    {
        K acc = K(0);
        for (const auto& [e, c] : terms_) {
            K t = conv(c);
            for (std::size_t i = 0; i < e.size(); ++i)
                for (unsigned k = 0; k < e[i]; ++k) t = t * point[i];
            acc = acc + t;
        }
        return acc;
    }

private:
    void add_term(const Exponent& e, const Rational& c)
    {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
            return;
        }
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }

    void check(const Poly& o) const
    {
        if (vars_ != o.vars_) throw AmbientError("polynomials over different ambient variables");
    }

    std::vector<std::string> vars_;
    std::map<Exponent, Rational> terms_;
};

inline Poly product(const std::vector<std::string>& vars, const LinearForm& a, const LinearForm& b)
{
    return Poly::linear(vars, a) * Poly::linear(vars, b);
}

/**
 * Normal form of f modulo the ideal generated by the linear forms of L:
 * each pivot variable is replaced by minus the rest of its basis row.
 */
inline Poly linear_ideal_reduce(const Poly& f, const LinearSpace& l)
{
    if (f.vars() != l.vars()) throw AmbientError("polynomial and space over different ambient variables");
    const auto& vars = f.vars();
    std::vector<Poly> subst;
    subst.reserve(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) subst.push_back(Poly::variable(vars, i));
    for (std::size_t r = 0; r < l.dim(); ++r) {
        LinearForm tail = l.basis()[r];
        tail[l.pivots()[r]] = 0;
        for (auto& c : tail) c = -c;
        subst[l.pivots()[r]] = Poly::linear(vars, tail);
    }
    Poly out(vars);
    for (const auto& [e, c] : f.terms()) {
        Poly t = Poly::constant(vars, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) t = t * subst[i].pow(e[i]);
        out += t;
    }
    return out;
}

inline bool in_linear_ideal(const Poly& f, const LinearSpace& l)
{
    return linear_ideal_reduce(f, l).is_zero();
}

}  // namespace ljv

#endif
