#ifndef SUPERTWIST_SUPERALGEBRA_HPP
#define SUPERTWIST_SUPERALGEBRA_HPP

// Basic classical Lie superalgebras gl(m|n), sl(m|n) and osp(M|2n), built
// from their defining representations. Structure constants are read off the
// matrices, so every bracket in the table is exact by construction.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <regex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "supertwist/linalg.hpp"
#include "supertwist/rational.hpp"
#include "supertwist/scalar.hpp"

namespace supertwist
{

enum class Family { gl, sl, osp };

inline const char* to_string(Family f) noexcept
{
    switch (f) {
    case Family::gl: return "gl";
    case Family::sl: return "sl";
    case Family::osp: return "osp";
    }
    return "?";
}

/// Integer vector over the epsilon basis.
struct Root
{
    std::vector<int> coeffs;
    Parity parity = Parity::even;

    friend bool operator==(const Root& a, const Root& b) { return a.coeffs == b.coeffs; }
    friend bool operator<(const Root& a, const Root& b) { return a.coeffs < b.coeffs; }

    Root operator+(const Root& o) const
    {
        Root r{coeffs, parity + o.parity};
        for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] += o.coeffs[i];
        return r;
    }
    Root operator-(const Root& o) const
    {
        Root r{coeffs, parity + o.parity};
        for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] -= o.coeffs[i];
        return r;
    }
    bool is_zero() const
    {
        return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c == 0; });
    }
    Rational norm2() const
    {
        std::int64_t s = 0;
        for (int c : coeffs) s += c * c;
        return s;
    }

    /// e.g. `eps1-eps2`, `2eps1`, `eps1+eps3`, `eps2`.
    std::string str() const
    {
        std::string s;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            const int c = coeffs[i];
            if (c == 0) continue;
            if (c < 0)
                s += "-";
            else if (!s.empty())
                s += "+";
            if (std::abs(c) != 1) s += std::to_string(std::abs(c));
            s += "eps" + std::to_string(i + 1);
        }
        return s.empty() ? "0" : s;
    }

    /// Compact label used in basis names: `1-2`, `1+2`, `1`, `1+1`.
    std::string label() const
    {
        std::vector<std::pair<int, std::size_t>> nz;
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            if (coeffs[i] != 0) nz.emplace_back(coeffs[i], i + 1);
        if (nz.size() == 1) {
            const auto [c, i] = nz[0];
            if (std::abs(c) == 2) return std::to_string(i) + "+" + std::to_string(i);
            return std::to_string(i);
        }
        std::string s = std::to_string(nz[0].second);
        s += (nz[0].first * nz[1].first < 0) ? "-" : "+";
        return s + std::to_string(nz[1].second);
    }
};

/// Sparse linear combination of basis elements, sorted by index.
class LieElement
{
public:
    using Term = std::pair<std::uint32_t, Rational>;

    LieElement() = default;
    static LieElement basis(std::uint32_t i, Rational c = 1)
    {
        LieElement e;
        if (!c.is_zero()) e.m_terms.emplace_back(i, c);
        return e;
    }
    static LieElement from_dense(const std::vector<Rational>& v)
    {
        LieElement e;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) e.m_terms.emplace_back(static_cast<std::uint32_t>(i), v[i]);
        return e;
    }

    const std::vector<Term>& terms() const noexcept { return m_terms; }
    bool is_zero() const noexcept { return m_terms.empty(); }

    Rational coeff(std::uint32_t i) const
    {
        auto it = std::lower_bound(m_terms.begin(), m_terms.end(), i,
                                   [](const Term& t, std::uint32_t k) { return t.first < k; });
        return (it != m_terms.end() && it->first == i) ? it->second : Rational{};
    }

    std::vector<Rational> dense(std::size_t dim) const
    {
        std::vector<Rational> v(dim);
        for (const auto& [i, c] : m_terms) v[i] = c;
        return v;
    }

    friend LieElement operator+(const LieElement& a, const LieElement& b)
    {
        LieElement r;
        auto i = a.m_terms.begin(), j = b.m_terms.begin();
        while (i != a.m_terms.end() || j != b.m_terms.end()) {
            if (j == b.m_terms.end() || (i != a.m_terms.end() && i->first < j->first)) {
                r.m_terms.push_back(*i++);
            } else if (i == a.m_terms.end() || j->first < i->first) {
                r.m_terms.push_back(*j++);
            } else {
                const Rational c = i->second + j->second;
                if (!c.is_zero()) r.m_terms.emplace_back(i->first, c);
                ++i;
                ++j;
            }
        }
        return r;
    }
    friend LieElement operator*(const Rational& c, LieElement a)
    {
        if (c.is_zero()) return {};
        for (auto& t : a.m_terms) t.second *= c;
        return a;
    }
    LieElement operator-() const { return Rational(-1) * *this; }
    friend LieElement operator-(const LieElement& a, const LieElement& b) { return a + (-b); }
    LieElement& operator+=(const LieElement& o) { return *this = *this + o; }
    friend bool operator==(const LieElement& a, const LieElement& b) { return a.m_terms == b.m_terms; }

private:
    std::vector<Term> m_terms;
};

struct BasisElement
{
    std::string name;
    Parity parity = Parity::even;
    std::optional<Root> root; // nullopt for Cartan elements
};

/// One line of a normal ordering: roots in order, the index of the marked
/// maximal root, and optionally a root carrying a separate Jordanian term.
struct OrderingLine
{
    std::vector<Root> roots;
    std::size_t maximal = 0;
    std::optional<Root> extra;

    const Root& theta() const { return roots[maximal]; }
};

struct NormalOrdering
{
    std::vector<OrderingLine> lines;
    int m_prime = 0; // first symplectic line index (1-based), osp only
};

class SuperAlgebra
{
public:
    Family family() const noexcept { return m_family; }
    int shape_a() const noexcept { return m_a; }
    int shape_b() const noexcept { return m_b; }
    std::string name() const
    {
        return std::string(to_string(m_family)) + "(" + std::to_string(m_a) + "|" + std::to_string(m_b) + ")";
    }

    std::size_t dim() const noexcept { return m_basis.size(); }
    const BasisElement& basis(std::size_t i) const { return m_basis[i]; }
    const std::vector<BasisElement>& basis() const noexcept { return m_basis; }
    Parity parity(std::size_t i) const { return m_basis[i].parity; }
    const std::vector<std::uint32_t>& cartan() const noexcept { return m_cartan; }

    /// Number of epsilon coordinates and the parity of each.
    std::size_t eps_count() const noexcept { return m_eps_parity.size(); }
    Parity eps_parity(std::size_t k) const { return m_eps_parity[k]; }

    // Fundamental representation.
    std::size_t rep_dim() const noexcept { return m_vparity.size(); }
    Parity rep_parity(std::size_t a) const { return m_vparity[a]; }
    const std::vector<Parity>& rep_parities() const noexcept { return m_vparity; }
    const QMatrix& image(std::size_t i) const { return m_images[i]; }
    QMatrix image(const LieElement& x) const
    {
        QMatrix m(rep_dim(), rep_dim());
        for (const auto& [i, c] : x.terms()) m = m + c * m_images[i];
        return m;
    }

    const LieElement& bracket(std::size_t i, std::size_t j) const { return m_table[i * dim() + j]; }
    LieElement bracket(const LieElement& x, const LieElement& y) const
    {
        LieElement r;
        for (const auto& [i, a] : x.terms())
            for (const auto& [j, b] : y.terms()) r += (a * b) * bracket(i, j);
        return r;
    }

    /// Parity of a homogeneous element (throws if inhomogeneous).
    Parity parity(const LieElement& x) const
    {
        if (x.is_zero()) return Parity::even;
        const Parity p = parity(x.terms().front().first);
        for (const auto& t : x.terms())
            if (parity(t.first) != p) throw std::logic_error("SuperAlgebra: inhomogeneous element");
        return p;
    }

    /// Coordinates of a matrix in the basis, if it lies in the algebra.
    std::optional<LieElement> from_matrix(const QMatrix& m) const
    {
        auto c = m_solver.solve(m.data());
        if (!c) return std::nullopt;
        return LieElement::from_dense(*c);
    }

    std::optional<std::uint32_t> index_of(const std::string& name) const
    {
        for (std::size_t i = 0; i < m_basis.size(); ++i)
            if (m_basis[i].name == name) return static_cast<std::uint32_t>(i);
        return std::nullopt;
    }
    std::uint32_t at(const std::string& name) const
    {
        auto i = index_of(name);
        if (!i) throw std::invalid_argument("SuperAlgebra: no basis element '" + name + "' in " + this->name());
        return *i;
    }

    /// Index of the (canonical) root vector of a root, positive or negative.
    std::optional<std::uint32_t> root_vector(const Root& r) const
    {
        for (std::size_t i = 0; i < m_basis.size(); ++i)
            if (m_basis[i].root && *m_basis[i].root == r) return static_cast<std::uint32_t>(i);
        return std::nullopt;
    }
    bool is_root(const Root& r) const { return root_vector(r).has_value(); }

    /// Root with the parity fixed by the epsilon parities.
    Root make_root(std::vector<int> coeffs) const
    {
        int p = 0;
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            if (is_odd(m_eps_parity[i])) p += coeffs[i];
        return Root{std::move(coeffs), (p & 1) ? Parity::odd : Parity::even};
    }
    Root eps(std::size_t k, int c = 1) const
    {
        std::vector<int> v(eps_count(), 0);
        v[k] = c;
        return make_root(v);
    }

    /// Cartan element h with eps_k(h) = lambda_k, if the algebra contains it.
    std::optional<LieElement> eps_dual(const std::vector<Rational>& lambda) const
    {
        QMatrix d(rep_dim(), rep_dim());
        for (std::size_t a = 0; a < rep_dim(); ++a) {
            Rational v;
            for (std::size_t k = 0; k < eps_count(); ++k) v += lambda[k] * m_vweight[a][k];
            d(a, a) = v;
        }
        return from_matrix(d);
    }

    /// The Cartan element h_theta = theta / (theta, theta) (euclidean form).
    std::optional<LieElement> coroot_half(const Root& theta) const
    {
        const Rational n2 = theta.norm2();
        std::vector<Rational> lambda(eps_count());
        for (std::size_t k = 0; k < eps_count(); ++k) lambda[k] = Rational(theta.coeffs[k]) / n2;
        return eps_dual(lambda);
    }

    /// Positive roots in normal-ordering sequence.
    std::vector<Root> positive_roots() const
    {
        std::vector<Root> out;
        for (const auto& line : m_ordering.lines) {
            if (line.extra) out.push_back(*line.extra);
            for (const auto& r : line.roots) out.push_back(r);
        }
        return out;
    }
    const NormalOrdering& ordering() const noexcept { return m_ordering; }

    /// Positive root vectors and Cartan elements (the Borel subalgebra).
    std::vector<std::uint32_t> borel() const
    {
        std::vector<std::uint32_t> out;
        for (std::size_t i = 0; i < dim(); ++i)
            if (!m_basis[i].root || is_positive(*m_basis[i].root)) out.push_back(static_cast<std::uint32_t>(i));
        return out;
    }

    static bool is_positive(const Root& r)
    {
        for (int c : r.coeffs)
            if (c != 0) return c > 0;
        return false;
    }

    std::string element_string(const LieElement& x) const
    {
        if (x.is_zero()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [i, c] : x.terms()) {
            Rational mag = c;
            if (c.sign() < 0) {
                s += first ? "-" : " - ";
                mag = -c;
            } else if (!first) {
                s += " + ";
            }
            first = false;
            if (!mag.is_one()) s += mag.str() + "*";
            s += m_basis[i].name;
        }
        return s;
    }

    /// Sub-algebra of an osp(2m+1|2n) obtained by dropping the short roots.
    friend SuperAlgebra remove_short_roots(const SuperAlgebra& b);
    friend SuperAlgebra build_algebra(Family family, int a, int b);

private:
    Family m_family = Family::gl;
    int m_a = 0, m_b = 0;
    std::vector<BasisElement> m_basis;
    std::vector<std::uint32_t> m_cartan;
    std::vector<Parity> m_eps_parity;
    std::vector<Parity> m_vparity;
    std::vector<std::vector<int>> m_vweight; // epsilon weight of each V basis vector
    std::vector<QMatrix> m_images;
    std::vector<LieElement> m_table;
    CoordinateSolver m_solver;
    NormalOrdering m_ordering;

    struct Raw
    {
        std::string name;
        QMatrix mat;
        std::optional<Root> root;
    };

    static Parity matrix_parity(const QMatrix& m, const std::vector<Parity>& vp)
    {
        std::optional<Parity> p;
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                if (m(i, j).is_zero()) continue;
                const Parity q = vp[i] + vp[j];
                if (p && *p != q) throw std::logic_error("SuperAlgebra: inhomogeneous basis matrix");
                p = q;
            }
        return p.value_or(Parity::even);
    }

    static QMatrix supercommutator(const QMatrix& x, Parity px, const QMatrix& y, Parity py)
    {
        const QMatrix xy = x * y, yx = y * x;
        return koszul(px, py) > 0 ? xy - yx : xy + yx;
    }

    void finish(std::vector<Raw> cartan, std::vector<Raw> roots);
};

namespace detail
{

inline NormalOrdering gl_ordering(const SuperAlgebra& alg, std::size_t n_eps)
{
    NormalOrdering ord;
    const int N = static_cast<int>(n_eps);
    auto diff = [&](int i, int j) {
        std::vector<int> v(n_eps, 0);
        v[static_cast<std::size_t>(i - 1)] = 1;
        v[static_cast<std::size_t>(j - 1)] = -1;
        return alg.make_root(v);
    };
    for (int k = 1; k <= N / 2; ++k) {
        const int last = N + 1 - k;
        OrderingLine line;
        for (int j = k + 1; j <= last; ++j) line.roots.push_back(diff(k, j));
        line.maximal = line.roots.size() - 1;
        for (int j = last - 1; j >= k + 1; --j) line.roots.push_back(diff(j, last));
        ord.lines.push_back(std::move(line));
    }
    return ord;
}

inline NormalOrdering osp_ordering(const SuperAlgebra& alg, int orth, int sym, bool short_roots)
{
    NormalOrdering ord;
    const int N = orth + sym;
    auto root = [&](std::initializer_list<std::pair<int, int>> parts) {
        std::vector<int> v(static_cast<std::size_t>(N), 0);
        for (auto [i, c] : parts) v[static_cast<std::size_t>(i - 1)] += c;
        return alg.make_root(v);
    };

    // Two-index lines around theta = eps_a + eps_b.
    auto pair_line = [&](int a, int b) {
        OrderingLine line;
        const bool mixed = b > orth;
        if (mixed)
            line.roots.push_back(root({{a, 1}, {b, -1}}));
        else
            line.extra = root({{a, 1}, {b, -1}});
        for (int j = b + 1; j <= N; ++j) line.roots.push_back(root({{a, 1}, {j, -1}}));
        if (short_roots) line.roots.push_back(root({{a, 1}}));
        for (int j = N; j > b; --j) line.roots.push_back(root({{a, 1}, {j, 1}}));
        line.maximal = line.roots.size();
        line.roots.push_back(root({{a, 1}, {b, 1}}));
        for (int j = b + 1; j <= N; ++j) line.roots.push_back(root({{b, 1}, {j, -1}}));
        if (short_roots) line.roots.push_back(root({{b, 1}}));
        for (int j = N; j > b; --j) line.roots.push_back(root({{b, 1}, {j, 1}}));
        if (mixed) line.roots.push_back(root({{b, 2}}));
        ord.lines.push_back(std::move(line));
    };

    int a = 1;
    for (; a + 1 <= orth; a += 2) pair_line(a, a + 1);
    int first_sym = orth + 1;
    if (a == orth) {
        if (sym > 0) {
            pair_line(a, a + 1);
            first_sym = a + 2;
        } else if (short_roots) {
            OrderingLine line;
            line.roots.push_back(root({{a, 1}}));
            ord.lines.push_back(std::move(line));
        }
    }
    ord.m_prime = first_sym;
    for (int l = first_sym; l <= N; ++l) {
        OrderingLine line;
        for (int j = l + 1; j <= N; ++j) line.roots.push_back(root({{l, 1}, {j, -1}}));
        if (short_roots) line.roots.push_back(root({{l, 1}}));
        line.maximal = line.roots.size();
        line.roots.push_back(root({{l, 2}}));
        for (int j = N; j > l; --j) line.roots.push_back(root({{l, 1}, {j, 1}}));
        ord.lines.push_back(std::move(line));
    }
    return ord;
}

/// Canonical representative of a one-dimensional solution space: the first
/// nonzero entry in row-major order is 1.
inline std::vector<Rational> normalize_first(std::vector<Rational> v)
{
    for (const auto& x : v)
        if (!x.is_zero()) {
            const Rational inv = x.inverse();
            for (auto& y : v) y *= inv;
            break;
        }
    return v;
}

} // namespace detail

inline void SuperAlgebra::finish(std::vector<Raw> cartan, std::vector<Raw> roots)
{
    // Order: negative root vectors, Cartan, positive root vectors; roots follow
    // the normal ordering, negatives mirror it.
    std::map<std::vector<int>, Raw> by_root;
    for (auto& r : roots) by_root.emplace(r.root->coeffs, std::move(r));
    const auto pos = positive_roots();
    std::size_t expected = 2 * pos.size();
    if (by_root.size() != expected)
        throw std::logic_error("SuperAlgebra: root vectors do not match the normal ordering of " + name());

    std::vector<Raw> ordered;
    for (const auto& r : pos) {
        Root neg = r;
        for (auto& c : neg.coeffs) c = -c;
        auto it = by_root.find(neg.coeffs);
        if (it == by_root.end()) throw std::logic_error("SuperAlgebra: missing negative root " + neg.str());
        ordered.push_back(std::move(it->second));
    }
    for (auto& c : cartan) ordered.push_back(std::move(c));
    for (const auto& r : pos) {
        auto it = by_root.find(r.coeffs);
        if (it == by_root.end()) throw std::logic_error("SuperAlgebra: missing root " + r.str());
        ordered.push_back(std::move(it->second));
    }

    m_basis.clear();
    m_images.clear();
    m_cartan.clear();
    for (auto& r : ordered) {
        BasisElement b;
        b.name = r.name;
        b.parity = matrix_parity(r.mat, m_vparity);
        if (r.root) {
            Root root = make_root(r.root->coeffs);
            if (root.parity != b.parity) throw std::logic_error("SuperAlgebra: root parity mismatch for " + r.name);
            b.root = root;
        } else {
            m_cartan.push_back(static_cast<std::uint32_t>(m_basis.size()));
        }
        m_basis.push_back(std::move(b));
        m_images.push_back(std::move(r.mat));
    }

    std::vector<std::vector<Rational>> flat;
    for (const auto& m : m_images) flat.push_back(m.data());
    m_solver = CoordinateSolver(flat, rep_dim() * rep_dim());

    const std::size_t d = dim();
    m_table.assign(d * d, LieElement{});
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const QMatrix c = supercommutator(m_images[i], m_basis[i].parity, m_images[j], m_basis[j].parity);
            if (c.is_zero()) continue;
            auto x = from_matrix(c);
            if (!x)
                throw std::logic_error("SuperAlgebra: bracket [" + m_basis[i].name + ", " + m_basis[j].name
                                       + "] leaves " + name());
            m_table[i * d + j] = std::move(*x);
        }
}

/// Build gl(m|n), sl(m|n) or osp(M|2n) (for osp, `a` = M and `b` = 2n).
inline SuperAlgebra build_algebra(Family family, int a, int b)
{
    if (a < 0 || b < 0) throw std::invalid_argument("build_algebra: negative shape");
    SuperAlgebra alg;
    alg.m_family = family;
    alg.m_a = a;
    alg.m_b = b;
    using Raw = SuperAlgebra::Raw;
    std::vector<Raw> cartan, roots;

    if (family == Family::gl || family == Family::sl) {
        const int N = a + b;
        if (N < 1) throw std::invalid_argument("build_algebra: empty shape");
        if (family == Family::sl && N < 2)
            throw std::invalid_argument("build_algebra: unsupported shape " + std::string(to_string(family)) + "("
                                        + std::to_string(a) + "|" + std::to_string(b) + ")");
        const auto n = static_cast<std::size_t>(N);
        for (int i = 0; i < N; ++i) {
            const Parity p = i < a ? Parity::even : Parity::odd;
            alg.m_eps_parity.push_back(p);
            alg.m_vparity.push_back(p);
            std::vector<int> w(n, 0);
            w[static_cast<std::size_t>(i)] = 1;
            alg.m_vweight.push_back(w);
        }
        alg.m_ordering = detail::gl_ordering(alg, n);
        if (family == Family::gl) {
            for (std::size_t i = 0; i < n; ++i)
                cartan.push_back({"h" + std::to_string(i + 1), QMatrix::unit(n, i, i), std::nullopt});
        } else {
            for (std::size_t i = 0; i + 1 < n; ++i) {
                // supertraceless: str(E_ii) = s_i, so subtract s_i/s_{i+1} E_{i+1,i+1}
                const Rational s = (alg.m_vparity[i] == alg.m_vparity[i + 1]) ? 1 : -1;
                cartan.push_back({"k" + std::to_string(i + 1),
                                  QMatrix::unit(n, i, i) - s * QMatrix::unit(n, i + 1, i + 1), std::nullopt});
            }
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                std::vector<int> c(n, 0);
                c[i] = 1;
                c[j] = -1;
                Root r = alg.make_root(c);
                const bool pos = i < j;
                std::size_t lo = std::min(i, j), hi = std::max(i, j);
                const std::string lab = std::to_string(lo + 1) + "-" + std::to_string(hi + 1);
                roots.push_back({(pos ? "e{" : "f{") + lab + "}", QMatrix::unit(n, i, j), r});
            }
        alg.finish(std::move(cartan), std::move(roots));
        return alg;
    }

    // osp(M|2n) on V = span(u_1..u_m, [u_0], u_{-1}..u_{-m} | w_1..w_n, w_{-1}..w_{-n})
    if (b % 2 != 0) throw std::invalid_argument("build_algebra: osp(M|2n) needs an even second entry");
    const int orth = a / 2, sym = b / 2;
    const bool odd_m = (a % 2) == 1;
    const int N = orth + sym;
    if (N < 1) throw std::invalid_argument("build_algebra: unsupported shape osp(" + std::to_string(a) + "|"
                                           + std::to_string(b) + ")");
    const auto neps = static_cast<std::size_t>(N);
    for (int k = 0; k < N; ++k) alg.m_eps_parity.push_back(k < orth ? Parity::even : Parity::odd);

    struct VBasis
    {
        int eps;  // 1-based epsilon index, 0 for u_0
        int sign; // +1 / -1, 0 for u_0
        Parity parity;
    };
    std::vector<VBasis> vb;
    for (int k = 1; k <= orth; ++k) vb.push_back({k, 1, Parity::even});
    if (odd_m) vb.push_back({0, 0, Parity::even});
    for (int k = 1; k <= orth; ++k) vb.push_back({k, -1, Parity::even});
    for (int l = 1; l <= sym; ++l) vb.push_back({orth + l, 1, Parity::odd});
    for (int l = 1; l <= sym; ++l) vb.push_back({orth + l, -1, Parity::odd});
    const std::size_t dv = vb.size();
    for (const auto& v : vb) {
        alg.m_vparity.push_back(v.parity);
        std::vector<int> w(neps, 0);
        if (v.eps > 0) w[static_cast<std::size_t>(v.eps - 1)] = v.sign;
        alg.m_vweight.push_back(w);
    }

    // The invariant form.
    QMatrix form(dv, dv);
    for (std::size_t i = 0; i < dv; ++i)
        for (std::size_t j = 0; j < dv; ++j) {
            if (vb[i].eps != vb[j].eps || vb[i].sign != -vb[j].sign) continue;
            if (vb[i].eps == 0)
                form(i, j) = 1;
            else if (vb[i].parity == Parity::even)
                form(i, j) = 1;
            else
                form(i, j) = vb[i].sign > 0 ? 1 : -1;
        }

    // Solve the osp condition separately on each (weight, parity) block of matrix units.
    std::map<std::pair<std::vector<int>, int>, std::vector<std::pair<std::size_t, std::size_t>>> blocks;
    for (std::size_t i = 0; i < dv; ++i)
        for (std::size_t j = 0; j < dv; ++j) {
            std::vector<int> w(neps, 0);
            for (std::size_t k = 0; k < neps; ++k) w[k] = alg.m_vweight[i][k] - alg.m_vweight[j][k];
            const int p = static_cast<int>(vb[i].parity + vb[j].parity == Parity::odd);
            blocks[{w, p}].emplace_back(i, j);
        }
    for (const auto& [key, units] : blocks) {
        const Parity px = key.second ? Parity::odd : Parity::even;
        // sum_a X_ab B_ac + (-1)^{p(X) p(b)} sum_a X_ac B_ba = 0 for all b, c
        std::vector<std::vector<Rational>> rows;
        for (std::size_t bb = 0; bb < dv; ++bb)
            for (std::size_t c = 0; c < dv; ++c) {
                std::vector<Rational> row(units.size());
                const Rational sgn = koszul(px, vb[bb].parity);
                bool any = false;
                for (std::size_t u = 0; u < units.size(); ++u) {
                    const auto [r, col] = units[u];
                    if (col == bb && !form(r, c).is_zero()) {
                        row[u] += form(r, c);
                        any = true;
                    }
                    if (col == c && !form(bb, r).is_zero()) {
                        row[u] += sgn * form(bb, r);
                        any = true;
                    }
                }
                if (any) rows.push_back(std::move(row));
            }
        auto ns = nullspace(rows, units.size());
        if (ns.empty()) continue;
        const bool zero_weight = std::all_of(key.first.begin(), key.first.end(), [](int x) { return x == 0; });
        if (zero_weight) continue; // Cartan handled explicitly below
        if (ns.size() != 1)
            throw std::logic_error("build_algebra: root space of dimension " + std::to_string(ns.size()));
        std::vector<Rational> flat(dv * dv);
        for (std::size_t u = 0; u < units.size(); ++u) flat[units[u].first * dv + units[u].second] = ns[0][u];
        flat = detail::normalize_first(std::move(flat));
        QMatrix mm(dv, dv);
        for (std::size_t i = 0; i < dv; ++i)
            for (std::size_t j = 0; j < dv; ++j) mm(i, j) = flat[i * dv + j];
        Root r = alg.make_root(key.first);
        const bool pos = SuperAlgebra::is_positive(r);
        Root q = r;
        if (!pos)
            for (auto& c : q.coeffs) c = -c;
        roots.push_back({(pos ? "e{" : "f{") + q.label() + "}", mm, r});
    }
    for (int k = 1; k <= N; ++k) {
        QMatrix h(dv, dv);
        for (std::size_t i = 0; i < dv; ++i)
            if (vb[i].eps == k) h(i, i) = vb[i].sign;
        cartan.push_back({"h" + std::to_string(k), h, std::nullopt});
    }
    alg.m_ordering = detail::osp_ordering(alg, orth, sym, odd_m);
    alg.finish(std::move(cartan), std::move(roots));
    return alg;
}

inline SuperAlgebra remove_short_roots(const SuperAlgebra& b)
{
    if (b.family() != Family::osp || b.shape_a() % 2 != 1)
        throw std::invalid_argument("remove_short_roots: input must be osp(2m+1|2n)");
    // Drop u_0 from V and every basis element touching it.
    std::size_t u0 = 0;
    while (u0 < b.rep_dim() && !(b.m_vparity[u0] == Parity::even
                                 && std::all_of(b.m_vweight[u0].begin(), b.m_vweight[u0].end(),
                                                [](int x) { return x == 0; })))
        ++u0;
    SuperAlgebra d;
    d.m_family = Family::osp;
    d.m_a = b.shape_a() - 1;
    d.m_b = b.shape_b();
    d.m_eps_parity = b.m_eps_parity;
    for (std::size_t i = 0; i < b.rep_dim(); ++i) {
        if (i == u0) continue;
        d.m_vparity.push_back(b.m_vparity[i]);
        d.m_vweight.push_back(b.m_vweight[i]);
    }
    const std::size_t dv = d.rep_dim();
    auto restrict = [&](const QMatrix& m) {
        QMatrix r(dv, dv);
        for (std::size_t i = 0, ri = 0; i < m.rows(); ++i) {
            if (i == u0) continue;
            for (std::size_t j = 0, rj = 0; j < m.cols(); ++j) {
                if (j == u0) continue;
                r(ri, rj) = m(i, j);
                ++rj;
            }
            ++ri;
        }
        return r;
    };
    std::vector<SuperAlgebra::Raw> cartan, roots;
    for (std::size_t i = 0; i < b.dim(); ++i) {
        const auto& e = b.basis(i);
        if (e.root) {
            int nz = 0, mag = 0;
            for (int c : e.root->coeffs)
                if (c != 0) {
                    ++nz;
                    mag = std::abs(c);
                }
            if (nz == 1 && mag == 1) continue; // short root
            roots.push_back({e.name, restrict(b.image(i)), e.root});
        } else {
            cartan.push_back({e.name, restrict(b.image(i)), std::nullopt});
        }
    }
    d.m_ordering = detail::osp_ordering(d, d.m_a / 2, d.m_b / 2, false);
    d.finish(std::move(cartan), std::move(roots));
    return d;
}

/// Parse `sl(2|1)`, `gl(1|1)`, `osp(1|4)` ...
inline SuperAlgebra parse_algebra(const std::string& spec)
{
    static const std::regex re(R"(\s*(gl|sl|osp)\s*\(\s*(\d+)\s*\|\s*(\d+)\s*\)\s*)");
    std::smatch m;
    if (!std::regex_match(spec, m, re)) throw std::invalid_argument("cannot parse algebra '" + spec + "'");
    const std::string f = m[1];
    const Family fam = f == "gl" ? Family::gl : f == "sl" ? Family::sl : Family::osp;
    return build_algebra(fam, std::stoi(m[2]), std::stoi(m[3]));
}

/// Cartan-Weyl elements h, v+, v-, e+, e- of osp(1|2) with
/// [h, v_pm] = pm 1/2 v_pm, {v+, v-} = -1/2 h and e_pm = 2[v_pm, v_pm] (= pm 4 v_pm^2).
struct Osp12Elements
{
    LieElement h, v_plus, v_minus, e_plus, e_minus;
};

inline Osp12Elements osp12_elements(const SuperAlgebra& alg)
{
    if (alg.family() != Family::osp || alg.shape_a() != 1 || alg.shape_b() != 2)
        throw std::invalid_argument("osp12_elements: algebra must be osp(1|2)");
    Osp12Elements x;
    x.h = Rational(1, 2) * LieElement::basis(alg.at("h1"));
    x.v_plus = LieElement::basis(alg.at("e{1}"));
    const LieElement f = LieElement::basis(alg.at("f{1}"));
    const LieElement hv = alg.bracket(x.v_plus, f);
    // hv = c * h
    const Rational c = hv.coeff(alg.at("h1")) * Rational(2);
    if (!(hv == c * x.h)) throw std::logic_error("osp12_elements: unexpected bracket of root vectors");
    x.v_minus = (Rational(-1, 2) / c) * f;
    x.e_plus = Rational(2) * alg.bracket(x.v_plus, x.v_plus);
    x.e_minus = Rational(-2) * alg.bracket(x.v_minus, x.v_minus);
    return x;
}

} // namespace supertwist

#endif
