#ifndef SUPERTWIST_SCALAR_HPP
#define SUPERTWIST_SCALAR_HPP

// Graded-commutative coefficient ring: rationals extended by named deformation
// parameters. Even parameters commute with everything; odd parameters
// anticommute among themselves and square either to zero (grassmann) or to a
// retained even monomial (clifford). Monomials of total degree above the
// truncation order are dropped.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "supertwist/rational.hpp"

namespace supertwist
{

enum class Parity : std::uint8_t { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b) noexcept
{
    return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}
inline bool is_odd(Parity p) noexcept { return p == Parity::odd; }
/// (-1)^{p q}
inline int koszul(Parity p, Parity q) noexcept { return (is_odd(p) && is_odd(q)) ? -1 : 1; }
inline const char* to_string(Parity p) noexcept { return is_odd(p) ? "odd" : "even"; }

enum class OddSquareMode : std::uint8_t { grassmann, clifford };

struct ParameterDecl
{
    std::string name;
    Parity parity = Parity::even;
    OddSquareMode odd_square_mode = OddSquareMode::grassmann;
};

/// Parameter declaration plus truncation order shared by a family of Scalars.
///
/// An exact ring never truncates: a product whose degree exceeds the order
/// throws instead, which turns silent truncation into an error for backends
/// that promise exact results.
class Ring
{
public:
    static constexpr unsigned max_params = 11;
    static constexpr unsigned bits = 5;
    static constexpr unsigned max_order = 31;
    static constexpr unsigned degree_shift = bits * max_params;

    using Key = std::uint64_t;

    static std::shared_ptr<const Ring> make(std::vector<ParameterDecl> params, unsigned order, bool exact = false)
    {
        return std::shared_ptr<const Ring>(new Ring(std::move(params), order, exact));
    }

    const std::vector<ParameterDecl>& params() const noexcept { return m_params; }
    unsigned order() const noexcept { return m_order; }
    bool exact() const noexcept { return m_exact; }

    int index_of(std::string_view name) const noexcept
    {
        for (std::size_t i = 0; i < m_params.size(); ++i)
            if (m_params[i].name == name) return static_cast<int>(i);
        return -1;
    }

    /// Same declaration and order (the identity of a ring for compatibility).
    bool same_as(const Ring& o) const noexcept
    {
        if (this == &o) return true;
        if (m_order != o.m_order || m_exact != o.m_exact || m_params.size() != o.m_params.size()) return false;
        for (std::size_t i = 0; i < m_params.size(); ++i) {
            const auto& a = m_params[i];
            const auto& b = o.m_params[i];
            if (a.name != b.name || a.parity != b.parity || a.odd_square_mode != b.odd_square_mode) return false;
        }
        return true;
    }

    /// Same parameters, different order.
    std::shared_ptr<const Ring> with_order(unsigned order, bool exact = false) const
    {
        return make(m_params, order, exact);
    }

    static unsigned exponent(Key k, unsigned i) noexcept
    {
        return static_cast<unsigned>((k >> (bits * i)) & ((1u << bits) - 1u));
    }
    static unsigned degree(Key k) noexcept { return static_cast<unsigned>(k >> degree_shift); }

    Key make_key(const std::vector<unsigned>& exps) const
    {
        if (exps.size() != m_params.size()) throw std::invalid_argument("Ring: exponent vector size mismatch");
        Key k = 0;
        unsigned deg = 0;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] >= (1u << bits)) throw std::invalid_argument("Ring: exponent too large");
            k |= static_cast<Key>(exps[i]) << (bits * i);
            deg += exps[i];
        }
        return k | (static_cast<Key>(deg) << degree_shift);
    }

    /// Bit i set iff odd parameter i appears to an odd power.
    std::uint32_t odd_residue(Key k) const noexcept
    {
        std::uint32_t r = 0;
        for (unsigned i : m_odd_indices)
            if (exponent(k, i) & 1u) r |= (1u << i);
        return r;
    }
    Parity parity(Key k) const noexcept
    {
        return (std::popcount(odd_residue(k)) & 1) ? Parity::odd : Parity::even;
    }
    std::uint32_t grassmann_mask() const noexcept { return m_grassmann_mask; }

    /// Product of two monomials: writes the key and returns the sign (0 if the
    /// product vanishes through a grassmann square).
    int multiply(Key a, Key b, Key& out) const noexcept
    {
        const std::uint32_t ra = odd_residue(a);
        const std::uint32_t rb = odd_residue(b);
        if (ra & rb & m_grassmann_mask) return 0;
        int swaps = 0;
        for (std::uint32_t rest = rb; rest;) {
            const unsigned j = static_cast<unsigned>(std::countr_zero(rest));
            rest &= rest - 1u;
            swaps += std::popcount(ra >> (j + 1u));
        }
        out = a + b;
        return (swaps & 1) ? -1 : 1;
    }

    std::string monomial_string(Key k) const
    {
        std::string s;
        for (std::size_t i = 0; i < m_params.size(); ++i) {
            const unsigned e = exponent(k, static_cast<unsigned>(i));
            if (e == 0) continue;
            if (!s.empty()) s += '*';
            s += m_params[i].name;
            if (e > 1) s += "^" + std::to_string(e);
        }
        return s;
    }

private:
    Ring(std::vector<ParameterDecl> params, unsigned order, bool exact)
        : m_params(std::move(params)), m_order(order), m_exact(exact)
    {
        if (m_params.size() > max_params) throw std::invalid_argument("Ring: too many parameters");
        if (m_order > max_order) throw std::invalid_argument("Ring: truncation order too large");
        for (std::size_t i = 0; i < m_params.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j)
                if (m_params[j].name == m_params[i].name)
                    throw std::invalid_argument("Ring: duplicate parameter name '" + m_params[i].name + "'");
            if (is_odd(m_params[i].parity)) {
                m_odd_indices.push_back(static_cast<unsigned>(i));
                if (m_params[i].odd_square_mode == OddSquareMode::grassmann) m_grassmann_mask |= (1u << i);
            }
        }
    }

    std::vector<ParameterDecl> m_params;
    unsigned m_order;
    bool m_exact;
    std::vector<unsigned> m_odd_indices;
    std::uint32_t m_grassmann_mask = 0;
};

using RingPtr = std::shared_ptr<const Ring>;

/// Element of the coefficient ring. A scalar without a ring is a pure
/// rational constant and combines with scalars of any ring.
class Scalar
{
public:
    using Key = Ring::Key;
    using Term = std::pair<Key, Rational>;

    Scalar() = default;
    Scalar(Rational c) : Scalar(nullptr, c) {}
    Scalar(std::int64_t c) : Scalar(Rational(c)) {}
    Scalar(RingPtr ring, Rational c) : m_ring(std::move(ring))
    {
        if (!c.is_zero()) m_terms.emplace_back(Key{0}, c);
    }

    static Scalar parameter(const RingPtr& ring, std::string_view name, Rational coef = 1)
    {
        const int i = ring->index_of(name);
        if (i < 0) throw std::invalid_argument("Scalar: unknown parameter '" + std::string(name) + "'");
        std::vector<unsigned> e(ring->params().size(), 0);
        e[static_cast<std::size_t>(i)] = 1;
        return monomial(ring, e, coef);
    }

    static Scalar monomial(const RingPtr& ring, const std::vector<unsigned>& exps, Rational coef = 1)
    {
        Scalar s;
        s.m_ring = ring;
        const Key k = ring->make_key(exps);
        for (std::size_t i = 0; i < exps.size(); ++i) {
            const auto& p = ring->params()[i];
            if (is_odd(p.parity) && p.odd_square_mode == OddSquareMode::grassmann && exps[i] > 1) return s;
        }
        if (Ring::degree(k) > ring->order()) {
            if (ring->exact()) throw std::overflow_error("Scalar: degree exceeds exact ring order");
            return s;
        }
        if (!coef.is_zero()) s.m_terms.emplace_back(k, coef);
        return s;
    }

    const RingPtr& ring() const noexcept { return m_ring; }
    const std::vector<Term>& terms() const noexcept { return m_terms; }
    bool is_zero() const noexcept { return m_terms.empty(); }

    Rational constant_term() const noexcept
    {
        return (!m_terms.empty() && m_terms.front().first == 0) ? m_terms.front().second : Rational{};
    }
    bool is_constant() const noexcept { return m_terms.empty() || (m_terms.size() == 1 && m_terms[0].first == 0); }

    unsigned min_degree() const noexcept { return m_terms.empty() ? 0 : Ring::degree(m_terms.front().first); }
    unsigned max_degree() const noexcept { return m_terms.empty() ? 0 : Ring::degree(m_terms.back().first); }

    bool is_homogeneous() const noexcept
    {
        if (m_terms.empty() || !m_ring) return true;
        const Parity p = m_ring->parity(m_terms.front().first);
        return std::all_of(m_terms.begin(), m_terms.end(),
                           [&](const Term& t) { return m_ring->parity(t.first) == p; });
    }
    Parity parity() const
    {
        if (!is_homogeneous()) throw std::logic_error("Scalar: parity of inhomogeneous scalar");
        if (m_terms.empty() || !m_ring) return Parity::even;
        return m_ring->parity(m_terms.front().first);
    }

    Scalar parity_part(Parity p) const
    {
        Scalar s;
        s.m_ring = m_ring;
        for (const auto& t : m_terms)
            if (part_parity(t.first) == p) s.m_terms.push_back(t);
        return s;
    }

    /// Grade involution: odd monomials change sign.
    Scalar involution() const
    {
        Scalar s = *this;
        if (!m_ring) return s;
        for (auto& t : s.m_terms)
            if (is_odd(m_ring->parity(t.first))) t.second = -t.second;
        return s;
    }

    Scalar truncated(unsigned order) const
    {
        Scalar s;
        s.m_ring = m_ring;
        for (const auto& t : m_terms)
            if (Ring::degree(t.first) <= order) s.m_terms.push_back(t);
        return s;
    }

    Scalar degree_part(unsigned d) const
    {
        Scalar s;
        s.m_ring = m_ring;
        for (const auto& t : m_terms)
            if (Ring::degree(t.first) == d) s.m_terms.push_back(t);
        return s;
    }

    /// Re-express in another ring over the same parameters (truncating to its order).
    Scalar rebased(const RingPtr& ring) const
    {
        if (m_ring && ring && m_ring->params().size() != ring->params().size())
            throw std::invalid_argument("Scalar: rebase across different parameter sets");
        Scalar s;
        s.m_ring = ring;
        for (const auto& t : m_terms)
            if (!ring || Ring::degree(t.first) <= ring->order()) s.m_terms.push_back(t);
        return s;
    }

    Scalar operator-() const
    {
        Scalar s = *this;
        for (auto& t : s.m_terms) t.second = -t.second;
        return s;
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b)
    {
        Scalar s;
        s.m_ring = common_ring(a, b);
        s.m_terms.reserve(a.m_terms.size() + b.m_terms.size());
        auto i = a.m_terms.begin(), j = b.m_terms.begin();
        while (i != a.m_terms.end() || j != b.m_terms.end()) {
            if (j == b.m_terms.end() || (i != a.m_terms.end() && i->first < j->first)) {
                s.m_terms.push_back(*i++);
            } else if (i == a.m_terms.end() || j->first < i->first) {
                s.m_terms.push_back(*j++);
            } else {
                Rational c = i->second + j->second;
                if (!c.is_zero()) s.m_terms.emplace_back(i->first, c);
                ++i;
                ++j;
            }
        }
        return s;
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

    friend Scalar operator*(const Scalar& a, const Scalar& b)
    {
        Scalar s;
        s.m_ring = common_ring(a, b);
        if (a.is_zero() || b.is_zero()) return s;
        if (a.is_constant()) return b.scaled(a.constant_term(), s.m_ring);
        if (b.is_constant()) return a.scaled(b.constant_term(), s.m_ring);
        const Ring& ring = *s.m_ring;
        const unsigned order = ring.order();
        std::vector<Term> raw;
        raw.reserve(a.m_terms.size() * b.m_terms.size());
        for (const auto& [ka, ca] : a.m_terms) {
            const unsigned da = Ring::degree(ka);
            for (const auto& [kb, cb] : b.m_terms) {
                if (da + Ring::degree(kb) > order) {
                    if (ring.exact()) throw std::overflow_error("Scalar: degree exceeds exact ring order");
                    break; // terms are sorted by degree
                }
                Key k;
                const int sign = ring.multiply(ka, kb, k);
                if (sign == 0) continue;
                raw.emplace_back(k, sign > 0 ? ca * cb : -(ca * cb));
            }
        }
        s.m_terms = canonicalize(std::move(raw));
        return s;
    }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar scaled(const Rational& c) const { return scaled(c, m_ring); }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.m_terms == b.m_terms; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Canonical text: terms by ascending degree, e.g. `1 + xi - 1/2*xi^2`.
    std::string str() const
    {
        if (m_terms.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [k, c] : m_terms) {
            Rational mag = c;
            if (first) {
                if (c.sign() < 0) {
                    s += "-";
                    mag = -c;
                }
            } else {
                s += c.sign() < 0 ? " - " : " + ";
                if (c.sign() < 0) mag = -c;
            }
            first = false;
            const std::string mono = k == 0 ? std::string{} : m_ring->monomial_string(k);
            if (mono.empty())
                s += mag.str();
            else if (mag.is_one())
                s += mono;
            else
                s += mag.str() + "*" + mono;
        }
        return s;
    }

    std::size_t hash() const noexcept
    {
        std::size_t h = m_terms.size();
        for (const auto& [k, c] : m_terms) h = h * 1000003u ^ (std::hash<Key>{}(k) + c.hash());
        return h;
    }

private:
    RingPtr m_ring;
    std::vector<Term> m_terms;

    Parity part_parity(Key k) const noexcept { return m_ring ? m_ring->parity(k) : Parity::even; }

    Scalar scaled(const Rational& c, const RingPtr& ring) const
    {
        Scalar s;
        s.m_ring = ring;
        if (c.is_zero()) return s;
        s.m_terms = m_terms;
        for (auto& t : s.m_terms) t.second *= c;
        return s;
    }

    static RingPtr common_ring(const Scalar& a, const Scalar& b)
    {
        if (!a.m_ring) return b.m_ring;
        if (!b.m_ring || a.m_ring == b.m_ring) return a.m_ring;
        if (!a.m_ring->same_as(*b.m_ring)) throw std::invalid_argument("Scalar: mismatched ring declarations");
        return a.m_ring;
    }

    static std::vector<Term> canonicalize(std::vector<Term> raw)
    {
        std::sort(raw.begin(), raw.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
        std::vector<Term> out;
        out.reserve(raw.size());
        for (auto& t : raw) {
            if (!out.empty() && out.back().first == t.first)
                out.back().second += t.second;
            else
                out.push_back(std::move(t));
            if (out.back().second.is_zero()) out.pop_back();
        }
        return out;
    }
};

/// Drop all monomials of total parameter degree above `order`.
inline Scalar scalar_truncate(const Scalar& a, unsigned order) { return a.truncated(order); }

} // namespace supertwist

#endif
