#ifndef SUPERTWIST_TENSOR_HPP
#define SUPERTWIST_TENSOR_HPP

// Elements of A^{(x)k} for a graded algebra backend A, with coefficients in
// the graded-commutative scalar ring. A term is c * (x_1 (x) ... (x) x_k) with
// the scalar kept on the left, so that
//
//   (c A)(d B) = c * alpha^{p(A)}(d) * (A B),
//
// where alpha flips the sign of odd scalar monomials, and the slotwise product
// carries the usual Koszul sign for every odd factor crossing an odd factor.
//
// A backend provides:
//   using Key;                                    basis element id
//   Parity parity(Key) const;
//   const LinComb& multiply(Key, Key);            product in the backend basis
//   const LinComb& unit() const;
//   bool key_less(Key, Key) const;                canonical print order
//   std::string key_to_string(Key) const;
// and optionally join_left / join_right to prune vanishing slot products.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "supertwist/rational.hpp"
#include "supertwist/scalar.hpp"

namespace supertwist
{

template <class Key>
using LinComb = std::vector<std::pair<Key, Rational>>;

template <class Alg>
concept HasJoin = requires(const Alg& a, typename Alg::Key k) {
    { a.join_left(k) } -> std::convertible_to<std::uint32_t>;
    { a.join_right(k) } -> std::convertible_to<std::uint32_t>;
};

template <class Alg, std::size_t K>
class TensorElement
{
    static_assert(K >= 1 && K <= 3, "arity is limited to 1..3");

public:
    using Key = typename Alg::Key;
    using Word = std::array<Key, K>;
    struct Term
    {
        Word word;
        Scalar coef;
    };

    TensorElement() = default;
    TensorElement(std::shared_ptr<Alg> alg, RingPtr ring) : m_alg(std::move(alg)), m_ring(std::move(ring)) {}

    static TensorElement zero(const std::shared_ptr<Alg>& alg, const RingPtr& ring) { return {alg, ring}; }

    static TensorElement one(const std::shared_ptr<Alg>& alg, const RingPtr& ring)
    {
        TensorElement r(alg, ring);
        std::unordered_map<Word, Scalar, WordHash> acc;
        Word w{};
        expand_units(*alg, 0, w, Rational(1), Scalar(ring, 1), acc);
        r.adopt(std::move(acc));
        return r;
    }

    static TensorElement monomial(const std::shared_ptr<Alg>& alg, const RingPtr& ring, const Word& w, Scalar c)
    {
        TensorElement r(alg, ring);
        if (!c.is_zero()) r.m_terms.push_back({w, std::move(c)});
        return r;
    }

    /// Build from an arbitrary list of terms (duplicates merged).
    static TensorElement from_terms(const std::shared_ptr<Alg>& alg, const RingPtr& ring, std::vector<Term> terms)
    {
        TensorElement r(alg, ring);
        std::unordered_map<Word, Scalar, WordHash> acc;
        for (auto& t : terms) add_to(acc, t.word, t.coef);
        r.adopt(std::move(acc));
        return r;
    }

    /// Element of arity 1 from a linear combination of backend keys.
    static TensorElement from_lincomb(const std::shared_ptr<Alg>& alg, const RingPtr& ring,
                                      const LinComb<Key>& lc, const Scalar& c = Scalar(1))
        requires(K == 1)
    {
        std::vector<Term> t;
        for (const auto& [k, r] : lc) t.push_back({Word{k}, c.scaled(r)});
        return from_terms(alg, ring, std::move(t));
    }

    const std::shared_ptr<Alg>& algebra() const noexcept { return m_alg; }
    const RingPtr& ring() const noexcept { return m_ring; }
    const std::vector<Term>& terms() const noexcept { return m_terms; }
    bool is_zero() const noexcept { return m_terms.empty(); }
    std::size_t size() const noexcept { return m_terms.size(); }

    Parity word_parity(const Word& w) const
    {
        Parity p = Parity::even;
        for (const auto& k : w) p = p + m_alg->parity(k);
        return p;
    }

    /// Homogeneous component of total parity p (scalar parity plus slots).
    TensorElement parity_part(Parity p) const
    {
        TensorElement r(m_alg, m_ring);
        for (const auto& t : m_terms) {
            Scalar s = t.coef.parity_part(p + word_parity(t.word));
            if (!s.is_zero()) r.m_terms.push_back({t.word, std::move(s)});
        }
        return r;
    }
    bool is_homogeneous(Parity p) const { return (*this - parity_part(p)).is_zero(); }

    /// Component of total parameter degree d.
    TensorElement degree_part(unsigned d) const
    {
        return map_scalars([d](const Scalar& s) { return s.degree_part(d); });
    }
    TensorElement truncated(unsigned order) const
    {
        return map_scalars([order](const Scalar& s) { return s.truncated(order); });
    }
    unsigned max_degree() const
    {
        unsigned d = 0;
        for (const auto& t : m_terms) d = std::max(d, t.coef.max_degree());
        return d;
    }

    template <class F>
    TensorElement map_scalars(F&& f) const
    {
        TensorElement r(m_alg, m_ring);
        for (const auto& t : m_terms) {
            Scalar s = f(t.coef);
            if (!s.is_zero()) r.m_terms.push_back({t.word, std::move(s)});
        }
        return r;
    }

    /// Express all coefficients in another ring over the same parameters.
    TensorElement rebased(const RingPtr& ring) const
    {
        TensorElement r(m_alg, ring);
        for (const auto& t : m_terms) {
            Scalar s = t.coef.rebased(ring);
            if (!s.is_zero()) r.m_terms.push_back({t.word, std::move(s)});
        }
        return r;
    }

    TensorElement operator-() const
    {
        TensorElement r = *this;
        for (auto& t : r.m_terms) t.coef = -t.coef;
        return r;
    }

    friend TensorElement operator+(const TensorElement& a, const TensorElement& b)
    {
        check_compatible(a, b);
        TensorElement r(a.m_alg ? a.m_alg : b.m_alg, a.m_ring ? a.m_ring : b.m_ring);
        r.m_terms.reserve(a.m_terms.size() + b.m_terms.size());
        auto i = a.m_terms.begin(), j = b.m_terms.begin();
        while (i != a.m_terms.end() || j != b.m_terms.end()) {
            if (j == b.m_terms.end() || (i != a.m_terms.end() && i->word < j->word)) {
                r.m_terms.push_back(*i++);
            } else if (i == a.m_terms.end() || j->word < i->word) {
                r.m_terms.push_back(*j++);
            } else {
                Scalar s = i->coef + j->coef;
                if (!s.is_zero()) r.m_terms.push_back({i->word, std::move(s)});
                ++i;
                ++j;
            }
        }
        return r;
    }
    friend TensorElement operator-(const TensorElement& a, const TensorElement& b) { return a + (-b); }
    TensorElement& operator+=(const TensorElement& o) { return *this = *this + o; }
    TensorElement& operator-=(const TensorElement& o) { return *this = *this - o; }

    /// Scalar placed on the left.
    friend TensorElement operator*(const Scalar& c, const TensorElement& a)
    {
        TensorElement r(a.m_alg, a.m_ring);
        if (c.is_zero()) return r;
        if (c.is_constant()) {
            const Rational q = c.constant_term();
            for (const auto& t : a.m_terms) r.m_terms.push_back({t.word, t.coef.scaled(q)});
            return r;
        }
        for (const auto& t : a.m_terms) {
            Scalar s = c * t.coef;
            if (!s.is_zero()) r.m_terms.push_back({t.word, std::move(s)});
        }
        return r;
    }
    friend TensorElement operator*(const Rational& c, const TensorElement& a) { return Scalar(c) * a; }

    friend TensorElement operator*(const TensorElement& a, const TensorElement& b)
    {
        check_compatible(a, b);
        TensorElement r(a.m_alg ? a.m_alg : b.m_alg, a.m_ring ? a.m_ring : b.m_ring);
        if (a.is_zero() || b.is_zero()) return r;
        Alg& alg = *r.m_alg;

        // Per-term slot parities and involuted scalars of b.
        std::vector<std::array<Parity, K>> pb(b.m_terms.size());
        std::vector<Scalar> cb_inv(b.m_terms.size());
        for (std::size_t j = 0; j < b.m_terms.size(); ++j) {
            for (std::size_t s = 0; s < K; ++s) pb[j][s] = alg.parity(b.m_terms[j].word[s]);
            cb_inv[j] = b.m_terms[j].coef.involution();
        }

        std::unordered_map<std::uint32_t, std::vector<std::size_t>> by_join;
        if constexpr (HasJoin<Alg>) {
            for (std::size_t j = 0; j < b.m_terms.size(); ++j)
                by_join[alg.join_left(b.m_terms[j].word[0])].push_back(j);
        }

        std::unordered_map<Word, Scalar, WordHash> acc;
        std::vector<std::size_t> all;
        if constexpr (!HasJoin<Alg>) {
            all.resize(b.m_terms.size());
            for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
        }
        for (const auto& ta : a.m_terms) {
            std::array<Parity, K> pa;
            Parity ptot = Parity::even;
            for (std::size_t s = 0; s < K; ++s) {
                pa[s] = alg.parity(ta.word[s]);
                ptot = ptot + pa[s];
            }
            const std::vector<std::size_t>* cand = &all;
            if constexpr (HasJoin<Alg>) {
                auto it = by_join.find(alg.join_right(ta.word[0]));
                if (it == by_join.end()) continue;
                cand = &it->second;
            }
            for (std::size_t j : *cand) {
                const auto& tb = b.m_terms[j];
                // Koszul sign: slot s of a crosses slots t < s of b.
                int sign = 1;
                Parity crossed = Parity::even;
                for (std::size_t s = 0; s < K; ++s) {
                    if (s > 0) crossed = crossed + pb[j][s - 1];
                    if (is_odd(pa[s]) && is_odd(crossed)) sign = -sign;
                }
                std::array<const LinComb<Key>*, K> prods;
                bool vanish = false;
                for (std::size_t s = 0; s < K && !vanish; ++s) {
                    prods[s] = &alg.multiply(ta.word[s], tb.word[s]);
                    vanish = prods[s]->empty();
                }
                if (vanish) continue;
                const Scalar coef = ta.coef * (is_odd(ptot) ? cb_inv[j] : tb.coef);
                if (coef.is_zero()) continue;
                Word w{};
                expand_products(prods, 0, w, Rational(sign), coef, acc);
            }
        }
        r.adopt(std::move(acc));
        return r;
    }
    TensorElement& operator*=(const TensorElement& o) { return *this = *this * o; }

    friend bool operator==(const TensorElement& a, const TensorElement& b)
    {
        if (a.m_terms.size() != b.m_terms.size()) return false;
        for (std::size_t i = 0; i < a.m_terms.size(); ++i)
            if (a.m_terms[i].word != b.m_terms[i].word || a.m_terms[i].coef != b.m_terms[i].coef) return false;
        return true;
    }
    friend bool operator!=(const TensorElement& a, const TensorElement& b) { return !(a == b); }

    /// Canonical text: terms in backend order slot by slot, e.g.
    /// `xi*(h1 (x) e{1-2}) - xi*(e{1-2} (x) h1)`.
    std::string str() const
    {
        if (m_terms.empty()) return "0";
        std::vector<const Term*> order;
        for (const auto& t : m_terms) order.push_back(&t);
        const Alg& alg = *m_alg;
        std::sort(order.begin(), order.end(), [&](const Term* x, const Term* y) {
            for (std::size_t s = 0; s < K; ++s) {
                if (alg.key_less(x->word[s], y->word[s])) return true;
                if (alg.key_less(y->word[s], x->word[s])) return false;
            }
            return false;
        });
        std::string out;
        for (std::size_t i = 0; i < order.size(); ++i) {
            const Term& t = *order[i];
            std::string c = t.coef.str();
            const bool neg = !c.empty() && c[0] == '-' && t.coef.terms().size() == 1;
            if (i > 0) out += neg ? " - " : " + ";
            else if (neg) out += "-";
            if (neg) c = c.substr(1);
            std::string w;
            for (std::size_t s = 0; s < K; ++s) w += (s ? " (x) " : "") + alg.key_to_string(t.word[s]);
            if (K > 1) w = "(" + w + ")";
            if (c == "1")
                out += w;
            else if (t.coef.terms().size() == 1)
                out += c + "*" + w;
            else
                out += "(" + c + ")*" + w;
        }
        return out;
    }

private:
    std::shared_ptr<Alg> m_alg;
    RingPtr m_ring;
    std::vector<Term> m_terms; // sorted by word, no zero coefficients

    struct WordHash
    {
        std::size_t operator()(const Word& w) const noexcept
        {
            std::size_t h = 0;
            for (const auto& k : w) h = h * 0x9E3779B97F4A7C15ull + std::hash<Key>{}(k) + 0x632BE5ABull;
            return h;
        }
    };

    static void add_to(std::unordered_map<Word, Scalar, WordHash>& acc, const Word& w, const Scalar& c)
    {
        auto [it, fresh] = acc.try_emplace(w, c);
        if (!fresh) it->second += c;
    }

    void adopt(std::unordered_map<Word, Scalar, WordHash>&& acc)
    {
        m_terms.clear();
        m_terms.reserve(acc.size());
        for (auto& [w, c] : acc)
            if (!c.is_zero()) m_terms.push_back({w, std::move(c)});
        std::sort(m_terms.begin(), m_terms.end(), [](const Term& x, const Term& y) { return x.word < y.word; });
    }

    static void expand_units(const Alg& alg, std::size_t s, Word& w, const Rational& r, const Scalar& c,
                             std::unordered_map<Word, Scalar, WordHash>& acc)
    {
        if (s == K) {
            add_to(acc, w, c.scaled(r));
            return;
        }
        for (const auto& [k, q] : alg.unit()) {
            w[s] = k;
            expand_units(alg, s + 1, w, r * q, c, acc);
        }
    }

    static void expand_products(const std::array<const LinComb<Key>*, K>& prods, std::size_t s, Word& w,
                                const Rational& r, const Scalar& c, std::unordered_map<Word, Scalar, WordHash>& acc)
    {
        if (s == K) {
            add_to(acc, w, c.scaled(r));
            return;
        }
        for (const auto& [k, q] : *prods[s]) {
            w[s] = k;
            expand_products(prods, s + 1, w, r * q, c, acc);
        }
    }

    static void check_compatible(const TensorElement& a, const TensorElement& b)
    {
        if (a.m_alg && b.m_alg && a.m_alg != b.m_alg)
            throw std::invalid_argument("TensorElement: operands live in different backends");
        if (a.m_ring && b.m_ring && a.m_ring != b.m_ring && !a.m_ring->same_as(*b.m_ring))
            throw std::invalid_argument("TensorElement: mismatched ring declarations");
    }
};

template <class Alg, std::size_t K>
TensorElement<Alg, K> pow(const TensorElement<Alg, K>& x, unsigned n)
{
    auto r = TensorElement<Alg, K>::one(x.algebra(), x.ring());
    for (unsigned i = 0; i < n; ++i) r = r * x;
    return r;
}

/// Graded commutator [a, b] = ab - (-1)^{p(a)p(b)} ba, extended bilinearly
/// over the parity components.
template <class Alg, std::size_t K>
TensorElement<Alg, K> supercommutator(const TensorElement<Alg, K>& a, const TensorElement<Alg, K>& b)
{
    // Only the odd-odd component differs from the plain commutator.
    const auto a1 = a.parity_part(Parity::odd), b1 = b.parity_part(Parity::odd);
    auto r = a * b - b * a;
    if (!a1.is_zero() && !b1.is_zero()) r += Rational(2) * (b1 * a1);
    return r;
}

} // namespace supertwist

#endif
