#ifndef SUPERTWIST_ENVELOPING_HPP
#define SUPERTWIST_ENVELOPING_HPP

// Universal enveloping algebra U(g) in PBW normal form. A monomial is a
// non-decreasing word in the basis indices of g (basis order is the PBW
// order); odd letters appear at most once because x^2 = 1/2 [x, x] for odd x.
// Monomials are interned to integer keys and products are memoized.

#include <cstdint>
#include <deque>
#include <memory>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "supertwist/superalgebra.hpp"
#include "supertwist/tensor.hpp"

namespace supertwist
{

class EnvelopingAlgebra
{
public:
    using Key = std::uint32_t;
    using Letter = std::uint16_t;
    using Word = std::vector<Letter>;
    using Comb = LinComb<Key>;

    explicit EnvelopingAlgebra(std::shared_ptr<const SuperAlgebra> g) : m_g(std::move(g))
    {
        if (m_g->dim() >= 0xFFFF) throw std::invalid_argument("EnvelopingAlgebra: algebra too large");
        intern(Word{});
        m_unit = {{Key{0}, Rational(1)}};
    }

    const SuperAlgebra& lie() const noexcept { return *m_g; }
    const std::shared_ptr<const SuperAlgebra>& lie_ptr() const noexcept { return m_g; }

    Parity parity(Key k) const { return m_parity[k]; }
    const Comb& unit() const noexcept { return m_unit; }
    const Word& word(Key k) const { return m_words[k]; }
    std::size_t degree(Key k) const { return m_words[k].size(); }
    std::size_t monomial_count() const noexcept { return m_words.size(); }

    Key generator(std::uint32_t i) { return intern(Word{static_cast<Letter>(i)}); }

    Comb element(const LieElement& x)
    {
        Comb c;
        for (const auto& [i, r] : x.terms()) c.emplace_back(generator(i), r);
        return c;
    }

    bool key_less(Key a, Key b) const
    {
        const Word& x = m_words[a];
        const Word& y = m_words[b];
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    }

    std::string key_to_string(Key k) const
    {
        const Word& w = m_words[k];
        if (w.empty()) return "1";
        std::string s;
        for (std::size_t i = 0; i < w.size();) {
            std::size_t j = i;
            while (j < w.size() && w[j] == w[i]) ++j;
            if (!s.empty()) s += "*";
            s += m_g->basis(w[i]).name;
            if (j - i > 1) s += "^" + std::to_string(j - i);
            i = j;
        }
        return s;
    }

    /// Intern a PBW word (must already be in normal form).
    Key intern(const Word& w)
    {
        auto it = m_index.find(w);
        if (it != m_index.end()) return it->second;
        for (std::size_t i = 1; i < w.size(); ++i) {
            if (w[i] < w[i - 1]) throw std::logic_error("EnvelopingAlgebra: word not in PBW order");
            if (w[i] == w[i - 1] && is_odd(m_g->parity(w[i])))
                throw std::logic_error("EnvelopingAlgebra: repeated odd letter");
        }
        const Key k = static_cast<Key>(m_words.size());
        m_words.push_back(w);
        Parity p = Parity::even;
        for (Letter l : w) p = p + m_g->parity(l);
        m_parity.push_back(p);
        m_index.emplace(w, k);
        return k;
    }

    const Comb& multiply(Key a, Key b)
    {
        if (a == 0) return single(b);
        if (b == 0) return single(a);
        const std::uint64_t id = (static_cast<std::uint64_t>(a) << 32) | b;
        auto it = m_mul.find(id);
        if (it != m_mul.end()) return it->second;
        Acc acc;
        acc.add(a, Rational(1));
        const Word wb = m_words[b];
        for (Letter g : wb) {
            Acc next;
            for (const auto& [m, c] : acc.items)
                for (const auto& [m2, c2] : mul_gen(m, g)) next.add(m2, c * c2);
            acc = std::move(next);
        }
        return m_mul.emplace(id, acc.finish()).first->second;
    }

    /// Delta(x_1...x_r) = prod (x_i (x) 1 + 1 (x) x_i), as (left, right, coef).
    const std::vector<std::tuple<Key, Key, Rational>>& coproduct(Key k)
    {
        auto it = m_cop.find(k);
        if (it != m_cop.end()) return it->second;
        const Word w = m_words[k];
        const std::size_t r = w.size();
        if (r > 20) throw std::overflow_error("EnvelopingAlgebra: coproduct of a very long monomial");
        std::unordered_map<std::uint64_t, Rational> acc;
        for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
            Word left, right;
            int odd_right = 0, sign = 1;
            // i goes right when bit i is set; sign for each right odd letter
            // that passes a later left odd letter.
            for (std::size_t i = 0; i < r; ++i) {
                const bool odd = is_odd(m_g->parity(w[i]));
                if (mask & (1u << i)) {
                    right.push_back(w[i]);
                    if (odd) ++odd_right;
                } else {
                    left.push_back(w[i]);
                    if (odd && (odd_right & 1)) sign = -sign;
                }
            }
            const Key l = intern(left), rr = intern(right);
            acc[(static_cast<std::uint64_t>(l) << 32) | rr] += Rational(sign);
        }
        std::vector<std::tuple<Key, Key, Rational>> out;
        for (const auto& [key, c] : acc)
            if (!c.is_zero()) out.emplace_back(static_cast<Key>(key >> 32), static_cast<Key>(key & 0xFFFFFFFFu), c);
        std::sort(out.begin(), out.end());
        return m_cop.emplace(k, std::move(out)).first->second;
    }

    /// S(x_1...x_r) = (-1)^r (-1)^{sum_{i<j} p_i p_j} x_r ... x_1, renormalized.
    const Comb& antipode(Key k)
    {
        auto it = m_antipode.find(k);
        if (it != m_antipode.end()) return it->second;
        const Word w = m_words[k];
        int odd = 0, pairs = 0;
        for (Letter l : w)
            if (is_odd(m_g->parity(l))) {
                pairs += odd;
                ++odd;
            }
        const int sign = ((w.size() + static_cast<std::size_t>(pairs)) & 1u) ? -1 : 1;
        Acc acc;
        acc.add(0, Rational(sign));
        for (auto l = w.rbegin(); l != w.rend(); ++l) {
            Acc next;
            for (const auto& [m, c] : acc.items)
                for (const auto& [m2, c2] : mul_gen(m, *l)) next.add(m2, c * c2);
            acc = std::move(next);
        }
        return m_antipode.emplace(k, acc.finish()).first->second;
    }

    Rational counit(Key k) const { return k == 0 ? Rational(1) : Rational(0); }

private:
    struct WordHash
    {
        std::size_t operator()(const Word& w) const noexcept
        {
            std::size_t h = w.size();
            for (Letter l : w) h = h * 1000003u + l;
            return h;
        }
    };

    struct Acc
    {
        std::unordered_map<Key, std::size_t> index;
        std::vector<std::pair<Key, Rational>> items;
        void add(Key k, const Rational& c)
        {
            if (c.is_zero()) return;
            auto [it, fresh] = index.try_emplace(k, items.size());
            if (fresh)
                items.emplace_back(k, c);
            else
                items[it->second].second += c;
        }
        Comb finish()
        {
            Comb out;
            for (auto& t : items)
                if (!t.second.is_zero()) out.push_back(t);
            std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
            return out;
        }
    };

    std::shared_ptr<const SuperAlgebra> m_g;
    std::deque<Word> m_words;
    std::vector<Parity> m_parity;
    std::unordered_map<Word, Key, WordHash> m_index;
    Comb m_unit;
    std::unordered_map<Key, Comb> m_single;
    std::unordered_map<std::uint64_t, Comb> m_gen;
    std::unordered_map<std::uint64_t, Comb> m_mul;
    std::unordered_map<Key, std::vector<std::tuple<Key, Key, Rational>>> m_cop;
    std::unordered_map<Key, Comb> m_antipode;

    const Comb& single(Key k)
    {
        auto it = m_single.find(k);
        if (it != m_single.end()) return it->second;
        return m_single.emplace(k, Comb{{k, Rational(1)}}).first->second;
    }

    /// Monomial times one generator, rewritten to normal form.
    const Comb& mul_gen(Key a, Letter g)
    {
        const std::uint64_t id = (static_cast<std::uint64_t>(a) << 16) | g;
        auto it = m_gen.find(id);
        if (it != m_gen.end()) return it->second;

        const Word w = m_words[a];
        const bool g_odd = is_odd(m_g->parity(g));
        Acc acc;
        if (w.empty() || w.back() < g || (w.back() == g && !g_odd)) {
            Word x = w;
            x.push_back(g);
            acc.add(intern(x), Rational(1));
        } else {
            const Letter last = w.back();
            const Key rest = intern(Word(w.begin(), w.end() - 1));
            if (last == g) {
                // odd g: g g = 1/2 [g, g]
                for (const auto& [y, c] : m_g->bracket(g, g).terms())
                    for (const auto& [m2, c2] : mul_gen(rest, static_cast<Letter>(y)))
                        acc.add(m2, Rational(1, 2) * c * c2);
            } else {
                // rest last g = s * rest g last + rest [last, g]
                const Rational s = koszul(m_g->parity(last), m_g->parity(g));
                const Comb first = mul_gen(rest, g);
                for (const auto& [m, c] : first)
                    for (const auto& [m2, c2] : mul_gen(m, last)) acc.add(m2, s * c * c2);
                for (const auto& [y, c] : m_g->bracket(last, g).terms())
                    for (const auto& [m2, c2] : mul_gen(rest, static_cast<Letter>(y))) acc.add(m2, c * c2);
            }
        }
        return m_gen.emplace(id, acc.finish()).first->second;
    }
};

} // namespace supertwist

#endif
