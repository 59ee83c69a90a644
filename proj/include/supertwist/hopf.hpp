#ifndef SUPERTWIST_HOPF_HPP
#define SUPERTWIST_HOPF_HPP

// Slot embeddings and the undeformed Hopf structure.
//
// Formulas are written once against an Embedding, which sends a Lie algebra
// element to a tensor element of some arity. Evaluating the same formula
// under x -> x(x)1 and x -> 1(x)x gives a two-tensor; under
// x -> x(x)1(x)1 + 1(x)x(x)1 and x -> 1(x)1(x)x it gives (Delta (x) id) of
// that two-tensor, because the primitive coproduct is an algebra map. The
// formal backend also carries linear slotwise Delta, epsilon and S, which
// give an independent route to the same objects.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "supertwist/enveloping.hpp"
#include "supertwist/matrix_algebra.hpp"
#include "supertwist/scalar.hpp"
#include "supertwist/series.hpp"
#include "supertwist/superalgebra.hpp"
#include "supertwist/tensor.hpp"

namespace supertwist
{

template <class Alg, std::size_t K>
struct Embedding
{
    using T = TensorElement<Alg, K>;
    std::function<T(const LieElement&)> map;
    T one;

    T operator()(const LieElement& x) const { return map(x); }
};

/// x in slot s, unit in the others.
template <class Alg, std::size_t K>
TensorElement<Alg, K> place(const std::shared_ptr<Alg>& alg, const RingPtr& ring, std::size_t s,
                            const LinComb<typename Alg::Key>& x, const Scalar& c = Scalar(1))
{
    using T = TensorElement<Alg, K>;
    std::vector<typename T::Term> terms;
    const auto& unit = alg->unit();
    std::vector<typename T::Word> words{typename T::Word{}};
    std::vector<Rational> coefs{Rational(1)};
    for (std::size_t slot = 0; slot < K; ++slot) {
        const auto& lc = slot == s ? x : unit;
        std::vector<typename T::Word> nw;
        std::vector<Rational> nc;
        for (std::size_t i = 0; i < words.size(); ++i)
            for (const auto& [k, q] : lc) {
                auto w = words[i];
                w[slot] = k;
                nw.push_back(w);
                nc.push_back(coefs[i] * q);
            }
        words = std::move(nw);
        coefs = std::move(nc);
    }
    for (std::size_t i = 0; i < words.size(); ++i) terms.push_back({words[i], c.scaled(coefs[i])});
    return T::from_terms(alg, ring, std::move(terms));
}

template <class Alg>
LinComb<typename Alg::Key> lift(Alg& alg, const LieElement& x)
{
    return alg.element(x);
}

/// x -> sum over the listed slots of x placed there.
template <class Alg, std::size_t K>
Embedding<Alg, K> slot_embedding(const std::shared_ptr<Alg>& alg, const RingPtr& ring, std::vector<std::size_t> slots)
{
    Embedding<Alg, K> e;
    e.one = TensorElement<Alg, K>::one(alg, ring);
    e.map = [alg, ring, slots](const LieElement& x) {
        auto lc = lift(*alg, x);
        auto r = TensorElement<Alg, K>::zero(alg, ring);
        for (auto s : slots) r += place<Alg, K>(alg, ring, s, lc);
        return r;
    };
    return e;
}

template <class Alg, std::size_t K>
Embedding<Alg, K> zero_embedding(const std::shared_ptr<Alg>& alg, const RingPtr& ring)
{
    Embedding<Alg, K> e;
    e.one = TensorElement<Alg, K>::one(alg, ring);
    e.map = [alg, ring](const LieElement&) { return TensorElement<Alg, K>::zero(alg, ring); };
    return e;
}

/// A pair of embeddings used to evaluate a two-tensor formula.
template <class Alg, std::size_t K>
struct Legs
{
    Embedding<Alg, K> left, right;
    const TensorElement<Alg, K>& one() const { return left.one; }
};

template <class Alg>
struct StandardLegs
{
    std::shared_ptr<Alg> alg;
    RingPtr ring;

    Embedding<Alg, 1> single() const { return slot_embedding<Alg, 1>(alg, ring, {0}); }
    Embedding<Alg, 2> delta() const { return slot_embedding<Alg, 2>(alg, ring, {0, 1}); }
    Embedding<Alg, 3> delta2() const { return slot_embedding<Alg, 3>(alg, ring, {0, 1, 2}); }

    Legs<Alg, 2> pair() const { return {slot_embedding<Alg, 2>(alg, ring, {0}), slot_embedding<Alg, 2>(alg, ring, {1})}; }
    Legs<Alg, 2> flipped() const { return {slot_embedding<Alg, 2>(alg, ring, {1}), slot_embedding<Alg, 2>(alg, ring, {0})}; }
    Legs<Alg, 3> legs12() const { return {slot_embedding<Alg, 3>(alg, ring, {0}), slot_embedding<Alg, 3>(alg, ring, {1})}; }
    Legs<Alg, 3> legs13() const { return {slot_embedding<Alg, 3>(alg, ring, {0}), slot_embedding<Alg, 3>(alg, ring, {2})}; }
    Legs<Alg, 3> legs23() const { return {slot_embedding<Alg, 3>(alg, ring, {1}), slot_embedding<Alg, 3>(alg, ring, {2})}; }
    Legs<Alg, 3> delta_id() const
    {
        return {slot_embedding<Alg, 3>(alg, ring, {0, 1}), slot_embedding<Alg, 3>(alg, ring, {2})};
    }
    Legs<Alg, 3> id_delta() const
    {
        return {slot_embedding<Alg, 3>(alg, ring, {0}), slot_embedding<Alg, 3>(alg, ring, {1, 2})};
    }
    Legs<Alg, 1> eps_id() const { return {zero_embedding<Alg, 1>(alg, ring), slot_embedding<Alg, 1>(alg, ring, {0})}; }
    Legs<Alg, 1> id_eps() const { return {slot_embedding<Alg, 1>(alg, ring, {0}), zero_embedding<Alg, 1>(alg, ring)}; }
};

/// x (x) y -> (-1)^{p(x)p(y)} y (x) x.
template <class Alg>
TensorElement<Alg, 2> super_flip(const TensorElement<Alg, 2>& a)
{
    using T = TensorElement<Alg, 2>;
    std::vector<typename T::Term> terms;
    const Alg& alg = *a.algebra();
    for (const auto& t : a.terms()) {
        const bool sign = is_odd(alg.parity(t.word[0])) && is_odd(alg.parity(t.word[1]));
        terms.push_back({{t.word[1], t.word[0]}, sign ? -t.coef : t.coef});
    }
    return T::from_terms(a.algebra(), a.ring(), std::move(terms));
}

/// Insert the unit into the complementary slot: positions 12, 13 or 23.
template <class Alg>
TensorElement<Alg, 3> embed(const TensorElement<Alg, 2>& a, int positions)
{
    using T3 = TensorElement<Alg, 3>;
    std::size_t p, q, gap;
    switch (positions) {
    case 12: p = 0, q = 1, gap = 2; break;
    case 13: p = 0, q = 2, gap = 1; break;
    case 23: p = 1, q = 2, gap = 0; break;
    default: throw std::invalid_argument("embed: positions must be 12, 13 or 23");
    }
    std::vector<typename T3::Term> terms;
    for (const auto& t : a.terms())
        for (const auto& [u, c] : a.algebra()->unit()) {
            typename T3::Word w{};
            w[p] = t.word[0];
            w[q] = t.word[1];
            w[gap] = u;
            terms.push_back({w, t.coef.scaled(c)});
        }
    return T3::from_terms(a.algebra(), a.ring(), std::move(terms));
}

/// m(a (x) b) = ab.
template <class Alg>
TensorElement<Alg, 1> multiply_slots(const TensorElement<Alg, 2>& a)
{
    using T1 = TensorElement<Alg, 1>;
    std::vector<typename T1::Term> terms;
    Alg& alg = *a.algebra();
    for (const auto& t : a.terms())
        for (const auto& [k, q] : alg.multiply(t.word[0], t.word[1])) terms.push_back({{k}, t.coef.scaled(q)});
    return T1::from_terms(a.algebra(), a.ring(), std::move(terms));
}

// Linear Hopf maps of U(g), applied to a single slot.

template <std::size_t K>
TensorElement<EnvelopingAlgebra, K + 1> coproduct_slot(const TensorElement<EnvelopingAlgebra, K>& a, std::size_t s)
{
    using T = TensorElement<EnvelopingAlgebra, K + 1>;
    std::vector<typename T::Term> terms;
    auto& alg = *a.algebra();
    for (const auto& t : a.terms())
        for (const auto& [l, r, c] : alg.coproduct(t.word[s])) {
            typename T::Word w{};
            for (std::size_t i = 0, j = 0; i < K; ++i) {
                if (i == s) {
                    w[j++] = l;
                    w[j++] = r;
                } else {
                    w[j++] = t.word[i];
                }
            }
            terms.push_back({w, t.coef.scaled(c)});
        }
    return T::from_terms(a.algebra(), a.ring(), std::move(terms));
}

template <std::size_t K>
TensorElement<EnvelopingAlgebra, K - 1> counit_slot(const TensorElement<EnvelopingAlgebra, K>& a, std::size_t s)
    requires(K >= 2)
{
    using T = TensorElement<EnvelopingAlgebra, K - 1>;
    std::vector<typename T::Term> terms;
    for (const auto& t : a.terms()) {
        if (t.word[s] != 0) continue;
        typename T::Word w{};
        for (std::size_t i = 0, j = 0; i < K; ++i)
            if (i != s) w[j++] = t.word[i];
        terms.push_back({w, t.coef});
    }
    return T::from_terms(a.algebra(), a.ring(), std::move(terms));
}

/// epsilon of an arity-one element, as a scalar.
inline Scalar counit(const TensorElement<EnvelopingAlgebra, 1>& a)
{
    for (const auto& t : a.terms())
        if (t.word[0] == 0) return t.coef;
    return Scalar(0);
}

template <std::size_t K>
TensorElement<EnvelopingAlgebra, K> antipode_slot(const TensorElement<EnvelopingAlgebra, K>& a, std::size_t s)
{
    using T = TensorElement<EnvelopingAlgebra, K>;
    std::vector<typename T::Term> terms;
    auto& alg = *a.algebra();
    for (const auto& t : a.terms())
        for (const auto& [k, c] : alg.antipode(t.word[s])) {
            auto w = t.word;
            w[s] = k;
            terms.push_back({w, t.coef.scaled(c)});
        }
    return T::from_terms(a.algebra(), a.ring(), std::move(terms));
}

inline TensorElement<EnvelopingAlgebra, 1> antipode(const TensorElement<EnvelopingAlgebra, 1>& a)
{
    return antipode_slot<1>(a, 0);
}

/// For o = sum c_j y_j and a fixed z: left=true gives sum c_j z y_j, left=false
/// gives sum c_j y_j z. Coefficients stay attached to their original term.
inline TensorElement<EnvelopingAlgebra, 1> scalar_left_product(const TensorElement<EnvelopingAlgebra, 1>& o,
                                                               const TensorElement<EnvelopingAlgebra, 1>& z, bool z_first)
{
    using T1 = TensorElement<EnvelopingAlgebra, 1>;
    auto alg = o.algebra();
    T1 out = T1::zero(alg, o.ring());
    for (const auto& t : o.terms()) {
        const T1 y = T1::monomial(alg, o.ring(), t.word, Scalar(o.ring(), 1));
        out += t.coef * (z_first ? z * y : y * z);
    }
    return out;
}

enum class FoldSide { left, right };

/// ((S (x) id) F) o 1 or ((id (x) S) F) o 1, with (a (x) b) o x = a x b.
template <class Antipode>
TensorElement<EnvelopingAlgebra, 1> fold(const TensorElement<EnvelopingAlgebra, 2>& f, FoldSide side, Antipode&& s)
{
    using T1 = TensorElement<EnvelopingAlgebra, 1>;
    auto alg = f.algebra();
    auto ring = f.ring();
    T1 out = T1::zero(alg, ring);
    // Group by the slot the antipode acts on, so that it is applied once per key.
    std::map<EnvelopingAlgebra::Key, std::vector<const TensorElement<EnvelopingAlgebra, 2>::Term*>> groups;
    const std::size_t acted = side == FoldSide::left ? 0 : 1;
    for (const auto& t : f.terms()) groups[t.word[acted]].push_back(&t);
    for (const auto& [k, ts] : groups) {
        const T1 sk = s(T1::monomial(alg, ring, {k}, Scalar(ring, 1)));
        std::vector<T1::Term> other;
        for (const auto* t : ts) other.push_back({{t->word[1 - acted]}, t->coef});
        const T1 o = T1::from_terms(alg, ring, std::move(other));
        out += scalar_left_product(o, sk, side == FoldSide::left);
    }
    return out;
}

/// Image of a formal element in the matrix backend.
class Representation
{
public:
    Representation(std::shared_ptr<EnvelopingAlgebra> env, std::shared_ptr<MatrixAlgebra> mat)
        : m_env(std::move(env)), m_mat(std::move(mat))
    {
    }

    const LinComb<MatrixAlgebra::Key>& image(EnvelopingAlgebra::Key k)
    {
        auto it = m_cache.find(k);
        if (it != m_cache.end()) return it->second;
        const auto& w = m_env->word(k);
        QMatrix m = QMatrix::identity(m_mat->dim());
        for (auto l : w) m = m * m_mat->lie().image(l);
        return m_cache.emplace(k, m_mat->from_matrix(m)).first->second;
    }

    template <std::size_t K>
    TensorElement<MatrixAlgebra, K> operator()(const TensorElement<EnvelopingAlgebra, K>& a, const RingPtr& ring)
    {
        using T = TensorElement<MatrixAlgebra, K>;
        std::vector<typename T::Term> terms;
        for (const auto& t : a.terms()) {
            std::vector<typename T::Word> words{typename T::Word{}};
            std::vector<Rational> coefs{Rational(1)};
            for (std::size_t s = 0; s < K; ++s) {
                std::vector<typename T::Word> nw;
                std::vector<Rational> nc;
                for (std::size_t i = 0; i < words.size(); ++i)
                    for (const auto& [k, q] : image(t.word[s])) {
                        auto w = words[i];
                        w[s] = k;
                        nw.push_back(w);
                        nc.push_back(coefs[i] * q);
                    }
                words = std::move(nw);
                coefs = std::move(nc);
            }
            const Scalar c = t.coef.rebased(ring);
            for (std::size_t i = 0; i < words.size(); ++i) terms.push_back({words[i], c.scaled(coefs[i])});
        }
        return T::from_terms(m_mat, ring, std::move(terms));
    }

private:
    std::shared_ptr<EnvelopingAlgebra> m_env;
    std::shared_ptr<MatrixAlgebra> m_mat;
    std::unordered_map<EnvelopingAlgebra::Key, LinComb<MatrixAlgebra::Key>> m_cache;
};

} // namespace supertwist

#endif
