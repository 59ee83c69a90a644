#ifndef SUPERTWIST_TESTS_ORACLE_HPP
#define SUPERTWIST_TESTS_ORACLE_HPP

// Dense operators on V^{(x)k} for the fundamental representation V, with
// scalar entries. Tensor products of operators are realized directly as
//   (X_1 (x) ... (x) X_k)(v_1 (x) ... (x) v_k) = sign * X_1 v_1 (x) ... (x) X_k v_k
// and products of scalar-valued matrices follow (m E_ab)(n E_bc) = m alpha^{p(a)+p(b)}(n) E_ac.
// Nothing here goes through TensorElement arithmetic.

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "supertwist/rmatrix.hpp"
#include "supertwist/superalgebra.hpp"
#include "supertwist/tensor.hpp"

namespace oracle
{

using supertwist::LieElement;
using supertwist::Parity;
using supertwist::Rational;
using supertwist::RingPtr;
using supertwist::Scalar;
using supertwist::SuperAlgebra;

class Dense
{
public:
    Dense(const SuperAlgebra& g, std::size_t arity, RingPtr ring) : m_ring(std::move(ring)), m_d(g.rep_dim()), m_k(arity)
    {
        m_n = 1;
        for (std::size_t i = 0; i < m_k; ++i) m_n *= m_d;
        m_par.resize(m_n);
        for (std::size_t a = 0; a < m_n; ++a) {
            int p = 0;
            for (std::size_t s = 0; s < m_k; ++s) p += supertwist::is_odd(g.rep_parity(digit(a, s))) ? 1 : 0;
            m_par[a] = p % 2 ? Parity::odd : Parity::even;
        }
        m_e.assign(m_n * m_n, Scalar(m_ring, Rational(0)));
    }

    std::size_t size() const { return m_n; }
    std::size_t digit(std::size_t a, std::size_t s) const
    {
        for (std::size_t t = m_k; t-- > s + 1;) a /= m_d;
        return a % m_d;
    }
    std::size_t with_digit(std::size_t a, std::size_t s, std::size_t v) const
    {
        std::size_t stride = 1;
        for (std::size_t t = m_k; t-- > s + 1;) stride *= m_d;
        return a - digit(a, s) * stride + v * stride;
    }

    Scalar& operator()(std::size_t i, std::size_t j) { return m_e[i * m_n + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return m_e[i * m_n + j]; }
    Parity parity(std::size_t a) const { return m_par[a]; }
    const RingPtr& ring() const { return m_ring; }

    bool is_zero() const
    {
        for (const auto& x : m_e)
            if (!x.is_zero()) return false;
        return true;
    }

    friend Dense operator+(Dense a, const Dense& b)
    {
        for (std::size_t i = 0; i < a.m_e.size(); ++i) a.m_e[i] = a.m_e[i] + b.m_e[i];
        return a;
    }
    friend Dense operator-(Dense a, const Dense& b)
    {
        for (std::size_t i = 0; i < a.m_e.size(); ++i) a.m_e[i] = a.m_e[i] - b.m_e[i];
        return a;
    }
    friend Dense operator*(const Scalar& c, Dense a)
    {
        for (auto& x : a.m_e) x = c * x;
        return a;
    }
    friend Dense operator*(const Dense& a, const Dense& b)
    {
        Dense r = a.blank();
        for (std::size_t i = 0; i < a.m_n; ++i)
            for (std::size_t j = 0; j < a.m_n; ++j) {
                const Scalar& m = a(i, j);
                if (m.is_zero()) continue;
                const bool flip = supertwist::is_odd(a.m_par[i] + a.m_par[j]);
                for (std::size_t l = 0; l < a.m_n; ++l) {
                    const Scalar& n = b(j, l);
                    if (n.is_zero()) continue;
                    r(i, l) = r(i, l) + m * (flip ? n.involution() : n);
                }
            }
        return r;
    }
    friend bool operator==(const Dense& a, const Dense& b) { return (a - b).is_zero(); }

    Dense blank() const
    {
        Dense r = *this;
        for (auto& x : r.m_e) x = Scalar(m_ring, Rational(0));
        return r;
    }
    Dense identity() const
    {
        Dense r = blank();
        for (std::size_t i = 0; i < m_n; ++i) r(i, i) = Scalar(m_ring, Rational(1));
        return r;
    }

private:
    RingPtr m_ring;
    std::size_t m_d, m_k, m_n;
    std::vector<Parity> m_par;
    std::vector<Scalar> m_e;
};

/// The operator of x acting in slot s of V^{(x)k}.
inline Dense slot(const SuperAlgebra& g, const RingPtr& ring, std::size_t k, std::size_t s, const LieElement& x)
{
    Dense r(g, k, ring);
    if (x.is_zero()) return r;
    const auto X = g.image(x);
    const bool odd = supertwist::is_odd(g.parity(x));
    for (std::size_t b = 0; b < r.size(); ++b) {
        int before = 0;
        for (std::size_t t = 0; t < s; ++t) before += supertwist::is_odd(g.rep_parity(r.digit(b, t))) ? 1 : 0;
        const Rational sign = (odd && before % 2) ? Rational(-1) : Rational(1);
        const std::size_t col = r.digit(b, s);
        for (std::size_t a = 0; a < g.rep_dim(); ++a)
            if (!X(a, col).is_zero()) r(r.with_digit(b, s, a), b) = Scalar(ring, sign * X(a, col));
    }
    return r;
}

/// x acting as the sum over the listed slots.
inline Dense slots(const SuperAlgebra& g, const RingPtr& ring, std::size_t k, const std::vector<std::size_t>& ss, const LieElement& x)
{
    Dense r(g, k, ring);
    for (auto s : ss) r = r + slot(g, ring, k, s, x);
    return r;
}

/// Dense image of a matrix-backend tensor element.
template <std::size_t K>
Dense from_tensor(const SuperAlgebra& g, const supertwist::TensorElement<supertwist::MatrixAlgebra, K>& t, const RingPtr& ring)
{
    Dense r(g, K, ring);
    const auto& alg = *t.algebra();
    for (const auto& term : t.terms()) {
        std::size_t row = 0, col = 0;
        int sign = 0;
        int passed = 0;
        for (std::size_t s = 0; s < K; ++s) {
            const auto a = alg.row(term.word[s]), b = alg.col(term.word[s]);
            row = row * g.rep_dim() + a;
            col = col * g.rep_dim() + b;
            if (supertwist::is_odd(alg.parity(term.word[s]))) sign += passed;
            passed += supertwist::is_odd(g.rep_parity(b)) ? 1 : 0;
        }
        r(row, col) = r(row, col) + (sign % 2 ? -term.coef : term.coef);
    }
    return r;
}

/// sum_n c(n) X^n until the powers vanish.
inline Dense series(const Dense& x, const std::function<Rational(unsigned)>& c)
{
    Dense p = x.identity();
    Dense s = Scalar(x.ring(), c(0)) * p;
    for (unsigned n = 1; n < 200; ++n) {
        p = p * x;
        if (p.is_zero()) return s;
        s = s + Scalar(x.ring(), c(n)) * p;
    }
    throw std::runtime_error("oracle: series does not terminate");
}

inline Rational fact(unsigned n)
{
    Rational f(1);
    for (unsigned i = 2; i <= n; ++i) f = f * Rational(i);
    return f;
}

inline Dense exp(const Dense& x) { return series(x, [](unsigned n) { return Rational(1) / fact(n); }); }
inline Dense log1p(const Dense& x)
{
    return series(x, [](unsigned n) { return n == 0 ? Rational(0) : Rational(n % 2 ? 1 : -1, n); });
}
/// (1 + X)^{-1}.
inline Dense inv1p(const Dense& x) { return series(x, [](unsigned n) { return Rational(n % 2 ? -1 : 1); }); }
/// (1 + X)^{1/2}.
inline Dense sqrt1p(const Dense& x)
{
    return series(x, [](unsigned n) {
        Rational b(1);
        for (unsigned k = 0; k < n; ++k) b = b * (Rational(1, 2) - Rational(k)) / Rational(k + 1);
        return b;
    });
}

/// sum of coef * left(i) right(j) for a Lie two-tensor placed in slots i < j of V^{(x)k}.
inline Dense place(const SuperAlgebra& g, const RingPtr& ring, std::size_t k, std::size_t i, std::size_t j,
                   const supertwist::LieTwoTensor& r)
{
    Dense out(g, k, ring);
    for (const auto& t : r.terms()) out = out + t.coef * (slot(g, ring, k, i, t.left) * slot(g, ring, k, j, t.right));
    return out;
}

inline Dense cybe(const SuperAlgebra& g, const RingPtr& ring, const supertwist::LieTwoTensor& r)
{
    const Dense a = place(g, ring, 3, 0, 1, r), b = place(g, ring, 3, 0, 2, r), c = place(g, ring, 3, 1, 2, r);
    return (a * b - b * a) + (a * c - c * a) + (b * c - c * b);
}

/// x |-> operator, the two legs of a two-tensor formula.
struct Leg
{
    std::function<Dense(const LieElement&)> map;
    Dense one;
    Dense operator()(const LieElement& x) const { return map(x); }
};

inline Leg leg(const SuperAlgebra& g, const RingPtr& ring, std::size_t k, std::vector<std::size_t> ss)
{
    return {[&g, ring, k, ss](const LieElement& x) { return slots(g, ring, k, ss, x); }, Dense(g, k, ring).identity()};
}

/// The stage twist F_N F_J written out again from the carrier data.
inline Dense twist(const SuperAlgebra&, const supertwist::CarrierData& c, const Scalar& xi, const Leg& l, const Leg& r)
{
    const auto sigma = [&](const Leg& e) { return Scalar(Rational(1, 2)) * log1p(xi * e(c.e_theta)); };
    const Dense sr = sigma(r);
    const auto exp_q = [&](const Dense& s, const Rational& q) { return exp(Scalar(q) * s); };
    Dense f = l.one;
    for (const auto& p : c.pairs) f = f * exp(xi * Scalar(p.sign) * (l(p.plus) * (r(p.minus) * exp_q(sr, -2 * p.t))));
    if (c.half) {
        const LieElement a = Rational(2) * *c.half;
        const Dense sl = sigma(l);
        // 1/(e^sigma + 1) = 1/2 (1 + (e^sigma - 1)/2)^{-1}
        const auto recip = [&](const Dense& s) { return Scalar(Rational(1, 2)) * inv1p(Scalar(Rational(1, 2)) * (exp(s) - l.one)); };
        const Dense el = exp(sl), er = exp(sr);
        const Dense A = l.one - xi * ((l(a) * recip(sl)) * (r(a) * recip(sr)));
        // (e_l + 1)(e_r + 1) / (2 (e_l e_r + 1)) = 1 + ratio_minus_one
        const Dense num = (el + l.one) * (er + l.one);
        const Dense den_inv = Scalar(Rational(1, 2)) * inv1p(Scalar(Rational(1, 2)) * (el * er - l.one));
        const Dense ratio = Scalar(Rational(1, 2)) * num * den_inv;
        f = f * (A * sqrt1p(ratio - l.one));
    }
    const Dense fj = exp(Scalar(Rational(2)) * (l(c.h_theta) * sr));
    return f * fj;
}

} // namespace oracle

#endif
