#ifndef SUPERTWIST_SERIES_HPP
#define SUPERTWIST_SERIES_HPP

// Power series of tensor elements. Formal elements terminate through the
// truncation order of the scalar ring, matrix elements through nilpotency;
// either way the loop stops at the first vanishing power, and a series that
// does not terminate is an error rather than a hang.

#include <functional>
#include <stdexcept>
#include <vector>

#include "supertwist/rational.hpp"
#include "supertwist/tensor.hpp"

namespace supertwist
{

inline constexpr unsigned series_iteration_cap = 200;

/// sum_n c(n) X^n, with X^0 = 1.
template <class Alg, std::size_t K>
TensorElement<Alg, K> apply_series(const TensorElement<Alg, K>& x, const std::function<Rational(unsigned)>& c)
{
    using T = TensorElement<Alg, K>;
    T power = T::one(x.algebra(), x.ring());
    T sum = c(0) * power;
    for (unsigned n = 1;; ++n) {
        if (n > series_iteration_cap) throw std::runtime_error("series: non-terminating expansion");
        power = power * x;
        if (power.is_zero()) break;
        const Rational cn = c(n);
        if (!cn.is_zero()) sum += cn * power;
    }
    return sum;
}

inline Rational factorial(unsigned n)
{
    Rational f(1);
    for (unsigned i = 2; i <= n; ++i) f *= Rational(i);
    return f;
}

/// Bernoulli numbers with B_1 = -1/2, so that x/(e^x - 1) = sum B_n x^n / n!.
inline Rational bernoulli(unsigned n)
{
    static std::vector<Rational> cache{Rational(1)};
    while (cache.size() <= n) {
        const unsigned m = static_cast<unsigned>(cache.size());
        Rational s(0), binom(1);
        for (unsigned k = 0; k < m; ++k) {
            s += binom * cache[k];
            binom = binom * Rational(m + 1 - k) / Rational(k + 1);
        }
        cache.push_back(-s / Rational(m + 1));
    }
    return cache[n];
}

template <class Alg, std::size_t K>
TensorElement<Alg, K> series_exp(const TensorElement<Alg, K>& x)
{
    if (!x.degree_part(0).is_zero()) throw std::domain_error("series_exp: argument has a parameter-free part");
    return apply_series(x, [](unsigned n) { return factorial(n).inverse(); });
}

/// ln(1 + X).
template <class Alg, std::size_t K>
TensorElement<Alg, K> series_log1p(const TensorElement<Alg, K>& x)
{
    if (!x.degree_part(0).is_zero()) throw std::domain_error("series_log1p: argument has a parameter-free part");
    return apply_series(x, [](unsigned n) {
        if (n == 0) return Rational(0);
        return Rational(n % 2 ? 1 : -1, n);
    });
}

/// X / (e^X - 1).
template <class Alg, std::size_t K>
TensorElement<Alg, K> series_bernoulli(const TensorElement<Alg, K>& x)
{
    return apply_series(x, [](unsigned n) { return bernoulli(n) / factorial(n); });
}

namespace detail
{

/// Split A = c (1 + Y) with c the rational constant of the parameter-free part.
template <class Alg, std::size_t K>
std::pair<Rational, TensorElement<Alg, K>> split_constant(const TensorElement<Alg, K>& a, const char* who)
{
    using T = TensorElement<Alg, K>;
    const T one = T::one(a.algebra(), a.ring());
    const T a0 = a.degree_part(0);
    // the parameter-free part must be a multiple of the unit
    Rational c(0);
    for (const auto& t : one.terms())
        for (const auto& u : a0.terms())
            if (u.word == t.word) {
                c = u.coef.constant_term();
                break;
            }
    if (c.is_zero() || a0 != c * one) throw std::domain_error(std::string(who) + ": constant term is not an invertible multiple of 1");
    return {c, c.inverse() * a - one};
}

} // namespace detail

template <class Alg, std::size_t K>
TensorElement<Alg, K> series_inv(const TensorElement<Alg, K>& a)
{
    auto [c, y] = detail::split_constant(a, "series_inv");
    const Rational ci = c.inverse();
    return ci * apply_series(y, [](unsigned n) { return Rational(n % 2 ? -1 : 1); });
}

/// Branch with constant term +sqrt(c).
template <class Alg, std::size_t K>
TensorElement<Alg, K> series_sqrt(const TensorElement<Alg, K>& a)
{
    auto [c, y] = detail::split_constant(a, "series_sqrt");
    Rational root;
    if (!c.sqrt_exact(root) || root.sign() < 0) throw std::domain_error("series_sqrt: constant term has no rational square root");
    // binomial(1/2, n)
    return root * apply_series(y, [](unsigned n) {
               Rational b(1);
               for (unsigned k = 0; k < n; ++k) b = b * (Rational(1, 2) - Rational(k)) / Rational(k + 1);
               return b;
           });
}

} // namespace supertwist

#endif
