#ifndef SUPERTWIST_RATIONAL_HPP
#define SUPERTWIST_RATIONAL_HPP

#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace supertwist
{

/// Exact rational number with 64-bit numerator and denominator.
///
/// Every operation is overflow-checked and throws std::overflow_error instead
/// of wrapping, so a computation either returns the exact value or fails
/// loudly. The representation is canonical: gcd(num, den) == 1 and den > 0.
class Rational
{
public:
    constexpr Rational() noexcept = default;
    constexpr Rational(std::int64_t n) noexcept : m_num(n) {}
    Rational(std::int64_t n, std::int64_t d) { assign(n, d); }

    std::int64_t num() const noexcept { return m_num; }
    std::int64_t den() const noexcept { return m_den; }

    bool is_zero() const noexcept { return m_num == 0; }
    bool is_one() const noexcept { return m_num == 1 && m_den == 1; }
    bool is_integer() const noexcept { return m_den == 1; }
    int sign() const noexcept { return (m_num > 0) - (m_num < 0); }

    Rational operator-() const
    {
        if (m_num == INT64_MIN) throw std::overflow_error("Rational: negation overflow");
        Rational r;
        r.m_num = -m_num;
        r.m_den = m_den;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b)
    {
        if (a.m_den == b.m_den) return from_wide(static_cast<__int128>(a.m_num) + b.m_num, a.m_den);
        const std::int64_t g = std::gcd(a.m_den, b.m_den);
        const __int128 n = static_cast<__int128>(a.m_num) * (b.m_den / g)
                           + static_cast<__int128>(b.m_num) * (a.m_den / g);
        const __int128 d = static_cast<__int128>(a.m_den / g) * b.m_den;
        return from_wide(n, d);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b)
    {
        if (a.m_num == 0 || b.m_num == 0) return Rational{};
        const std::int64_t g1 = std::gcd(a.m_num, b.m_den);
        const std::int64_t g2 = std::gcd(b.m_num, a.m_den);
        const __int128 n = static_cast<__int128>(a.m_num / g1) * (b.m_num / g2);
        const __int128 d = static_cast<__int128>(a.m_den / g2) * (b.m_den / g1);
        return from_wide(n, d);
    }
    friend Rational operator/(const Rational& a, const Rational& b)
    {
        if (b.m_num == 0) throw std::domain_error("Rational: division by zero");
        return a * b.inverse();
    }

    Rational inverse() const
    {
        if (m_num == 0) throw std::domain_error("Rational: inverse of zero");
        Rational r;
        if (m_num < 0) {
            if (m_num == INT64_MIN) throw std::overflow_error("Rational: inverse overflow");
            r.m_num = -m_den;
            r.m_den = -m_num;
        } else {
            r.m_num = m_den;
            r.m_den = m_num;
        }
        return r;
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) noexcept
    {
        return a.m_num == b.m_num && a.m_den == b.m_den;
    }
    friend bool operator<(const Rational& a, const Rational& b) noexcept
    {
        return static_cast<__int128>(a.m_num) * b.m_den < static_cast<__int128>(b.m_num) * a.m_den;
    }

    /// Exact square root, if the value is the square of a rational.
    bool sqrt_exact(Rational& out) const
    {
        if (m_num < 0) return false;
        std::int64_t rn = 0, rd = 0;
        if (!isqrt(m_num, rn) || !isqrt(m_den, rd)) return false;
        out = Rational(rn, rd);
        return true;
    }

    std::string str() const
    {
        return m_den == 1 ? std::to_string(m_num) : std::to_string(m_num) + "/" + std::to_string(m_den);
    }

    std::size_t hash() const noexcept
    {
        return std::hash<std::int64_t>{}(m_num) * 31u + std::hash<std::int64_t>{}(m_den);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    std::int64_t m_num = 0;
    std::int64_t m_den = 1;

    void assign(__int128 n, __int128 d)
    {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 a = n < 0 ? -n : n, b = d;
        while (b != 0) {
            const __int128 t = a % b;
            a = b;
            b = t;
        }
        if (a > 1) {
            n /= a;
            d /= a;
        }
        if (n > INT64_MAX || n < -INT64_MAX || d > INT64_MAX)
            throw std::overflow_error("Rational: 64-bit overflow");
        m_num = static_cast<std::int64_t>(n);
        m_den = static_cast<std::int64_t>(d);
    }

    static Rational from_wide(__int128 n, __int128 d)
    {
        Rational r;
        r.assign(n, d);
        return r;
    }

    static bool isqrt(std::int64_t v, std::int64_t& out)
    {
        std::int64_t r = static_cast<std::int64_t>(__builtin_sqrtl(static_cast<long double>(v)));
        while (r > 0 && static_cast<__int128>(r) * r > v) --r;
        while (static_cast<__int128>(r + 1) * (r + 1) <= v) ++r;
        out = r;
        return static_cast<__int128>(r) * r == v;
    }
};

inline Rational pow(Rational base, unsigned e)
{
    Rational r{1};
    while (e) {
        if (e & 1u) r *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return r;
}

} // namespace supertwist

#endif
