#ifndef SUPERTWIST_MATRIX_ALGEBRA_HPP
#define SUPERTWIST_MATRIX_ALGEBRA_HPP

// End(V) for the fundamental representation V of a SuperAlgebra, in the basis
// of matrix units E_ij (key i*d + j, parity p(i) + p(j)). Tensor elements over
// this backend are sparse graded matrices on V^{(x)k}.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "supertwist/linalg.hpp"
#include "supertwist/superalgebra.hpp"
#include "supertwist/tensor.hpp"

namespace supertwist
{

class MatrixAlgebra
{
public:
    using Key = std::uint32_t;
    using Comb = LinComb<Key>;

    explicit MatrixAlgebra(std::shared_ptr<const SuperAlgebra> g) : m_g(std::move(g)), m_d(m_g->rep_dim())
    {
        m_products.resize(m_d * m_d * m_d);
        for (std::size_t i = 0; i < m_d; ++i)
            for (std::size_t j = 0; j < m_d; ++j)
                for (std::size_t l = 0; l < m_d; ++l)
                    m_products[(i * m_d + j) * m_d + l] = {{static_cast<Key>(i * m_d + l), Rational(1)}};
        for (std::size_t i = 0; i < m_d; ++i) m_unit.emplace_back(static_cast<Key>(i * m_d + i), Rational(1));
    }

    const SuperAlgebra& lie() const noexcept { return *m_g; }
    std::size_t dim() const noexcept { return m_d; }

    Key unit_key(std::size_t i, std::size_t j) const { return static_cast<Key>(i * m_d + j); }
    std::size_t row(Key k) const { return k / m_d; }
    std::size_t col(Key k) const { return k % m_d; }

    Parity parity(Key k) const { return m_g->rep_parity(row(k)) + m_g->rep_parity(col(k)); }
    const Comb& unit() const noexcept { return m_unit; }

    /// E_ij E_kl = delta_jk E_il; mismatched pairs never reach here because
    /// of the join index, but are answered with the empty combination anyway.
    const Comb& multiply(Key a, Key b) const
    {
        if (col(a) != row(b)) return m_empty;
        return m_products[(row(a) * m_d + col(a)) * m_d + col(b)];
    }
    std::uint32_t join_left(Key k) const { return static_cast<std::uint32_t>(row(k)); }
    std::uint32_t join_right(Key k) const { return static_cast<std::uint32_t>(col(k)); }

    bool key_less(Key a, Key b) const { return a < b; }
    std::string key_to_string(Key k) const { return "E" + std::to_string(row(k) + 1) + "," + std::to_string(col(k) + 1); }

    Comb from_matrix(const QMatrix& m) const
    {
        Comb c;
        for (std::size_t i = 0; i < m_d; ++i)
            for (std::size_t j = 0; j < m_d; ++j)
                if (!m(i, j).is_zero()) c.emplace_back(unit_key(i, j), m(i, j));
        return c;
    }
    Comb element(const LieElement& x) const { return from_matrix(m_g->image(x)); }

private:
    std::shared_ptr<const SuperAlgebra> m_g;
    std::size_t m_d;
    std::vector<Comb> m_products;
    Comb m_unit;
    Comb m_empty;
};

} // namespace supertwist

#endif
