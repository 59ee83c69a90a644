#ifndef SUPERTWIST_LINALG_HPP
#define SUPERTWIST_LINALG_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "supertwist/rational.hpp"

namespace supertwist
{

/// Small dense matrix of rationals, row-major.
class QMatrix
{
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : m_rows(rows), m_cols(cols), m_data(rows * cols) {}

    static QMatrix identity(std::size_t n)
    {
        QMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static QMatrix unit(std::size_t n, std::size_t i, std::size_t j)
    {
        QMatrix m(n, n);
        m(i, j) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return m_rows; }
    std::size_t cols() const noexcept { return m_cols; }

    Rational& operator()(std::size_t i, std::size_t j) { return m_data[i * m_cols + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return m_data[i * m_cols + j]; }
    const std::vector<Rational>& data() const noexcept { return m_data; }

    bool is_zero() const
    {
        for (const auto& x : m_data)
            if (!x.is_zero()) return false;
        return true;
    }

    friend QMatrix operator+(QMatrix a, const QMatrix& b)
    {
        check_same(a, b);
        for (std::size_t i = 0; i < a.m_data.size(); ++i) a.m_data[i] += b.m_data[i];
        return a;
    }
    friend QMatrix operator-(QMatrix a, const QMatrix& b)
    {
        check_same(a, b);
        for (std::size_t i = 0; i < a.m_data.size(); ++i) a.m_data[i] -= b.m_data[i];
        return a;
    }
    friend QMatrix operator*(const Rational& c, QMatrix a)
    {
        for (auto& x : a.m_data) x *= c;
        return a;
    }
    friend QMatrix operator*(const QMatrix& a, const QMatrix& b)
    {
        if (a.m_cols != b.m_rows) throw std::invalid_argument("QMatrix: shape mismatch in product");
        QMatrix r(a.m_rows, b.m_cols);
        for (std::size_t i = 0; i < a.m_rows; ++i)
            for (std::size_t k = 0; k < a.m_cols; ++k) {
                const Rational& x = a(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < b.m_cols; ++j)
                    if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
            }
        return r;
    }
    friend bool operator==(const QMatrix& a, const QMatrix& b)
    {
        return a.m_rows == b.m_rows && a.m_cols == b.m_cols && a.m_data == b.m_data;
    }

    std::string str() const
    {
        std::string s;
        for (std::size_t i = 0; i < m_rows; ++i) {
            s += "[";
            for (std::size_t j = 0; j < m_cols; ++j) s += (j ? " " : "") + (*this)(i, j).str();
            s += "]\n";
        }
        return s;
    }

private:
    std::size_t m_rows = 0, m_cols = 0;
    std::vector<Rational> m_data;

    static void check_same(const QMatrix& a, const QMatrix& b)
    {
        if (a.m_rows != b.m_rows || a.m_cols != b.m_cols) throw std::invalid_argument("QMatrix: shape mismatch");
    }
};

/// Reduced row echelon form in place, pivoting only on the first `ncols`
/// columns (trailing columns ride along); returns the pivot columns.
inline std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& rows, std::size_t ncols)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        const Rational inv = rows[r][c].inverse();
        for (auto& x : rows[r]) x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            const Rational f = rows[i][c];
            for (std::size_t j = c; j < rows[r].size(); ++j)
                if (!rows[r][j].is_zero()) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

/// Basis of {x : A x = 0} for A given by rows of length ncols.
inline std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> rows, std::size_t ncols)
{
    const auto pivots = rref(rows, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(ncols);
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Coordinates of vectors in a fixed linearly independent family.
///
/// Precomputes an echelon form of the family once so that each query is a
/// short back-substitution plus an exact membership check.
class CoordinateSolver
{
public:
    CoordinateSolver() = default;
    CoordinateSolver(const std::vector<std::vector<Rational>>& family, std::size_t length)
        : m_count(family.size()), m_length(length)
    {
        // Augment with an identity block to track the combination of family vectors.
        std::vector<std::vector<Rational>> rows;
        rows.reserve(family.size());
        for (std::size_t i = 0; i < family.size(); ++i) {
            if (family[i].size() != length) throw std::invalid_argument("CoordinateSolver: ragged family");
            std::vector<Rational> row(length + family.size());
            for (std::size_t j = 0; j < length; ++j) row[j] = family[i][j];
            row[length + i] = 1;
            rows.push_back(std::move(row));
        }
        const auto piv = rref(rows, length);
        if (piv.size() != family.size()) throw std::invalid_argument("CoordinateSolver: family is linearly dependent");
        m_pivots = piv;
        m_rows = std::move(rows);
    }

    /// Coordinates of v, or nullopt if v is outside the span.
    std::optional<std::vector<Rational>> solve(const std::vector<Rational>& v) const
    {
        std::vector<Rational> coords(m_count);
        std::vector<Rational> residual = v;
        for (std::size_t i = 0; i < m_pivots.size(); ++i) {
            const Rational c = residual[m_pivots[i]];
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < m_length; ++j)
                if (!m_rows[i][j].is_zero()) residual[j] -= c * m_rows[i][j];
            for (std::size_t k = 0; k < m_count; ++k)
                if (!m_rows[i][m_length + k].is_zero()) coords[k] += c * m_rows[i][m_length + k];
        }
        for (const auto& x : residual)
            if (!x.is_zero()) return std::nullopt;
        return coords;
    }

private:
    std::size_t m_count = 0, m_length = 0;
    std::vector<std::size_t> m_pivots;
    std::vector<std::vector<Rational>> m_rows;
};

} // namespace supertwist

#endif
