#pragma once

// Exact Gauss-Jordan elimination over Q and Q(zeta_N).

#include <cstddef>
#include <utility>
#include <vector>

#include "pcring/cyclotomic.hpp"

namespace pcring {

template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
    static Rational zero_like(const Rational&) { return Rational(0); }
    static Rational one_like(const Rational&) { return Rational(1); }
    static bool is_zero(const Rational& x) { return sgn(x) == 0; }
    static Rational inverse(const Rational& x) { return 1 / x; }
};

template <>
struct FieldTraits<CycloNum> {
    static CycloNum zero_like(const CycloNum& x) { return CycloNum::zero(x.order()); }
    static CycloNum one_like(const CycloNum& x) { return CycloNum::one(x.order()); }
    static bool is_zero(const CycloNum& x) { return x.is_zero(); }
    static CycloNum inverse(const CycloNum& x) { return x.inverse(); }
};

template <class F>
using Matrix = std::vector<std::vector<F>>;

/// Reduces m to reduced row echelon form in place; returns the pivot columns.
template <class F>
std::vector<std::size_t> reduce_rows(Matrix<F>& m)
{
    using T = FieldTraits<F>;
    std::vector<std::size_t> pivots;
    if (m.empty()) {
        return pivots;
    }
    const std::size_t cols = m.front().size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && T::is_zero(m[p][col])) {
            ++p;
        }
        if (p == m.size()) {
            continue;
        }
        std::swap(m[row], m[p]);
        const F inv = T::inverse(m[row][col]);
        for (std::size_t j = col; j < cols; ++j) {
            if (!T::is_zero(m[row][j])) {
                m[row][j] = m[row][j] * inv;
            }
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || T::is_zero(m[i][col])) {
                continue;
            }
            const F factor = m[i][col];
            for (std::size_t j = col; j < cols; ++j) {
                if (!T::is_zero(m[row][j])) {
                    m[i][j] -= factor * m[row][j];
                }
            }
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(row);
    return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m)
{
    return reduce_rows(m).size();
}

/// Basis of {x : m x = 0}; `sample` supplies the field (conductor) for zeros.
template <class F>
Matrix<F> nullspace(Matrix<F> m, std::size_t cols, const F& sample)
{
    using T = FieldTraits<F>;
    const auto pivots = reduce_rows(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) {
        is_pivot[c] = true;
    }
    Matrix<F> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        std::vector<F> v(cols, T::zero_like(sample));
        v[free] = T::one_like(sample);
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            v[pivots[r]] = -m[r][free];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// True iff the row spaces of a and b coincide.
template <class F>
bool same_span(const Matrix<F>& a, const Matrix<F>& b)
{
    Matrix<F> both = a;
    both.insert(both.end(), b.begin(), b.end());
    const std::size_t ra = rank(a);
    return ra == rank(b) && ra == rank(std::move(both));
}

template <class F>
bool in_span(const Matrix<F>& rows, const std::vector<F>& v)
{
    Matrix<F> ext = rows;
    ext.push_back(v);
    return rank(rows) == rank(std::move(ext));
}

} // namespace pcring
