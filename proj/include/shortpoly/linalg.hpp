#pragma once

// Exact Gaussian elimination.  Pivots are the first nonzero entry met when
// scanning columns left to right (or in a caller-supplied column order) and
// rows top to bottom, so every result is deterministic.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include <shortpoly/matrix.hpp>

namespace shortpoly {

/// Reduced row echelon form.  `reduced` keeps only the nonzero rows, so
/// reduced.rows() is the rank; pivots[i] is the pivot column of row i.
template <class F>
struct RowEchelon {
    Matrix<F> reduced;
    std::vector<std::size_t> pivots;

    std::size_t rank() const { return pivots.size(); }
};

/// RREF with pivot columns searched in `column_order`.
template <class F>
RowEchelon<F> row_reduce_in_order(const Matrix<F>& m, std::span<const std::size_t> column_order)
{
    const F& f = m.field();
    Matrix<F> w = m;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col : column_order) {
        if (r == w.rows()) {
            break;
        }
        std::size_t p = r;
        while (p < w.rows() && f.is_zero(w(p, col))) {
            ++p;
        }
        if (p == w.rows()) {
            continue;
        }
        if (p != r) {
            for (std::size_t j = 0; j < w.cols(); ++j) {
                std::swap(w(p, j), w(r, j));
            }
        }
        auto inv = f.inv(w(r, col));
        for (std::size_t j = 0; j < w.cols(); ++j) {
            w(r, j) = f.mul(w(r, j), inv);
        }
        for (std::size_t i = 0; i < w.rows(); ++i) {
            if (i == r || f.is_zero(w(i, col))) {
                continue;
            }
            auto factor = w(i, col);
            for (std::size_t j = 0; j < w.cols(); ++j) {
                if (!f.is_zero(w(r, j))) {
                    f.sub_mul(w(i, j), factor, w(r, j));
                }
            }
        }
        pivots.push_back(col);
        ++r;
    }
    Matrix<F> reduced(f, r, w.cols());
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < w.cols(); ++j) {
            reduced(i, j) = w(i, j);
        }
    }
    return {std::move(reduced), std::move(pivots)};
}

template <class F>
RowEchelon<F> row_reduce(const Matrix<F>& m)
{
    std::vector<std::size_t> order(m.cols());
    std::iota(order.begin(), order.end(), std::size_t{0});
    return row_reduce_in_order(m, order);
}

template <class F>
std::size_t rank(const Matrix<F>& m)
{
    return row_reduce(m).rank();
}

/// Basis of {v : M v = 0}, one vector per free column, in column order.
template <class F>
std::vector<std::vector<typename F::value_type>> right_kernel_basis(const Matrix<F>& m)
{
    const F& f = m.field();
    auto ech = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : ech.pivots) {
        is_pivot[p] = true;
    }
    std::vector<std::vector<typename F::value_type>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) {
            continue;
        }
        std::vector<typename F::value_type> v(m.cols(), f.zero());
        v[free] = f.one();
        for (std::size_t i = 0; i < ech.rank(); ++i) {
            v[ech.pivots[i]] = f.neg(ech.reduced(i, free));
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Basis of {c : c M = 0}.  Empty iff rank(M) equals the row count.
template <class F>
std::vector<std::vector<typename F::value_type>> left_kernel_basis(const Matrix<F>& m)
{
    return right_kernel_basis(m.transpose());
}

/// The row vector c M.
template <class F>
std::vector<typename F::value_type> row_times(std::span<const typename F::value_type> c, const Matrix<F>& m)
{
    const F& f = m.field();
    std::vector<typename F::value_type> out(m.cols(), f.zero());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (f.is_zero(c[i])) {
            continue;
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!f.is_zero(m(i, j))) {
                out[j] = f.add(out[j], f.mul(c[i], m(i, j)));
            }
        }
    }
    return out;
}

/// Some c with c M nonzero and supported inside `support`, or nullopt.
/// Such c exists iff deleting the support columns drops the rank.
template <class F>
std::optional<std::vector<typename F::value_type>> solve_in_row_space(const Matrix<F>& m,
                                                                      std::span<const std::size_t> support)
{
    std::vector<bool> inside(m.cols(), false);
    for (auto j : support) {
        if (j >= m.cols()) {
            throw std::out_of_range("support column out of range");
        }
        inside[j] = true;
    }
    std::vector<std::size_t> complement;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (!inside[j]) {
            complement.push_back(j);
        }
    }
    const F& f = m.field();
    for (auto& c : left_kernel_basis(m.select_columns(complement))) {
        auto image = row_times<F>(c, m);
        bool nonzero = std::any_of(image.begin(), image.end(), [&](const auto& v) { return !f.is_zero(v); });
        if (nonzero) {
            return c;
        }
    }
    return std::nullopt;
}

} // namespace shortpoly
