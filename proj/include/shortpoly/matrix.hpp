#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include <shortpoly/field.hpp>

namespace shortpoly {

/// Dense row-major matrix over an exact field.
template <class F>
class Matrix {
public:
    using field_type = F;
    using value_type = typename F::value_type;

    Matrix() = default;
    Matrix(F field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero())
    {
    }

    static Matrix from_rows(F field, const std::vector<std::vector<value_type>>& rows)
    {
        std::size_t cols = rows.empty() ? 0 : rows.front().size();
        Matrix m(std::move(field), rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) {
                throw std::invalid_argument("ragged matrix rows");
            }
            for (std::size_t j = 0; j < cols; ++j) {
                m(i, j) = rows[i][j];
            }
        }
        return m;
    }

    static Matrix identity(F field, std::size_t n)
    {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = m.field_.one();
        }
        return m;
    }

    const F& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    value_type& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const value_type& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<value_type> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const value_type> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    std::vector<value_type> column(std::size_t j) const
    {
        std::vector<value_type> out;
        out.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            out.push_back((*this)(i, j));
        }
        return out;
    }

    Matrix transpose() const
    {
        Matrix t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                t(j, i) = (*this)(i, j);
            }
        }
        return t;
    }

    Matrix select_columns(std::span<const std::size_t> cols) const
    {
        Matrix out(field_, rows_, cols.size());
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t k = 0; k < cols.size(); ++k) {
                out(i, k) = (*this)(i, cols[k]);
            }
        }
        return out;
    }

    bool column_is_zero(std::size_t j) const
    {
        for (std::size_t i = 0; i < rows_; ++i) {
            if (!field_.is_zero((*this)(i, j))) {
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
    }

private:
    F field_{};
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<value_type> data_;
};

} // namespace shortpoly
