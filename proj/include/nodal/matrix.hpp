/*
   Copyright 2026 The nodalres Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include "nodal/finite_field.hpp"
#include "nodal/number_field.hpp"
#include "nodal/rational.hpp"

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace nodal {

/// Dense row-major matrix over one exact scalar kind.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T()) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    explicit Matrix(const std::vector<std::vector<T>>& rows) : rows_(rows.size()), cols_(rows.empty() ? 0 : rows[0].size()) {
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw ValidationError("ragged matrix rows");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::vector<T> row_vector(std::size_t i) const { return {data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_}; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap(data_[a * cols_ + j], data_[b * cols_ + j]);
    }
    void append_row(const std::vector<T>& r) {
        if (rows_ == 0 && data_.empty()) cols_ = r.size();
        if (r.size() != cols_) throw ValidationError("row length mismatch");
        data_.insert(data_.end(), r.begin(), r.end());
        ++rows_;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

template <class T>
Matrix<T> transpose(const Matrix<T>& m) {
    Matrix<T> t(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
    return t;
}

template <class T>
struct Echelon {
    Matrix<T> reduced;                 ///< reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;   ///< pivot column of each nonzero row
};

/// Gauss-Jordan elimination: first nonzero pivot in each column, pivot rows
/// normalized to 1. Deterministic.
template <class T>
Echelon<T> rref(Matrix<T> m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(p, r);
        const T inv = inverse(m(r, c));
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            const T f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!is_zero(m(r, j))) m(i, j) = m(i, j) - f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix<T> reduced(r, m.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) reduced(i, j) = m(i, j);
    return {std::move(reduced), std::move(pivots)};
}

/// Rank by forward Gaussian elimination (no back substitution).
template <class T>
std::size_t rank_gauss(Matrix<T> m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(p, r);
        const T inv = inverse(m(r, c));
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (is_zero(m(i, c))) continue;
            const T f = m(i, c) * inv;
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!is_zero(m(r, j))) m(i, j) = m(i, j) - f * m(r, j);
        }
        ++r;
    }
    return r;
}

/// Basis of the right kernel {x : m x = 0}, one vector per free column, with
/// a 1 in that free column and zeros in the other free columns.
template <class T>
std::vector<std::vector<T>> nullspace(const Matrix<T>& m, const T& zero = T(), const T& one = T(1)) {
    const auto e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<T> v(m.cols(), zero);
        v[f] = one;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Exact rank. Over Q and over number fields this clears denominators row by
/// row and runs fraction-free (Bareiss) elimination on Z[a]; the result is
/// identical to rank_gauss.
std::size_t rank(const Matrix<Rational>& m);
std::size_t rank(const Matrix<FieldElement>& m);
std::size_t rank(const Matrix<FfElement>& m);

/// Entrywise image in F_p[x]/(m mod p). Throws UnsuitablePrime when p
/// divides a denominator.
Matrix<FfElement> reduce_matrix(const Matrix<FieldElement>& m, const FiniteFieldPtr& target);

}  // namespace nodal
