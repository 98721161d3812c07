/*
   Copyright 2026 The xnr-codes Authors

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

#ifndef XNR_LINALG_HPP
#define XNR_LINALG_HPP

#include <cstddef>
#include <vector>

#include "xnr/finite_field.hpp"

namespace xnr {

/// Dense row-major matrix over a finite field.
class Matrix {
   public:
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols) {}

    const FieldPtr& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Elem& operator()(std::size_t i, std::size_t j) noexcept { return a_[i * cols_ + j]; }
    Elem operator()(std::size_t i, std::size_t j) const noexcept { return a_[i * cols_ + j]; }
    const Elem* row(std::size_t i) const noexcept { return a_.data() + i * cols_; }
    std::vector<Elem> row_vector(std::size_t i) const { return {row(i), row(i) + cols_}; }
    void append_row(const std::vector<Elem>& r);
    bool operator==(const Matrix& o) const { return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    Matrix select_rows(const std::vector<std::size_t>& idx) const;
    Matrix select_cols(const std::vector<std::size_t>& idx) const;
    bool is_zero() const noexcept;

   private:
    FieldPtr field_;
    std::size_t rows_, cols_;
    std::vector<Elem> a_;
};

namespace linalg {

struct Echelon {
    Matrix rref;                     // nonzero rows only
    std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Reduced row echelon form with zero rows removed.
Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Basis (as rows) of {x : m x^T = 0}.
Matrix nullspace(const Matrix& m);
/// Basis (as rows) of {v : v m = 0}.
Matrix left_nullspace(const Matrix& m);
/// Indices of a maximal independent subset of rows, chosen greedily in order.
std::vector<std::size_t> independent_rows(const Matrix& m);
bool same_row_space(const Matrix& a, const Matrix& b);

}  // namespace linalg

}  // namespace xnr

#endif
