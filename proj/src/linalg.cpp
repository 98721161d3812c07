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

#include "xnr/linalg.hpp"

#include "xnr/error.hpp"

namespace xnr {

void Matrix::append_row(const std::vector<Elem>& r) {
    if (r.size() != cols_) throw ValidationError("row length mismatch");
    a_.insert(a_.end(), r.begin(), r.end());
    ++rows_;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw ValidationError("matrix shape mismatch");
    const Field& F = *field_;
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Elem a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) = F.add(r(i, j), F.mul(a, o(k, j)));
        }
    return r;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
    Matrix r(field_, 0, cols_);
    for (auto i : idx) r.append_row(row_vector(i));
    return r;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& idx) const {
    Matrix r(field_, rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) r(i, j) = (*this)(i, idx[j]);
    return r;
}

bool Matrix::is_zero() const noexcept {
    for (auto e : a_)
        if (!e.is_zero()) return false;
    return true;
}

namespace linalg {

Echelon rref(const Matrix& m) {
    const Field& F = *m.field();
    Matrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && a(piv, c).is_zero()) ++piv;
        if (piv == a.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
        const Elem inv = F.inv(a(r, c));
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = F.mul(a(r, j), inv);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            const Elem f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = F.sub(a(i, j), F.mul(f, a(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    std::vector<std::size_t> keep(r);
    for (std::size_t i = 0; i < r; ++i) keep[i] = i;
    return {a.select_rows(keep), pivots};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix nullspace(const Matrix& m) {
    const Field& F = *m.field();
    const Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    Matrix out(m.field(), 0, m.cols());
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Elem> v(m.cols(), Elem{});
        v[free] = Field::one();
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = F.neg(e.rref(i, free));
        out.append_row(v);
    }
    return out;
}

Matrix left_nullspace(const Matrix& m) { return nullspace(m.transpose()); }

std::vector<std::size_t> independent_rows(const Matrix& m) {
    const Field& F = *m.field();
    // incremental elimination against the rows accepted so far
    std::vector<std::vector<Elem>> basis;
    std::vector<std::size_t> pivot_col;
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<Elem> v = m.row_vector(i);
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const Elem f = v[pivot_col[b]];
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < v.size(); ++j) v[j] = F.sub(v[j], F.mul(f, basis[b][j]));
        }
        std::size_t p = 0;
        while (p < v.size() && v[p].is_zero()) ++p;
        if (p == v.size()) continue;
        const Elem inv = F.inv(v[p]);
        for (auto& x : v) x = F.mul(x, inv);
        basis.push_back(std::move(v));
        pivot_col.push_back(p);
        chosen.push_back(i);
    }
    return chosen;
}

bool same_row_space(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) return false;
    const Echelon ea = rref(a), eb = rref(b);
    return ea.rref == eb.rref;
}

}  // namespace linalg
}  // namespace xnr
