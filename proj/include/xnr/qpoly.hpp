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

#ifndef XNR_QPOLY_HPP
#define XNR_QPOLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "xnr/finite_field.hpp"
#include "xnr/polynomial.hpp"

namespace xnr {

/**
 * @brief Linearized polynomial sum_i c_i x^{q^i} over a finite field containing GF(q).
 *
 * Coefficients are normalized: the last one is nonzero and the zero polynomial has none. Under composition
 * these form a (noncommutative) ring with identity x.
 */
class QPolynomial {
   public:
    QPolynomial(FieldPtr field, std::uint64_t q, std::vector<Elem> coeffs = {});

    static QPolynomial identity(FieldPtr field, std::uint64_t q);
    /// c * x^{q^i}
    static QPolynomial monomial(FieldPtr field, std::uint64_t q, Elem c, std::size_t i);
    /// T_n(x) = x + x^q + ... + x^{q^{n-1}}
    static QPolynomial trace(FieldPtr field, std::uint64_t q, std::uint32_t n);

    const FieldPtr& field() const noexcept { return field_; }
    std::uint64_t q() const noexcept { return q_; }
    const std::vector<Elem>& coeffs() const noexcept { return c_; }
    Elem operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : Elem{}; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// l such that the degree is q^l; -1 for zero.
    long qdeg() const noexcept { return static_cast<long>(c_.size()) - 1; }
    /// Ordinary degree q^l (0 for the zero polynomial).
    std::uint64_t degree() const;
    bool is_separable() const noexcept { return !c_.empty() && !c_[0].is_zero(); }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == Field::one(); }
    /// Dense univariate expansion.
    Poly to_poly() const;

    bool operator==(const QPolynomial& o) const { return q_ == o.q_ && field_ == o.field_ && c_ == o.c_; }

   private:
    FieldPtr field_;
    std::uint64_t q_;
    std::vector<Elem> c_;
};

/// Sparse bivariate polynomial; exponents are kept exact (no reduction) so identities can be checked formally.
class BivariatePoly {
   public:
    using Key = std::pair<std::uint64_t, std::uint64_t>;  // (x exponent, y exponent)

    explicit BivariatePoly(FieldPtr field) : field_(std::move(field)) {}

    const FieldPtr& field() const noexcept { return field_; }
    const std::map<Key, Elem>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Elem coeff(std::uint64_t i, std::uint64_t j) const;
    void add_term(std::uint64_t i, std::uint64_t j, Elem c);

    BivariatePoly operator+(const BivariatePoly& o) const;
    BivariatePoly operator-(const BivariatePoly& o) const;
    BivariatePoly operator*(const BivariatePoly& o) const;
    /// Raises to the p^k-th power termwise (exact in characteristic p); `q` must be a power of p.
    BivariatePoly frob_pow(std::uint64_t q, std::uint64_t k) const;
    bool operator==(const BivariatePoly& o) const { return field_ == o.field_ && terms_ == o.terms_; }

    /// x^{i} * P(y) for a q-polynomial P
    static BivariatePoly from_qpoly_y(const QPolynomial& P, std::uint64_t x_exp = 0);
    /// y^{j} * P(x)
    static BivariatePoly from_qpoly_x(const QPolynomial& P, std::uint64_t y_exp = 0);

   private:
    FieldPtr field_;
    std::map<Key, Elem> terms_;
};

Elem qp_eval(const QPolynomial& P, Elem e);
/// Evaluates P at an element of an extension field of P's coefficient field.
Elem qp_eval(const QPolynomial& P, const Embedding& emb, Elem e);
QPolynomial qp_add(const QPolynomial& a, const QPolynomial& b);
QPolynomial qp_sub(const QPolynomial& a, const QPolynomial& b);
QPolynomial qp_scale(const QPolynomial& a, Elem s);
/// P o Q. Throws ValidationError on mismatched fields or q.
QPolynomial qp_compose(const QPolynomial& P, const QPolynomial& Q);
/// Unique (Q, R) with f = Q o g + R and deg R < deg g. Throws DomainError for g = 0.
std::pair<QPolynomial, QPolynomial> qp_divide(const QPolynomial& f, const QPolynomial& g);

/// Unique (B, R) with f = a o B + R and deg R < deg a.
std::pair<QPolynomial, QPolynomial> qp_left_divide(const QPolynomial& f, const QPolynomial& a);

/// All GF(q)-linear combinations of the given elements, in a fixed enumeration order (duplicates kept).
std::vector<Elem> fq_span(const Field& F, std::uint64_t q, const std::vector<Elem>& basis);
/// Elements of the subfield GF(q), zero first.
std::vector<Elem> subfield_elements(const Field& F, std::uint64_t q);
/// prod_{b in span}(x - b), checked to be a q-polynomial. Throws ValidationError on a dependent basis.
QPolynomial qp_from_subspace(const FieldPtr& F, std::uint64_t q, const std::vector<Elem>& basis);
/// Roots of P in its coefficient field, by exhaustive search.
std::vector<Elem> qp_roots(const QPolynomial& P);

/// Greedy basis (increasing packed value) of the kernel of T_n on GF(q^n).
std::vector<Elem> trace_kernel_basis(const FieldPtr& F, std::uint64_t q, std::uint32_t n);

struct TraceSplit {
    QPolynomial g;    // q-degree n-1-s
    QPolynomial g_s;  // q-degree s, g_s o g = T_n
};
/// Factors T_n = g_s o g with g the subspace polynomial of `choice` (n-1-s elements of ker T_n).
TraceSplit trace_split(const FieldPtr& F, std::uint64_t q, std::uint32_t n, std::uint32_t s,
                       const std::vector<Elem>& choice);
/// trace_split on the first n-1-s elements of trace_kernel_basis.
TraceSplit trace_split_default(const FieldPtr& F, std::uint64_t q, std::uint32_t n, std::uint32_t s);

/// Checks 1 <= n/2 <= r <= n-1 with gcd(n, r) = 1 (r >= ceil(n/2)); throws ValidationError otherwise.
void check_nr(std::uint32_t n, std::uint32_t r);
/// f_r(x) = T_n(x^{1+q^r}) mod (x^{q^n} - x).
Poly f_r_poly(const FieldPtr& F, std::uint64_t q, std::uint32_t n, std::uint32_t r);

struct QUDecomposition {
    QPolynomial Q;  // remainder of x^{q^r} modulo g_s under composition
    QPolynomial U;  // Q^{q^{n-r}} - x = U o g_s
    std::uint32_t u = 0;  // deg U = q^u
    Poly h;         // h^{q^{n-r}} = U(x^{q^n + q^{n-r}})
};
/// Builds (Q, U, u, h) for g_s and verifies both identities symbolically; ConsistencyError on failure.
QUDecomposition qu_decompose(const QPolynomial& g_s, std::uint32_t n, std::uint32_t r);

struct GIdentity {
    BivariatePoly G;
    QPolynomial R_s;
    std::vector<QPolynomial> G_chain;  // G_1 .. G_{s+1}
};
/// Builds G(x,y) and R_s with G^q - G = x^{q^n} g_s(y) - y R_s(x)^{q^{n-s}}, verified by full expansion.
GIdentity g_identity(const QPolynomial& g_s, std::uint32_t n);

/// "y^4 + a^18*y^2 + a*y" (integer exponents).
std::string to_string(const QPolynomial& P, const std::string& var = "y");
/// Parses sums of terms `c*v^E`, `c*v^{q^i}`, `c*v^q`, `v`; E must be a power of q.
QPolynomial parse_qpoly(const FieldPtr& F, std::uint64_t q, std::string_view text);

}  // namespace xnr

#endif
