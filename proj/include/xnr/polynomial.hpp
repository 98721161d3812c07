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

#ifndef XNR_POLYNOMIAL_HPP
#define XNR_POLYNOMIAL_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "xnr/finite_field.hpp"

namespace xnr {

/// Dense univariate polynomial; c[i] is the coefficient of x^i. Normalized polynomials have a nonzero top
/// coefficient, the zero polynomial is empty. The field is passed to every operation.
struct Poly {
    std::vector<Elem> c;

    Poly() = default;
    explicit Poly(std::vector<Elem> coeffs) : c(std::move(coeffs)) { trim(); }
    static Poly monomial(Elem coeff, std::size_t deg);
    static Poly constant(Elem coeff) { return coeff.is_zero() ? Poly{} : Poly(std::vector<Elem>{coeff}); }

    bool is_zero() const noexcept { return c.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c.size()) - 1; }
    Elem lead() const noexcept { return c.empty() ? Elem{} : c.back(); }
    Elem operator[](std::size_t i) const noexcept { return i < c.size() ? c[i] : Elem{}; }
    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    bool operator==(const Poly&) const = default;
};

namespace poly {

Poly add(const Field& F, const Poly& a, const Poly& b);
Poly sub(const Field& F, const Poly& a, const Poly& b);
Poly neg(const Field& F, const Poly& a);
Poly scale(const Field& F, const Poly& a, Elem s);
/// a * s * x^k
Poly scale_shift(const Field& F, const Poly& a, Elem s, std::size_t k);
Poly mul(const Field& F, const Poly& a, const Poly& b);
/// Euclidean division; throws DomainError when b is zero.
std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b);
Elem eval(const Field& F, const Poly& a, Elem x);
/// Coefficientwise image under a field embedding.
Poly map(const Embedding& emb, const Poly& a);
/// Coefficientwise Frobenius c -> c^{q^k}.
Poly frob(const Field& F, const Poly& a, std::uint64_t q, std::int64_t k);

/// Res(a, b) for a of degree >= 1 with a monic; equals prod_{a(r)=0} b(r).
Elem resultant_monic(const Field& F, const Poly& a, const Poly& b);

/// Newton divided differences over distinct nodes: the Newton-form coefficients of the interpolant.
std::vector<Elem> newton_coefficients(const Field& F, const std::vector<Elem>& nodes, std::vector<Elem> values);
/// Degree and leading coefficient of the interpolant of (nodes, values); degree -1 for the zero polynomial.
std::pair<long, Elem> interpolated_degree(const Field& F, const std::vector<Elem>& nodes,
                                          const std::vector<Elem>& values);
/// Full interpolating polynomial in the monomial basis.
Poly interpolate(const Field& F, const std::vector<Elem>& nodes, const std::vector<Elem>& values);

}  // namespace poly

}  // namespace xnr

#endif
