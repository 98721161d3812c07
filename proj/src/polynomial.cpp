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

#include "xnr/polynomial.hpp"

#include <algorithm>

#include "xnr/error.hpp"

namespace xnr {

Poly Poly::monomial(Elem coeff, std::size_t deg) {
    if (coeff.is_zero()) return Poly{};
    Poly r;
    r.c.assign(deg + 1, Elem{});
    r.c[deg] = coeff;
    return r;
}

namespace poly {

Poly add(const Field& F, const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = F.add(a[i], b[i]);
    r.trim();
    return r;
}

Poly sub(const Field& F, const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = F.sub(a[i], b[i]);
    r.trim();
    return r;
}

Poly neg(const Field& F, const Poly& a) {
    Poly r = a;
    for (auto& x : r.c) x = F.neg(x);
    return r;
}

Poly scale(const Field& F, const Poly& a, Elem s) { return scale_shift(F, a, s, 0); }

Poly scale_shift(const Field& F, const Poly& a, Elem s, std::size_t k) {
    if (s.is_zero() || a.is_zero()) return Poly{};
    Poly r;
    r.c.assign(a.c.size() + k, Elem{});
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i + k] = F.mul(a.c[i], s);
    return r;
}

Poly mul(const Field& F, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly{};
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Elem{});
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
    }
    r.trim();
    return r;
}

std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    Poly rem = a;
    if (rem.degree() < b.degree()) return {Poly{}, rem};
    Poly quo;
    quo.c.assign(static_cast<std::size_t>(rem.degree() - b.degree() + 1), Elem{});
    const Elem inv_lead = F.inv(b.lead());
    const std::size_t db = static_cast<std::size_t>(b.degree());
    for (long top = rem.degree(); top >= b.degree(); --top) {
        const Elem c = rem.c[static_cast<std::size_t>(top)];
        if (c.is_zero()) continue;
        const Elem f = F.mul(c, inv_lead);
        const std::size_t shift = static_cast<std::size_t>(top) - db;
        quo.c[shift] = f;
        for (std::size_t i = 0; i <= db; ++i) rem.c[shift + i] = F.sub(rem.c[shift + i], F.mul(f, b.c[i]));
    }
    rem.trim();
    quo.trim();
    return {quo, rem};
}

Elem eval(const Field& F, const Poly& a, Elem x) {
    Elem acc{};
    for (std::size_t i = a.c.size(); i-- > 0;) acc = F.add(F.mul(acc, x), a.c[i]);
    return acc;
}

Poly map(const Embedding& emb, const Poly& a) {
    Poly r;
    r.c.resize(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = emb(a.c[i]);
    return r;
}

Poly frob(const Field& F, const Poly& a, std::uint64_t q, std::int64_t k) {
    Poly r = a;
    for (auto& x : r.c) x = F.frob(x, q, k);
    return r;
}

Elem resultant_monic(const Field& F, const Poly& a_in, const Poly& b_in) {
    if (a_in.degree() < 1 || a_in.lead() != Field::one())
        throw DomainError("resultant_monic needs a monic polynomial of positive degree");
    Poly a = a_in;
    Poly b = b_in;
    Elem acc = Field::one();
    const Elem minus_one = F.neg(Field::one());
    for (;;) {
        b = divmod(F, b, a).second;
        if (b.is_zero()) return Field::zero();
        const long A = a.degree();
        if (b.degree() == 0) return F.mul(acc, F.pow(b.c[0], A));
        // prod_{a(r)=0} b(r) = (-1)^{A B} lc(b)^A prod_{b(s)=0} a(s)
        const long B = b.degree();
        const Elem lb = b.lead();
        if ((A * B) % 2 == 1) acc = F.mul(acc, minus_one);
        acc = F.mul(acc, F.pow(lb, A));
        Poly monic_b = scale(F, b, F.inv(lb));
        b = std::move(a);
        a = std::move(monic_b);
    }
}

std::vector<Elem> newton_coefficients(const Field& F, const std::vector<Elem>& nodes, std::vector<Elem> v) {
    const std::size_t n = nodes.size();
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            v[i] = F.div(F.sub(v[i], v[i - 1]), F.sub(nodes[i], nodes[i - j]));
            if (i == j) break;
        }
    return v;
}

std::pair<long, Elem> interpolated_degree(const Field& F, const std::vector<Elem>& nodes,
                                          const std::vector<Elem>& values) {
    const std::vector<Elem> c = newton_coefficients(F, nodes, values);
    for (std::size_t i = c.size(); i-- > 0;)
        if (!c[i].is_zero()) return {static_cast<long>(i), c[i]};
    return {-1, Elem{}};
}

Poly interpolate(const Field& F, const std::vector<Elem>& nodes, const std::vector<Elem>& values) {
    const std::vector<Elem> c = newton_coefficients(F, nodes, values);
    Poly p;
    for (std::size_t j = c.size(); j-- > 0;) {
        // p <- p * (x - x_j) + c_j
        Poly shifted = scale_shift(F, p, Field::one(), 1);
        Poly lin = scale(F, p, F.neg(nodes[j]));
        p = add(F, add(F, shifted, lin), Poly::constant(c[j]));
    }
    return p;
}

}  // namespace poly
}  // namespace xnr
