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

#include "xnr/qpoly.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

#include "xnr/error.hpp"

namespace xnr {

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

void require_same(const QPolynomial& a, const QPolynomial& b) {
    if (a.field() != b.field() || a.q() != b.q())
        throw ValidationError("q-polynomials over different fields or with different q");
}

}  // namespace

QPolynomial::QPolynomial(FieldPtr field, std::uint64_t q, std::vector<Elem> coeffs)
    : field_(std::move(field)), q_(q), c_(std::move(coeffs)) {
    const std::uint32_t e = field_->q_exponent(q);
    if (field_->degree() % e != 0)
        throw ValidationError("GF(" + std::to_string(q) + ") is not a subfield of GF(" +
                              std::to_string(field_->order()) + ")");
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

QPolynomial QPolynomial::identity(FieldPtr field, std::uint64_t q) {
    return QPolynomial(std::move(field), q, {Field::one()});
}

QPolynomial QPolynomial::monomial(FieldPtr field, std::uint64_t q, Elem c, std::size_t i) {
    std::vector<Elem> v(i + 1, Elem{});
    v[i] = c;
    return QPolynomial(std::move(field), q, std::move(v));
}

QPolynomial QPolynomial::trace(FieldPtr field, std::uint64_t q, std::uint32_t n) {
    return QPolynomial(std::move(field), q, std::vector<Elem>(n, Field::one()));
}

std::uint64_t QPolynomial::degree() const { return c_.empty() ? 0 : ipow(q_, c_.size() - 1); }

Poly QPolynomial::to_poly() const {
    Poly r;
    if (c_.empty()) return r;
    r.c.assign(degree() + 1, Elem{});
    for (std::size_t i = 0; i < c_.size(); ++i) r.c[ipow(q_, i)] = c_[i];
    r.trim();
    return r;
}

Elem BivariatePoly::coeff(std::uint64_t i, std::uint64_t j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Elem{} : it->second;
}

void BivariatePoly::add_term(std::uint64_t i, std::uint64_t j, Elem c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace({i, j}, c);
    if (!fresh) {
        it->second = field_->add(it->second, c);
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BivariatePoly BivariatePoly::operator+(const BivariatePoly& o) const {
    BivariatePoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
    return r;
}

BivariatePoly BivariatePoly::operator-(const BivariatePoly& o) const {
    BivariatePoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, field_->neg(c));
    return r;
}

BivariatePoly BivariatePoly::operator*(const BivariatePoly& o) const {
    BivariatePoly r(field_);
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_) r.add_term(k1.first + k2.first, k1.second + k2.second, field_->mul(c1, c2));
    return r;
}

BivariatePoly BivariatePoly::frob_pow(std::uint64_t q, std::uint64_t k) const {
    const std::uint64_t e = ipow(q, k);
    BivariatePoly r(field_);
    for (const auto& [key, c] : terms_)
        r.add_term(key.first * e, key.second * e, field_->frob(c, q, static_cast<std::int64_t>(k)));
    return r;
}

BivariatePoly BivariatePoly::from_qpoly_y(const QPolynomial& P, std::uint64_t x_exp) {
    BivariatePoly r(P.field());
    for (std::size_t i = 0; i < P.coeffs().size(); ++i) r.add_term(x_exp, ipow(P.q(), i), P.coeffs()[i]);
    return r;
}

BivariatePoly BivariatePoly::from_qpoly_x(const QPolynomial& P, std::uint64_t y_exp) {
    BivariatePoly r(P.field());
    for (std::size_t i = 0; i < P.coeffs().size(); ++i) r.add_term(ipow(P.q(), i), y_exp, P.coeffs()[i]);
    return r;
}

Elem qp_eval(const QPolynomial& P, Elem e) {
    const Field& F = *P.field();
    if (!F.contains(e)) throw ValidationError("element does not belong to the polynomial's field");
    Elem acc{}, t = e;
    for (std::size_t i = 0; i < P.coeffs().size(); ++i) {
        acc = F.add(acc, F.mul(P.coeffs()[i], t));
        t = F.frob(t, P.q(), 1);
    }
    return acc;
}

Elem qp_eval(const QPolynomial& P, const Embedding& emb, Elem e) {
    if (emb.small() != P.field()) throw ValidationError("embedding does not start at the polynomial's field");
    const Field& B = *emb.big();
    if (!B.contains(e)) throw ValidationError("element does not belong to the extension field");
    Elem acc{}, t = e;
    for (std::size_t i = 0; i < P.coeffs().size(); ++i) {
        acc = B.add(acc, B.mul(emb(P.coeffs()[i]), t));
        t = B.frob(t, P.q(), 1);
    }
    return acc;
}

QPolynomial qp_add(const QPolynomial& a, const QPolynomial& b) {
    require_same(a, b);
    std::vector<Elem> c(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.field()->add(a[i], b[i]);
    return QPolynomial(a.field(), a.q(), std::move(c));
}

QPolynomial qp_sub(const QPolynomial& a, const QPolynomial& b) {
    require_same(a, b);
    std::vector<Elem> c(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.field()->sub(a[i], b[i]);
    return QPolynomial(a.field(), a.q(), std::move(c));
}

QPolynomial qp_scale(const QPolynomial& a, Elem s) {
    std::vector<Elem> c = a.coeffs();
    for (auto& x : c) x = a.field()->mul(x, s);
    return QPolynomial(a.field(), a.q(), std::move(c));
}

QPolynomial qp_compose(const QPolynomial& P, const QPolynomial& Q) {
    require_same(P, Q);
    if (P.is_zero() || Q.is_zero()) return QPolynomial(P.field(), P.q());
    const Field& F = *P.field();
    std::vector<Elem> r(P.coeffs().size() + Q.coeffs().size() - 1);
    // (sum p_i x^{q^i}) o (sum q_j x^{q^j}) = sum_{i,j} p_i q_j^{q^i} x^{q^{i+j}}
    for (std::size_t i = 0; i < P.coeffs().size(); ++i) {
        if (P[i].is_zero()) continue;
        for (std::size_t j = 0; j < Q.coeffs().size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(P[i], F.frob(Q[j], P.q(), static_cast<std::int64_t>(i))));
    }
    return QPolynomial(P.field(), P.q(), std::move(r));
}

std::pair<QPolynomial, QPolynomial> qp_divide(const QPolynomial& f, const QPolynomial& g) {
    require_same(f, g);
    if (g.is_zero()) throw DomainError("q-polynomial division by zero");
    const Field& F = *f.field();
    const long lg = g.qdeg();
    std::vector<Elem> rem = f.coeffs();
    std::vector<Elem> quo(rem.size() >= g.coeffs().size() ? rem.size() - g.coeffs().size() + 1 : 0);
    for (long t = static_cast<long>(rem.size()) - 1; t >= lg; --t) {
        const Elem c = rem[static_cast<std::size_t>(t)];
        if (c.is_zero()) continue;
        const std::int64_t k = t - lg;
        const Elem coef = F.div(c, F.frob(g.coeffs().back(), f.q(), k));
        quo[static_cast<std::size_t>(k)] = coef;
        for (long j = 0; j <= lg; ++j) {
            auto& slot = rem[static_cast<std::size_t>(j + k)];
            slot = F.sub(slot, F.mul(coef, F.frob(g[static_cast<std::size_t>(j)], f.q(), k)));
        }
    }
    return {QPolynomial(f.field(), f.q(), std::move(quo)), QPolynomial(f.field(), f.q(), std::move(rem))};
}

std::pair<QPolynomial, QPolynomial> qp_left_divide(const QPolynomial& f, const QPolynomial& a) {
    require_same(f, a);
    if (a.is_zero()) throw DomainError("q-polynomial division by zero");
    const Field& F = *f.field();
    const long la = a.qdeg();
    std::vector<Elem> rem = f.coeffs();
    std::vector<Elem> quo(rem.size() >= a.coeffs().size() ? rem.size() - a.coeffs().size() + 1 : 0);
    for (long t = static_cast<long>(rem.size()) - 1; t >= la; --t) {
        const Elem c = rem[static_cast<std::size_t>(t)];
        if (c.is_zero()) continue;
        const long k = t - la;
        // a_l * b^{q^l} must equal c, so b is a q^l-th root
        const Elem b = F.frob(F.div(c, a.coeffs().back()), f.q(), -la);
        quo[static_cast<std::size_t>(k)] = b;
        for (long i = 0; i <= la; ++i) {
            auto& slot = rem[static_cast<std::size_t>(i + k)];
            slot = F.sub(slot, F.mul(a[static_cast<std::size_t>(i)], F.frob(b, f.q(), i)));
        }
    }
    return {QPolynomial(f.field(), f.q(), std::move(quo)), QPolynomial(f.field(), f.q(), std::move(rem))};
}

std::vector<Elem> subfield_elements(const Field& F, std::uint64_t q) {
    const std::uint32_t e = F.q_exponent(q);
    if (F.degree() % e != 0) throw ValidationError("GF(q) is not a subfield");
    const std::int64_t step = (static_cast<std::int64_t>(F.order()) - 1) / static_cast<std::int64_t>(q - 1);
    std::vector<Elem> out{Field::zero()};
    for (std::uint64_t j = 0; j + 1 < q; ++j) out.push_back(F.exp(step * static_cast<std::int64_t>(j)));
    return out;
}

std::vector<Elem> fq_span(const Field& F, std::uint64_t q, const std::vector<Elem>& basis) {
    const std::vector<Elem> scalars = subfield_elements(F, q);
    std::vector<Elem> span{Field::zero()};
    for (Elem b : basis) {
        std::vector<Elem> next;
        next.reserve(span.size() * scalars.size());
        for (Elem c : scalars) {
            const Elem cb = F.mul(c, b);
            for (Elem s : span) next.push_back(F.add(s, cb));
        }
        span = std::move(next);
    }
    return span;
}

QPolynomial qp_from_subspace(const FieldPtr& F, std::uint64_t q, const std::vector<Elem>& basis) {
    for (Elem b : basis)
        if (!F->contains(b)) throw ValidationError("basis element outside the field");
    std::vector<Elem> span = fq_span(*F, q, basis);
    std::set<Elem> distinct(span.begin(), span.end());
    if (distinct.size() != span.size()) throw ValidationError("basis elements are GF(q)-linearly dependent");
    Poly prod = Poly::constant(Field::one());
    for (Elem b : span) prod = poly::mul(*F, prod, Poly(std::vector<Elem>{F->neg(b), Field::one()}));
    std::vector<Elem> c;
    std::uint64_t e = 1;
    for (std::size_t i = 0; i < prod.c.size(); ++i) {
        if (i == e) {
            c.push_back(prod.c[i]);
            e *= q;
        } else if (!prod.c[i].is_zero()) {
            throw ConsistencyError("subspace polynomial has a coefficient at the non-q-power x^" + std::to_string(i));
        }
    }
    return QPolynomial(F, q, std::move(c));
}

std::vector<Elem> qp_roots(const QPolynomial& P) {
    const Field& F = *P.field();
    std::vector<Elem> roots;
    for (std::uint32_t v = 0; v < F.order(); ++v)
        if (qp_eval(P, Elem{v}).is_zero()) roots.push_back(Elem{v});
    return roots;
}

std::vector<Elem> trace_kernel_basis(const FieldPtr& F, std::uint64_t q, std::uint32_t n) {
    std::vector<Elem> basis;
    std::set<Elem> span{Field::zero()};
    const std::vector<Elem> scalars = subfield_elements(*F, q);
    for (std::uint32_t v = 1; v < F->order(); ++v) {
        const Elem e{v};
        if (!F->rel_trace(e, q, n).is_zero() || span.count(e)) continue;
        basis.push_back(e);
        std::set<Elem> next;
        for (Elem s : span)
            for (Elem c : scalars) next.insert(F->add(s, F->mul(c, e)));
        span = std::move(next);
        if (basis.size() + 1 == n) break;
    }
    return basis;
}

TraceSplit trace_split(const FieldPtr& F, std::uint64_t q, std::uint32_t n, std::uint32_t s,
                       const std::vector<Elem>& choice) {
    if (s < 1 || s > n - 1) throw ValidationError("s must lie in 1..n-1");
    if (choice.size() != n - 1 - s)
        throw ValidationError("need exactly n-1-s = " + std::to_string(n - 1 - s) + " kernel elements");
    for (Elem e : choice)
        if (!F->rel_trace(e, q, n).is_zero())
            throw ValidationError("element " + F->to_string(e) + " is not in the kernel of the trace");
    QPolynomial g = qp_from_subspace(F, q, choice);
    const QPolynomial T = QPolynomial::trace(F, q, n);
    auto [g_s, rem] = qp_divide(T, g);
    if (!rem.is_zero()) throw ConsistencyError("subspace polynomial does not right-divide T_n");
    if (!g_s.is_monic() || g_s.qdeg() != static_cast<long>(s))
        throw ConsistencyError("quotient is not monic of degree q^s");
    if (qp_roots(g_s).size() != g_s.degree()) throw ConsistencyError("g_s does not split over GF(q^n)");
    return {std::move(g), std::move(g_s)};
}

TraceSplit trace_split_default(const FieldPtr& F, std::uint64_t q, std::uint32_t n, std::uint32_t s) {
    if (s < 1 || s > n - 1) throw ValidationError("s must lie in 1..n-1");
    std::vector<Elem> basis = trace_kernel_basis(F, q, n);
    basis.resize(n - 1 - s);
    return trace_split(F, q, n, s, basis);
}

void check_nr(std::uint32_t n, std::uint32_t r) {
    if (n < 2) throw ValidationError("n must be at least 2");
    if (2 * r < n || r > n - 1)
        throw ValidationError("r must lie in ceil(n/2)..n-1 (n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")");
    if (std::gcd(n, r) != 1)
        throw ValidationError("gcd(n, r) = " + std::to_string(std::gcd(n, r)) + " != 1");
}

Poly f_r_poly(const FieldPtr& F, std::uint64_t q, std::uint32_t n, std::uint32_t r) {
    check_nr(n, r);
    const std::uint64_t qn = ipow(q, n);
    std::vector<std::uint64_t> exps;
    for (std::uint32_t i = 0; i < n; ++i) {
        std::uint64_t e = (1 + ipow(q, r)) * ipow(q, i);
        if (e >= qn) e = (e - 1) % (qn - 1) + 1;  // x^{q^n} = x on GF(q^n)
        exps.push_back(e);
    }
    Poly f;
    f.c.assign(*std::max_element(exps.begin(), exps.end()) + 1, Elem{});
    for (auto e : exps) f.c[e] = F->add(f.c[e], Field::one());
    f.trim();
    return f;
}

QUDecomposition qu_decompose(const QPolynomial& g_s, std::uint32_t n, std::uint32_t r) {
    if (!g_s.is_separable()) throw ValidationError("g_s must be separable");
    const FieldPtr& F = g_s.field();
    const std::uint64_t q = g_s.q();
    auto [quo, Q] = qp_divide(QPolynomial::monomial(F, q, Field::one(), r), g_s);
    (void)quo;
    // Q^{q^{n-r}} - x = U o g_s
    const QPolynomial lhs =
        qp_sub(qp_compose(QPolynomial::monomial(F, q, Field::one(), n - r), Q), QPolynomial::identity(F, q));
    auto [U, rem] = qp_divide(lhs, g_s);
    if (!rem.is_zero() || U.is_zero())
        throw ConsistencyError("g_s does not divide Q^{q^{n-r}} - y; g_s is not a valid trace factor");

    QUDecomposition out{Q, U, static_cast<std::uint32_t>(U.qdeg()), Poly{}};
    const std::uint64_t qr = ipow(q, r);
    std::uint64_t top = 0;
    for (std::size_t i = 0; i < U.coeffs().size(); ++i) top = (qr + 1) * ipow(q, i);
    out.h.c.assign(top + 1, Elem{});
    for (std::size_t i = 0; i < U.coeffs().size(); ++i)
        out.h.c[(qr + 1) * ipow(q, i)] = F->frob(U[i], q, r);
    out.h.trim();

    // h(x)^{q^{n-r}} == U(x^{q^n + q^{n-r}}), compared as sparse polynomials
    BivariatePoly hp(F);
    for (std::size_t e = 0; e < out.h.c.size(); ++e) hp.add_term(e, 0, out.h.c[e]);
    BivariatePoly Ux(F);
    const std::uint64_t w = ipow(q, n) + ipow(q, n - r);
    for (std::size_t i = 0; i < U.coeffs().size(); ++i) Ux.add_term(w * ipow(q, i), 0, U[i]);
    if (!(hp.frob_pow(q, n - r) == Ux)) throw ConsistencyError("h^{q^{n-r}} != U(x^{q^n+q^{n-r}})");
    return out;
}

GIdentity g_identity(const QPolynomial& g_s, std::uint32_t n) {
    if (!g_s.is_separable() || !g_s.is_monic()) throw ValidationError("g_s must be monic and separable");
    const FieldPtr& F = g_s.field();
    const std::uint64_t q = g_s.q();
    const std::uint32_t s = static_cast<std::uint32_t>(g_s.qdeg());
    if (s < 1 || s > n) throw ValidationError("g_s must have q-degree in 1..n");

    GIdentity out{BivariatePoly(F), QPolynomial(F, q), {}};
    const QPolynomial xq = QPolynomial::monomial(F, q, Field::one(), 1);
    out.G_chain.push_back(QPolynomial::identity(F, q));
    for (std::uint32_t i = 2; i <= s + 1; ++i) {
        const Elem a = F->frob(g_s[s - i + 1], q, static_cast<std::int64_t>(n - s + i - 1));
        out.G_chain.push_back(
            qp_add(qp_compose(xq, out.G_chain.back()), QPolynomial::monomial(F, q, a, 0)));
    }
    if (!(out.G_chain.back() == g_s)) throw ConsistencyError("G_{s+1} != g_s");

    for (std::uint32_t i = 1; i <= s; ++i)
        out.G = out.G + BivariatePoly::from_qpoly_y(out.G_chain[s - i], ipow(q, n - i));

    std::vector<Elem> rc(s + 1);
    rc[0] = Field::one();
    for (std::uint32_t k = 1; k <= s; ++k) rc[k] = F->frob(g_s[s - k], q, k);
    out.R_s = QPolynomial(F, q, std::move(rc));

    const BivariatePoly lhs = out.G.frob_pow(q, 1) - out.G;
    QPolynomial Rpow = qp_compose(QPolynomial::monomial(F, q, Field::one(), n - s), out.R_s);
    const BivariatePoly rhs =
        BivariatePoly::from_qpoly_y(g_s, ipow(q, n)) - BivariatePoly::from_qpoly_x(Rpow, 1);
    if (!(lhs == rhs)) throw ConsistencyError("G^q - G != x^{q^n} g_s(y) - y R_s(x)^{q^{n-s}}");
    return out;
}

std::string to_string(const QPolynomial& P, const std::string& var) {
    if (P.is_zero()) return "0";
    const Field& F = *P.field();
    std::string out;
    for (std::size_t i = P.coeffs().size(); i-- > 0;) {
        const Elem c = P[i];
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (c != Field::one()) out += F.to_string(c) + "*";
        out += var;
        const std::uint64_t e = ipow(P.q(), i);
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

QPolynomial parse_qpoly(const FieldPtr& F, std::uint64_t q, std::string_view text) {
    auto fail = [&](const std::string& why) {
        return ValidationError("cannot parse q-polynomial '" + std::string(text) + "': " + why);
    };
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw fail("empty");
    if (s == "0") return QPolynomial(F, q);

    // split into signed terms at top-level '+'/'-'
    std::vector<std::pair<bool, std::string>> terms;
    int depth = 0;
    std::string cur;
    bool neg = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char ch = s[i];
        if (ch == '{' || ch == '[') ++depth;
        if (ch == '}' || ch == ']') --depth;
        const bool exponent_sign = i > 0 && s[i - 1] == '^';
        if (depth == 0 && (ch == '+' || ch == '-') && !exponent_sign) {
            if (!cur.empty()) terms.emplace_back(neg, cur);
            cur.clear();
            neg = ch == '-';
            continue;
        }
        cur += ch;
    }
    if (!cur.empty()) terms.emplace_back(neg, cur);

    std::vector<Elem> coeffs;
    for (auto& [negative, t] : terms) {
        // locate the variable: last alphabetic char other than the coefficient symbol 'a' and 'q'
        std::size_t vpos = std::string::npos;
        for (std::size_t i = 0; i < t.size(); ++i)
            if (std::isalpha(static_cast<unsigned char>(t[i])) && t[i] != 'a' && t[i] != 'q') {
                vpos = i;
                break;
            }
        if (vpos == std::string::npos) throw fail("term '" + t + "' has no variable");
        std::string coef = t.substr(0, vpos);
        if (!coef.empty() && coef.back() == '*') coef.pop_back();
        Elem c = coef.empty() ? Field::one() : F->parse(coef);
        if (negative) c = F->neg(c);
        std::string ex = t.substr(vpos + 1);
        std::size_t qi = 0;
        if (!ex.empty()) {
            if (ex[0] != '^') throw fail("bad exponent in '" + t + "'");
            ex = ex.substr(1);
            if (ex.size() >= 2 && ex.front() == '{' && ex.back() == '}') ex = ex.substr(1, ex.size() - 2);
            if (ex == "q") {
                qi = 1;
            } else if (ex.starts_with("q^")) {
                std::string k = ex.substr(2);
                if (k.size() >= 2 && k.front() == '{' && k.back() == '}') k = k.substr(1, k.size() - 2);
                auto [p, ec] = std::from_chars(k.data(), k.data() + k.size(), qi);
                if (ec != std::errc{} || p != k.data() + k.size()) throw fail("bad exponent in '" + t + "'");
            } else {
                std::uint64_t E = 0;
                auto [p, ec] = std::from_chars(ex.data(), ex.data() + ex.size(), E);
                if (ec != std::errc{} || p != ex.data() + ex.size()) throw fail("bad exponent in '" + t + "'");
                std::uint64_t pw = 1;
                while (pw < E) {
                    pw *= q;
                    ++qi;
                }
                if (pw != E) throw fail("exponent " + std::to_string(E) + " is not a power of q");
            }
        }
        if (coeffs.size() <= qi) coeffs.resize(qi + 1);
        coeffs[qi] = F->add(coeffs[qi], c);
    }
    return QPolynomial(F, q, std::move(coeffs));
}

}  // namespace xnr
