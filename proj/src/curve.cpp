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

#include "xnr/curve.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "xnr/error.hpp"

namespace xnr {
namespace {

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

std::string u64(std::uint64_t v) { return std::to_string(v); }

}  // namespace

// ---------------------------------------------------------------------------------------------------------------
// Curve

Curve::Curve(std::uint32_t n, std::uint32_t r, QPolynomial g_s, Model model)
    : field_(g_s.field()), q_(g_s.q()), n_(n), r_(r), s_(0), g_s_(std::move(g_s)), model_(model) {}

CurvePtr Curve::create(std::uint32_t n, std::uint32_t r, QPolynomial g_s, Model model) {
    check_nr(n, r);
    const FieldPtr F = g_s.field();
    const std::uint64_t q = g_s.q();
    F->q_exponent(q);
    if (ipow(q, n) != F->order())
        throw ValidationError("the field has " + u64(F->order()) + " elements, expected q^n = " + u64(ipow(q, n)));
    if (g_s.is_zero()) throw ValidationError("g_s is zero");
    const long s = g_s.qdeg();
    if (s < 1 || s > static_cast<long>(n) - 1) throw ValidationError("g_s must have q-degree s in 1..n-1");
    if (!g_s.is_monic()) throw ValidationError("g_s is not monic");
    if (!g_s.is_separable()) throw ValidationError("g_s is not separable");
    const QPolynomial T = QPolynomial::trace(F, q, n);
    if (!qp_left_divide(T, g_s).second.is_zero())
        throw ValidationError("g_s is not a left composition factor of T_n");
    if (qp_roots(g_s).size() != g_s.degree()) throw ValidationError("g_s does not split over GF(q^n)");

    std::shared_ptr<Curve> c(new Curve(n, r, std::move(g_s), model));
    c->s_ = static_cast<std::uint32_t>(s);
    c->full_ = c->g_s_ == T;
    c->qs_ = ipow(q, c->s_);
    c->hi_ = ipow(q, n) + ipow(q, n - r);
    c->lo_ = ipow(q, n - r) + 1;
    c->genus_ = ipow(q, r) * (c->qs_ - 1) / 2;
    if (model == Model::TraceForm) {
        c->rhs_ = f_r_poly(F, q, n, r);
    } else {
        const Elem one = Field::one(), minus = F->neg(one);
        c->rhs_.c.assign(c->hi_ + 1, Elem{});
        c->rhs_.c[c->hi_] = model == Model::HighMinusLow ? one : minus;
        c->rhs_.c[c->lo_] = model == Model::HighMinusLow ? minus : one;
    }
    c->ypole_ = static_cast<std::uint64_t>(c->rhs_.degree());
    c->gs_poly_ = c->g_s_.to_poly();
    c->points_ = kernels::enumerate_points(*F, c->gs_poly_, c->rhs_);
    if (c->points_.size() != ipow(q, n + c->s_))
        throw ConsistencyError("found " + u64(c->points_.size()) + " affine points, expected q^{n+s} = " +
                               u64(ipow(q, n + c->s_)));
    return c;
}

CurvePtr Curve::full(const FieldPtr& F, std::uint64_t q, std::uint32_t n, std::uint32_t r, Model model) {
    return create(n, r, QPolynomial::trace(F, q, n), model);
}

CurvePtr Curve::subcover(const FieldPtr& F, std::uint64_t q, std::uint32_t n, std::uint32_t r, std::uint32_t s,
                         Model model) {
    check_nr(n, r);
    return create(n, r, trace_split_default(F, q, n, s).g_s, model);
}

const Embedding* Curve::extension(std::uint64_t min_order) const {
    if (field_->order() >= min_order) return nullptr;
    std::uint32_t k = 1;
    std::uint64_t order = field_->order();
    while (order < min_order) {
        ++k;
        order *= field_->order();
        if (order > Field::max_order)
            throw BudgetError("no supported extension field has " + u64(min_order) + " elements");
    }
    std::lock_guard<std::mutex> lock(ext_mu_);
    auto& slot = ext_[k];
    if (!slot) slot = std::make_unique<Embedding>(field_, k);
    return slot.get();
}

std::string Curve::describe() const {
    std::ostringstream os;
    os << to_string(g_s_, "y") << " = ";
    const std::string hi = "x^" + u64(hi_), lo = "x^" + u64(lo_);
    switch (model_) {
        case Model::HighMinusLow: os << hi << " - " << lo; break;
        case Model::LowMinusHigh: os << lo << " - " << hi; break;
        case Model::TraceForm: os << "T_" << n_ << "(x^" << ipow(q_, r_) + 1 << ")"; break;
    }
    return os.str();
}

// ---------------------------------------------------------------------------------------------------------------
// CurveFunction

CurveFunction CurveFunction::constant(CurvePtr curve, Elem c) {
    CurveFunction f(std::move(curve));
    if (!c.is_zero()) f.c_.push_back(Poly::constant(c));
    return f;
}

CurveFunction CurveFunction::x(CurvePtr curve) { return monomial(std::move(curve), Field::one(), 1, 0); }
CurveFunction CurveFunction::y(CurvePtr curve) { return monomial(std::move(curve), Field::one(), 0, 1); }

CurveFunction CurveFunction::monomial(CurvePtr curve, Elem c, std::uint64_t i, std::uint64_t j) {
    std::vector<Poly> cs(j + 1);
    cs[j] = Poly::monomial(c, i);
    return from_coeffs(std::move(curve), std::move(cs));
}

CurveFunction CurveFunction::from_bivariate(CurvePtr curve, const BivariatePoly& f) {
    std::vector<Poly> cs;
    const Field& F = *curve->field();
    for (const auto& [key, c] : f.terms()) {
        const auto [i, j] = key;
        if (cs.size() <= j) cs.resize(j + 1);
        if (cs[j].c.size() <= i) cs[j].c.resize(i + 1);
        cs[j].c[i] = F.add(cs[j].c[i], c);
    }
    for (auto& p : cs) p.trim();
    return from_coeffs(std::move(curve), std::move(cs));
}

CurveFunction CurveFunction::from_coeffs(CurvePtr curve, std::vector<Poly> c) {
    CurveFunction f(std::move(curve));
    f.c_ = std::move(c);
    f.reduce();
    return f;
}

void CurveFunction::reduce() {
    const Curve& C = *curve_;
    const Field& F = *C.field();
    const std::size_t qs = C.x_pole();
    const Poly& rhs = C.rhs();
    for (std::size_t j = c_.size(); j-- > qs;) {
        Poly P = std::move(c_[j]);
        c_[j] = Poly{};
        if (P.is_zero()) continue;
        // y^j = y^{j-q^s} (rhs(x) - sum_{i<s} a_i y^{q^i})
        Poly& base = c_[j - qs];
        for (std::size_t e = 0; e < rhs.c.size(); ++e)
            if (!rhs.c[e].is_zero()) base = poly::add(F, base, poly::scale_shift(F, P, rhs.c[e], e));
        for (std::uint32_t i = 0; i < C.s(); ++i) {
            const Elem a = C.g_s()[i];
            if (a.is_zero()) continue;
            Poly& slot = c_[j - qs + ipow(C.q(), i)];
            slot = poly::sub(F, slot, poly::scale(F, P, a));
        }
    }
    if (c_.size() > qs) c_.resize(qs);
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

CurveFunction CurveFunction::operator+(const CurveFunction& o) const {
    const Field& F = *curve_->field();
    CurveFunction r(curve_);
    r.c_.resize(std::max(c_.size(), o.c_.size()));
    for (std::size_t j = 0; j < r.c_.size(); ++j)
        r.c_[j] = poly::add(F, j < c_.size() ? c_[j] : Poly{}, j < o.c_.size() ? o.c_[j] : Poly{});
    while (!r.c_.empty() && r.c_.back().is_zero()) r.c_.pop_back();
    return r;
}

CurveFunction CurveFunction::operator-() const { return scale(curve_->field()->neg(Field::one())); }

CurveFunction CurveFunction::operator-(const CurveFunction& o) const { return *this + (-o); }

CurveFunction CurveFunction::operator*(const CurveFunction& o) const {
    if (is_zero() || o.is_zero()) return CurveFunction(curve_);
    const Field& F = *curve_->field();
    std::vector<Poly> prod(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            prod[i + j] = poly::add(F, prod[i + j], poly::mul(F, c_[i], o.c_[j]));
        }
    }
    return from_coeffs(curve_, std::move(prod));
}

CurveFunction CurveFunction::scale(Elem s) const {
    const Field& F = *curve_->field();
    CurveFunction r(curve_);
    if (s.is_zero()) return r;
    r.c_.reserve(c_.size());
    for (const auto& p : c_) r.c_.push_back(poly::scale(F, p, s));
    return r;
}

CurveFunction CurveFunction::shift_x(std::uint64_t k) const {
    const Field& F = *curve_->field();
    CurveFunction r(curve_);
    r.c_.reserve(c_.size());
    for (const auto& p : c_) r.c_.push_back(poly::scale_shift(F, p, Field::one(), k));
    return r;
}

CurveFunction CurveFunction::pow(std::uint64_t e) const {
    CurveFunction result = constant(curve_, Field::one()), base = *this;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

CurveFunction CurveFunction::negate_y() const {
    const Field& F = *curve_->field();
    CurveFunction r = *this;
    for (std::size_t j = 1; j < r.c_.size(); j += 2) r.c_[j] = poly::neg(F, r.c_[j]);
    return r;
}

Elem CurveFunction::eval(Elem x, Elem y) const {
    const Field& F = *curve_->field();
    Elem acc{};
    for (std::size_t j = c_.size(); j-- > 0;) acc = F.add(F.mul(acc, y), poly::eval(F, c_[j], x));
    return acc;
}

std::vector<Elem> CurveFunction::evaluate(const kernels::PointList& pts) const {
    const Field& F = *curve_->field();
    std::vector<Elem> out(pts.size());
    std::vector<Elem> at_x(c_.size());
    bool have = false;
    Elem cur{};
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto [x, y] = pts[i];
        if (!have || x != cur) {
            for (std::size_t j = 0; j < c_.size(); ++j) at_x[j] = poly::eval(F, c_[j], x);
            cur = x;
            have = true;
        }
        Elem acc{};
        for (std::size_t j = c_.size(); j-- > 0;) acc = F.add(F.mul(acc, y), at_x[j]);
        out[i] = acc;
    }
    return out;
}

std::uint64_t CurveFunction::naive_weight() const {
    std::uint64_t w = 0;
    for (std::size_t j = 0; j < c_.size(); ++j)
        if (!c_[j].is_zero())
            w = std::max<std::uint64_t>(w, static_cast<std::uint64_t>(c_[j].degree()) * curve_->x_pole() +
                                               j * curve_->y_pole());
    return w;
}

std::size_t CurveFunction::top_monomials() const {
    const std::uint64_t w = naive_weight();
    std::size_t count = 0;
    for (std::size_t j = 0; j < c_.size(); ++j)
        if (!c_[j].is_zero() &&
            static_cast<std::uint64_t>(c_[j].degree()) * curve_->x_pole() + j * curve_->y_pole() == w)
            ++count;
    return count;
}

std::string CurveFunction::to_string() const {
    if (c_.empty()) return "0";
    const Field& F = *curve_->field();
    std::string out;
    for (std::size_t j = c_.size(); j-- > 0;) {
        for (std::size_t i = c_[j].c.size(); i-- > 0;) {
            const Elem c = c_[j].c[i];
            if (c.is_zero()) continue;
            std::string mono;
            if (i > 0) mono += i == 1 ? "x" : "x^" + std::to_string(i);
            if (j > 0) mono += (mono.empty() ? "" : "*") + (j == 1 ? std::string("y") : "y^" + std::to_string(j));
            std::string term;
            if (mono.empty())
                term = F.to_string(c);
            else if (c == Field::one())
                term = mono;
            else
                term = F.to_string(c) + "*" + mono;
            out += (out.empty() ? "" : " + ") + term;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------------------------------------------
// Valuation

NormProfile norm_profile(const CurveFunction& f) {
    if (f.is_zero()) throw DomainError("valuation of the zero function");
    const Curve& C = *f.curve();
    const std::uint64_t W = f.naive_weight();
    const Embedding* emb = C.extension(W + 1);
    const Field& E = emb ? *emb->big() : *C.field();

    kernels::NormProblem np;
    np.field = &E;
    np.gs = emb ? poly::map(*emb, C.gs_poly()) : C.gs_poly();
    np.rhs = emb ? poly::map(*emb, C.rhs()) : C.rhs();
    for (const auto& p : f.coeffs()) np.f.push_back(emb ? poly::map(*emb, p) : p);

    std::vector<Elem> nodes(W + 1);
    for (std::uint64_t i = 0; i <= W; ++i) nodes[i] = Elem{static_cast<std::uint32_t>(i)};
    const std::vector<Elem> vals = kernels::norm_values(np, nodes);
    const auto [deg, lead] = poly::interpolated_degree(E, nodes, vals);
    if (deg < 0) throw ConsistencyError("norm of a nonzero function vanished");
    Elem base_lead = lead;
    if (emb) {
        const auto pre = emb->preimage(lead);
        if (!pre) throw ConsistencyError("norm coefficient outside the base field");
        base_lead = *pre;
    }
    return {static_cast<std::uint64_t>(deg), base_lead};
}

std::int64_t valuation(const CurveFunction& f, ValuationMethod method) {
    if (f.is_zero()) throw DomainError("valuation of the zero function");
    if (method == ValuationMethod::Auto && f.top_monomials() == 1)
        return -static_cast<std::int64_t>(f.naive_weight());
    return -static_cast<std::int64_t>(norm_profile(f).degree);
}

Elem leading_ratio(const Curve& C, Elem lead_f, Elem lead_g) {
    const Field& F = *C.field();
    return F.frob(F.div(lead_f, lead_g), C.q(), -static_cast<std::int64_t>(C.s()));
}

// ---------------------------------------------------------------------------------------------------------------
// Z, W, Gamma

std::uint64_t expected_z_pole(const Curve& C, std::uint32_t u) {
    const std::uint64_t q = C.q();
    if (C.s() + u + 1 <= C.r()) return ipow(q, C.r()) + 1;
    return ipow(q, C.s() + u + C.r() - C.n()) * (ipow(q, C.n() - C.r()) + 1);
}

bool has_four_generators(const Curve& C, std::uint32_t u) {
    return C.s() + C.n() == 2 * C.r() + 1 && u + C.r() + 1 == C.n() && C.s() >= 2;
}

ZWGSet build_zwg(const CurvePtr& curve) {
    const Curve& C = *curve;
    if (C.n() < 3) throw ValidationError("Z, W and Gamma need n >= 3 (n = 2 forces 2r = n)");
    if (C.model() == Model::TraceForm) throw ValidationError("Z, W and Gamma are defined on the binomial models only");
    const Field& F = *C.field();
    const std::uint64_t q = C.q();
    QUDecomposition qu = qu_decompose(C.g_s(), C.n(), C.r());

    std::vector<Poly> zc(qu.Q.degree() + 1);
    for (std::size_t i = 0; i < qu.Q.coeffs().size(); ++i) zc[ipow(q, i)] = Poly::constant(qu.Q[i]);
    zc[0] = poly::sub(F, zc[0], qu.h);
    CurveFunction Z = CurveFunction::from_coeffs(curve, std::move(zc));
    if (C.model() == Model::LowMinusHigh) Z = Z.negate_y();

    const std::uint64_t z_pole = static_cast<std::uint64_t>(-valuation(Z));
    if (z_pole != expected_z_pole(C, qu.u))
        throw ConsistencyError("pole order of Z is " + u64(z_pole) + ", expected " + u64(expected_z_pole(C, qu.u)));

    ZWGSet out{qu, Z, z_pole, std::nullopt, std::nullopt, 0, 0, Elem{}, Elem{}, Elem{}};
    if (!has_four_generators(C, qu.u)) return out;

    const std::uint32_t n = C.n(), r = C.r(), s = C.s();
    out.a_u = qu.U[qu.u];
    // U_1(x) = c x with c^{q^{n-r-1}} = a_u
    const Elem c = F.frob(out.a_u, q, -static_cast<std::int64_t>(n - r - 1));
    CurveFunction W = Z.pow(q) + CurveFunction::monomial(curve, c, C.low_exponent(), 0);
    out.alpha = F.neg(F.inv(out.a_u));
    out.beta = F.frob(out.alpha, q, -static_cast<std::int64_t>(n - r));
    const std::uint64_t shift = ipow(q, r - 1) - ipow(q, n - r - 1);
    CurveFunction G = Z.shift_x(shift).scale(out.beta) - W.pow(ipow(q, 2 * r - n - 1));

    out.w_pole = static_cast<std::uint64_t>(-valuation(W));
    out.gamma_pole = static_cast<std::uint64_t>(-valuation(G));
    const std::uint64_t w_exp = ipow(q, r + 1) + q, g_exp = ipow(q, r + s - 1) + 1;
    if (out.w_pole != w_exp)
        throw ConsistencyError("pole order of W is " + u64(out.w_pole) + ", expected " + u64(w_exp));
    if (out.gamma_pole != g_exp)
        throw ConsistencyError("pole order of Gamma is " + u64(out.gamma_pole) + ", expected " + u64(g_exp));
    out.W = std::move(W);
    out.Gamma = std::move(G);
    return out;
}

// ---------------------------------------------------------------------------------------------------------------
// Apery basis and semigroup

AperyBasis discover_apery_basis(const CurvePtr& curve, std::size_t max_steps) {
    const Curve& C = *curve;
    const std::uint64_t qs = C.x_pole();
    std::vector<CurveFunction> b;
    std::vector<NormProfile> prof;
    for (std::uint64_t j = 0; j < qs; ++j) {
        b.push_back(CurveFunction::monomial(curve, Field::one(), 0, j));
        prof.push_back(norm_profile(b.back()));
    }
    std::size_t steps = 0;
    for (;;) {
        // lowest and highest pole in the first residue class holding two or more
        std::vector<std::vector<std::size_t>> cls(qs);
        for (std::size_t j = 0; j < qs; ++j) cls[prof[j].degree % qs].push_back(j);
        const auto it = std::find_if(cls.begin(), cls.end(), [](const auto& v) { return v.size() > 1; });
        if (it == cls.end()) break;
        std::vector<std::size_t> members = *it;
        std::sort(members.begin(), members.end(),
                  [&](std::size_t a, std::size_t c) { return prof[a].degree < prof[c].degree; });
        const std::size_t lo = members.front(), hi = members.back();
        if (++steps > max_steps)
            throw BudgetError("Apery basis not reached within " + u64(max_steps) + " reduction steps");
        const std::uint64_t k = (prof[hi].degree - prof[lo].degree) / qs;
        const Elem lambda = leading_ratio(C, prof[hi].lead, prof[lo].lead);
        const std::uint64_t before = prof[hi].degree;
        b[hi] = b[hi] - b[lo].shift_x(k).scale(lambda);
        prof[hi] = norm_profile(b[hi]);
        if (prof[hi].degree >= before)
            throw ConsistencyError("leading-term cancellation failed at pole order " + u64(before));
    }
    std::vector<std::size_t> order(qs);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto c) { return prof[a].degree < prof[c].degree; });
    AperyBasis out{{}, {}, steps};
    for (auto j : order) {
        out.b.push_back(b[j]);
        out.pole.push_back(prof[j].degree);
    }
    return out;
}

std::vector<std::pair<std::string, std::vector<std::uint64_t>>> claimed_generators(const Curve& C) {
    std::vector<std::pair<std::string, std::vector<std::uint64_t>>> out;
    const std::uint64_t q = C.q();
    const std::uint32_t n = C.n(), r = C.r(), s = C.s();
    if (C.is_full())
        out.emplace_back("full-curve",
                         std::vector<std::uint64_t>{ipow(q, n - 1), ipow(q, n - 1) + ipow(q, r - 1),
                                                    ipow(q, 2 * r - 1) + ipow(q, n - r - 1), ipow(q, n) + ipow(q, n - r),
                                                    ipow(q, 2 * r) - ipow(q, n) + ipow(q, r) + 1});
    if (n >= 3 && s + n <= 2 * r) {
        out.emplace_back("two-generator", std::vector<std::uint64_t>{ipow(q, s), ipow(q, r) + 1});
    } else if (n >= 3 && s + n == 2 * r + 1) {
        const std::uint32_t u = qu_decompose(C.g_s(), n, r).u;
        if (u + r + 1 == n)
            out.emplace_back("four-generator",
                             std::vector<std::uint64_t>{ipow(q, s), ipow(q, r) + ipow(q, s - 1), ipow(q, r + 1) + q,
                                                        ipow(q, r + s - 1) + 1});
        else
            out.emplace_back("two-generator", std::vector<std::uint64_t>{ipow(q, s), ipow(q, r) + 1});
    }
    return out;
}

WeierstrassData weierstrass_semigroup(const CurvePtr& curve, std::uint64_t bound, std::size_t max_steps) {
    const Curve& C = *curve;
    AperyBasis ap = discover_apery_basis(curve, max_steps);
    std::vector<std::uint64_t> gens{C.x_pole()};
    for (auto p : ap.pole)
        if (p > 0) gens.push_back(p);
    NumericalSemigroup S(gens);
    if (S.genus() != C.genus())
        throw ConsistencyError("semigroup has " + u64(S.genus()) + " gaps but the genus is " + u64(C.genus()));

    WeierstrassData wd{S, claimed_generators(C), std::move(ap), {}};
    for (const auto& [label, claim] : wd.claims) {
        NumericalSemigroup T(claim);
        if (T == S) continue;
        for (auto g : claim)
            if (!S.contains(static_cast<std::int64_t>(g)))
                throw ConsistencyError(label + " generator " + u64(g) + " is not a pole order");
        for (auto g : S.minimal_generators())
            if (!T.contains(static_cast<std::int64_t>(g)))
                throw ConsistencyError("pole order " + u64(g) + " is missing from the " + label + " semigroup");
    }
    const std::uint64_t qs = C.x_pole();
    for (auto h : S.elements_up_to(bound)) {
        for (std::size_t j = 0; j < wd.apery.pole.size(); ++j) {
            const std::uint64_t p = wd.apery.pole[j];
            if (p % qs == h % qs) {
                wd.basis.emplace(h, wd.apery.b[j].shift_x((h - p) / qs));
                break;
            }
        }
    }
    return wd;
}

// ---------------------------------------------------------------------------------------------------------------
// Riemann-Roch bases

bool telescopic_route_available(const Curve& C) {
    return C.n() >= 3 && C.s() + C.n() <= 2 * C.r() + 1 && C.model() != Model::TraceForm;
}

std::vector<std::uint64_t> RRBasis::poles() const {
    std::vector<std::uint64_t> out;
    for (const auto& t : terms) out.push_back(t.pole);
    return out;
}

std::vector<CurveFunction> RRBasis::functions() const {
    std::vector<CurveFunction> out;
    if (generators.empty()) return out;
    const CurvePtr& c = generators.front().curve();
    for (const auto& t : terms) {
        CurveFunction f = CurveFunction::constant(c, Field::one());
        for (std::size_t g = 0; g < generators.size(); ++g)
            if (t.exps[g]) f = f * generators[g].pow(t.exps[g]);
        out.push_back(std::move(f));
    }
    return out;
}

Matrix RRBasis::evaluate(const FieldPtr& F, const kernels::PointList& pts) const {
    std::vector<std::vector<Elem>> ev;
    for (const auto& g : generators) ev.push_back(g.evaluate(pts));
    Matrix M(F, terms.size(), pts.size());
    for (std::size_t i = 0; i < terms.size(); ++i) {
        for (std::size_t j = 0; j < pts.size(); ++j) {
            Elem acc = Field::one();
            for (std::size_t g = 0; g < generators.size(); ++g)
                if (terms[i].exps[g]) acc = F->mul(acc, F->pow(ev[g][j], static_cast<std::int64_t>(terms[i].exps[g])));
            M(i, j) = acc;
        }
    }
    return M;
}

namespace {

RRBasis telescopic_basis(const CurvePtr& curve, std::uint64_t m) {
    ZWGSet z = build_zwg(curve);
    std::vector<std::pair<std::uint64_t, CurveFunction>> gens{{curve->x_pole(), CurveFunction::x(curve)},
                                                              {z.z_pole, z.Z}};
    if (z.W) gens.emplace_back(z.w_pole, *z.W);
    if (z.Gamma) gens.emplace_back(z.gamma_pole, *z.Gamma);
    std::sort(gens.begin(), gens.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<std::uint64_t> a;
    for (const auto& g : gens) a.push_back(g.first);
    const TelescopicResult tr = sg_telescopic(a);
    const auto* cert = std::get_if<TelescopicCertificate>(&tr);
    if (!cert) throw ConsistencyError("generator poles are not telescopic: " + std::get<TelescopicRefusal>(tr).reason);

    RRBasis B;
    B.route = BasisRoute::Telescopic;
    for (auto& g : gens) {
        B.generator_poles.push_back(g.first);
        B.generators.push_back(std::move(g.second));
    }
    // exponent of a_i stays below d_{i-1}/d_i, the first one is free
    std::vector<std::uint64_t> cap(a.size(), 0);
    for (std::size_t i = 1; i < a.size(); ++i) cap[i] = cert->d[i - 1] / cert->d[i];
    std::vector<std::uint64_t> e(a.size(), 0);
    std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t pole) {
        if (i == a.size()) {
            B.terms.push_back({pole, e});
            return;
        }
        for (std::uint64_t k = 0; pole + k * a[i] <= m && (i == 0 || k < cap[i]); ++k) {
            e[i] = k;
            rec(i + 1, pole + k * a[i]);
        }
        e[i] = 0;
    };
    rec(0, 0);
    return B;
}

RRBasis discovery_basis(const CurvePtr& curve, std::uint64_t m, const WeierstrassData& wd) {
    RRBasis B;
    B.route = BasisRoute::Discovery;
    B.generators.push_back(CurveFunction::x(curve));
    B.generator_poles.push_back(curve->x_pole());
    for (std::size_t j = 0; j < wd.apery.b.size(); ++j) {
        B.generators.push_back(wd.apery.b[j]);
        B.generator_poles.push_back(wd.apery.pole[j]);
    }
    const std::uint64_t qs = curve->x_pole();
    for (std::size_t j = 0; j < wd.apery.b.size(); ++j) {
        for (std::uint64_t k = 0; wd.apery.pole[j] + k * qs <= m; ++k) {
            std::vector<std::uint64_t> e(B.generators.size(), 0);
            e[0] = k;
            e[j + 1] = 1;
            B.terms.push_back({wd.apery.pole[j] + k * qs, std::move(e)});
        }
    }
    return B;
}

}  // namespace

NumericalSemigroup RRBasis::semigroup() const {
    std::vector<std::uint64_t> g;
    for (auto p : generator_poles)
        if (p > 0) g.push_back(p);
    return NumericalSemigroup(g);
}

RRBasis rr_basis(const CurvePtr& curve, std::uint64_t m, BasisRoute route, const WeierstrassData* wd) {
    if (route == BasisRoute::Auto)
        route = telescopic_route_available(*curve) ? BasisRoute::Telescopic : BasisRoute::Discovery;
    RRBasis B;
    std::optional<WeierstrassData> own;
    if (route == BasisRoute::Telescopic) {
        if (!telescopic_route_available(*curve))
            throw ValidationError("no telescopic basis is known for this curve; use discovery");
        B = telescopic_basis(curve, m);
    } else {
        if (!wd) {
            own.emplace(weierstrass_semigroup(curve, 0));
            wd = &*own;
        }
        B = discovery_basis(curve, m, *wd);
    }
    std::sort(B.terms.begin(), B.terms.end(), [](const auto& a, const auto& b) { return a.pole < b.pole; });
    for (std::size_t i = 1; i < B.terms.size(); ++i)
        if (B.terms[i].pole == B.terms[i - 1].pole)
            throw ConsistencyError("two basis functions share pole order " + u64(B.terms[i].pole));
    const NumericalSemigroup S = B.semigroup();
    if (B.terms.size() != S.iota(static_cast<std::int64_t>(m)))
        throw ConsistencyError("basis of L(" + u64(m) + " P) has " + u64(B.terms.size()) + " functions, expected " +
                               u64(S.iota(static_cast<std::int64_t>(m))));
    return B;
}

}  // namespace xnr
