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

#ifndef XNR_CURVE_HPP
#define XNR_CURVE_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "xnr/finite_field.hpp"
#include "xnr/kernels.hpp"
#include "xnr/linalg.hpp"
#include "xnr/numsemi.hpp"
#include "xnr/polynomial.hpp"
#include "xnr/qpoly.hpp"

namespace xnr {

/// Plane model. The first two differ by the side carrying the minus sign and are related by y -> -y (they agree
/// in characteristic 2). TraceForm uses f_r(x) = T_n(x^{1+q^r}) mod (x^{q^n} - x) as right side instead.
enum class Model {
    HighMinusLow,  // g_s(y) = x^{q^n+q^{n-r}} - x^{q^{n-r}+1}
    LowMinusHigh,  // g_s(y) = x^{q^{n-r}+1} - x^{q^n+q^{n-r}}
    TraceForm,     // g_s(y) = f_r(x)
};

class Curve;
using CurvePtr = std::shared_ptr<const Curve>;

/**
 * @brief The plane curve g_s(y) = +-(x^{q^n+q^{n-r}} - x^{q^{n-r}+1}) over GF(q^n).
 *
 * g_s is a monic separable q-polynomial of q-degree s that splits over GF(q^n) and is a left composition factor
 * of the trace T_n. With s = n-1 and g_s = T_n this is the full curve; smaller s gives its subcovers.
 */
class Curve {
   public:
    /// Validates everything (ValidationError naming the failure) and enumerates the rational points.
    static CurvePtr create(std::uint32_t n, std::uint32_t r, QPolynomial g_s,
                           Model model = Model::HighMinusLow);
    /// g_s = T_n.
    static CurvePtr full(const FieldPtr& F, std::uint64_t q, std::uint32_t n, std::uint32_t r,
                         Model model = Model::HighMinusLow);
    /// g_s from trace_split_default.
    static CurvePtr subcover(const FieldPtr& F, std::uint64_t q, std::uint32_t n, std::uint32_t r, std::uint32_t s,
                             Model model = Model::HighMinusLow);

    const FieldPtr& field() const noexcept { return field_; }
    std::uint64_t q() const noexcept { return q_; }
    std::uint32_t n() const noexcept { return n_; }
    std::uint32_t r() const noexcept { return r_; }
    std::uint32_t s() const noexcept { return s_; }
    const QPolynomial& g_s() const noexcept { return g_s_; }
    Model model() const noexcept { return model_; }
    bool is_full() const noexcept { return full_; }

    /// Pole order of x, q^s.
    std::uint64_t x_pole() const noexcept { return qs_; }
    /// Pole order of y: the degree of the right side (q^n + q^{n-r}, or q^{n-1} + q^{r-1} for TraceForm).
    std::uint64_t y_pole() const noexcept { return ypole_; }
    /// q^n + q^{n-r} and q^{n-r} + 1, whatever the model.
    std::uint64_t high_exponent() const noexcept { return hi_; }
    std::uint64_t low_exponent() const noexcept { return lo_; }
    /// q^r (q^s - 1) / 2
    std::uint64_t genus() const noexcept { return genus_; }
    /// Affine rational points, q^{n+s} of them, in canonical order.
    const kernels::PointList& points() const noexcept { return points_; }
    /// Right side of the model as a polynomial in x.
    const Poly& rhs() const noexcept { return rhs_; }
    const Poly& gs_poly() const noexcept { return gs_poly_; }

    /// Embedding into the smallest extension of GF(q^n) with at least `min_order` elements; nullptr when
    /// GF(q^n) itself is large enough. Cached and thread-safe.
    const Embedding* extension(std::uint64_t min_order) const;

    std::string describe() const;

   private:
    Curve(std::uint32_t n, std::uint32_t r, QPolynomial g_s, Model model);

    FieldPtr field_;
    std::uint64_t q_;
    std::uint32_t n_, r_, s_;
    QPolynomial g_s_;
    Model model_;
    bool full_ = false;
    std::uint64_t qs_ = 0, hi_ = 0, lo_ = 0, ypole_ = 0, genus_ = 0;
    Poly rhs_, gs_poly_;
    kernels::PointList points_;
    mutable std::mutex ext_mu_;
    mutable std::map<std::uint32_t, std::unique_ptr<Embedding>> ext_;
};

/**
 * @brief Polynomial function on a curve, kept reduced: sum_{j < q^s} c_j(x) y^j.
 *
 * The reduction rewrites y^{q^s} with the curve equation; x is never reduced, so two functions are equal iff
 * their tables agree.
 */
class CurveFunction {
   public:
    explicit CurveFunction(CurvePtr curve) : curve_(std::move(curve)) {}

    static CurveFunction constant(CurvePtr curve, Elem c);
    static CurveFunction x(CurvePtr curve);
    static CurveFunction y(CurvePtr curve);
    /// c x^i y^j, reduced.
    static CurveFunction monomial(CurvePtr curve, Elem c, std::uint64_t i, std::uint64_t j);
    static CurveFunction from_bivariate(CurvePtr curve, const BivariatePoly& f);
    /// sum_j c[j](x) y^j for arbitrary many j, reduced.
    static CurveFunction from_coeffs(CurvePtr curve, std::vector<Poly> c);

    const CurvePtr& curve() const noexcept { return curve_; }
    /// c[j] is the coefficient of y^j; trailing zero entries are dropped.
    const std::vector<Poly>& coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }

    CurveFunction operator+(const CurveFunction& o) const;
    CurveFunction operator-(const CurveFunction& o) const;
    CurveFunction operator*(const CurveFunction& o) const;
    CurveFunction operator-() const;
    CurveFunction scale(Elem s) const;
    /// x^k * f
    CurveFunction shift_x(std::uint64_t k) const;
    CurveFunction pow(std::uint64_t e) const;
    /// f(x, -y)
    CurveFunction negate_y() const;
    bool operator==(const CurveFunction& o) const { return curve_ == o.curve_ && c_ == o.c_; }

    Elem eval(Elem x, Elem y) const;
    std::vector<Elem> evaluate(const kernels::PointList& pts) const;
    /// max over monomials of i q^s + j (q^n + q^{n-r}); 0 for constants and zero.
    std::uint64_t naive_weight() const;
    /// Number of monomials reaching naive_weight().
    std::size_t top_monomials() const;
    std::string to_string() const;

   private:
    void reduce();

    CurvePtr curve_;
    std::vector<Poly> c_;
};

/// N(f) = Res_y(curve, f) as a polynomial in x: its degree is the pole order of f at infinity.
struct NormProfile {
    std::uint64_t degree = 0;
    Elem lead;  // leading coefficient, in the curve's field
};
NormProfile norm_profile(const CurveFunction& f);

enum class ValuationMethod { Auto, Resultant };

/// v_{P_inf}(f) (<= 0 for polynomial functions). Auto uses the naive weight when a single monomial attains it.
/// DomainError for f = 0.
std::int64_t valuation(const CurveFunction& f, ValuationMethod method = ValuationMethod::Auto);

/// The c with v(f - c g) > v(f), given v(f) = v(g) and the leading norm coefficients of f and g.
Elem leading_ratio(const Curve& C, Elem lead_f, Elem lead_g);

/// Z = Q(y) - h(x), and for the four-generator range also W and Gamma, each checked against its pole order.
struct ZWGSet {
    QUDecomposition qu;
    CurveFunction Z;
    std::uint64_t z_pole = 0;
    std::optional<CurveFunction> W, Gamma;
    std::uint64_t w_pole = 0, gamma_pole = 0;
    Elem a_u, alpha, beta;
};
/// Expected pole of Z: q^r+1 if s <= r-u-1, else q^{s+u+r-n}(q^{n-r}+1).
std::uint64_t expected_z_pole(const Curve& C, std::uint32_t u);
/// True when s = 2r-n+1, u = n-r-1 and s >= 2, so that W and Gamma exist.
bool has_four_generators(const Curve& C, std::uint32_t u);
/// Refuses n = 2 and the trace form. ConsistencyError when a pole order disagrees with the formula.
ZWGSet build_zwg(const CurvePtr& curve);

/**
 * @brief F[x]-basis of the coordinate ring whose pole orders are pairwise distinct modulo q^s.
 *
 * Obtained from 1, y, ..., y^{q^s-1} by repeatedly cancelling leading terms of two elements whose pole orders are
 * congruent. The poles are the Apery set of the Weierstrass semigroup with respect to q^s.
 */
struct AperyBasis {
    std::vector<CurveFunction> b;     // sorted by pole order
    std::vector<std::uint64_t> pole;  // aligned with b
    std::size_t steps = 0;            // reduction steps used
};
/// BudgetError when more than `max_steps` reductions are needed.
AperyBasis discover_apery_basis(const CurvePtr& curve, std::size_t max_steps = 100000);

struct WeierstrassData {
    NumericalSemigroup semigroup;
    /// Generator lists predicted by closed forms ("two-generator", "four-generator", "full-curve"), each
    /// verified to generate `semigroup`. Empty when no closed form covers the curve.
    std::vector<std::pair<std::string, std::vector<std::uint64_t>>> claims;
    AperyBasis apery;
    /// Pole order -> function, for every semigroup element up to the search bound.
    std::map<std::uint64_t, CurveFunction> basis;
};
/// Semigroup from the Apery basis, checked against the closed forms and the genus (ConsistencyError otherwise).
WeierstrassData weierstrass_semigroup(const CurvePtr& curve, std::uint64_t bound, std::size_t max_steps = 100000);
/// Closed-form generator lists that apply to the curve.
std::vector<std::pair<std::string, std::vector<std::uint64_t>>> claimed_generators(const Curve& C);

enum class BasisRoute { Auto, Telescopic, Discovery };

/// Basis of L(m P_inf) as products of a few generator functions with bounded exponents.
struct RRBasis {
    BasisRoute route = BasisRoute::Discovery;
    std::vector<CurveFunction> generators;
    std::vector<std::uint64_t> generator_poles;
    struct Term {
        std::uint64_t pole;
        std::vector<std::uint64_t> exps;  // one per generator
    };
    std::vector<Term> terms;  // ascending pole order

    std::vector<std::uint64_t> poles() const;
    /// Semigroup generated by the nonzero generator poles.
    NumericalSemigroup semigroup() const;
    std::vector<CurveFunction> functions() const;
    /// Rows ev(f) at the given points, computed as pointwise products of generator evaluations.
    Matrix evaluate(const FieldPtr& F, const kernels::PointList& pts) const;
};

/// Exactly iota(m) functions with distinct poles <= m. Telescopic uses x, Z (and W, Gamma) in the ranges covered
/// by the closed forms; Discovery uses x^i b_j. `wd` is reused when given, otherwise computed.
RRBasis rr_basis(const CurvePtr& curve, std::uint64_t m, BasisRoute route = BasisRoute::Auto,
                 const WeierstrassData* wd = nullptr);
/// Whether Auto picks the telescopic route.
bool telescopic_route_available(const Curve& C);

}  // namespace xnr

#endif
