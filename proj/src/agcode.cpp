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

#include "xnr/agcode.hpp"

#include <cmath>
#include <string>

#include "xnr/error.hpp"

namespace xnr {

namespace {

std::string u64(std::uint64_t v) { return std::to_string(v); }

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

LinearCode make_code(const Matrix& rows) { return LinearCode{rows.select_rows(linalg::independent_rows(rows))}; }

std::uint64_t weight(const std::vector<Elem>& word) {
    std::uint64_t w = 0;
    for (auto e : word) w += !e.is_zero();
    return w;
}

std::uint64_t expected_dimension(const NumericalSemigroup& S, std::uint64_t u, std::uint64_t m) {
    const auto mi = static_cast<std::int64_t>(m);
    if (m < u) return S.iota(mi);
    return S.iota(mi) - S.iota(mi - static_cast<std::int64_t>(u));
}

OnePointCode code_new(const CurvePtr& curve, std::uint64_t m, BasisRoute route, const WeierstrassData* wd) {
    const RRBasis B = rr_basis(curve, m, route, wd);
    const Matrix rows = B.evaluate(curve->field(), curve->points());
    const std::vector<std::size_t> keep = linalg::independent_rows(rows);

    OnePointCode c{curve, m, LinearCode{rows.select_rows(keep)}, {}, B.semigroup()};
    for (auto i : keep) c.poles.push_back(B.terms[i].pole);

    const std::uint64_t u = curve->points().size();
    const std::uint64_t want = expected_dimension(c.semigroup, u, m);
    if (c.dimension() != want)
        throw ConsistencyError("code of L(" + u64(m) + " P) has rank " + u64(c.dimension()) + ", expected " +
                               u64(want) + " (incomplete basis)");
    return c;
}

LinearCode code_dual(const LinearCode& c) { return LinearCode{linalg::nullspace(c.G)}; }

LinearCode code_shorten(const LinearCode& c, std::size_t s, std::optional<std::vector<std::size_t>> positions) {
    if (s >= c.dimension()) throw ValidationError("cannot shorten on " + u64(s) + " positions a code of dimension " +
                                                  u64(c.dimension()));
    if (s == 0) return c;
    std::vector<std::size_t> pos;
    if (positions) {
        pos = *positions;
        if (pos.size() != s) throw ValidationError("shortening needs exactly s positions");
    } else {
        for (std::size_t j = 0; j < s; ++j) pos.push_back(j);
    }
    std::vector<bool> drop(c.length(), false);
    for (auto j : pos) {
        if (j >= c.length() || drop[j]) throw ValidationError("bad or repeated shortening position " + u64(j));
        drop[j] = true;
    }
    std::vector<std::size_t> rest;
    for (std::size_t j = 0; j < c.length(); ++j)
        if (!drop[j]) rest.push_back(j);

    // messages whose codewords vanish on the positions
    const Matrix K = linalg::left_nullspace(c.G.select_cols(pos));
    if (K.rows() == 0) throw ValidationError("no nonzero codeword vanishes on the chosen positions");
    return LinearCode{(K * c.G).select_cols(rest)};
}

DistanceResult code_distance(const LinearCode& c, double budget, std::uint64_t floor, int threads) {
    DistanceResult res;
    const FieldPtr& F = c.field();
    res.log2_work = static_cast<double>(c.dimension()) * std::log2(static_cast<double>(F->order()));
    if (c.dimension() == 0 || res.log2_work > std::log2(budget)) return res;
    std::vector<std::vector<Elem>> rows;
    for (std::size_t i = 0; i < c.dimension(); ++i) rows.push_back(c.G.row_vector(i));
    const kernels::MinWeight mw = kernels::min_weight(*F, rows, floor, threads);
    res.exact = mw.weight;
    res.witness = mw.codeword;
    res.early_exit = mw.early_exit;
    return res;
}

Witness witness_lines(const CurvePtr& full, std::uint64_t a) {
    const Curve& C = *full;
    if (!C.is_full()) throw ValidationError("the line construction needs the full curve");
    const FieldPtr& F = C.field();
    const std::uint64_t qn1 = ipow(C.q(), C.n() - 1);
    if (a >= F->order()) throw ValidationError("a must be below q^n");

    const std::vector<Elem> elems = kernels::canonical_elements(*F);
    CurveFunction g = CurveFunction::constant(full, Field::one());
    const CurveFunction x = CurveFunction::x(full);
    for (std::uint64_t i = 0; i < a; ++i) g = g * (x - CurveFunction::constant(full, elems[i]));

    Witness w;
    w.kind = WitnessCase::Lines;
    w.m = a * qn1;
    w.expected = C.points().size() - w.m;
    w.pole = static_cast<std::uint64_t>(-valuation(g));
    w.codeword = g.evaluate(C.points());
    w.weight = weight(w.codeword);
    if (*w.weight != w.expected) w.note = "weight differs from u - m";
    return w;
}

Witness witness_lines_and_fibres(const FieldPtr& F, std::uint64_t q, std::uint32_t n, std::uint32_t r,
                                 std::uint64_t a, std::uint64_t b) {
    const CurvePtr T = Curve::full(F, q, n, r, Model::TraceForm);
    const std::uint64_t qn1 = ipow(q, n - 1), qr1 = ipow(q, r - 1);
    if (a > F->order() - qn1 - qr1) throw ValidationError("a must be at most q^n - q^{n-1} - q^{r-1}");
    if (b >= qn1) throw ValidationError("b must be below q^{n-1}");

    const Elem gamma = Field::one();
    const std::vector<Elem> elems = kernels::canonical_elements(*F);
    const Poly& fr = T->rhs();
    const QPolynomial tr = QPolynomial::trace(F, q, n);

    const CurveFunction x = CurveFunction::x(T), y = CurveFunction::y(T);
    CurveFunction g = CurveFunction::constant(T, Field::one());
    std::uint64_t took_a = 0, took_b = 0;
    for (auto e : elems) {
        if (took_a == a) break;
        if (poly::eval(*F, fr, e) != gamma) g = g * (x - CurveFunction::constant(T, e)), ++took_a;
    }
    for (auto e : elems) {
        if (took_b == b) break;
        if (qp_eval(tr, e) == gamma) g = g * (y - CurveFunction::constant(T, e)), ++took_b;
    }
    if (took_a != a || took_b != b) throw ValidationError("not enough abscissae or fibre values for (a, b)");

    Witness w;
    w.kind = WitnessCase::LinesAndFibres;
    w.m = a * qn1 + b * (qn1 + qr1);
    w.expected = T->points().size() - w.m;
    w.pole = static_cast<std::uint64_t>(-valuation(g));
    w.codeword = g.evaluate(T->points());
    w.weight = weight(w.codeword);
    if (w.pole > w.m) w.note = "function has pole " + u64(w.pole) + " > m. ";
    if (*w.weight != w.expected)
        w.note += "achieved weight " + u64(*w.weight) + " differs from u - m = " + u64(w.expected);
    return w;
}

Witness witness_duality(const CurvePtr& full, std::uint64_t b) {
    const Curve& C = *full;
    if (!C.is_full()) throw ValidationError("the duality case needs the full curve");
    const std::uint64_t qn1 = ipow(C.q(), C.n() - 1), u = C.points().size();
    if (b > qn1) throw ValidationError("b must be at most q^{n-1}");
    Witness w;
    w.kind = WitnessCase::Duality;
    w.m = u - qn1 + b;
    w.expected = u - w.m;
    w.candidates = {qn1, ipow(C.q(), C.r() - 1)};
    const NumericalSemigroup S = weierstrass_semigroup(full, 0).semigroup;
    w.dstar = dstar(hstar(S, u), w.m).value;
    w.note = "not constructed; two candidate distances are reported";
    return w;
}

void write_matrix_csv(std::ostream& os, const LinearCode& c, const Curve& curve, std::uint64_t m) {
    const Field& F = *c.field();
    os << "# q n r s m length k\n";
    os << "# " << curve.q() << ' ' << curve.n() << ' ' << curve.r() << ' ' << curve.s() << ' ' << m << ' '
       << c.length() << ' ' << c.dimension() << '\n';
    for (std::size_t i = 0; i < c.dimension(); ++i) {
        for (std::size_t j = 0; j < c.length(); ++j) {
            if (j) os << ',';
            os << F.to_string(c.G(i, j));
        }
        os << '\n';
    }
}

void write_matrix_csv(std::ostream& os, const OnePointCode& c) { write_matrix_csv(os, c.code, *c.curve, c.m); }

}  // namespace xnr
