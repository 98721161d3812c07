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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "xnr/error.hpp"
#include "xnr/qpoly.hpp"

using namespace xnr;

namespace {

QPolynomial random_qpoly(const FieldPtr& F, std::mt19937& rng, std::size_t len) {
    std::vector<Elem> c(len);
    for (auto& e : c) e = Elem{static_cast<std::uint32_t>(rng() % F->order())};
    return QPolynomial(F, 2, c);
}

}  // namespace

TEST_CASE("evaluation") {
    auto F = Field::create(2, 5);
    auto T5 = QPolynomial::trace(F, 2, 5);
    CHECK(qp_eval(T5, Field::zero()) == Field::zero());
    auto gs = parse_qpoly(F, 2, "y^4 + a^18*y^2 + a*y");
    CHECK(qp_roots(gs).size() == 4);
    std::mt19937 rng(11);
    for (int t = 0; t < 100; ++t) {
        Elem a{static_cast<std::uint32_t>(rng() % 32)}, b{static_cast<std::uint32_t>(rng() % 32)};
        CHECK(qp_eval(gs, F->add(a, b)) == F->add(qp_eval(gs, a), qp_eval(gs, b)));
    }
}

TEST_CASE("composition") {
    auto F = Field::create(2, 5);
    auto gs = parse_qpoly(F, 2, "y^4 + a^18*y^2 + a*y");
    auto g = parse_qpoly(F, 2, "y^4 + a^8*y^2 + a^30*y");
    CHECK(qp_compose(gs, g) == QPolynomial::trace(F, 2, 5));
    auto xq = QPolynomial::monomial(F, 2, Field::one(), 1);
    CHECK(qp_compose(xq, xq) == QPolynomial::monomial(F, 2, Field::one(), 2));
    CHECK(qp_compose(gs, QPolynomial::identity(F, 2)) == gs);

    std::mt19937 rng(5);
    for (int t = 0; t < 50; ++t) {
        auto a = random_qpoly(F, rng, 3), b = random_qpoly(F, rng, 2), c = random_qpoly(F, rng, 3);
        CHECK(qp_compose(qp_compose(a, b), c) == qp_compose(a, qp_compose(b, c)));
    }
}

TEST_CASE("right division") {
    auto F = Field::create(2, 5);
    auto gs = parse_qpoly(F, 2, "y^4 + a^18*y^2 + a*y");
    auto g = parse_qpoly(F, 2, "y^4 + a^8*y^2 + a^30*y");
    auto [Q, R] = qp_divide(QPolynomial::trace(F, 2, 5), g);
    CHECK(Q == gs);
    CHECK(R.is_zero());
    auto [Q2, R2] = qp_divide(g, g);
    CHECK(Q2 == QPolynomial::identity(F, 2));
    CHECK(R2.is_zero());
    CHECK_THROWS_AS(qp_divide(g, QPolynomial(F, 2)), DomainError);
}

TEST_CASE("left division recovers the inner factor") {
    auto F = Field::create(2, 5);
    auto gs = parse_qpoly(F, 2, "y^4 + a^18*y^2 + a*y");
    auto g = parse_qpoly(F, 2, "y^4 + a^8*y^2 + a^30*y");
    auto [B, R] = qp_left_divide(QPolynomial::trace(F, 2, 5), gs);
    CHECK(B == g);
    CHECK(R.is_zero());
}

TEST_CASE("subspace polynomials") {
    auto F = Field::create(2, 5);
    CHECK(qp_from_subspace(F, 2, {}) == QPolynomial::identity(F, 2));
    CHECK(to_string(qp_from_subspace(F, 2, {Field::one()})) == "y^2 + y");
    CHECK(qp_from_subspace(F, 2, trace_kernel_basis(F, 2, 5)) == QPolynomial::trace(F, 2, 5));
    CHECK_THROWS_AS(qp_from_subspace(F, 2, {Field::one(), Field::one()}), ValidationError);
}

TEST_CASE("trace splits") {
    auto F = Field::create(2, 5);
    auto full = trace_split(F, 2, 5, 4, {});
    CHECK(full.g == QPolynomial::identity(F, 2));
    CHECK(full.g_s == QPolynomial::trace(F, 2, 5));

    // every 2-element choice from the kernel basis
    auto K = trace_kernel_basis(F, 2, 5);
    REQUIRE(K.size() == 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
            auto sp = trace_split(F, 2, 5, 2, {K[i], K[j]});
            CHECK(qp_compose(sp.g_s, sp.g) == QPolynomial::trace(F, 2, 5));
            CHECK(qp_roots(sp.g_s).size() == 4);
        }
    CHECK_THROWS_AS(trace_split(F, 2, 5, 3, {Field::one()}), ValidationError);  // T_5(1) = 1
}

TEST_CASE("f_r") {
    auto F = Field::create(2, 4);
    auto f = f_r_poly(F, 2, 4, 3);
    CHECK(f.degree() == 12);
    CHECK(f[0] == Field::zero());
    auto T4 = QPolynomial::trace(F, 2, 4);
    int count = 0;
    for (std::uint32_t x = 0; x < 16; ++x)
        for (std::uint32_t y = 0; y < 16; ++y) count += qp_eval(T4, Elem{y}) == poly::eval(*F, f, Elem{x});
    CHECK(count == 128);
    CHECK_THROWS_AS(check_nr(4, 2), ValidationError);
    CHECK_THROWS_AS(check_nr(5, 2), ValidationError);
}

TEST_CASE("Q/U decomposition") {
    auto F = Field::create(2, 5);
    auto gs = parse_qpoly(F, 2, "y^4 + a^18*y^2 + a*y");
    auto d = qu_decompose(gs, 5, 3);  // identities are verified inside
    CHECK(d.U.degree() == (std::uint64_t{1} << d.u));
    CHECK(d.u <= 5 - 3 - 1);

    // s >= r + 1: Q = y^{q^r}, u = n - s
    auto T5 = QPolynomial::trace(F, 2, 5);
    auto e = qu_decompose(T5, 5, 3);
    CHECK(e.Q == QPolynomial::monomial(F, 2, Field::one(), 3));
    CHECK(e.u == 1);
}

TEST_CASE("the G identity") {
    auto F = Field::create(2, 4);
    auto L = g_identity(parse_qpoly(F, 2, "y^2 + y"), 4);
    BivariatePoly expect(F);
    expect.add_term(8, 1, Field::one());
    CHECK(L.G == expect);
    CHECK(L.R_s[0] == Field::one());

    auto F5 = Field::create(2, 5);
    auto gs = parse_qpoly(F5, 2, "y^4 + a^18*y^2 + a*y");
    auto M = g_identity(gs, 5);
    CHECK(M.G_chain.back() == gs);
}

TEST_CASE("text round trip") {
    auto F = Field::create(2, 5);
    auto P = parse_qpoly(F, 2, "y^8 + a^12*y^4 + a^20*y^2 + a*y");
    CHECK(parse_qpoly(F, 2, to_string(P)) == P);
    CHECK(parse_qpoly(F, 2, "y^{q^2} + a^18*y^q + a*y") == parse_qpoly(F, 2, "y^4 + a^18*y^2 + a*y"));
    CHECK_THROWS_AS(parse_qpoly(F, 2, "y^3"), ValidationError);
}

TEST_CASE("right division round trips on random pairs") {
    auto F = Field::create(2, 4);
    std::mt19937 rng(2026);
    int failures = 0;
    for (int t = 0; t < 500; ++t) {
        auto f = random_qpoly(F, rng, 1 + rng() % 6);
        auto g = random_qpoly(F, rng, 1 + rng() % 4);
        if (g.is_zero()) continue;
        auto [Q, R] = qp_divide(f, g);
        failures += !(qp_add(qp_compose(Q, g), R) == f) || (!R.is_zero() && R.degree() >= g.degree());
    }
    CHECK(failures == 0);
}
