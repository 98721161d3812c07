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

#include <random>

#include "xnr/error.hpp"
#include "xnr/finite_field.hpp"

using namespace xnr;

TEST_CASE("default moduli are the Conway polynomials") {
    auto F32 = Field::create(2, 5);
    CHECK(F32->modulus() == std::vector<std::uint32_t>{1, 0, 1, 0, 0, 1});
    CHECK(F32->multiplicative_order(F32->generator()) == 31);
    auto F16 = Field::create(2, 4);
    CHECK(F16->modulus() == std::vector<std::uint32_t>{1, 1, 0, 0, 1});
    CHECK(F16->multiplicative_order(F16->generator()) == 15);
    auto F2 = Field::create(2, 1);
    CHECK(F2->generator() == Field::one());
}

TEST_CASE("the default moduli are irreducible by exhaustive trial division") {
    for (auto [p, d] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 4}, {2, 5}, {3, 4}, {2, 10}}) {
        auto m = default_modulus(p, d);
        CHECK(is_irreducible_mod_p(p, m));
    }
}

TEST_CASE("bad parameters are rejected") {
    CHECK_THROWS_AS(Field::create(4, 2), ValidationError);
    CHECK_THROWS_AS(Field::create(2, 4, std::vector<std::uint32_t>{1, 0, 0, 0, 1}), ValidationError);  // (x+1)^4
    CHECK_THROWS_AS(Field::create(2, 4, std::vector<std::uint32_t>{1, 1, 1, 1, 1}), ValidationError);  // order 5
    auto F = Field::create(2, 5);
    CHECK_THROWS_AS(F->dlog(Field::zero()), DomainError);
    CHECK_THROWS_AS(F->inv(Field::zero()), DomainError);
    CHECK_THROWS_AS(F->frob(F->generator(), 3, 1), ValidationError);
}

TEST_CASE("field axioms on random samples") {
    for (auto [p, d] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 5}, {3, 4}, {5, 2}}) {
        auto F = Field::create(p, d);
        std::mt19937 rng(7);
        std::uniform_int_distribution<std::uint32_t> pick(0, F->order() - 1);
        for (int t = 0; t < 500; ++t) {
            Elem a{pick(rng)}, b{pick(rng)}, c{pick(rng)};
            CHECK(F->mul(a, F->mul(b, c)) == F->mul(F->mul(a, b), c));
            CHECK(F->add(a, F->add(b, c)) == F->add(F->add(a, b), c));
            CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
            CHECK(F->add(a, F->neg(a)) == Field::zero());
            if (!a.is_zero()) CHECK(F->mul(a, F->inv(a)) == Field::one());
        }
    }
}

TEST_CASE("frobenius") {
    auto F = Field::create(2, 5);
    std::mt19937 rng(3);
    for (std::uint32_t v = 0; v < 32; ++v) {
        Elem e{v}, f{static_cast<std::uint32_t>(rng() % 32)};
        CHECK(F->frob(e, 2, 5) == e);
        CHECK(F->frob(F->add(e, f), 2, 1) == F->add(F->frob(e, 2, 1), F->frob(f, 2, 1)));
        CHECK(F->frob(F->frob(e, 2, 4), 2, 1) == e);
        CHECK(F->frob(F->frob(e, 2, -1), 2, 1) == e);
    }
    auto G = Field::create(2, 4);
    for (std::uint32_t v = 0; v < 16; ++v) CHECK(G->frob(Elem{v}, 4, 2) == Elem{v});
}

TEST_CASE("relative trace") {
    auto F = Field::create(2, 5);
    CHECK(F->rel_trace(Field::zero(), 2, 5) == Field::zero());
    int zeros = 0;
    for (std::uint32_t v = 0; v < 32; ++v) {
        Elem t = F->rel_trace(Elem{v}, 2, 5);
        CHECK(F->frob(t, 2, 1) == t);
        zeros += t.is_zero();
    }
    CHECK(zeros == 16);
    auto G = Field::create(2, 4);
    CHECK(G->rel_trace(Field::one(), 2, 4) == Field::zero());
    auto H = Field::create(2, 4);
    CHECK_THROWS_AS(H->rel_trace(Field::one(), 2, 3), ValidationError);
}

TEST_CASE("discrete logarithm and text forms") {
    auto F = Field::create(2, 5);
    CHECK(F->dlog(Field::one()) == 0);
    CHECK(F->dlog(F->exp(18)) == 18);
    for (int i = 0; i < 31; ++i)
        for (int j = 0; j < 31; ++j) CHECK(F->dlog(F->mul(F->exp(i), F->exp(j))) == (i + j) % 31);
    CHECK(F->to_string(Field::zero()) == "0");
    CHECK(F->to_string(F->exp(18)) == "a^18");
    CHECK(F->parse("a^18") == F->exp(18));
    CHECK(F->parse("a") == F->generator());
    CHECK(F->parse("a^-1") == F->inv(F->generator()));
    CHECK(F->parse("[0,0,1]") == F->exp(2));
    CHECK_THROWS_AS(F->parse("b^2"), ValidationError);
}

TEST_CASE("odd characteristic arithmetic") {
    auto F = Field::create(3, 4);
    CHECK(F->order() == 81);
    CHECK(F->multiplicative_order(F->generator()) == 80);
    CHECK(F->add(F->from_int(2), F->from_int(1)) == Field::zero());
    CHECK(F->neg(Field::one()) == F->from_int(2));
}

TEST_CASE("embeddings are field homomorphisms") {
    auto F = Field::create(2, 4);
    Embedding E(F, 3);
    CHECK(E.big()->order() == 4096);
    for (std::uint32_t a = 0; a < 16; ++a)
        for (std::uint32_t b = 0; b < 16; ++b) {
            CHECK(E(F->mul(Elem{a}, Elem{b})) == E.big()->mul(E(Elem{a}), E(Elem{b})));
            CHECK(E(F->add(Elem{a}, Elem{b})) == E.big()->add(E(Elem{a}), E(Elem{b})));
        }
    CHECK(E.preimage(E(F->exp(7))) == F->exp(7));
    CHECK(!E.preimage(E.big()->generator()).has_value());
}
