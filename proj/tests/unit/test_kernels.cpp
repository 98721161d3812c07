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

#include "xnr/curve.hpp"
#include "xnr/kernels.hpp"

using namespace xnr;

TEST_CASE("parallel and serial point enumeration agree") {
    auto F = Field::create(2, 5);
    auto C = Curve::create(5, 3, parse_qpoly(F, 2, "y^4 + a^18*y^2 + a*y"));
    const auto omp = kernels::enumerate_points(*F, C->gs_poly(), C->rhs());
    const auto ser = kernels::serial::enumerate_points(*F, C->gs_poly(), C->rhs());
    CHECK(omp == ser);
    CHECK(omp.size() == 128);
}

TEST_CASE("parallel and serial norm values agree") {
    auto F = Field::create(2, 4);
    auto C = Curve::full(F, 2, 4, 3);
    auto f = CurveFunction::y(C).pow(3) + CurveFunction::x(C).pow(5) + CurveFunction::constant(C, F->exp(3));
    kernels::NormProblem np{F.get(), C->gs_poly(), C->rhs(), f.coeffs()};
    const auto nodes = kernels::canonical_elements(*F);
    CHECK(kernels::norm_values(np, nodes) == kernels::serial::norm_values(np, nodes));
}

TEST_CASE("minimum weight: Gray code search against plain enumeration") {
    auto F = Field::create(2, 3);
    std::mt19937 rng(9);
    for (int t = 0; t < 10; ++t) {
        const std::size_t k = 1 + rng() % 3, len = 6 + rng() % 6;
        std::vector<std::vector<Elem>> rows(k, std::vector<Elem>(len));
        for (auto& r : rows)
            for (auto& e : r) e = Elem{static_cast<std::uint32_t>(rng() % 8)};
        auto a = kernels::min_weight(*F, rows);
        auto b = kernels::serial::min_weight(*F, rows);
        CHECK(a.weight == b.weight);
        CHECK(static_cast<std::uint64_t>(std::count_if(a.codeword.begin(), a.codeword.end(),
                                                       [](Elem e) { return !e.is_zero(); })) == a.weight);
    }
}

TEST_CASE("minimum weight in odd characteristic") {
    auto F = Field::create(3, 2);
    std::mt19937 rng(10);
    std::vector<std::vector<Elem>> rows(3, std::vector<Elem>(8));
    for (auto& r : rows)
        for (auto& e : r) e = Elem{static_cast<std::uint32_t>(rng() % 9)};
    CHECK(kernels::min_weight(*F, rows).weight == kernels::serial::min_weight(*F, rows).weight);
}

TEST_CASE("canonical order starts with zero then powers of the generator") {
    auto F = Field::create(2, 4);
    auto e = kernels::canonical_elements(*F);
    REQUIRE(e.size() == 16);
    CHECK(e[0] == Field::zero());
    for (int k = 0; k < 15; ++k) CHECK(e[k + 1] == F->exp(k));
}
