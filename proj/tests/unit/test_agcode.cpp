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

#include <sstream>

#include "xnr/agcode.hpp"
#include "xnr/error.hpp"

using namespace xnr;

namespace {

CurvePtr x43() {
    static const CurvePtr C = Curve::full(Field::create(2, 4), 2, 4, 3);
    return C;
}
CurvePtr x2_53() {
    static const CurvePtr C = Curve::create(5, 3, parse_qpoly(Field::create(2, 5), 2, "y^4 + a^18*y^2 + a*y"));
    return C;
}

}  // namespace

TEST_CASE("dimensions") {
    CHECK(code_new(x43(), 16).dimension() == 4);
    CHECK(code_new(x43(), 20).dimension() == 6);
    CHECK(code_new(x43(), 24).dimension() == 7);
    auto c0 = code_new(x43(), 0);
    CHECK(c0.dimension() == 1);
    CHECK(weight(c0.code.G.row_vector(0)) == 128);
    CHECK(code_new(x2_53(), 105).dimension() == 94);
    // abundant range
    auto big = code_new(x43(), 136);
    CHECK(big.dimension() == big.semigroup.iota(136) - big.semigroup.iota(8));
}

TEST_CASE("rows have weight at least u - m") {
    auto c = code_new(x43(), 24);
    for (std::size_t i = 0; i < c.dimension(); ++i) CHECK(weight(c.code.G.row_vector(i)) >= 128 - 24);
}

TEST_CASE("dual codes") {
    auto c = code_new(x43(), 20);
    auto d = code_dual(c.code);
    CHECK(d.dimension() == 128 - 6);
    CHECK((c.code.G * d.G.transpose()).is_zero());
    CHECK(linalg::same_row_space(code_dual(d).G, c.code.G));
    for (std::uint64_t m : {16, 20, 24})
        CHECK(code_dual(code_new(x43(), m).code).dimension() == code_new(x43(), 128 + 54 - m).dimension());
}

TEST_CASE("shortening") {
    auto c = code_new(x2_53(), 105);
    auto s7 = code_shorten(c.code, 7);
    CHECK(s7.length() == 121);
    CHECK(s7.dimension() == 87);
    CHECK(code_shorten(c.code, 0).G == c.code.G);
    CHECK_THROWS_AS(code_shorten(c.code, 94), ValidationError);
    auto s2 = code_shorten(c.code, 2, std::vector<std::size_t>{5, 9});
    CHECK(s2.length() == 126);
    CHECK(s2.dimension() == 92);
}

TEST_CASE("exact distances") {
    auto d16 = code_distance(code_new(x43(), 16).code, 1e12);
    REQUIRE(d16.exact.has_value());
    CHECK(*d16.exact == 112);
    CHECK(weight(d16.witness) == 112);
    auto d20 = code_distance(code_new(x43(), 20).code, 1e12, 108);
    CHECK(*d20.exact == 108);
    CHECK(d20.early_exit);
    auto refused = code_distance(code_new(x43(), 60).code, 1e12);
    CHECK(!refused.exact.has_value());
    CHECK(refused.log2_work > 40);
}

TEST_CASE("line witnesses") {
    for (std::uint64_t a : {0, 1, 2, 4}) {
        auto w = witness_lines(x43(), a);
        CHECK(*w.weight == 128 - 8 * a);
        CHECK(w.pole == 8 * a);
    }
    CHECK_THROWS_AS(witness_lines(x2_53(), 1), ValidationError);
}

TEST_CASE("line and fibre witnesses on the trace form") {
    auto F = Field::create(2, 4);
    auto w = witness_lines_and_fibres(F, 2, 4, 3, 1, 1);
    CHECK(w.m == 20);
    CHECK(w.pole == 20);
    CHECK(*w.weight == 108);
    CHECK(w.note.empty());
    CHECK_THROWS_AS(witness_lines_and_fibres(F, 2, 4, 3, 0, 8), ValidationError);
}

TEST_CASE("duality case is reported, not constructed") {
    auto w = witness_duality(x43(), 4);
    CHECK(w.m == 124);
    CHECK(!w.weight.has_value());
    CHECK(w.candidates == std::vector<std::uint64_t>{8, 4});
    CHECK(w.dstar.has_value());
}

TEST_CASE("matrix CSV") {
    std::ostringstream os;
    write_matrix_csv(os, code_new(x43(), 8));
    std::istringstream is(os.str());
    std::string l1, l2, l3;
    std::getline(is, l1);
    std::getline(is, l2);
    std::getline(is, l3);
    CHECK(l1 == "# q n r s m length k");
    CHECK(l2 == "# 2 4 3 3 8 128 2");
    CHECK(l3.rfind("a^0,a^0,", 0) == 0);
    // deterministic bytes
    std::ostringstream again;
    write_matrix_csv(again, code_new(x43(), 8));
    CHECK(again.str() == os.str());
}
