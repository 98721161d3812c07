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

#include "xnr/error.hpp"
#include "xnr/numsemi.hpp"

using namespace xnr;

using V = std::vector<std::uint64_t>;

TEST_CASE("genus and gaps") {
    CHECK(NumericalSemigroup({4, 10, 17}).genus() == 12);
    CHECK(NumericalSemigroup({8, 12, 18, 33}).genus() == 28);
    NumericalSemigroup one({1});
    CHECK(one.genus() == 0);
    CHECK(one.frobenius() == -1);
    CHECK(NumericalSemigroup({2, 3}).gaps() == V{1});
    NumericalSemigroup S({4, 10, 17});
    CHECK(S.gaps().size() == 12);
    CHECK(S.frobenius() == 23);
    CHECK(NumericalSemigroup({8, 12, 18, 33}).frobenius() == 55);
    CHECK_THROWS_AS(NumericalSemigroup({4, 6}), ValidationError);
    CHECK_THROWS_AS(NumericalSemigroup({}), ValidationError);
    CHECK_THROWS_AS(NumericalSemigroup({0, 1}), ValidationError);
}

TEST_CASE("iota") {
    NumericalSemigroup S({8, 12, 18, 33});
    CHECK(S.iota(0) == 1);
    CHECK(S.iota(16) == 4);
    CHECK(S.iota(20) == 6);
    CHECK(S.iota(24) == 7);
    CHECK(S.iota(-1) == 0);
    for (std::int64_t m = 56; m < 200; ++m) CHECK(S.iota(m) == static_cast<std::uint64_t>(m + 1 - 28));
}

TEST_CASE("minimal generators") {
    CHECK(NumericalSemigroup({8, 12, 33, 18, 57}).minimal_generators() == V{8, 12, 18, 33});
    CHECK(NumericalSemigroup({4, 10, 18, 17}).minimal_generators() == V{4, 10, 17});
    CHECK(NumericalSemigroup({2, 4, 3}).minimal_generators() == V{2, 3});
}

TEST_CASE("symmetry") {
    for (const V& g : {V{4, 10, 17}, V{8, 12, 18, 33}, V{8, 18, 20, 25}}) {
        NumericalSemigroup S(g);
        CHECK(S.is_symmetric());
        for (std::int64_t m = 0; m <= S.frobenius(); ++m) CHECK(S.contains(m) != S.contains(S.frobenius() - m));
    }
    CHECK(!NumericalSemigroup({3, 4, 5}).is_symmetric());
}

TEST_CASE("apery sets") {
    NumericalSemigroup S({4, 10, 17});
    CHECK(S.apery(4) == V{0, 17, 10, 27});
}

TEST_CASE("telescopic certificates") {
    auto r = sg_telescopic({8, 12, 18, 33, 57});
    REQUIRE(std::holds_alternative<TelescopicCertificate>(r));
    auto c = std::get<TelescopicCertificate>(r);
    CHECK(c.d == V{8, 4, 2, 1, 1});
    CHECK(c.largest_gap == 55);
    CHECK(c.genus == 28);

    auto r2 = sg_telescopic({4, 10, 17});
    REQUIRE(std::holds_alternative<TelescopicCertificate>(r2));
    CHECK(std::get<TelescopicCertificate>(r2).largest_gap == 23);
    CHECK(std::get<TelescopicCertificate>(r2).genus == 12);

    // <q^s, q^r + 1> at q = 2, r = 3, s = 1
    auto r3 = sg_telescopic({2, 9});
    REQUIRE(std::holds_alternative<TelescopicCertificate>(r3));
    CHECK(std::get<TelescopicCertificate>(r3).genus == 8 * (2 - 1) / 2);
}

TEST_CASE("telescopic refusal names the failing step") {
    auto r = sg_telescopic({8, 12, 33, 18, 57});
    REQUIRE(std::holds_alternative<TelescopicRefusal>(r));
    CHECK(std::get<TelescopicRefusal>(r).failing_index == 4);
    CHECK(std::holds_alternative<TelescopicCertificate>(sg_telescopic_sorted({8, 12, 33, 18, 57})));
}

TEST_CASE("equality compares elements") {
    CHECK(NumericalSemigroup({4, 10, 17}) == NumericalSemigroup({4, 10, 18, 17}));
    CHECK(!(NumericalSemigroup({4, 10, 17}) == NumericalSemigroup({4, 10, 19})));
}
