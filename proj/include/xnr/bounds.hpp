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

#ifndef XNR_BOUNDS_HPP
#define XNR_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "xnr/numsemi.hpp"

namespace xnr {

/// H* = H \ (u + H): the m at which the one-point code tower grows. Always exactly u elements.
struct HStar {
    std::uint64_t u = 0;
    std::vector<std::uint64_t> elems;  // ascending, m_1 = 0
    bool contains(std::uint64_t m) const;
    /// 1-based index of the largest m_i <= m.
    std::size_t index_of(std::uint64_t m) const;
};
/// ConsistencyError if the cardinality is not u.
HStar hstar(const NumericalSemigroup& S, std::uint64_t u);

/// #Lambda*_i = #{m in H* : m - m_i in H*} for every i.
std::vector<std::uint64_t> lambda_sizes(const HStar& hs);

struct DStar {
    std::uint64_t value = 0;
    std::size_t index = 0;   // i with m_i the element used
    std::uint64_t used = 0;  // m_i
    bool adjusted = false;   // m was not in H*; the largest m_i <= m was used instead
};
/// d*(i) = min_{j <= i} #Lambda*_j for the index of m.
DStar dstar(const HStar& hs, std::uint64_t m);

struct BoundReport {
    std::uint64_t length = 0, k = 0, m = 0;
    std::optional<std::uint64_t> designed;  // u - m, only for m < u
    std::uint64_t singleton = 0;            // u - k + 1
    DStar dstar;
    std::optional<std::uint64_t> exact;
};
BoundReport bound_report(const NumericalSemigroup& S, std::uint64_t length, std::uint64_t k, std::uint64_t m,
                         std::optional<std::uint64_t> exact = std::nullopt);

}  // namespace xnr

#endif
