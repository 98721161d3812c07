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

#include "xnr/bounds.hpp"

#include <algorithm>
#include <string>

#include "xnr/error.hpp"

namespace xnr {

bool HStar::contains(std::uint64_t m) const { return std::binary_search(elems.begin(), elems.end(), m); }

std::size_t HStar::index_of(std::uint64_t m) const {
    const auto it = std::upper_bound(elems.begin(), elems.end(), m);
    return static_cast<std::size_t>(it - elems.begin());
}

HStar hstar(const NumericalSemigroup& S, std::uint64_t u) {
    HStar hs{u, {}};
    // beyond u + conductor every h has h - u in H
    const std::uint64_t top = u + S.conductor();
    for (std::uint64_t h = 0; h <= top; ++h) {
        const auto hi = static_cast<std::int64_t>(h);
        if (S.contains(hi) && !(h >= u && S.contains(hi - static_cast<std::int64_t>(u)))) hs.elems.push_back(h);
    }
    if (hs.elems.size() != u)
        throw ConsistencyError("H* has " + std::to_string(hs.elems.size()) + " elements, expected " + std::to_string(u));
    return hs;
}

std::vector<std::uint64_t> lambda_sizes(const HStar& hs) {
    std::vector<std::uint64_t> out(hs.elems.size(), 0);
    const std::uint64_t top = hs.elems.back();
    std::vector<bool> member(top + 1, false);
    for (auto m : hs.elems) member[m] = true;
    for (std::size_t i = 0; i < hs.elems.size(); ++i) {
        const std::uint64_t mi = hs.elems[i];
        std::uint64_t count = 0;
        for (std::size_t j = i; j < hs.elems.size(); ++j) count += member[hs.elems[j] - mi];
        out[i] = count;
    }
    return out;
}

DStar dstar(const HStar& hs, std::uint64_t m) {
    const std::size_t idx = hs.index_of(m);
    if (idx == 0) throw ValidationError("m must be nonnegative");
    const std::vector<std::uint64_t> lam = lambda_sizes(hs);
    DStar d;
    d.index = idx;
    d.used = hs.elems[idx - 1];
    d.adjusted = d.used != m;
    d.value = *std::min_element(lam.begin(), lam.begin() + static_cast<long>(idx));
    return d;
}

BoundReport bound_report(const NumericalSemigroup& S, std::uint64_t length, std::uint64_t k, std::uint64_t m,
                         std::optional<std::uint64_t> exact) {
    BoundReport r;
    r.length = length;
    r.k = k;
    r.m = m;
    if (m < length) r.designed = length - m;
    r.singleton = length - k + 1;
    r.dstar = dstar(hstar(S, length), m);
    r.exact = exact;
    return r;
}

}  // namespace xnr
