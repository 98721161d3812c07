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

// Reference implementations: the simplest loops that compute the same results as the OpenMP kernels.

#include "xnr/error.hpp"
#include "xnr/kernels.hpp"

namespace xnr::kernels {

std::vector<Elem> canonical_elements(const Field& F) {
    std::vector<Elem> out{Field::zero()};
    for (std::uint32_t k = 0; k + 1 < F.order(); ++k) out.push_back(F.exp(k));
    return out;
}

namespace serial {

std::vector<Elem> norm_values(const NormProblem& np, const std::vector<Elem>& nodes) {
    const Field& F = *np.field;
    std::vector<Elem> out;
    out.reserve(nodes.size());
    for (Elem t : nodes) {
        Poly c = np.gs;
        if (c.c.empty()) c.c.push_back(Elem{});
        c.c[0] = F.sub(c.c[0], poly::eval(F, np.rhs, t));
        c.trim();
        std::vector<Elem> fy(np.f.size());
        for (std::size_t j = 0; j < np.f.size(); ++j) fy[j] = poly::eval(F, np.f[j], t);
        out.push_back(poly::resultant_monic(F, c, Poly(std::move(fy))));
    }
    return out;
}

PointList enumerate_points(const Field& F, const Poly& gs, const Poly& rhs) {
    const std::vector<Elem> elems = canonical_elements(F);
    PointList pts;
    for (Elem x : elems) {
        const Elem c = poly::eval(F, rhs, x);
        for (Elem y : elems)
            if (poly::eval(F, gs, y) == c) pts.emplace_back(x, y);
    }
    return pts;
}

MinWeight min_weight(const Field& F, const std::vector<std::vector<Elem>>& rows) {
    if (rows.empty()) throw ValidationError("empty generator matrix");
    const std::size_t k = rows.size(), len = rows[0].size();
    const std::uint64_t Q = F.order();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (total > (std::uint64_t{1} << 40) / Q) throw BudgetError("message space too large for serial search");
        total *= Q;
    }
    MinWeight best{len + 1, {}, false};
    std::vector<Elem> msg(k), word(len);
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        std::uint64_t t = idx;
        for (std::size_t i = 0; i < k; ++i, t /= Q) msg[i] = Elem{static_cast<std::uint32_t>(t % Q)};
        std::fill(word.begin(), word.end(), Elem{});
        for (std::size_t i = 0; i < k; ++i) {
            if (msg[i].is_zero()) continue;
            for (std::size_t j = 0; j < len; ++j) word[j] = F.add(word[j], F.mul(msg[i], rows[i][j]));
        }
        std::uint64_t w = 0;
        for (Elem e : word) w += !e.is_zero();
        if (w > 0 && w < best.weight) best = {w, word, false};
    }
    if (best.weight > len) best.weight = 0;  // zero code
    return best;
}

}  // namespace serial
}  // namespace xnr::kernels
