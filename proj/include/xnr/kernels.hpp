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

#ifndef XNR_KERNELS_HPP
#define XNR_KERNELS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "xnr/finite_field.hpp"
#include "xnr/polynomial.hpp"

namespace xnr::kernels {

/// Data for N(f)(t) = Res_y(g_s(y) - rhs(t), f(t, y)) at many abscissae t, all over one field.
struct NormProblem {
    const Field* field = nullptr;
    Poly gs;              // g_s(y) as a dense polynomial, monic
    Poly rhs;             // right side of the curve equation, in x
    std::vector<Poly> f;  // f = sum_j f[j](x) y^j
};

/// Affine solutions (x, y) of g_s(y) = rhs(x), grouped by x in increasing dlog-or-(-1) order.
using PointList = std::vector<std::pair<Elem, Elem>>;

struct MinWeight {
    std::uint64_t weight = 0;
    std::vector<Elem> codeword;
    bool early_exit = false;  // stopped on reaching the floor
};

// OpenMP versions. `threads` = 0 keeps the runtime default.
std::vector<Elem> norm_values(const NormProblem& np, const std::vector<Elem>& nodes, int threads = 0);
PointList enumerate_points(const Field& F, const Poly& gs, const Poly& rhs, int threads = 0);
/// Minimum nonzero weight of the row space of `rows` (each of equal length). Enumerates one representative of
/// every projective class via a p-ary Gray code; stops as soon as the weight `floor` is seen.
MinWeight min_weight(const Field& F, const std::vector<std::vector<Elem>>& rows, std::uint64_t floor = 0,
                     int threads = 0);

namespace serial {
std::vector<Elem> norm_values(const NormProblem& np, const std::vector<Elem>& nodes);
PointList enumerate_points(const Field& F, const Poly& gs, const Poly& rhs);
/// Plain enumeration of every nonzero message; no Gray code, no early exit.
MinWeight min_weight(const Field& F, const std::vector<std::vector<Elem>>& rows);
}  // namespace serial

/// Elements of F in canonical order: 0, then a^0, a^1, ...
std::vector<Elem> canonical_elements(const Field& F);

}  // namespace xnr::kernels

#endif
