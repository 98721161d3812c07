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

#ifndef XNR_AGCODE_HPP
#define XNR_AGCODE_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "xnr/bounds.hpp"
#include "xnr/curve.hpp"
#include "xnr/linalg.hpp"

namespace xnr {

/// Linear code given by a generator matrix with independent rows.
struct LinearCode {
    Matrix G;

    std::size_t length() const noexcept { return G.cols(); }
    std::size_t dimension() const noexcept { return G.rows(); }
    const FieldPtr& field() const noexcept { return G.field(); }
};

/// Keeps a maximal independent subset of the rows.
LinearCode make_code(const Matrix& rows);

/// C_L(X, D, m P_inf), D = all affine rational points in canonical order.
struct OnePointCode {
    CurvePtr curve;
    std::uint64_t m = 0;
    LinearCode code;
    std::vector<std::uint64_t> poles;  // pole order of the function behind each kept row
    NumericalSemigroup semigroup;

    std::size_t length() const noexcept { return code.length(); }
    std::size_t dimension() const noexcept { return code.dimension(); }
};

/// Expected dimension: iota(m) below the length, iota(m) - iota(m - u) from there on.
std::uint64_t expected_dimension(const NumericalSemigroup& S, std::uint64_t u, std::uint64_t m);

/// ConsistencyError when the rank disagrees with expected_dimension (an incomplete basis).
OnePointCode code_new(const CurvePtr& curve, std::uint64_t m, BasisRoute route = BasisRoute::Auto,
                      const WeierstrassData* wd = nullptr);

/// Null space of G: a generator matrix of the dual code.
LinearCode code_dual(const LinearCode& c);

/// Codewords vanishing on `positions` (default: the first s), with those coordinates deleted. Requires s < k.
LinearCode code_shorten(const LinearCode& c, std::size_t s,
                        std::optional<std::vector<std::size_t>> positions = std::nullopt);

struct DistanceResult {
    std::optional<std::uint64_t> exact;  // empty on refusal
    std::vector<Elem> witness;           // a minimum-weight codeword
    bool early_exit = false;             // the floor was reached
    double log2_work = 0;                // log2 of the message-space size
};

/// Exact minimum distance when Q^k <= budget (Q the field order), otherwise a refusal. `floor` is a proven
/// lower bound; the search stops once it is met.
DistanceResult code_distance(const LinearCode& c, double budget, std::uint64_t floor = 0, int threads = 0);

std::uint64_t weight(const std::vector<Elem>& word);

/// Low-weight codewords on a full curve.
enum class WitnessCase { Lines = 1, LinesAndFibres = 2, Duality = 3 };

struct Witness {
    WitnessCase kind = WitnessCase::Lines;
    std::uint64_t m = 0;
    std::uint64_t expected = 0;            // u - m
    std::optional<std::uint64_t> weight;   // achieved weight of the constructed word
    std::uint64_t pole = 0;                // verified pole order of the function used
    std::vector<Elem> codeword;
    std::vector<std::uint64_t> candidates;  // Duality only: the two competing values
    std::optional<std::uint64_t> dstar;     // Duality only
    std::string note;
};

/// g = prod_{mu <= a} (x - alpha_mu), m = a q^{n-1}, 0 <= a < q^n.
Witness witness_lines(const CurvePtr& full, std::uint64_t a);
/// g = prod (x - alpha) prod (y - beta) on the trace-form curve T_n(y) = f_r(x); the alphas avoid the fibre
/// f_r(x) = gamma and the betas have trace gamma. m = a q^{n-1} + b (q^{n-1} + q^{r-1}).
Witness witness_lines_and_fibres(const FieldPtr& F, std::uint64_t q, std::uint32_t n, std::uint32_t r,
                                 std::uint64_t a, std::uint64_t b);
/// m = q^{2n-1} - q^{n-1} + b: not constructed; reports both candidate distances, d* and the designed value.
Witness witness_duality(const CurvePtr& full, std::uint64_t b);

/// CSV with header "# q n r s m length k" and one row per line in a^k / 0 text form.
void write_matrix_csv(std::ostream& os, const OnePointCode& c);
void write_matrix_csv(std::ostream& os, const LinearCode& c, const Curve& curve, std::uint64_t m);

}  // namespace xnr

#endif
