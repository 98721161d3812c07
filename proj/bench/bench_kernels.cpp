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

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "xnr/agcode.hpp"
#include "xnr/curve.hpp"
#include "xnr/kernels.hpp"

using namespace xnr;

namespace {

const CurvePtr& curve() {
    static const CurvePtr C =
        Curve::create(5, 3, parse_qpoly(Field::create(2, 5), 2, "y^8 + a^12*y^4 + a^20*y^2 + a*y"));
    return C;
}

kernels::NormProblem norm_problem() {
    const auto& C = curve();
    const auto f = CurveFunction::y(C).pow(7) * CurveFunction::x(C).pow(9) + CurveFunction::y(C).pow(3);
    return {C->field().get(), C->gs_poly(), C->rhs(), f.coeffs()};
}

std::vector<std::vector<Elem>> generator_rows(std::uint64_t m) {
    static const CurvePtr X = Curve::full(Field::create(2, 4), 2, 4, 3);
    const auto c = code_new(X, m);
    std::vector<std::vector<Elem>> rows;
    for (std::size_t i = 0; i < c.dimension(); ++i) rows.push_back(c.code.G.row_vector(i));
    return rows;
}

void BM_points_serial(benchmark::State& st) {
    const auto& C = curve();
    for (auto _ : st) benchmark::DoNotOptimize(kernels::serial::enumerate_points(*C->field(), C->gs_poly(), C->rhs()));
}
void BM_points_omp(benchmark::State& st) {
    const auto& C = curve();
    for (auto _ : st) benchmark::DoNotOptimize(kernels::enumerate_points(*C->field(), C->gs_poly(), C->rhs()));
}

void BM_norm_serial(benchmark::State& st) {
    const auto np = norm_problem();
    const auto nodes = kernels::canonical_elements(*np.field);
    for (auto _ : st) benchmark::DoNotOptimize(kernels::serial::norm_values(np, nodes));
}
void BM_norm_omp(benchmark::State& st) {
    const auto np = norm_problem();
    const auto nodes = kernels::canonical_elements(*np.field);
    for (auto _ : st) benchmark::DoNotOptimize(kernels::norm_values(np, nodes));
}

void BM_min_weight_serial(benchmark::State& st) {
    const auto rows = generator_rows(static_cast<std::uint64_t>(st.range(0)));
    const FieldPtr F = Field::create(2, 4);
    for (auto _ : st) benchmark::DoNotOptimize(kernels::serial::min_weight(*F, rows));
}
void BM_min_weight_omp(benchmark::State& st) {
    const auto rows = generator_rows(static_cast<std::uint64_t>(st.range(0)));
    const FieldPtr F = Field::create(2, 4);
    for (auto _ : st) benchmark::DoNotOptimize(kernels::min_weight(*F, rows));
}

}  // namespace

BENCHMARK(BM_points_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_points_omp)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_norm_serial)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_norm_omp)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_min_weight_serial)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_min_weight_omp)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
