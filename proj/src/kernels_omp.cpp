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

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <mutex>

#include "xnr/error.hpp"
#include "xnr/kernels.hpp"

namespace xnr::kernels {
namespace {

void set_threads(int threads) {
    if (threads > 0) omp_set_num_threads(threads);
}

}  // namespace

std::vector<Elem> norm_values(const NormProblem& np, const std::vector<Elem>& nodes, int threads) {
    set_threads(threads);
    const Field& F = *np.field;
    std::vector<Elem> out(nodes.size());
    const long n = static_cast<long>(nodes.size());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) {
        const Elem t = nodes[static_cast<std::size_t>(i)];
        Poly c = np.gs;
        c.c[0] = F.sub(c.c[0], poly::eval(F, np.rhs, t));
        c.trim();
        Poly fy;
        fy.c.resize(np.f.size());
        for (std::size_t j = 0; j < np.f.size(); ++j) fy.c[j] = poly::eval(F, np.f[j], t);
        fy.trim();
        out[static_cast<std::size_t>(i)] = poly::resultant_monic(F, c, fy);
    }
    return out;
}

PointList enumerate_points(const Field& F, const Poly& gs, const Poly& rhs, int threads) {
    set_threads(threads);
    const std::vector<Elem> elems = canonical_elements(F);
    // fibres of y -> g_s(y), each kept in canonical y order
    std::vector<std::vector<Elem>> fibre(F.order());
    for (Elem y : elems) fibre[poly::eval(F, gs, y).v].push_back(y);

    std::vector<PointList> per_x(elems.size());
    const long n = static_cast<long>(elems.size());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) {
        const Elem x = elems[static_cast<std::size_t>(i)];
        for (Elem y : fibre[poly::eval(F, rhs, x).v]) per_x[static_cast<std::size_t>(i)].emplace_back(x, y);
    }
    PointList pts;
    for (auto& b : per_x) pts.insert(pts.end(), b.begin(), b.end());
    return pts;
}

MinWeight min_weight(const Field& F, const std::vector<std::vector<Elem>>& rows, std::uint64_t floor, int threads) {
    if (rows.empty()) throw ValidationError("empty generator matrix");
    set_threads(threads);
    const std::size_t k = rows.size(), len = rows[0].size();
    const std::uint32_t p = F.characteristic(), d = F.degree();

    // GF(p)-basis of the message space: (basis element t) * row i
    std::vector<std::vector<Elem>> ex;
    for (std::size_t i = 0; i < k; ++i) {
        std::uint32_t pt = 1;
        for (std::uint32_t t = 0; t < d; ++t, pt *= p) {
            std::vector<Elem> r(len);
            for (std::size_t j = 0; j < len; ++j) r[j] = F.mul(Elem{pt}, rows[i][j]);
            ex.push_back(std::move(r));
        }
    }

    struct Task {
        std::size_t lead;
        std::uint64_t prefix;
    };
    constexpr std::uint64_t kSplit = 256;
    std::vector<Task> tasks;
    std::vector<std::uint32_t> split_digits(k);
    for (std::size_t lead = 0; lead < k; ++lead) {
        const std::uint32_t free_digits = static_cast<std::uint32_t>(d * (k - 1 - lead));
        std::uint32_t S = 0;
        std::uint64_t parts = 1;
        while (S < free_digits && parts < kSplit) ++S, parts *= p;
        split_digits[lead] = S;
        for (std::uint64_t pre = 0; pre < parts; ++pre) tasks.push_back({lead, pre});
    }

    std::atomic<bool> stop{false};
    std::mutex mu;
    MinWeight result{len + 1, {}, false};

    const auto add_into = [&](std::vector<Elem>& w, const std::vector<Elem>& r, std::uint32_t times) {
        for (std::uint32_t c = 0; c < times; ++c)
            for (std::size_t j = 0; j < len; ++j) w[j] = F.add(w[j], r[j]);
    };

    const long ntasks = static_cast<long>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long ti = 0; ti < ntasks; ++ti) {
        if (stop.load(std::memory_order_relaxed)) continue;
        const Task task = tasks[static_cast<std::size_t>(ti)];
        const std::size_t base = (task.lead + 1) * d;  // first expanded row of the free part
        const std::uint32_t free_digits = static_cast<std::uint32_t>(d * (k - 1 - task.lead));
        const std::uint32_t S = split_digits[task.lead], L = free_digits - S;

        std::vector<Elem> w = rows[task.lead];
        std::uint64_t pre = task.prefix;
        for (std::uint32_t t = 0; t < S; ++t, pre /= p)
            add_into(w, ex[base + L + t], static_cast<std::uint32_t>(pre % p));

        std::uint64_t steps = 1;
        for (std::uint32_t t = 0; t < L; ++t) steps *= p;

        std::uint64_t local_best = len + 1;
        std::vector<Elem> local_word;
        std::uint64_t wt = 0;
        for (Elem e : w) wt += !e.is_zero();
        for (std::uint64_t i = 0;; ++i) {
            if (wt > 0 && wt < local_best) {
                local_best = wt;
                local_word = w;
                if (wt <= floor) break;
            }
            if (i + 1 == steps) break;
            if ((i & 1023) == 0 && stop.load(std::memory_order_relaxed)) break;
            // modular Gray code: the digit that changes is the number of trailing (p-1) digits of i
            std::uint32_t c = 0;
            if (p == 2) {
                c = static_cast<std::uint32_t>(std::countr_one(i));
            } else {
                for (std::uint64_t v = i; v % p == p - 1; v /= p) ++c;
            }
            const std::vector<Elem>& r = ex[base + c];
            wt = 0;
            if (p == 2) {
                for (std::size_t j = 0; j < len; ++j) {
                    w[j].v ^= r[j].v;
                    wt += w[j].v != 0;
                }
            } else {
                for (std::size_t j = 0; j < len; ++j) {
                    w[j] = F.add(w[j], r[j]);
                    wt += !w[j].is_zero();
                }
            }
        }
        if (local_best <= len) {
            std::lock_guard<std::mutex> lock(mu);
            if (local_best < result.weight) {
                result.weight = local_best;
                result.codeword = std::move(local_word);
            }
            if (result.weight <= floor) {
                result.early_exit = true;
                stop.store(true);
            }
        }
    }
    if (result.weight > len) result.weight = 0;
    return result;
}

}  // namespace xnr::kernels
