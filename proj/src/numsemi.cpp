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

#include "xnr/numsemi.hpp"

#include <algorithm>
#include <numeric>

#include "xnr/error.hpp"

namespace xnr {

NumericalSemigroup::NumericalSemigroup(std::vector<std::uint64_t> generators) : gens_(std::move(generators)) {
    if (gens_.empty()) throw ValidationError("a numerical semigroup needs at least one generator");
    std::sort(gens_.begin(), gens_.end());
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    if (gens_.front() == 0) throw ValidationError("generators must be positive");
    std::uint64_t g = 0;
    for (auto a : gens_) g = std::gcd(g, a);
    if (g != 1) throw ValidationError("generators have gcd " + std::to_string(g) + " != 1");

    // grow the table until a run of min-generator consecutive members appears
    const std::uint64_t a1 = gens_.front(), am = gens_.back();
    const std::uint64_t cap = a1 * am + am + 1;
    member_.assign(1, true);
    std::uint64_t run = 1;
    for (std::uint64_t m = 1; m < cap; ++m) {
        bool in = false;
        for (auto a : gens_) {
            if (a > m) break;
            if (member_[m - a]) {
                in = true;
                break;
            }
        }
        member_.push_back(in);
        run = in ? run + 1 : 0;
        if (run >= a1 && m + 1 >= am) break;
    }
    // extend to frobenius + max generator
    frobenius_ = -1;
    for (std::size_t m = member_.size(); m-- > 0;)
        if (!member_[m]) {
            frobenius_ = static_cast<std::int64_t>(m);
            break;
        }
    const std::size_t want = static_cast<std::size_t>(frobenius_ + 1) + am + 1;
    while (member_.size() < want) member_.push_back(true);
    cum_.resize(member_.size());
    std::uint64_t acc = 0;
    for (std::size_t m = 0; m < member_.size(); ++m) {
        if (member_[m]) ++acc;
        else ++genus_;
        cum_[m] = acc;
    }
}

bool NumericalSemigroup::contains(std::int64_t m) const noexcept {
    if (m < 0) return false;
    if (static_cast<std::uint64_t>(m) >= member_.size()) return true;
    return member_[static_cast<std::size_t>(m)];
}

std::vector<std::uint64_t> NumericalSemigroup::gaps() const {
    std::vector<std::uint64_t> out;
    for (std::int64_t m = 1; m <= frobenius_; ++m)
        if (!member_[static_cast<std::size_t>(m)]) out.push_back(static_cast<std::uint64_t>(m));
    return out;
}

std::uint64_t NumericalSemigroup::iota(std::int64_t m) const noexcept {
    if (m < 0) return 0;
    const auto um = static_cast<std::uint64_t>(m);
    if (um < cum_.size()) return cum_[um];
    return cum_.back() + (um - (cum_.size() - 1));
}

std::vector<std::uint64_t> NumericalSemigroup::elements_up_to(std::uint64_t m) const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t h = 0; h <= m; ++h)
        if (contains(static_cast<std::int64_t>(h))) out.push_back(h);
    return out;
}

std::vector<std::uint64_t> NumericalSemigroup::minimal_generators() const {
    // h is a minimal generator iff h != 0 is in S and h is not a sum of two nonzero members
    std::vector<std::uint64_t> out;
    for (auto a : gens_) {
        bool decomposable = false;
        for (std::uint64_t b = 1; b < a && !decomposable; ++b)
            decomposable = contains(static_cast<std::int64_t>(b)) && contains(static_cast<std::int64_t>(a - b));
        if (!decomposable) out.push_back(a);
    }
    return out;
}

std::vector<std::uint64_t> NumericalSemigroup::apery(std::uint64_t w) const {
    if (w == 0 || !contains(static_cast<std::int64_t>(w))) throw ValidationError("Apery set needs a nonzero member");
    std::vector<std::uint64_t> out(w, 0);
    std::vector<bool> seen(w, false);
    std::uint64_t found = 0;
    for (std::uint64_t h = 0; found < w; ++h)
        if (contains(static_cast<std::int64_t>(h)) && !seen[h % w]) {
            seen[h % w] = true;
            out[h % w] = h;
            ++found;
        }
    return out;
}

bool NumericalSemigroup::is_symmetric() const noexcept {
    for (std::int64_t m = 0; m <= frobenius_; ++m)
        if (contains(m) == contains(frobenius_ - m)) return false;
    return true;
}

bool NumericalSemigroup::operator==(const NumericalSemigroup& o) const {
    if (frobenius_ != o.frobenius_ || genus_ != o.genus_) return false;
    for (std::int64_t m = 0; m <= frobenius_; ++m)
        if (contains(m) != o.contains(m)) return false;
    return true;
}

namespace {

// Nonnegative coefficients c with sum c_j b_j == target, or nothing.
std::optional<std::vector<std::uint64_t>> representation(const std::vector<std::uint64_t>& b, std::uint64_t target) {
    std::vector<int> via(target + 1, -1);  // generator index used to reach t, -2 for t == 0
    via[0] = -2;
    for (std::uint64_t t = 1; t <= target; ++t)
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] <= t && via[t - b[j]] != -1) {
                via[t] = static_cast<int>(j);
                break;
            }
    if (via[target] == -1) return std::nullopt;
    std::vector<std::uint64_t> c(b.size(), 0);
    for (std::uint64_t t = target; t > 0; t -= b[static_cast<std::size_t>(via[t])]) ++c[static_cast<std::size_t>(via[t])];
    return c;
}

}  // namespace

TelescopicResult sg_telescopic(const std::vector<std::uint64_t>& seq) {
    if (seq.empty()) throw ValidationError("empty sequence");
    for (auto a : seq)
        if (a == 0) throw ValidationError("sequence entries must be positive");
    TelescopicCertificate cert;
    cert.sequence = seq;
    std::uint64_t g = 0;
    for (auto a : seq) {
        g = std::gcd(g, a);
        cert.d.push_back(g);
    }
    if (g != 1) throw ValidationError("sequence has gcd " + std::to_string(g) + " != 1");
    cert.witnesses.emplace_back();
    for (std::size_t i = 1; i < seq.size(); ++i) {
        // a_{i+1}/d_{i+1} must lie in S_i = < a_1/d_i, ..., a_i/d_i >
        std::vector<std::uint64_t> prev;
        for (std::size_t j = 0; j < i; ++j) prev.push_back(seq[j] / cert.d[i - 1]);
        const std::uint64_t target = seq[i] / cert.d[i];
        auto rep = representation(prev, target);
        if (!rep)
            return TelescopicRefusal{i + 1, std::to_string(seq[i]) + "/" + std::to_string(cert.d[i]) + " = " +
                                                std::to_string(target) + " is not in the semigroup of the previous terms"};
        cert.witnesses.push_back(std::move(*rep));
    }
    // l_g = sum (d_{i-1}/d_i - 1) a_i with d_0 = 0
    std::int64_t lg = 0;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        const std::int64_t dprev = i == 0 ? 0 : static_cast<std::int64_t>(cert.d[i - 1]);
        lg += (dprev / static_cast<std::int64_t>(cert.d[i]) - 1) * static_cast<std::int64_t>(seq[i]);
    }
    cert.largest_gap = lg;
    cert.genus = (lg + 1) / 2;
    const NumericalSemigroup S(seq);
    if (S.frobenius() != lg || static_cast<std::int64_t>(S.genus()) != cert.genus)
        throw ConsistencyError("telescopic formulas disagree with enumeration");
    return cert;
}

TelescopicResult sg_telescopic_sorted(std::vector<std::uint64_t> seq) {
    std::sort(seq.begin(), seq.end());
    return sg_telescopic(seq);
}

}  // namespace xnr
