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

#ifndef XNR_NUMSEMI_HPP
#define XNR_NUMSEMI_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace xnr {

/**
 * @brief Numerical semigroup given by generators with gcd 1.
 *
 * Membership is tabulated up to frobenius() + max generator; every larger integer is a member.
 */
class NumericalSemigroup {
   public:
    /// Throws ValidationError on an empty list, a zero generator or gcd != 1.
    explicit NumericalSemigroup(std::vector<std::uint64_t> generators);

    const std::vector<std::uint64_t>& generators() const noexcept { return gens_; }
    bool contains(std::int64_t m) const noexcept;
    std::uint64_t genus() const noexcept { return genus_; }
    /// Largest gap, -1 when the semigroup is all of N_0.
    std::int64_t frobenius() const noexcept { return frobenius_; }
    std::uint64_t conductor() const noexcept { return static_cast<std::uint64_t>(frobenius_ + 1); }
    std::uint64_t multiplicity() const noexcept { return gens_.front(); }
    std::vector<std::uint64_t> gaps() const;
    /// Number of elements <= m (0 for m < 0).
    std::uint64_t iota(std::int64_t m) const noexcept;
    /// Elements in increasing order up to and including m.
    std::vector<std::uint64_t> elements_up_to(std::uint64_t m) const;
    std::vector<std::uint64_t> minimal_generators() const;
    /// Smallest element in each residue class modulo w (w must be a member).
    std::vector<std::uint64_t> apery(std::uint64_t w) const;
    bool is_symmetric() const noexcept;
    /// Same elements (compared up to the larger conductor).
    bool operator==(const NumericalSemigroup& o) const;

   private:
    std::vector<std::uint64_t> gens_;
    std::vector<bool> member_;       // member_[m] for m < member_.size()
    std::vector<std::uint64_t> cum_;  // cum_[m] = #{h in S : h <= m}
    std::uint64_t genus_ = 0;
    std::int64_t frobenius_ = -1;
};

/// Sequence a_1..a_m, gcd prefixes d_1..d_m, per-step witnesses, and the closed-form l_g and g.
struct TelescopicCertificate {
    std::vector<std::uint64_t> sequence;
    std::vector<std::uint64_t> d;
    /// witnesses[i] (i >= 1) expresses a_{i+1}/d_{i+1} as sum_j c_j a_j/d_i over j < i+1.
    std::vector<std::vector<std::uint64_t>> witnesses;
    std::int64_t largest_gap = 0;
    std::int64_t genus = 0;
};

struct TelescopicRefusal {
    std::size_t failing_index = 0;  // 1-based position in the sequence
    std::string reason;
};

using TelescopicResult = std::variant<TelescopicCertificate, TelescopicRefusal>;

/// Certifies the sequence in the given order; the closed-form values are cross-checked against enumeration.
TelescopicResult sg_telescopic(const std::vector<std::uint64_t>& sequence);
/// sg_telescopic on the ascending order of the sequence.
TelescopicResult sg_telescopic_sorted(std::vector<std::uint64_t> sequence);

}  // namespace xnr

#endif
