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

#ifndef XNR_FINITE_FIELD_HPP
#define XNR_FINITE_FIELD_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace xnr {

/**
 * @brief Element of a finite field GF(p^d), stored as its residue polynomial packed in base p.
 *
 * The packed value is sum_i c_i p^i where c_0 + c_1 t + ... + c_{d-1} t^{d-1} is the residue of the element
 * modulo the field modulus. Elements carry no owner; all arithmetic goes through the owning Field.
 */
struct Elem {
    std::uint32_t v = 0;

    constexpr bool is_zero() const noexcept { return v == 0; }
    constexpr auto operator<=>(const Elem&) const = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/**
 * @brief Exact arithmetic in GF(p^d) with log/antilog tables built once at construction.
 *
 * The generator is the residue class of the indeterminate and must have multiplicative order p^d - 1.
 * Fields are immutable after construction and safe to share between threads.
 */
class Field {
   public:
    /// Largest supported field order; tables are dense.
    static constexpr std::uint64_t max_order = std::uint64_t{1} << 24;

    /**
     * Builds GF(p^d). Without an explicit modulus, the Conway polynomial is used where tabulated, otherwise the
     * lexicographically smallest primitive polynomial. Throws ValidationError on a non-prime p, a modulus that is
     * not monic of degree d, a reducible modulus or a modulus whose root is not primitive.
     */
    static FieldPtr create(std::uint32_t p, std::uint32_t d,
                           std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

    std::uint32_t characteristic() const noexcept { return p_; }
    std::uint32_t degree() const noexcept { return d_; }
    std::uint32_t order() const noexcept { return order_; }
    /// Coefficients m_0..m_d of the monic modulus.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    static constexpr Elem zero() noexcept { return Elem{0}; }
    static constexpr Elem one() noexcept { return Elem{1}; }
    Elem generator() const noexcept { return exp_[1]; }
    bool contains(Elem e) const noexcept { return e.v < order_; }

    /// Image of the integer c under Z -> GF(p).
    Elem from_int(std::int64_t c) const noexcept;
    Elem from_coeffs(std::span<const std::uint32_t> c) const;
    std::vector<std::uint32_t> coeffs(Elem e) const;

    Elem add(Elem a, Elem b) const noexcept {
        if (p_ == 2) return Elem{a.v ^ b.v};
        return add_odd(a, b);
    }
    Elem neg(Elem a) const noexcept {
        if (p_ == 2 || a.v == 0) return a;
        return exp_[log_[a.v] + half_];
    }
    Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const noexcept {
        if (a.v == 0 || b.v == 0) return Elem{0};
        return exp_[log_[a.v] + log_[b.v]];
    }
    /// Throws DomainError on zero.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const;
    Elem pow(Elem a, std::int64_t k) const;

    /// generator^k for any integer k.
    Elem exp(std::int64_t k) const noexcept;
    /// k in [0, order-1) with generator^k == e. Throws DomainError on zero.
    std::uint32_t dlog(Elem e) const;
    std::uint32_t multiplicative_order(Elem e) const;

    /// e^{q^k}. q must be a power of the characteristic; negative k yields q^{-k}-th roots.
    Elem frob(Elem e, std::uint64_t q, std::int64_t k) const;
    /// T_n(e) = e + e^q + ... + e^{q^{n-1}}; requires q^n == order().
    Elem rel_trace(Elem e, std::uint64_t q, std::uint32_t n) const;

    /// Exponent e with q == p^e, or ValidationError.
    std::uint32_t q_exponent(std::uint64_t q) const;

    /// Text form: "0" or "a^k".
    std::string to_string(Elem e) const;
    /// Accepts "0", "1", "a", "a^k" (k may be negative) and "[c0,c1,...]".
    Elem parse(std::string_view text) const;

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

   private:
    Field() = default;
    Elem add_odd(Elem a, Elem b) const noexcept;

    std::uint32_t p_ = 2, d_ = 1, order_ = 2, half_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<Elem> exp_;            // length 2*(order-1), exp_[k] = generator^k
    std::vector<std::uint32_t> log_;   // log_[0] unused
    std::vector<std::uint32_t> zech_;  // odd p only: log(1 + g^k), or order-1 when 1 + g^k == 0
};

/// Default modulus for (p, d): the tabulated Conway polynomial if known, else the smallest primitive polynomial.
std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t d);
/// True iff the monic polynomial has no monic factor of degree 1..d/2 over GF(p) (exhaustive trial division).
bool is_irreducible_mod_p(std::uint32_t p, std::span<const std::uint32_t> monic);
bool is_prime(std::uint64_t n) noexcept;

/**
 * @brief Field embedding GF(p^d) -> GF(p^{dk}) fixed by sending the small generator to a root of the small
 * modulus in the big field.
 */
class Embedding {
   public:
    Embedding(FieldPtr small, std::uint32_t k);

    const FieldPtr& small() const noexcept { return small_; }
    const FieldPtr& big() const noexcept { return big_; }
    Elem operator()(Elem e) const noexcept { return image_[e.v]; }
    /// Inverse image of a big-field element, if it lies in the subfield.
    std::optional<Elem> preimage(Elem big) const;

   private:
    FieldPtr small_, big_;
    std::vector<Elem> image_;
};

}  // namespace xnr

#endif
