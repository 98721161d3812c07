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

#include "xnr/finite_field.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <unordered_map>

#include "xnr/error.hpp"

namespace xnr {

namespace {

// Conway polynomials, coefficients m_0..m_d (monic). Frank Luebeck's tables.
const std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>>& conway_table() {
    static const std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> table = {
        {{2, 1}, {1, 1}},
        {{2, 2}, {1, 1, 1}},
        {{2, 3}, {1, 1, 0, 1}},
        {{2, 4}, {1, 1, 0, 0, 1}},
        {{2, 5}, {1, 0, 1, 0, 0, 1}},
        {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
        {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
        {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
        {{2, 9}, {1, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
        {{2, 10}, {1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1}},
        {{3, 1}, {1, 1}},
        {{3, 2}, {2, 2, 1}},
        {{3, 3}, {1, 2, 0, 1}},
        {{3, 4}, {2, 0, 0, 2, 1}},
        {{3, 5}, {1, 2, 0, 0, 0, 1}},
        {{3, 6}, {2, 2, 1, 0, 2, 0, 1}},
        {{5, 1}, {3, 1}},
        {{5, 2}, {2, 4, 1}},
        {{5, 3}, {3, 3, 0, 1}},
        {{7, 1}, {4, 1}},
        {{7, 2}, {3, 6, 1}},
    };
    return table;
}

std::uint64_t checked_order(std::uint32_t p, std::uint32_t d) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < d; ++i) {
        q *= p;
        if (q > Field::max_order) throw ValidationError("field order " + std::to_string(p) + "^" +
                                                        std::to_string(d) + " exceeds the supported size");
    }
    return q;
}

// Multiplicative cycle of t modulo a monic polynomial, packed base p. Stops at the first return to 1.
std::vector<std::uint32_t> power_cycle(std::uint32_t p, std::uint32_t d, std::span<const std::uint32_t> mod,
                                       std::uint64_t order) {
    std::vector<std::uint32_t> cycle;
    cycle.reserve(order - 1);
    std::vector<std::uint32_t> digits(d, 0), next(d, 0);
    digits[0] = 1;
    auto pack = [&](const std::vector<std::uint32_t>& c) {
        std::uint32_t v = 0;
        for (std::uint32_t i = d; i-- > 0;) v = v * p + c[i];
        return v;
    };
    for (std::uint64_t k = 0; k < order; ++k) {
        const std::uint32_t v = pack(digits);
        if (k > 0 && v == 1) break;
        if (k > 0 && v == 0) break;
        cycle.push_back(v);
        // multiply by t, then reduce t^d = -(m_0 + ... + m_{d-1} t^{d-1})
        const std::uint32_t top = digits[d - 1];
        for (std::uint32_t i = d - 1; i > 0; --i) next[i] = digits[i - 1];
        next[0] = 0;
        for (std::uint32_t i = 0; i < d; ++i)
            next[i] = static_cast<std::uint32_t>((next[i] + (p - mod[i] % p) * top) % p);
        digits.swap(next);
    }
    return cycle;
}

std::vector<std::uint32_t> unpack(std::uint32_t v, std::uint32_t p, std::uint32_t d) {
    std::vector<std::uint32_t> c(d);
    for (std::uint32_t i = 0; i < d; ++i) {
        c[i] = v % p;
        v /= p;
    }
    return c;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

bool is_irreducible_mod_p(std::uint32_t p, std::span<const std::uint32_t> monic) {
    const std::size_t d = monic.size() - 1;
    if (d <= 1) return d == 1;
    // trial division by every monic polynomial of degree 1..d/2
    for (std::size_t k = 1; 2 * k <= d; ++k) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < k; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::vector<std::uint32_t> div = unpack(static_cast<std::uint32_t>(idx), p, static_cast<std::uint32_t>(k));
            div.push_back(1);
            std::vector<std::uint32_t> rem(monic.begin(), monic.end());
            for (std::size_t top = d; top >= k; --top) {
                const std::uint32_t c = rem[top] % p;
                if (c != 0)
                    for (std::size_t i = 0; i <= k; ++i) {
                        auto& r = rem[top - k + i];
                        r = static_cast<std::uint32_t>((r + (p - c) * div[i]) % p);
                    }
                if (top == k) break;
            }
            if (std::all_of(rem.begin(), rem.begin() + static_cast<std::ptrdiff_t>(k),
                            [p](std::uint32_t c) { return c % p == 0; }))
                return false;
        }
    }
    return true;
}

std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t d) {
    if (!is_prime(p)) throw ValidationError("characteristic " + std::to_string(p) + " is not prime");
    if (d == 0) throw ValidationError("extension degree must be positive");
    const auto& table = conway_table();
    if (auto it = table.find({p, d}); it != table.end()) return it->second;
    const std::uint64_t order = checked_order(p, d);
    // smallest primitive polynomial, ordered by packed low coefficients
    for (std::uint64_t idx = 1; idx < order; ++idx) {
        std::vector<std::uint32_t> m = unpack(static_cast<std::uint32_t>(idx), p, d);
        if (m[0] == 0) continue;
        m.push_back(1);
        if (power_cycle(p, d, m, order).size() == order - 1) return m;
    }
    throw ValidationError("no primitive polynomial found");  // unreachable for valid (p, d)
}

FieldPtr Field::create(std::uint32_t p, std::uint32_t d, std::optional<std::vector<std::uint32_t>> modulus) {
    if (!is_prime(p)) throw ValidationError("characteristic " + std::to_string(p) + " is not prime");
    if (d == 0) throw ValidationError("extension degree must be positive");
    const std::uint64_t order = checked_order(p, d);
    std::vector<std::uint32_t> mod = modulus ? *modulus : default_modulus(p, d);
    if (mod.size() != d + 1 || mod.back() % p != 1)
        throw ValidationError("modulus must be monic of degree " + std::to_string(d));
    for (auto& c : mod) {
        if (c >= p) throw ValidationError("modulus coefficient out of range for GF(" + std::to_string(p) + ")");
    }

    std::vector<std::uint32_t> cycle = power_cycle(p, d, mod, order);
    if (cycle.size() != order - 1) {
        if (!is_irreducible_mod_p(p, mod)) throw ValidationError("modulus is reducible over GF(" + std::to_string(p) + ")");
        throw ValidationError("modulus is irreducible but not primitive: generator has order " +
                              std::to_string(cycle.size()) + " < " + std::to_string(order - 1));
    }

    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->d_ = d;
    f->order_ = static_cast<std::uint32_t>(order);
    f->half_ = p == 2 ? 0 : static_cast<std::uint32_t>((order - 1) / 2);
    f->modulus_ = std::move(mod);
    const std::uint32_t n1 = f->order_ - 1;
    f->exp_.resize(2 * static_cast<std::size_t>(n1));
    f->log_.assign(order, 0);
    for (std::uint32_t k = 0; k < n1; ++k) {
        f->exp_[k] = Elem{cycle[k]};
        f->exp_[k + n1] = Elem{cycle[k]};
        f->log_[cycle[k]] = k;
    }
    if (p != 2) {
        f->zech_.resize(n1);
        for (std::uint32_t k = 0; k < n1; ++k) {
            std::uint32_t v = cycle[k];
            const std::uint32_t low = v % p;
            v = v - low + (low + 1) % p;
            f->zech_[k] = v == 0 ? n1 : f->log_[v];
        }
    }
    return f;
}

Elem Field::add_odd(Elem a, Elem b) const noexcept {
    if (a.v == 0) return b;
    if (b.v == 0) return a;
    const std::uint32_t n1 = order_ - 1;
    const std::uint32_t la = log_[a.v], lb = log_[b.v];
    const std::uint32_t z = zech_[lb >= la ? lb - la : lb + n1 - la];
    if (z == n1) return Elem{0};
    return exp_[la + z];
}

Elem Field::from_int(std::int64_t c) const noexcept {
    const std::int64_t r = ((c % p_) + p_) % p_;
    return Elem{static_cast<std::uint32_t>(r)};
}

Elem Field::from_coeffs(std::span<const std::uint32_t> c) const {
    if (c.size() > d_) throw ValidationError("coefficient tuple longer than the field degree");
    std::uint32_t v = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] >= p_) throw ValidationError("coefficient out of range");
        v = v * p_ + c[i];
    }
    return Elem{v};
}

std::vector<std::uint32_t> Field::coeffs(Elem e) const { return unpack(e.v, p_, d_); }

Elem Field::inv(Elem a) const {
    if (a.v == 0) throw DomainError("inverse of zero");
    const std::uint32_t l = log_[a.v];
    return exp_[l == 0 ? 0 : order_ - 1 - l];
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Field::pow(Elem a, std::int64_t k) const {
    if (a.v == 0) {
        if (k < 0) throw DomainError("negative power of zero");
        return k == 0 ? one() : zero();
    }
    const std::int64_t n1 = order_ - 1;
    const std::int64_t e = ((static_cast<std::int64_t>(log_[a.v]) * (k % n1)) % n1 + n1) % n1;
    return exp_[static_cast<std::size_t>(e)];
}

Elem Field::exp(std::int64_t k) const noexcept {
    const std::int64_t n1 = order_ - 1;
    return exp_[static_cast<std::size_t>(((k % n1) + n1) % n1)];
}

std::uint32_t Field::dlog(Elem e) const {
    if (e.v == 0) throw DomainError("discrete logarithm of zero");
    return log_[e.v];
}

std::uint32_t Field::multiplicative_order(Elem e) const {
    const std::uint32_t n1 = order_ - 1;
    return n1 / std::gcd(n1, dlog(e));
}

std::uint32_t Field::q_exponent(std::uint64_t q) const {
    std::uint32_t e = 0;
    std::uint64_t t = q;
    while (t > 1 && t % p_ == 0) {
        t /= p_;
        ++e;
    }
    if (t != 1 || e == 0)
        throw ValidationError(std::to_string(q) + " is not a power of the characteristic " + std::to_string(p_));
    return e;
}

Elem Field::frob(Elem e, std::uint64_t q, std::int64_t k) const {
    const std::uint32_t qe = q_exponent(q);
    if (e.v == 0) return e;
    // e^{p^j} with j = qe*k mod d
    const std::int64_t d = d_;
    const std::int64_t j = ((static_cast<std::int64_t>(qe) * (k % d)) % d + d) % d;
    const std::uint64_t n1 = order_ - 1;
    std::uint64_t l = log_[e.v];
    for (std::int64_t i = 0; i < j; ++i) l = (l * p_) % n1;
    return exp_[l];
}

Elem Field::rel_trace(Elem e, std::uint64_t q, std::uint32_t n) const {
    const std::uint32_t qe = q_exponent(q);
    if (qe * n != d_)
        throw ValidationError("relative trace needs the ambient field GF(q^n); got q=" + std::to_string(q) +
                              ", n=" + std::to_string(n) + " in GF(" + std::to_string(order_) + ")");
    Elem acc = zero(), t = e;
    for (std::uint32_t i = 0; i < n; ++i) {
        acc = add(acc, t);
        t = frob(t, q, 1);
    }
    return acc;
}

std::string Field::to_string(Elem e) const {
    if (e.v == 0) return "0";
    return "a^" + std::to_string(dlog(e));
}

Elem Field::parse(std::string_view text) const {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    std::string_view s = trim(text);
    auto fail = [&]() { return ValidationError("cannot parse field element '" + std::string(text) + "'"); };
    if (s == "0") return zero();
    if (s == "1") return one();
    if (s == "a") return generator();
    if (s.starts_with("a^")) {
        s.remove_prefix(2);
        if (s.starts_with("{") && s.ends_with("}")) s = s.substr(1, s.size() - 2);
        std::int64_t k = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), k);
        if (ec != std::errc{} || ptr != s.data() + s.size()) throw fail();
        return exp(k);
    }
    if (s.starts_with("[") && s.ends_with("]")) {
        s = s.substr(1, s.size() - 2);
        std::vector<std::uint32_t> c;
        while (!s.empty()) {
            const std::size_t comma = s.find(',');
            std::string_view tok = trim(s.substr(0, comma));
            std::uint32_t v = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc{} || ptr != tok.data() + tok.size()) throw fail();
            c.push_back(v);
            if (comma == std::string_view::npos) break;
            s.remove_prefix(comma + 1);
        }
        return from_coeffs(c);
    }
    throw fail();
}

Embedding::Embedding(FieldPtr small, std::uint32_t k) : small_(std::move(small)) {
    if (k == 0) throw ValidationError("embedding degree must be positive");
    const std::uint32_t p = small_->characteristic();
    big_ = Field::create(p, small_->degree() * k);
    const auto& mod = small_->modulus();
    const std::uint32_t nb = big_->order() - 1, ns = small_->order() - 1;
    const std::uint32_t step = nb / ns;
    // candidates: generators of the unique subgroup of order ns
    Elem root{0};
    for (std::uint32_t j = 1; j <= ns && root.v == 0; ++j) {
        if (std::gcd(j, ns) != 1) continue;
        const Elem c = big_->exp(static_cast<std::int64_t>(step) * j);
        Elem acc = Field::zero(), pw = Field::one();
        for (std::size_t i = 0; i < mod.size(); ++i) {
            acc = big_->add(acc, big_->mul(big_->from_int(mod[i]), pw));
            pw = big_->mul(pw, c);
        }
        if (acc.is_zero()) root = c;
    }
    if (root.v == 0) throw ConsistencyError("no root of the subfield modulus in the extension");
    image_.resize(small_->order());
    image_[0] = Field::zero();
    for (std::uint32_t l = 0; l < ns; ++l) image_[small_->exp(l).v] = big_->pow(root, l);
}

std::optional<Elem> Embedding::preimage(Elem big) const {
    if (big.is_zero()) return Field::zero();
    // subfield elements are exactly those fixed by x -> x^{|small|}
    if (big_->pow(big, small_->order()) != big) return std::nullopt;
    const std::uint32_t lb = big_->dlog(big);
    const std::uint32_t lr = big_->dlog(image_[small_->generator().v]);
    // big = root^k with lr*k == lb mod (|big|-1); solve by scanning the small group
    const std::uint32_t ns = small_->order() - 1;
    const std::uint64_t nb = big_->order() - 1;
    for (std::uint32_t k = 0; k < ns; ++k)
        if ((static_cast<std::uint64_t>(lr) * k) % nb == lb) return small_->exp(k);
    return std::nullopt;
}

}  // namespace xnr
