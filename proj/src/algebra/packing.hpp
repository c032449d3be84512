#pragma once

// Mixed-radix monomial keys. The total degree is the most significant digit,
// followed by the exponents in universe order, so integer comparison of keys
// is exactly the graded-lex comparison of the rows they encode, and the key
// of a product of monomials is the sum of the keys.

#include <cstdint>
#include <functional>
#include <vector>

namespace cuboid::algebra::detail {

using u128 = unsigned __int128;

struct KeyHash {
    std::size_t operator()(u128 k) const noexcept {
        auto lo = static_cast<std::uint64_t>(k);
        auto hi = static_cast<std::uint64_t>(k >> 64);
        std::uint64_t x = lo ^ (hi * 0x9E3779B97F4A7C15ULL);
        x ^= x >> 31;
        x *= 0xBF58476D1CE4E5B9ULL;
        x ^= x >> 29;
        return static_cast<std::size_t>(x);
    }
};

class Packer {
public:
    /// max_exp[i] bounds exponent i, max_total bounds the total degree.
    Packer(const std::vector<std::uint32_t>& max_exp, std::uint64_t max_total) {
        const u128 limit = (~u128(0)) >> 1;
        n_ = max_exp.size();
        weight_.assign(n_, 1);
        u128 w = 1;
        ok_ = true;
        for (std::size_t i = n_; i-- > 0;) {
            weight_[i] = w;
            u128 r = u128(max_exp[i]) + 1;
            if (w > limit / r) { ok_ = false; return; }
            w *= r;
        }
        span_ = w;
        u128 t = u128(max_total) + 1;
        if (span_ > limit / t) ok_ = false;
    }

    bool ok() const { return ok_; }

    u128 encode(const std::uint32_t* e) const {
        u128 k = 0;
        std::uint64_t total = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            k += u128(e[i]) * weight_[i];
            total += e[i];
        }
        return k + u128(total) * span_;
    }

    void decode(u128 k, std::uint32_t* out) const {
        k %= span_;
        for (std::size_t i = 0; i < n_; ++i) {
            out[i] = static_cast<std::uint32_t>(k / weight_[i]);
            k %= weight_[i];
        }
    }

private:
    std::size_t n_ = 0;
    std::vector<u128> weight_;
    u128 span_ = 1;
    bool ok_ = false;
};

}  // namespace cuboid::algebra::detail
