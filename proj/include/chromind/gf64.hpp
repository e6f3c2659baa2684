#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#if defined(__PCLMUL__)
#include <wmmintrin.h>
#include <smmintrin.h>
#endif

namespace chromind {

namespace detail {

// Low bits of the reduction polynomial x^64 + x^4 + x^3 + x + 1.
inline constexpr uint64_t kGf64ReductionLow = 0x1b;

constexpr __uint128_t clmul_portable(uint64_t a, uint64_t b) {
    __uint128_t acc = 0;
    while (a != 0) {
        const int i = __builtin_ctzll(a);
        acc ^= static_cast<__uint128_t>(b) << i;
        a &= a - 1;
    }
    return acc;
}

constexpr uint64_t gf64_reduce(__uint128_t p) {
    const uint64_t lo = static_cast<uint64_t>(p);
    const uint64_t hi = static_cast<uint64_t>(p >> 64);
    const __uint128_t f1 = clmul_portable(hi, kGf64ReductionLow);
    const uint64_t f1lo = static_cast<uint64_t>(f1);
    const uint64_t f1hi = static_cast<uint64_t>(f1 >> 64);
    // f1hi has at most 4 bits, so the second fold cannot overflow.
    return lo ^ f1lo ^ static_cast<uint64_t>(clmul_portable(f1hi, kGf64ReductionLow));
}

constexpr uint64_t gf64_mul_portable(uint64_t a, uint64_t b) {
    return gf64_reduce(clmul_portable(a, b));
}

#if defined(__PCLMUL__)
inline uint64_t gf64_mul_clmul(uint64_t a, uint64_t b) {
    const __m128i va = _mm_cvtsi64_si128(static_cast<long long>(a));
    const __m128i vb = _mm_cvtsi64_si128(static_cast<long long>(b));
    const __m128i red = _mm_cvtsi64_si128(static_cast<long long>(kGf64ReductionLow));
    const __m128i prod = _mm_clmulepi64_si128(va, vb, 0x00);
    const __m128i f1 = _mm_clmulepi64_si128(_mm_srli_si128(prod, 8), red, 0x00);
    const __m128i f2 = _mm_clmulepi64_si128(_mm_srli_si128(f1, 8), red, 0x00);
    const __m128i folded = _mm_xor_si128(_mm_xor_si128(prod, f1), f2);
    return static_cast<uint64_t>(_mm_cvtsi128_si64(folded));
}
#endif

inline uint64_t gf64_mul(uint64_t a, uint64_t b) {
#if defined(__PCLMUL__)
    return gf64_mul_clmul(a, b);
#else
    return gf64_mul_portable(a, b);
#endif
}

}  // namespace detail

/*
 * Element of GF(2^64) = GF(2)[x] / (x^64 + x^4 + x^3 + x + 1).
 * Addition is XOR; every element is its own additive inverse, squaring is
 * additive, and a^(2^64) = a for all a.
 */
class GF64 {
public:
    constexpr GF64() = default;
    constexpr explicit GF64(uint64_t bits) : v_(bits) {}

    static constexpr GF64 zero() { return GF64(0); }
    static constexpr GF64 one() { return GF64(1); }

    constexpr uint64_t bits() const { return v_; }
    constexpr bool is_zero() const { return v_ == 0; }

    friend constexpr GF64 operator+(GF64 a, GF64 b) { return GF64(a.v_ ^ b.v_); }
    friend GF64 operator*(GF64 a, GF64 b) { return GF64(detail::gf64_mul(a.v_, b.v_)); }
    GF64& operator+=(GF64 o) { v_ ^= o.v_; return *this; }
    GF64& operator*=(GF64 o) { v_ = detail::gf64_mul(v_, o.v_); return *this; }
    friend constexpr bool operator==(GF64 a, GF64 b) { return a.v_ == b.v_; }
    friend constexpr bool operator!=(GF64 a, GF64 b) { return a.v_ != b.v_; }
    friend constexpr bool operator<(GF64 a, GF64 b) { return a.v_ < b.v_; }

    GF64 squared() const { return *this * *this; }

    // Unique square root, a^(2^63), by 63 repeated squarings.
    GF64 sqrt() const {
        GF64 r = *this;
        for (int i = 0; i < 63; ++i) r = r.squared();
        return r;
    }

    GF64 pow(uint64_t e) const {
        GF64 r = one();
        GF64 base = *this;
        while (e != 0) {
            if (e & 1) r *= base;
            base = base.squared();
            e >>= 1;
        }
        return r;
    }

    // Multiplicative inverse a^(2^64 - 2); the zero element has none.
    GF64 inverse() const {
        if (v_ == 0) throw std::domain_error("GF64: inverse of zero");
        return pow(~uint64_t{1});
    }

    std::string to_hex() const;
    static GF64 from_hex(const std::string& s);

private:
    uint64_t v_ = 0;
};

}  // namespace chromind
