#pragma once

#include <cstdint>
#include <stdexcept>

#include "chromind/gf64.hpp"

namespace chromind {

namespace detail {

constexpr uint64_t splitmix64(uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace detail

/*
 * Deterministic splittable random stream.  Draws depend only on (key, draw
 * index); substreams depend only on (key, label), not on how many values the
 * parent has produced.  One root seed therefore fully determines every draw
 * in a run.
 */
class SplitRng {
public:
    explicit SplitRng(uint64_t seed) : key_(detail::splitmix64(seed ^ 0x243f6a8885a308d3ull)) {}

    uint64_t next_u64() {
        counter_ += 0x9e3779b97f4a7c15ull;
        return detail::splitmix64(key_ ^ counter_);
    }

    // Unbiased draw from [0, bound).
    uint64_t next_below(uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("SplitRng: empty range");
        const uint64_t limit = bound * (~uint64_t{0} / bound);
        uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % bound;
    }

    GF64 next_field() { return GF64(next_u64()); }

    GF64 next_nonzero() {
        uint64_t v;
        do {
            v = next_u64();
        } while (v == 0);
        return GF64(v);
    }

    // Independent child stream; stable under parent consumption.
    SplitRng split(uint64_t label) const {
        SplitRng child(0);
        child.key_ = detail::splitmix64(key_ ^ detail::splitmix64(label ^ 0x452821e638d01377ull));
        child.counter_ = 0;
        return child;
    }

private:
    uint64_t key_ = 0;
    uint64_t counter_ = 0;
};

}  // namespace chromind
