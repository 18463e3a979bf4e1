#pragma once

#include <cstdint>
#include <deque>

#include "cremona/rational.hpp"

namespace cremona {

/// SplitMix64. Self-contained so that seeded runs replay identically on any
/// platform, which std::uniform_int_distribution does not guarantee.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n) {
        // rejection to kill modulo bias
        const std::uint64_t limit = n * ((~0ULL) / n);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

    long int_in(long lo, long hi) {  // inclusive bounds
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// Small rational with numerator in [-span, span] and denominator in
    /// [1, den_span].
    Rat small_rat(long span, long den_span = 1) {
        return Rat(int_in(-span, span), int_in(1, den_span));
    }

    bool coin() { return (next() & 1) != 0; }

private:
    std::uint64_t state_;
};

/// Fixed zig-zag enumeration of Q: 0, 1, -1, 2, -2, 1/2, -1/2, 3, -3, 3/2,
/// -3/2, 1/3, -1/3, 2/3, -2/3, ... Height max(|num|, den) grows; within a
/// height, denominators ascend, positive before negative, lowest terms only.
class RationalEnumeration {
public:
    Rat next();

private:
    long height_ = -1;
    std::deque<Rat> pending_;
};

}  // namespace cremona
