#pragma once

// Small deterministic PRNG (splitmix64).  Used wherever reproducibility of
// seeded output must not depend on the standard library's distributions.

#include <cstdint>

namespace times23 {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform over [0, n); n must be positive.  Modulo bias is irrelevant for
    // test-fixture generation and keeps the stream platform-independent.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    // Uniform over [lo, hi] inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

} // namespace times23
