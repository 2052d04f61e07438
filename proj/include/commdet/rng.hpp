#ifndef COMMDET_RNG_HPP
#define COMMDET_RNG_HPP

#include <cmath>
#include <cstdint>

// Self-contained random number generation. Everything here is fully
// deterministic given the seed, independent of the standard library's
// distribution implementations, so seeded runs reproduce bit-for-bit.

namespace commdet::rng {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Derives an independent substream seed from (seed, stream). All multi-run
// commands split one user-visible seed through this, one stream id per
// restart / cell / trial.
inline std::uint64_t split(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64(s);
    s = seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
    std::uint64_t b = splitmix64(s);
    return a ^ (b + 0x7f4a7c15ULL);
}

// xoshiro256** (Blackman & Vigna), seeded through splitmix64.
class Generator {
public:
    explicit Generator(std::uint64_t seed) {
        std::uint64_t s = seed;
        for (auto& word : state_) word = splitmix64(s);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform integer in [0, bound); bound > 0. Rejection-free Lemire trick
    // with a widening multiply, falling back to rejection on the rare
    // biased region.
    std::uint64_t uniform_below(std::uint64_t bound) {
        __uint128_t m = static_cast<__uint128_t>(next_u64()) * bound;
        auto low = static_cast<std::uint64_t>(m);
        if (low < bound) {
            const std::uint64_t threshold = (0 - bound) % bound;
            while (low < threshold) {
                m = static_cast<__uint128_t>(next_u64()) * bound;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    // Uniform double in [0, 1).
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Poisson draw. Knuth's product method, chunked so the running product
    // never underflows for large means (Poisson(a+b) = Poisson(a) + Poisson(b)).
    std::int64_t poisson(double mean) {
        std::int64_t total = 0;
        while (mean > 32.0) {
            total += poisson_small(32.0);
            mean -= 32.0;
        }
        if (mean > 0.0) total += poisson_small(mean);
        return total;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::int64_t poisson_small(double mean) {
        const double limit = std::exp(-mean);
        std::int64_t count = -1;
        double product = 1.0;
        do {
            product *= uniform01();
            ++count;
        } while (product > limit);
        return count;
    }

    std::uint64_t state_[4];
};

}  // namespace commdet::rng

#endif  // COMMDET_RNG_HPP
