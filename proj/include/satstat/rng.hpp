// SPDX-License-Identifier: Apache-2.0
//
// Deterministic seeded random streams. Every consumer addresses its stream as
// (seed, domain, index); the stream state is derived by the fixed splitmix64
// mixing below, so results are reproducible across runs and independent of
// thread scheduling. xoshiro256++ generates the stream.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace satstat {

// Stream address spaces. Two streams with different domains never collide
// even when seed and index coincide.
enum class RngDomain : std::uint64_t {
    FormPrime = 1,   // index = prime p
    McChunk = 2,     // index = chunk number of a Monte-Carlo plan
    Sample = 3,      // index = sample number of a standalone draw
    Metropolis = 4,  // index = chain id
    Scan = 5,        // index = scan id
};

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

class RngStream {
public:
    RngStream(std::uint64_t seed, RngDomain domain, std::uint64_t index) {
        std::uint64_t key = seed;
        (void)splitmix64_next(key);
        key ^= 0xA24BAED4963EE407ULL * (static_cast<std::uint64_t>(domain) + 1);
        (void)splitmix64_next(key);
        key ^= 0x9FB21C651E98DF25ULL * (index + 1);
        std::uint64_t sm = key;
        bool all_zero = true;
        for (auto& w : s_) {
            w = splitmix64_next(sm);
            all_zero = all_zero && w == 0;
        }
        if (all_zero) s_[0] = 1;
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // [0, 1), 53-bit resolution
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // (0, 1]; safe under log()
    double uniform01_open() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    double angle() { return 2.0 * std::numbers::pi * uniform01(); }

    std::uint64_t below(std::uint64_t bound) { return next_u64() % bound; }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double r = std::sqrt(-2.0 * std::log(uniform01_open()));
        const double t = 2.0 * std::numbers::pi * uniform01();
        spare_ = r * std::sin(t);
        have_spare_ = true;
        return r * std::cos(t);
    }

    std::complex<double> complex_gaussian() {
        const double r = std::sqrt(-2.0 * std::log(uniform01_open()));
        const double t = 2.0 * std::numbers::pi * uniform01();
        return {r * std::cos(t), r * std::sin(t)};
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t s_[4];
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace satstat
