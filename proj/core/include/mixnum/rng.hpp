#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace mixnum {

// splitmix64 finalizer, the mixing core of the stream derivation.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Keyed stream derivation: (master, a, b) -> independent seed.
// Trials get a = SNR grid index, b = trial index, so any worker can
// reproduce any trial without touching another trial's stream.
inline std::uint64_t derive_stream(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
    std::uint64_t x = mix64(master);
    x = mix64(x ^ mix64(a + 0x0123456789ABCDEFULL));
    x = mix64(x ^ mix64(b + 0xFEDCBA9876543210ULL));
    return x;
}

// Per-trial random source. Gaussian draws use the polar method with an
// explicit spare so the byte-level output stream is pinned by this code,
// not by the standard library's distribution internals.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    std::uint8_t bit() { return static_cast<std::uint8_t>(gen_() >> 63); }

    // Standard normal.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double r = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * r;
        have_spare_ = true;
        return u * r;
    }

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace mixnum
