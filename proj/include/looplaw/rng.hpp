#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace looplaw {

/// Per-replica stream. The engine state depends only on (seed, replica).
class Rng {
public:
    Rng(std::uint64_t seed, std::uint64_t replica) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(replica), static_cast<std::uint32_t>(replica >> 32)};
        engine_.seed(seq);
    }

    std::uint64_t bits() { return engine_(); }
    std::mt19937_64& engine() { return engine_; }

    /// Uniform on the open interval (0, 1), 53-bit grid shifted by half a step.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 + 0x1.0p-54; }

    double exponential(double rate) { return -std::log(uniform()) / rate; }

    // Marsaglia polar method
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0);
        const double m = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * m;
        has_spare_ = true;
        return u * m;
    }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(engine_); }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace looplaw
