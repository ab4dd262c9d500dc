#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace radhar {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Deterministic random source. Normal and uniform draws are generated with
/// fully specified arithmetic (no std::*_distribution), so sequences are
/// identical across standard libraries. Streams derived from the same seed
/// via from_stream() are independent, which keeps per-frame / per-SNR
/// generation order-free: parallel and serial runs agree.
class SplitRng {
public:
    explicit SplitRng(std::uint64_t seed) : eng_(splitmix64(seed) | 1ULL) {}

    static SplitRng from_stream(std::uint64_t seed, std::uint64_t stream) {
        return SplitRng(splitmix64(seed) ^ splitmix64(~stream));
    }

    /// Uniform double in [0, 1).
    double uniform() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform();  // (0, 1]
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(t);
        has_spare_ = true;
        return r * std::cos(t);
    }

    /// Circularly symmetric complex Gaussian with E[|z|^2] = power.
    std::complex<double> complex_normal(double power) {
        const double s = std::sqrt(power / 2.0);
        const double re = normal();
        const double im = normal();
        return {s * re, s * im};
    }

    std::uint64_t raw() { return eng_(); }

private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace radhar
