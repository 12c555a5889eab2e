#pragma once

#include <cstdint>
#include <random>

namespace biproj {

// SplitMix64 step; used for seed scrambling and substream derivation.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Derives an independent stream seed from a master seed and a key.
// Chaining calls extends the key: mix_seed(mix_seed(s, a), b).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t key) {
    return splitmix64(seed ^ splitmix64(key));
}

// Counter-based SplitMix64 engine. Construction is a single store, which
// matters when millions of short-lived substreams are spawned.
class SplitMixEngine {
  public:
    using result_type = std::uint64_t;
    explicit SplitMixEngine(std::uint64_t seed) : state_(seed) {}
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }
    result_type operator()() { return splitmix64(state_++); }

  private:
    std::uint64_t state_;
};

// Sampling primitives over any uniform random bit generator producing full
// 64-bit words. All helpers draw in a fixed, documented way so runs with
// the same seed are reproducible.
template <typename Engine>
class BasicRng {
  public:
    explicit BasicRng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    Engine& engine() { return engine_; }

    // Uniform double in [0, 1), 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Unbiased uniform integer in [0, n); n must be >= 1.
    std::uint64_t below(std::uint64_t n) {
        // Lemire's multiply-shift rejection method.
        std::uint64_t x = engine_();
        __uint128_t m = static_cast<__uint128_t>(x) * n;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < n) {
            std::uint64_t threshold = (0ULL - n) % n;
            while (lo < threshold) {
                x = engine_();
                m = static_cast<__uint128_t>(x) * n;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    // Exact Binomial(trials, p). The standard library uses inversion for
    // small means and an exact rejection method for large ones.
    std::int64_t binomial(std::int64_t trials, double p) {
        if (trials <= 0 || p <= 0.0) return 0;
        if (p >= 1.0) return trials;
        std::binomial_distribution<std::int64_t> dist(trials, p);
        return dist(engine_);
    }

  private:
    Engine engine_;
};

using Rng = BasicRng<std::mt19937_64>;
using StreamRng = BasicRng<SplitMixEngine>;

}  // namespace biproj
