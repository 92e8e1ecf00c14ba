#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace nonneg {

// One step of the splitmix64 mixer (Vigna). Used for seed scrambling and for
// deriving independent substream seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Documented substream splitting rule: derive the seed for (component, rep)
// from a base seed by chaining splitmix64 over the three values. Adding a new
// component index never perturbs the streams of existing components.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t component, std::uint64_t rep = 0) {
    std::uint64_t s = base;
    std::uint64_t a = splitmix64(s);
    s = a ^ (0xA0761D6478BD642FULL * (component + 1));
    a = splitmix64(s);
    s = a ^ (0xE7037ED1A0B428DBULL * (rep + 1));
    return splitmix64(s);
}

// Deterministic generator: mt19937_64 plus explicit inverse-CDF style
// transforms, so that a fixed seed reproduces the exact same value sequence on
// every run. No transform keeps hidden state (the Box-Muller pair is not
// cached), so the draw count alone determines the generator state.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(scramble(seed)) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform on [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // Uniform on (0, 1); safe as a log() argument.
    double uniform_pos() { return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    bool bernoulli(double p) { return uniform01() < p; }

    // Standard normal via Box-Muller; consumes exactly two uniforms.
    double gaussian() {
        const double u1 = uniform_pos();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    // Exponential with the given rate.
    double exponential(double rate) { return -std::log(uniform_pos()) / rate; }

private:
    static std::uint64_t scramble(std::uint64_t seed) {
        std::uint64_t s = seed;
        return splitmix64(s);
    }

    std::mt19937_64 gen_;
};

}  // namespace nonneg
