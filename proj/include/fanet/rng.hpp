#pragma once

#include <cstdint>
#include <cmath>
#include <initializer_list>
#include <random>

namespace fanet {

/// splitmix64 finalizer. Used to mix seed material into well-distributed
/// 64-bit values.
inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Named consumers of randomness. Each consumer derives its own substream
/// from the run seed, so adding a consumer never perturbs the others.
enum class StreamKind : std::uint64_t {
    Mobility = 1,  // per (node, tick)
    Traffic = 2,   // per flow
    Endpoints = 3, // flow endpoint selection
    InitPlacement = 4,
};

/// Derives a substream seed from the root seed and a label path.
inline std::uint64_t derive_seed(std::uint64_t root,
                                 std::initializer_list<std::uint64_t> path) {
    std::uint64_t s = splitmix64(root);
    for (std::uint64_t p : path)
        s = splitmix64(s ^ splitmix64(p));
    return s;
}

/// Deterministic random stream. Distributions are implemented by hand so
/// that trajectories are bit-identical across standard libraries (the
/// std:: distribution objects are implementation-defined).
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform double in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform double in [a, b).
    double uniform(double a, double b) { return a + uniform() * (b - a); }

    /// Gaussian via Box-Muller; consumes exactly two uniforms per call.
    double gaussian(double mean, double stddev) {
        double u1 = uniform();
        double u2 = uniform();
        if (u1 < 1e-300)
            u1 = 1e-300;
        double z = std::sqrt(-2.0 * std::log(u1)) *
                   std::cos(2.0 * 3.14159265358979323846 * u2);
        return mean + stddev * z;
    }

private:
    std::mt19937_64 gen_;
};

/// Stream for one consumer of one run.
inline RandomStream stream_for(std::uint64_t run_seed, StreamKind kind,
                               std::uint64_t a = 0, std::uint64_t b = 0) {
    return RandomStream(
        derive_seed(run_seed, {static_cast<std::uint64_t>(kind), a, b}));
}

} // namespace fanet
