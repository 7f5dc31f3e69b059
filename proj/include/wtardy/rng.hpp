#ifndef WTARDY_RNG_HPP
#define WTARDY_RNG_HPP

#include <cstdint>
#include <random>

namespace wtardy {

/// splitmix64 mixing step; used to derive independent sub-seeds.
std::uint64_t splitmix64(std::uint64_t x);

/**
 * Seeded random source with pinned sampling transforms.
 *
 * All transforms are implemented here instead of relying on
 * std::*_distribution, whose algorithms are implementation-defined.
 * With the engine fixed to mt19937_64 and the transforms below, a given
 * seed yields the same stream on every platform and stdlib:
 *
 *   uniform01     (x >> 11) * 2^-53, in [0, 1)
 *   uniform(a,b)  a + (b - a) * uniform01
 *   normal        Box-Muller, cosine branch only (two uniforms per draw)
 *   lognormal     exp(normal(mu, sigma))
 *   exponential   inverse CDF, -mean * ln(1 - u); mean parameterization
 *   below(k)      multiply-shift bounded integer in [0, k)
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    double uniform01();
    double uniform(double a, double b);
    double normal(double mu, double sigma);
    double lognormal(double mu, double sigma);
    double exponential(double mean);

    /// Uniform integer in [0, k); k must be > 0.
    std::uint64_t below(std::uint64_t k);

    /// Fisher-Yates shuffle of indices [first, last).
    template <typename It>
    void shuffle(It first, It last) {
        const auto n = static_cast<std::uint64_t>(last - first);
        for (std::uint64_t i = n; i > 1; --i) {
            const std::uint64_t j = below(i);
            std::swap(first[i - 1], first[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace wtardy

#endif
