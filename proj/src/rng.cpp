#include "wtardy/rng.hpp"

#include <cmath>

namespace wtardy {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double Rng::uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double a, double b) {
    return a + (b - a) * uniform01();
}

double Rng::normal(double mu, double sigma) {
    // Cosine branch only, so every draw consumes exactly two uniforms.
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log1p(-u1));
    constexpr double two_pi = 6.283185307179586476925286766559;
    return mu + sigma * r * std::cos(two_pi * u2);
}

double Rng::lognormal(double mu, double sigma) {
    return std::exp(normal(mu, sigma));
}

double Rng::exponential(double mean) {
    return -mean * std::log1p(-uniform01());
}

std::uint64_t Rng::below(std::uint64_t k) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(engine_()) * k) >> 64);
}

}  // namespace wtardy
