#ifndef WTARDY_GENERATOR_HPP
#define WTARDY_GENERATOR_HPP

#include <cstdint>

#include "wtardy/core.hpp"

namespace wtardy {

/// Identifies one cell of the benchmark corpus.
struct DatasetSpec {
    int family = 1;          ///< 1..15
    int n = 1;               ///< job count
    std::uint64_t seed = 0;
};

struct GenerationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// PRNG + transform identifier recorded for generated instances.
extern const char* const kGeneratorPrngId;

/**
 * Deterministically generates one instance of the requested family.
 *
 * Families (S = sum of all durations):
 *   1   w~N(50,20)   p~U(1,100)   d~U(.3S,.7S)       deadline~U(d,1.1S)
 *   2   w~U(30,80)   p~N(50,10)   d~N(.5S,.1S)       deadline~U(d,1.2S)
 *   3   w=2p+20      p~N(40,15)   d~U(.3S,.7S)       deadline~U(d,1.1S)
 *   4   w=p^2+10     p~N(35,10)   d~U(.3S,.7S)       deadline~U(d,1.1S)
 *   5   w~U(20,80)   p~N(45,15)   d~U(.5S,.8S)       deadline=d+(n/5)w
 *   6   w=100/(p+1)  p~N(40,10)   d~U(.3S,.7S)       deadline~U(d,1.1S)
 *   7   w~U(10,60)   p~Exp(30)    d~U(.3S,.7S)       deadline~U(d,1.1S)
 *   8   w~LN(3,1)    p~LN(4,1)    d~U(.3S,.7S)       deadline~U(d,1.1S)
 *   9   w=1.5p+.2d   p~N(40,10)   d~U(.3S,.7S)       deadline~U(d,1.1S)
 *   10  w~LN(4,2)    p~Exp(40)    d~N(.5S,100)       deadline~N(2d,200)
 *   11..15  w~U(1,100) p~U(1,100) d~U(aS,bS)         deadline~U(d,1.1S)
 *       with (a,b) = (.1,.3) (.1,.7) (.3,.5) (.3,.7) (.5,.7)
 *
 * Exp(m) is parameterized by its mean. Because due dates depend on S, the
 * stream is consumed in two passes over jobs in index order: first (w, p)
 * per job, then (d, deadline) per job. A field violating positivity or
 * p <= d <= deadline is redrawn up to 100 times, then clamped. Values are
 * rounded to 6 decimals; if the rounded instance fails the deadline-order
 * feasibility check, the whole instance is regenerated from a derived seed,
 * up to 50 attempts, after which GenerationError reports family and seed.
 */
Instance generate(const DatasetSpec& spec);

}  // namespace wtardy

#endif
