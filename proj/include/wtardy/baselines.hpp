#ifndef WTARDY_BASELINES_HPP
#define WTARDY_BASELINES_HPP

#include <cstdint>
#include <optional>

#include "wtardy/core.hpp"

namespace wtardy {

/// Best of three naive labelings (seeded coin-flip per job, all early,
/// all tardy), each pushed through schedule_from_labels. Ties keep the
/// earliest candidate in that order. nullopt iff the instance is infeasible.
std::optional<Schedule> rule_based(const Instance& instance, std::uint64_t seed);

struct GaParams {
    int population = 50;
    double crossover_rate = 0.9;   ///< order crossover probability
    double mutation_rate = 0.02;   ///< per-gene swap probability
    int elites = 2;
    int generations = 200;
};

/// Permutation-encoded genetic algorithm. Each candidate order decodes to
/// labels by comparing completion times against due dates and is repaired
/// into a feasible schedule by schedule_from_labels; fitness is that
/// schedule's objective. Binary tournament selection, order crossover,
/// per-gene swap mutation, elitism. Runs `generations` rounds or until the
/// wall-clock budget expires, whichever is first; with a non-binding budget
/// the outcome is a pure function of (instance, params, seed).
std::optional<Schedule> ga(const Instance& instance, const GaParams& params,
                           double time_budget_seconds, std::uint64_t seed);

struct HbaParams {
    int population = 30;
    int iterations = 200;
    double beta = 6.0;       ///< foraging intensity constant
    double density_c = 2.0;  ///< density factor constant
};

/// Honey Badger metaheuristic over vectors in [0,1]^n, rounded at 0.5 into
/// early/tardy labels and repaired by schedule_from_labels. Digging and
/// honey phases with the published default constants; greedy per-individual
/// replacement, global incumbent never worsens. Budget semantics as in ga().
std::optional<Schedule> honey_badger(const Instance& instance, const HbaParams& params,
                                     double time_budget_seconds, std::uint64_t seed);

}  // namespace wtardy

#endif
