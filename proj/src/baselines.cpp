#include "wtardy/baselines.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "wtardy/rng.hpp"
#include "wtardy/scheduler.hpp"

namespace wtardy {

namespace {

using Clock = std::chrono::steady_clock;

bool expired(Clock::time_point start, double budget_seconds) {
    return std::chrono::duration<double>(Clock::now() - start).count() > budget_seconds;
}

LabelVector labels_from_completions(const Instance& instance,
                                    const std::vector<double>& completion) {
    const auto jobs = micro_jobs(instance);
    LabelVector labels(jobs.size(), JobClass::Tardy);
    for (std::size_t i = 0; i < jobs.size(); ++i)
        if (to_micro(completion[i]) <= jobs[i].due_date) labels[i] = JobClass::Early;
    return labels;
}

}  // namespace

std::optional<Schedule> rule_based(const Instance& instance, std::uint64_t seed) {
    const auto n = static_cast<std::size_t>(instance.size());
    Rng rng(seed);
    LabelVector random_labels(n, JobClass::Tardy);
    for (std::size_t i = 0; i < n; ++i)
        if (rng.uniform01() < 0.5) random_labels[i] = JobClass::Early;

    const LabelVector candidates[3] = {std::move(random_labels),
                                       LabelVector(n, JobClass::Early),
                                       LabelVector(n, JobClass::Tardy)};
    std::optional<Schedule> best;
    for (const LabelVector& labels : candidates) {
        auto scheduled = schedule_from_labels(instance, labels);
        if (!scheduled) return std::nullopt;
        if (!best || scheduled->schedule.objective > best->objective)
            best = std::move(scheduled->schedule);
    }
    return best;
}

std::optional<Schedule> ga(const Instance& instance, const GaParams& params,
                           double time_budget_seconds, std::uint64_t seed) {
    if (params.population < 2 || params.elites < 0 ||
        params.elites > params.population || time_budget_seconds <= 0.0)
        throw ValidationError("bad genetic algorithm parameters");
    const auto start = Clock::now();
    const int n = instance.size();
    Rng rng(seed);

    const auto decode = [&](const std::vector<int>& order) -> std::optional<Schedule> {
        const auto completion = completion_times(instance, order);
        const auto scheduled =
            schedule_from_labels(instance, labels_from_completions(instance, completion));
        if (!scheduled) return std::nullopt;
        return scheduled->schedule;
    };

    std::vector<int> identity(static_cast<std::size_t>(n));
    std::iota(identity.begin(), identity.end(), 0);
    if (n == 1) return decode(identity);

    const auto pop_size = static_cast<std::size_t>(params.population);
    std::vector<std::vector<int>> population(pop_size, identity);
    std::vector<double> fitness(pop_size, 0.0);
    std::optional<Schedule> best;
    for (std::size_t i = 0; i < pop_size; ++i) {
        rng.shuffle(population[i].begin(), population[i].end());
        auto schedule = decode(population[i]);
        if (!schedule) return std::nullopt;
        fitness[i] = schedule->objective;
        if (!best || schedule->objective > best->objective) best = std::move(*schedule);
    }

    const auto tournament = [&]() -> std::size_t {
        const auto a = static_cast<std::size_t>(rng.below(pop_size));
        const auto b = static_cast<std::size_t>(rng.below(pop_size));
        if (fitness[a] != fitness[b]) return fitness[a] > fitness[b] ? a : b;
        return std::min(a, b);
    };

    const auto order_crossover = [&](const std::vector<int>& p1,
                                     const std::vector<int>& p2) {
        const auto un = static_cast<std::size_t>(n);
        std::size_t cut1 = static_cast<std::size_t>(rng.below(un));
        std::size_t cut2 = static_cast<std::size_t>(rng.below(un));
        if (cut1 > cut2) std::swap(cut1, cut2);
        std::vector<int> child(un, -1);
        std::vector<char> used(un, 0);
        for (std::size_t k = cut1; k <= cut2; ++k) {
            child[k] = p1[k];
            used[static_cast<std::size_t>(p1[k])] = 1;
        }
        std::size_t fill = (cut2 + 1) % un;
        for (std::size_t step = 0; step < un; ++step) {
            const int gene = p2[(cut2 + 1 + step) % un];
            if (used[static_cast<std::size_t>(gene)]) continue;
            child[fill] = gene;
            used[static_cast<std::size_t>(gene)] = 1;
            fill = (fill + 1) % un;
        }
        return child;
    };

    std::vector<std::size_t> ranking(pop_size);
    for (int generation = 0; generation < params.generations; ++generation) {
        if (expired(start, time_budget_seconds)) break;

        std::iota(ranking.begin(), ranking.end(), std::size_t{0});
        std::sort(ranking.begin(), ranking.end(), [&](std::size_t a, std::size_t b) {
            return fitness[a] != fitness[b] ? fitness[a] > fitness[b] : a < b;
        });

        std::vector<std::vector<int>> next;
        next.reserve(pop_size);
        for (int e = 0; e < params.elites; ++e)
            next.push_back(population[ranking[static_cast<std::size_t>(e)]]);

        while (next.size() < pop_size) {
            const std::vector<int>& p1 = population[tournament()];
            const std::vector<int>& p2 = population[tournament()];
            std::vector<int> child =
                rng.uniform01() < params.crossover_rate ? order_crossover(p1, p2) : p1;
            for (std::size_t k = 0; k < child.size(); ++k) {
                if (rng.uniform01() < params.mutation_rate) {
                    const auto other = static_cast<std::size_t>(
                        rng.below(static_cast<std::uint64_t>(n)));
                    std::swap(child[k], child[other]);
                }
            }
            next.push_back(std::move(child));
        }

        population = std::move(next);
        for (std::size_t i = 0; i < pop_size; ++i) {
            auto schedule = decode(population[i]);
            fitness[i] = schedule->objective;
            if (schedule->objective > best->objective) best = std::move(*schedule);
        }
    }
    return best;
}

std::optional<Schedule> honey_badger(const Instance& instance, const HbaParams& params,
                                     double time_budget_seconds, std::uint64_t seed) {
    if (params.population < 2 || time_budget_seconds <= 0.0)
        throw ValidationError("bad honey badger parameters");
    const auto start = Clock::now();
    const auto n = static_cast<std::size_t>(instance.size());
    Rng rng(seed);

    const auto decode = [&](const std::vector<double>& x) {
        LabelVector labels(n, JobClass::Tardy);
        for (std::size_t k = 0; k < n; ++k)
            if (x[k] >= 0.5) labels[k] = JobClass::Early;
        return schedule_from_labels(instance, labels);
    };

    const auto pop_size = static_cast<std::size_t>(params.population);
    std::vector<std::vector<double>> population(pop_size, std::vector<double>(n, 0.0));
    std::vector<double> fitness(pop_size, 0.0);
    std::optional<Schedule> best;
    std::vector<double> prey(n, 0.0);
    for (std::size_t i = 0; i < pop_size; ++i) {
        for (double& v : population[i]) v = rng.uniform01();
        auto scheduled = decode(population[i]);
        if (!scheduled) return std::nullopt;
        fitness[i] = scheduled->schedule.objective;
        if (!best || fitness[i] > best->objective) {
            best = std::move(scheduled->schedule);
            prey = population[i];
        }
    }

    constexpr double four_pi = 12.566370614359172;
    constexpr double kDenomGuard = 1e-12;
    std::vector<double> candidate(n, 0.0);
    for (int iter = 1; iter <= params.iterations; ++iter) {
        if (expired(start, time_budget_seconds)) break;
        const double alpha =
            params.density_c *
            std::exp(-static_cast<double>(iter) / static_cast<double>(params.iterations));
        for (std::size_t i = 0; i < pop_size; ++i) {
            const std::vector<double>& neighbor = population[(i + 1) % pop_size];
            const double phase = rng.uniform01();
            const double flag = rng.uniform01() <= 0.5 ? 1.0 : -1.0;
            for (std::size_t k = 0; k < n; ++k) {
                const double distance = prey[k] - population[i][k];
                double value;
                if (phase < 0.5) {
                    const double source = population[i][k] - neighbor[k];
                    const double intensity = rng.uniform01() * source * source /
                                             (four_pi * distance * distance + kDenomGuard);
                    const double r3 = rng.uniform01();
                    const double r4 = rng.uniform01();
                    const double r5 = rng.uniform01();
                    value = prey[k] + flag * params.beta * intensity * prey[k] +
                            flag * r3 * alpha * distance *
                                std::abs(std::cos(2.0 * M_PI * r4) *
                                         (1.0 - std::cos(2.0 * M_PI * r5)));
                } else {
                    value = prey[k] + flag * rng.uniform01() * alpha * distance;
                }
                candidate[k] = std::clamp(value, 0.0, 1.0);
            }
            auto scheduled = decode(candidate);
            const double value = scheduled->schedule.objective;
            if (value > fitness[i]) {
                population[i] = candidate;
                fitness[i] = value;
                if (value > best->objective) {
                    best = std::move(scheduled->schedule);
                    prey = population[i];
                }
            }
        }
    }
    return best;
}

}  // namespace wtardy
