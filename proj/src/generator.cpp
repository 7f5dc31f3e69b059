#include "wtardy/generator.hpp"

#include <cmath>
#include <string>

#include "wtardy/rng.hpp"
#include "wtardy/scheduler.hpp"

namespace wtardy {

const char* const kGeneratorPrngId = "mt19937_64+boxmuller";

namespace {

constexpr int kFieldRetries = 100;
constexpr int kInstanceRetries = 50;
constexpr double kTinyPositive = 1e-6;

double round6(double x) { return from_micro(to_micro(x)); }

struct AbPair {
    double a, b;
};

AbPair family_ab(int family) {
    switch (family) {
        case 11: return {0.1, 0.3};
        case 12: return {0.1, 0.7};
        case 13: return {0.3, 0.5};
        case 14: return {0.3, 0.7};
        default: return {0.5, 0.7};  // family 15
    }
}

// Draws are quantized to the 6-decimal file resolution immediately, so all
// derived formulas below operate on the exact values the instance will carry.
template <typename Draw, typename Ok>
double draw_repaired(Draw draw, Ok ok, double fallback) {
    for (int attempt = 0; attempt <= kFieldRetries; ++attempt) {
        const double v = round6(draw());
        if (ok(v)) return v;
    }
    return round6(fallback);
}

Instance generate_once(const DatasetSpec& spec, std::uint64_t stream_seed) {
    const int family = spec.family;
    const int n = spec.n;
    Rng rng(stream_seed);

    std::vector<double> w(static_cast<std::size_t>(n), 0.0);
    std::vector<double> p(static_cast<std::size_t>(n), 0.0);
    std::vector<double> d(static_cast<std::size_t>(n), 0.0);
    std::vector<double> dd(static_cast<std::size_t>(n), 0.0);

    const auto positive = [](double v) { return v > 0.0 && std::isfinite(v); };

    // Pass 1: weights (where drawn) and durations, jobs in index order.
    for (int i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        switch (family) {
            case 1:
                w[k] = draw_repaired([&] { return rng.normal(50, 20); }, positive,
                                     kTinyPositive);
                p[k] = round6(rng.uniform(1, 100));
                break;
            case 2:
                w[k] = round6(rng.uniform(30, 80));
                p[k] = draw_repaired([&] { return rng.normal(50, 10); }, positive,
                                     kTinyPositive);
                break;
            case 3:
                p[k] = draw_repaired([&] { return rng.normal(40, 15); }, positive,
                                     kTinyPositive);
                w[k] = round6(2.0 * p[k] + 20.0);
                break;
            case 4:
                p[k] = draw_repaired([&] { return rng.normal(35, 10); }, positive,
                                     kTinyPositive);
                w[k] = round6(p[k] * p[k] + 10.0);
                break;
            case 5:
                w[k] = round6(rng.uniform(20, 80));
                p[k] = draw_repaired([&] { return rng.normal(45, 15); }, positive,
                                     kTinyPositive);
                break;
            case 6:
                p[k] = draw_repaired([&] { return rng.normal(40, 10); }, positive,
                                     kTinyPositive);
                w[k] = round6(100.0 / (p[k] + 1.0));
                break;
            case 7:
                w[k] = round6(rng.uniform(10, 60));
                p[k] = draw_repaired([&] { return rng.exponential(30); }, positive,
                                     kTinyPositive);
                break;
            case 8:
                w[k] = draw_repaired([&] { return rng.lognormal(3, 1); }, positive,
                                     kTinyPositive);
                p[k] = draw_repaired([&] { return rng.lognormal(4, 1); }, positive,
                                     kTinyPositive);
                break;
            case 9:
                p[k] = draw_repaired([&] { return rng.normal(40, 10); }, positive,
                                     kTinyPositive);
                break;  // weight derived after the due date is known
            case 10:
                w[k] = draw_repaired([&] { return rng.lognormal(4, 2); }, positive,
                                     kTinyPositive);
                p[k] = draw_repaired([&] { return rng.exponential(40); }, positive,
                                     kTinyPositive);
                break;
            default:
                w[k] = round6(rng.uniform(1, 100));
                p[k] = round6(rng.uniform(1, 100));
                break;
        }
    }

    double sum_p = 0.0;
    for (double v : p) sum_p += v;

    // Pass 2: due dates and deadlines, jobs in index order.
    for (int i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        const auto due_ok = [&](double v) { return v >= p[k] && std::isfinite(v); };

        switch (family) {
            case 2:
                d[k] = draw_repaired([&] { return rng.normal(0.5 * sum_p, 0.1 * sum_p); },
                                     due_ok, std::max(p[k], 0.5 * sum_p));
                break;
            case 5:
                d[k] = draw_repaired([&] { return rng.uniform(0.5 * sum_p, 0.8 * sum_p); },
                                     due_ok, std::max(p[k], 0.5 * sum_p));
                break;
            case 10:
                d[k] = draw_repaired([&] { return rng.normal(0.5 * sum_p, 100); },
                                     due_ok, std::max(p[k], 0.5 * sum_p));
                break;
            case 11:
            case 12:
            case 13:
            case 14:
            case 15: {
                const AbPair ab = family_ab(family);
                d[k] = draw_repaired(
                    [&] { return rng.uniform(ab.a * sum_p, ab.b * sum_p); }, due_ok,
                    std::max(p[k], ab.a * sum_p));
                break;
            }
            default:  // families 1, 3, 4, 6, 7, 8, 9
                d[k] = draw_repaired([&] { return rng.uniform(0.3 * sum_p, 0.7 * sum_p); },
                                     due_ok, std::max(p[k], 0.3 * sum_p));
                break;
        }
        if (d[k] < p[k]) d[k] = p[k];

        if (family == 9) w[k] = round6(1.5 * p[k] + 0.2 * d[k]);

        const auto deadline_ok = [&](double v) { return v >= d[k] && std::isfinite(v); };
        switch (family) {
            case 2:
                dd[k] = draw_repaired([&] { return rng.uniform(d[k], 1.2 * sum_p); },
                                      deadline_ok, d[k]);
                break;
            case 5:
                dd[k] = round6(d[k] + (static_cast<double>(n) / 5.0) * w[k]);
                break;
            case 10:
                dd[k] = draw_repaired([&] { return rng.normal(2.0 * d[k], 200); },
                                      deadline_ok, d[k]);
                break;
            default:
                dd[k] = draw_repaired([&] { return rng.uniform(d[k], 1.1 * sum_p); },
                                      deadline_ok, d[k]);
                break;
        }
        if (dd[k] < d[k]) dd[k] = d[k];
    }

    Instance instance;
    instance.meta.family = family;
    instance.meta.seed = spec.seed;
    instance.jobs.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        Job job;
        job.id = i;
        job.weight = std::max(w[k], kTinyPositive);
        job.duration = std::max(p[k], kTinyPositive);
        job.due_date = std::max(d[k], job.duration);
        job.deadline = std::max(dd[k], job.due_date);
        instance.jobs.push_back(job);
    }
    return instance;
}

}  // namespace

Instance generate(const DatasetSpec& spec) {
    if (spec.family < 1 || spec.family > 15)
        throw ValidationError("family must be in 1..15, got " +
                              std::to_string(spec.family));
    if (spec.n < 1)
        throw ValidationError("n must be >= 1, got " + std::to_string(spec.n));

    // Attempt k draws from an independent derived stream; attempt 0 defines
    // the nominal instance for a seed.
    for (int attempt = 0; attempt < kInstanceRetries; ++attempt) {
        const std::uint64_t stream_seed =
            splitmix64(spec.seed + 0x51ed2700551ed270ULL * static_cast<std::uint64_t>(attempt) +
                       (static_cast<std::uint64_t>(spec.family) << 32) +
                       static_cast<std::uint64_t>(spec.n));
        Instance instance = generate_once(spec, stream_seed);
        if (edf_feasible(instance, {}, 0.0)) {
            validate_instance(instance);
            return instance;
        }
    }
    throw GenerationError("no deadline-feasible instance after " +
                          std::to_string(kInstanceRetries) + " attempts (family " +
                          std::to_string(spec.family) + ", n " + std::to_string(spec.n) +
                          ", seed " + std::to_string(spec.seed) + ")");
}

}  // namespace wtardy
