#include "wtardy/refine.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace wtardy {

namespace {

Micro shifted(Micro t, Micro d_key, Micro removed_duration) {
    return t <= d_key ? std::min(t, d_key - removed_duration) : t - removed_duration;
}

}  // namespace

Instance reduce_instance(const Instance& instance, int job_id, double d_key) {
    const int n = instance.size();
    if (job_id < 0 || job_id >= n)
        throw ValidationError("reduce_instance: no job with id " + std::to_string(job_id));
    const auto jobs = micro_jobs(instance);
    const auto& removed = jobs[static_cast<std::size_t>(job_id)];
    const Micro key = to_micro(d_key);
    if (key != removed.due_date && key != removed.deadline)
        throw ValidationError(
            "reduce_instance: d_key must be the removed job's due date or deadline");

    Instance reduced;
    reduced.meta = instance.meta;
    reduced.jobs.reserve(static_cast<std::size_t>(n - 1));
    for (int i = 0; i < n; ++i) {
        if (i == job_id) continue;
        const auto& job = jobs[static_cast<std::size_t>(i)];
        Job out;
        out.id = static_cast<int>(reduced.jobs.size());
        out.weight = instance.jobs[static_cast<std::size_t>(i)].weight;
        out.duration = instance.jobs[static_cast<std::size_t>(i)].duration;
        out.due_date = from_micro(shifted(job.due_date, key, removed.duration));
        out.deadline = from_micro(shifted(job.deadline, key, removed.duration));
        reduced.jobs.push_back(out);
    }
    return reduced;
}

RefineResult refine(const Instance& instance, const LabelVector& labels,
                    const ScoreVector& scores, int gamma, double beta_seconds,
                    bool use_dominance) {
    const int n = instance.size();
    if (static_cast<int>(labels.size()) != n || static_cast<int>(scores.size()) != n)
        throw ValidationError("refine: labels/scores length mismatch");
    if (gamma < 0 || gamma > n)
        throw ValidationError("refine: gamma must be in [0, n]");
    if (beta_seconds <= 0.0)
        throw ValidationError("refine: time limit must be positive");

    RefineResult result;
    result.labels = labels;
    if (gamma == 0) return result;

    std::vector<int> by_confidence(static_cast<std::size_t>(n));
    std::iota(by_confidence.begin(), by_confidence.end(), 0);
    std::sort(by_confidence.begin(), by_confidence.end(), [&](int a, int b) {
        const double ua = std::abs(scores[static_cast<std::size_t>(a)] - 0.5);
        const double ub = std::abs(scores[static_cast<std::size_t>(b)] - 0.5);
        return ua != ub ? ua < ub : a < b;
    });

    std::vector<char> kept(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < gamma; ++k)
        kept[static_cast<std::size_t>(by_confidence[static_cast<std::size_t>(k)])] = 1;

    // Confident jobs leave in non-increasing order of their predicted key,
    // so every removal shifts a consistent suffix of the time axis.
    const auto jobs = micro_jobs(instance);
    std::vector<int> removal_order;
    removal_order.reserve(static_cast<std::size_t>(n - gamma));
    for (int i = 0; i < n; ++i)
        if (!kept[static_cast<std::size_t>(i)]) removal_order.push_back(i);
    std::sort(removal_order.begin(), removal_order.end(), [&](int a, int b) {
        const Micro ka = class_key(jobs[static_cast<std::size_t>(a)],
                                   labels[static_cast<std::size_t>(a)]);
        const Micro kb = class_key(jobs[static_cast<std::size_t>(b)],
                                   labels[static_cast<std::size_t>(b)]);
        return ka != kb ? ka > kb : a < b;
    });

    // In-place fold of reduce_instance over the removal list: equivalent to
    // building each intermediate instance, without the copies.
    std::vector<Micro> due(static_cast<std::size_t>(n)), dl(static_cast<std::size_t>(n));
    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    for (int i = 0; i < n; ++i) {
        due[static_cast<std::size_t>(i)] = jobs[static_cast<std::size_t>(i)].due_date;
        dl[static_cast<std::size_t>(i)] = jobs[static_cast<std::size_t>(i)].deadline;
    }
    for (int j : removal_order) {
        const auto kj = static_cast<std::size_t>(j);
        const Micro key = labels[kj] == JobClass::Early ? due[kj] : dl[kj];
        const Micro q = jobs[kj].duration;
        alive[kj] = 0;
        for (int i = 0; i < n; ++i) {
            const auto ki = static_cast<std::size_t>(i);
            if (!alive[ki]) continue;
            due[ki] = shifted(due[ki], key, q);
            dl[ki] = shifted(dl[ki], key, q);
        }
    }

    Instance reduced;
    reduced.meta = instance.meta;
    std::vector<int> original_id;
    for (int i = 0; i < n; ++i) {
        const auto ki = static_cast<std::size_t>(i);
        if (!alive[ki]) continue;
        Job job;
        job.id = static_cast<int>(reduced.jobs.size());
        job.weight = instance.jobs[ki].weight;
        job.duration = instance.jobs[ki].duration;
        job.due_date = from_micro(due[ki]);
        job.deadline = from_micro(dl[ki]);
        reduced.jobs.push_back(job);
        original_id.push_back(i);
    }

    SolveOptions options;
    options.time_limit_seconds = beta_seconds;
    options.use_dominance = use_dominance;
    const SolveResult solved = solve_exact(reduced, options);
    result.solver_invoked = true;
    result.reduced_status = solved.status;
    if (solved.status == SolveStatus::Optimal) {
        for (std::size_t k = 0; k < original_id.size(); ++k)
            result.labels[static_cast<std::size_t>(original_id[k])] = solved.labels[k];
    }
    return result;
}

}  // namespace wtardy
