#include "wtardy/core.hpp"

#include <algorithm>
#include <cmath>

namespace wtardy {

Micro to_micro(double value) {
    return static_cast<Micro>(std::llround(value * 1e6));
}

double from_micro(Micro value) {
    return static_cast<double>(value) / 1e6;
}

std::vector<MicroJob> micro_jobs(const Instance& instance) {
    std::vector<MicroJob> out;
    out.reserve(instance.jobs.size());
    for (const Job& job : instance.jobs) {
        out.push_back({to_micro(job.weight), to_micro(job.duration),
                       to_micro(job.due_date), to_micro(job.deadline)});
    }
    return out;
}

void validate_instance(const Instance& instance) {
    for (std::size_t i = 0; i < instance.jobs.size(); ++i) {
        const Job& job = instance.jobs[i];
        if (job.id != static_cast<int>(i))
            throw FormatError("job id " + std::to_string(job.id) +
                              " does not equal its position " + std::to_string(i));
        if (!(job.weight > 0.0) || !std::isfinite(job.weight))
            throw FormatError("job " + std::to_string(i) + ": weight must be positive");
        if (!(job.duration > 0.0) || !std::isfinite(job.duration))
            throw FormatError("job " + std::to_string(i) + ": duration must be positive");
        if (!std::isfinite(job.due_date) || !std::isfinite(job.deadline))
            throw FormatError("job " + std::to_string(i) + ": non-finite time value");
        if (job.duration > job.due_date || job.due_date > job.deadline)
            throw FormatError("job " + std::to_string(i) +
                              ": requires duration <= due_date <= deadline");
    }
}

namespace {

void check_permutation(int n, const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != n)
        throw ValidationError("order has " + std::to_string(order.size()) +
                              " entries for " + std::to_string(n) + " jobs");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int id : order) {
        if (id < 0 || id >= n)
            throw ValidationError("order contains out-of-range id " + std::to_string(id));
        if (seen[static_cast<std::size_t>(id)])
            throw ValidationError("order contains duplicate id " + std::to_string(id));
        seen[static_cast<std::size_t>(id)] = 1;
    }
}

std::vector<Micro> micro_completions(const std::vector<MicroJob>& jobs,
                                     const std::vector<int>& order) {
    std::vector<Micro> completion(jobs.size(), 0);
    Micro t = 0;
    for (int id : order) {
        t += jobs[static_cast<std::size_t>(id)].duration;
        completion[static_cast<std::size_t>(id)] = t;
    }
    return completion;
}

}  // namespace

std::vector<double> completion_times(const Instance& instance,
                                     const std::vector<int>& order) {
    check_permutation(instance.size(), order);
    const auto jobs = micro_jobs(instance);
    const auto micro = micro_completions(jobs, order);
    std::vector<double> out(micro.size());
    for (std::size_t i = 0; i < micro.size(); ++i) out[i] = from_micro(micro[i]);
    return out;
}

Schedule build_schedule(const Instance& instance, std::vector<int> order) {
    Schedule schedule;
    schedule.completion = completion_times(instance, order);
    schedule.order = std::move(order);
    schedule.objective = weighted_early_sum(instance, schedule.completion);
    return schedule;
}

bool schedule_feasible(const Instance& instance, const Schedule& schedule) {
    const auto jobs = micro_jobs(instance);
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        if (to_micro(schedule.completion[i]) > jobs[i].deadline) return false;
    }
    return true;
}

double weighted_early_sum(const Instance& instance,
                          const std::vector<double>& completion) {
    const auto jobs = micro_jobs(instance);
    Micro total = 0;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        if (to_micro(completion[i]) <= jobs[i].due_date) total += jobs[i].weight;
    }
    return from_micro(total);
}

double label_objective(const Instance& instance, const LabelVector& labels) {
    const auto jobs = micro_jobs(instance);
    Micro total = 0;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        if (labels[i] == JobClass::Early) total += jobs[i].weight;
    }
    return from_micro(total);
}

double objective(const Instance& instance, const Schedule& schedule) {
    check_permutation(instance.size(), schedule.order);
    const auto jobs = micro_jobs(instance);
    const auto micro = micro_completions(jobs, schedule.order);
    if (schedule.completion.size() != jobs.size())
        throw ValidationError("completion vector length mismatch");
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        if (to_micro(schedule.completion[i]) != micro[i])
            throw ValidationError("completion times inconsistent with order at job " +
                                  std::to_string(i));
        if (micro[i] > jobs[i].deadline)
            throw InfeasibleError("job " + std::to_string(i) +
                                  " completes after its deadline");
    }
    return weighted_early_sum(instance, schedule.completion);
}

bool labels_feasible(const Instance& instance, const LabelVector& labels) {
    const int n = instance.size();
    if (static_cast<int>(labels.size()) != n)
        throw ValidationError("label vector length mismatch");
    const auto jobs = micro_jobs(instance);

    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const Micro ka = class_key(jobs[static_cast<std::size_t>(a)],
                                   labels[static_cast<std::size_t>(a)]);
        const Micro kb = class_key(jobs[static_cast<std::size_t>(b)],
                                   labels[static_cast<std::size_t>(b)]);
        return ka != kb ? ka < kb : a < b;
    });

    Micro t = 0;
    for (int id : order) {
        const auto& job = jobs[static_cast<std::size_t>(id)];
        t += job.duration;
        if (t > class_key(job, labels[static_cast<std::size_t>(id)])) return false;
    }
    return true;
}

LabelVector derive_labels_from_schedule(const Instance& instance,
                                        const Schedule& schedule) {
    const auto jobs = micro_jobs(instance);
    LabelVector labels(jobs.size(), JobClass::Tardy);
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        const Micro c = to_micro(schedule.completion[i]);
        if (c > jobs[i].deadline)
            throw InfeasibleError("cannot derive labels from an infeasible schedule");
        if (c <= jobs[i].due_date) labels[i] = JobClass::Early;
    }
    return labels;
}

}  // namespace wtardy
