#include "wtardy/scheduler.hpp"

#include <algorithm>
#include <numeric>

namespace wtardy {

namespace {

std::vector<int> deadline_order(const std::vector<MicroJob>& jobs) {
    std::vector<int> order(jobs.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const Micro da = jobs[static_cast<std::size_t>(a)].deadline;
        const Micro db = jobs[static_cast<std::size_t>(b)].deadline;
        return da != db ? da < db : a < b;
    });
    return order;
}

// One pass over the deadline-presorted list, skipping already-scheduled
// jobs and `skip`, accumulating durations from `start`.
bool edf_pass(const std::vector<MicroJob>& jobs, const std::vector<int>& by_deadline,
              const std::vector<char>& scheduled, int skip, Micro start) {
    Micro t = start;
    for (int id : by_deadline) {
        if (id == skip || scheduled[static_cast<std::size_t>(id)]) continue;
        const auto& job = jobs[static_cast<std::size_t>(id)];
        t += job.duration;
        if (t > job.deadline) return false;
    }
    return true;
}

}  // namespace

bool edf_feasible(const Instance& instance, const std::vector<int>& excluded,
                  double start_time) {
    const auto jobs = micro_jobs(instance);
    std::vector<char> skip_mask(jobs.size(), 0);
    for (int id : excluded) {
        if (id < 0 || id >= instance.size())
            throw ValidationError("excluded id out of range: " + std::to_string(id));
        skip_mask[static_cast<std::size_t>(id)] = 1;
    }
    return edf_pass(jobs, deadline_order(jobs), skip_mask, -1, to_micro(start_time));
}

std::optional<LabelScheduleResult> schedule_from_labels(const Instance& instance,
                                                        const LabelVector& labels) {
    const int n = instance.size();
    if (static_cast<int>(labels.size()) != n)
        throw ValidationError("label vector length mismatch");
    const auto jobs = micro_jobs(instance);
    const auto by_deadline = deadline_order(jobs);
    std::vector<char> scheduled(jobs.size(), 0);

    if (!edf_pass(jobs, by_deadline, scheduled, -1, 0)) return std::nullopt;

    std::vector<Micro> key(jobs.size());
    LabelVector cls = labels;
    for (int i = 0; i < n; ++i)
        key[static_cast<std::size_t>(i)] =
            class_key(jobs[static_cast<std::size_t>(i)], cls[static_cast<std::size_t>(i)]);

    std::vector<int> list(jobs.size());
    std::iota(list.begin(), list.end(), 0);
    std::sort(list.begin(), list.end(), [&](int a, int b) {
        const Micro ka = key[static_cast<std::size_t>(a)];
        const Micro kb = key[static_cast<std::size_t>(b)];
        return ka != kb ? ka < kb : a < b;
    });

    LabelScheduleResult result;
    result.schedule.order.reserve(jobs.size());
    std::vector<Micro> completion(jobs.size(), 0);
    Micro makespan = 0;
    std::size_t cursor = 0;

    while (cursor < list.size()) {
        ++result.cursor_steps;
        const int j = list[cursor];
        const auto& job = jobs[static_cast<std::size_t>(j)];

        bool schedule_now = true;
        if (cls[static_cast<std::size_t>(j)] == JobClass::Early)
            schedule_now = edf_pass(jobs, by_deadline, scheduled, j,
                                    makespan + job.duration);

        if (schedule_now) {
            scheduled[static_cast<std::size_t>(j)] = 1;
            makespan += job.duration;
            completion[static_cast<std::size_t>(j)] = makespan;
            result.schedule.order.push_back(j);
            ++cursor;
        } else {
            ++result.demotions;
            cls[static_cast<std::size_t>(j)] = JobClass::Tardy;
            key[static_cast<std::size_t>(j)] = job.deadline;
            list.erase(list.begin() + static_cast<std::ptrdiff_t>(cursor));
            // Re-insert after all remaining entries with key <= the new key,
            // keeping the unscheduled suffix sorted.
            auto pos = std::upper_bound(
                list.begin() + static_cast<std::ptrdiff_t>(cursor), list.end(),
                key[static_cast<std::size_t>(j)], [&](Micro value, int id) {
                    return value < key[static_cast<std::size_t>(id)];
                });
            list.insert(pos, j);
        }
    }

    result.schedule.completion.resize(jobs.size());
    for (std::size_t i = 0; i < jobs.size(); ++i)
        result.schedule.completion[i] = from_micro(completion[i]);
    result.schedule.objective =
        weighted_early_sum(instance, result.schedule.completion);
    result.final_labels = derive_labels_from_schedule(instance, result.schedule);
    return result;
}

std::optional<Schedule> edf_schedule(const Instance& instance) {
    const auto jobs = micro_jobs(instance);
    Schedule schedule = build_schedule(instance, deadline_order(jobs));
    if (!schedule_feasible(instance, schedule)) return std::nullopt;
    return schedule;
}

EddResult edd_schedule(const Instance& instance) {
    const auto jobs = micro_jobs(instance);
    std::vector<int> order(jobs.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const Micro da = jobs[static_cast<std::size_t>(a)].due_date;
        const Micro db = jobs[static_cast<std::size_t>(b)].due_date;
        return da != db ? da < db : a < b;
    });
    EddResult result;
    result.schedule = build_schedule(instance, std::move(order));
    result.deadline_feasible = schedule_feasible(instance, result.schedule);
    return result;
}

}  // namespace wtardy
