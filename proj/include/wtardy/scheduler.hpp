#ifndef WTARDY_SCHEDULER_HPP
#define WTARDY_SCHEDULER_HPP

#include <optional>
#include <vector>

#include "wtardy/core.hpp"

namespace wtardy {

/// True iff the jobs not listed in `excluded`, processed in non-descending
/// deadline order starting at `start_time`, all meet their deadlines.
bool edf_feasible(const Instance& instance, const std::vector<int>& excluded,
                  double start_time);

struct LabelScheduleResult {
    Schedule schedule;
    /// Classification by actual completion times of the returned schedule.
    LabelVector final_labels;
    /// Cursor iterations; at most 2n since a job is revisited at most once.
    int cursor_steps = 0;
    /// Early-classed jobs that failed their feasibility check and were
    /// re-queued as tardy.
    int demotions = 0;
};

/**
 * Turns a (possibly wrong, possibly adversarial) early/tardy labeling into
 * a deadline-feasible schedule, or returns nullopt when the instance itself
 * admits no feasible schedule.
 *
 * Jobs are visited in non-descending order of their class key D (due date
 * if labeled early, deadline if tardy; ties by id). A tardy-classed job is
 * scheduled immediately. An early-classed job is scheduled only if the
 * remaining jobs can still all meet their deadlines afterwards, checked by
 * simulating deadline-order processing from the makespan including the
 * candidate; otherwise the job is re-classed tardy and re-inserted into the
 * sorted list after entries with equal keys.
 *
 * Whenever the instance passes the initial deadline-order check, the result
 * is feasible no matter what the labels say.
 */
std::optional<LabelScheduleResult> schedule_from_labels(const Instance& instance,
                                                        const LabelVector& labels);

/// Jobs in non-descending deadline order; nullopt if any deadline is missed
/// (equivalently, the instance is infeasible).
std::optional<Schedule> edf_schedule(const Instance& instance);

struct EddResult {
    Schedule schedule;
    bool deadline_feasible = false;
};

/// Jobs in non-descending due-date order. A quality baseline only; the
/// order may violate deadlines, which the flag reports.
EddResult edd_schedule(const Instance& instance);

}  // namespace wtardy

#endif
