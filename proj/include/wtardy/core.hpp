#ifndef WTARDY_CORE_HPP
#define WTARDY_CORE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wtardy {

// ---------------------------------------------------------------------------
// Error taxonomy, mapped to process exit codes by the CLI:
//   ValidationError -> 1 (bad arguments / precondition misuse)
//   FormatError     -> 2 (malformed or invariant-violating input file)
//   InfeasibleError -> 2 (instance or schedule cannot meet its deadlines)
//   InternalError   -> 3 (broken internal invariant; indicates a bug)
// ---------------------------------------------------------------------------

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Domain model. One machine, no preemption, no idling. Each job carries a
// profit weight, a processing duration, a soft due date and a hard deadline,
// with duration <= due_date <= deadline. A job finishing at or before its
// due date is early and contributes its weight to the objective; finishing
// after the deadline makes the whole schedule infeasible.
//
// All values are doubles quantized to 6 decimal places (the instance file
// resolution). Time and weight arithmetic that feeds comparisons runs on
// 64-bit integer micro-units (value * 1e6), so feasibility checks and
// objective equality are exact with no epsilons.
// ---------------------------------------------------------------------------

struct Job {
    int id = 0;
    double weight = 0.0;
    double duration = 0.0;
    double due_date = 0.0;
    double deadline = 0.0;
};

struct InstanceMeta {
    int family = 0;
    std::uint64_t seed = 0;
};

struct Instance {
    std::vector<Job> jobs;
    InstanceMeta meta;

    int size() const { return static_cast<int>(jobs.size()); }
};

/// Throws FormatError unless every job satisfies w > 0, p > 0,
/// p <= d <= deadline, and ids equal positions. Reduced instances produced
/// by reduce_instance may legitimately violate p <= d and are not validated.
void validate_instance(const Instance& instance);

enum class JobClass : std::uint8_t { Tardy = 0, Early = 1 };

using LabelVector = std::vector<JobClass>;
/// Per-job oracle confidence that the job is early, each in [0, 1].
using ScoreVector = std::vector<double>;

struct Schedule {
    std::vector<int> order;            ///< permutation of job ids
    std::vector<double> completion;    ///< completion time, indexed by job id
    double objective = 0.0;            ///< weighted early sum of this order
};

// ---------------------------------------------------------------------------
// Fixed-point view. micro(x) = llround(x * 1e6) is exact for 6-decimal data.
// ---------------------------------------------------------------------------

using Micro = std::int64_t;

Micro to_micro(double value);
double from_micro(Micro value);

struct MicroJob {
    Micro weight = 0;
    Micro duration = 0;
    Micro due_date = 0;
    Micro deadline = 0;
};

std::vector<MicroJob> micro_jobs(const Instance& instance);

/// Sorting key used throughout: due date for early-classed jobs, hard
/// deadline for tardy-classed ones.
inline Micro class_key(const MicroJob& job, JobClass cls) {
    return cls == JobClass::Early ? job.due_date : job.deadline;
}

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// Completion time of each job under the given processing order, indexed by
/// job id. Throws ValidationError if order is not a permutation of the ids.
std::vector<double> completion_times(const Instance& instance,
                                     const std::vector<int>& order);

/// Builds a schedule (completions + weighted early sum) for an order.
/// Does not require deadline feasibility.
Schedule build_schedule(const Instance& instance, std::vector<int> order);

/// True iff every completion is at or before the job's hard deadline.
bool schedule_feasible(const Instance& instance, const Schedule& schedule);

/// Sum of weights of jobs completing at or before their due date, computed
/// in micro-units over job-index order so equal early sets always produce
/// bit-identical values.
double weighted_early_sum(const Instance& instance,
                          const std::vector<double>& completion);

/// Weighted early sum of a label vector (weights of early-labeled jobs).
double label_objective(const Instance& instance, const LabelVector& labels);

/// Validates that the schedule's completions match its order, throws
/// InfeasibleError if any deadline is violated, and returns the weighted
/// early sum.
double objective(const Instance& instance, const Schedule& schedule);

/// True iff processing jobs in non-descending order of their class key
/// (ties by id) meets every job's class key, i.e. the label assignment is
/// realizable. Early-labeled jobs must finish by their due date,
/// tardy-labeled ones by their deadline.
bool labels_feasible(const Instance& instance, const LabelVector& labels);

/// Early/tardy classification by completion time. Throws InfeasibleError
/// on a deadline-violating schedule.
LabelVector derive_labels_from_schedule(const Instance& instance,
                                        const Schedule& schedule);

}  // namespace wtardy

#endif
