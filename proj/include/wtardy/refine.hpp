#ifndef WTARDY_REFINE_HPP
#define WTARDY_REFINE_HPP

#include "wtardy/core.hpp"
#include "wtardy/exact.hpp"

namespace wtardy {

/**
 * Removes one job whose early/tardy status is taken as fixed and shifts the
 * remaining time data so that optimal solutions correspond one-to-one.
 * `d_key` must equal the removed job's due date (fixed early) or deadline
 * (fixed tardy). With D = d_key and q = the removed job's duration, every
 * remaining time value t becomes min(t, D - q) when t <= D and t - q
 * otherwise, applied to due dates and deadlines; weights and durations pass
 * through unchanged. Remaining jobs keep their relative order and are
 * re-numbered 0..n-2. Shifted due dates may drop below durations, which
 * simply makes those jobs unable to be early.
 */
Instance reduce_instance(const Instance& instance, int job_id, double d_key);

struct RefineResult {
    LabelVector labels;
    bool solver_invoked = false;
    SolveStatus reduced_status = SolveStatus::Infeasible;
};

/**
 * Re-decides the `gamma` predictions closest to score 0.5. The confidently
 * predicted jobs are removed one at a time (non-increasing predicted key
 * order, ties by id) via the reduction above, each using its current
 * shifted due date or deadline according to its predicted class. The
 * reduced instance is solved exactly with time limit `beta_seconds`; if
 * that proves optimality the kept jobs adopt the exact labels, otherwise
 * (timeout or an infeasible reduced instance) the input labels are returned
 * unchanged.
 */
RefineResult refine(const Instance& instance, const LabelVector& labels,
                    const ScoreVector& scores, int gamma, double beta_seconds,
                    bool use_dominance = true);

}  // namespace wtardy

#endif
