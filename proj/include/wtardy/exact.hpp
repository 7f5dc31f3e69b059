#ifndef WTARDY_EXACT_HPP
#define WTARDY_EXACT_HPP

#include <cstdint>
#include <vector>

#include "wtardy/core.hpp"

namespace wtardy {

enum class SolveStatus { Optimal, Timeout, Infeasible };

struct SolveResult {
    SolveStatus status = SolveStatus::Infeasible;
    LabelVector labels;        ///< best label assignment found (empty if infeasible)
    double objective = 0.0;    ///< weighted early sum of `labels`
    std::uint64_t nodes_explored = 0;
    double elapsed_seconds = 0.0;
};

/// Exhaustive enumeration of all 2^n label vectors, keeping the
/// maximum-weight feasible one. Independent of the branch-and-bound code
/// path; serves as its oracle. Refuses n > 20.
SolveResult brute_force(const Instance& instance);

struct SolveOptions {
    double time_limit_seconds = 300.0;
    bool use_dominance = true;
};

/// Pairwise label implication: whenever `early_implier` is early in an
/// optimal assignment, `early_implied` is early too (equivalently, if
/// `early_implied` is tardy, so is `early_implier`). Recorded for job pairs
/// (i, j) with w_j > w_i, p_j <= p_i, d_j >= d_i and deadline_j <= deadline_i.
struct DominancePair {
    int early_implier = 0;  ///< i
    int early_implied = 0;  ///< j
};

std::vector<DominancePair> dominance_pairs(const Instance& instance);

/**
 * Depth-first branch-and-bound over per-job early/tardy decisions.
 *
 * Jobs are branched in non-descending deadline order (ties by id), early
 * branch first. At every node the undecided jobs are simulated tardy; if
 * even that relaxed assignment cannot meet its keys the node is pruned,
 * and otherwise it provides a feasible incumbent candidate. A second
 * simulation with undecided jobs early closes the subtree when it is
 * feasible, since it attains the node's upper bound of committed early
 * weight plus all undecided weight. Dominance implications are propagated
 * at every commitment. Weights and times are compared in exact micro-unit
 * arithmetic. On expiry of the time limit the best incumbent is returned
 * with Timeout status.
 */
SolveResult solve_exact(const Instance& instance, const SolveOptions& options = {});

}  // namespace wtardy

#endif
