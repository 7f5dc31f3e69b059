#include "wtardy/exact.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "wtardy/scheduler.hpp"

namespace wtardy {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Micro micro_label_objective(const std::vector<MicroJob>& jobs,
                            const LabelVector& labels) {
    Micro total = 0;
    for (std::size_t i = 0; i < jobs.size(); ++i)
        if (labels[i] == JobClass::Early) total += jobs[i].weight;
    return total;
}

// Sorted-by-(key, id) job list with O(n) move of a single entry when its
// key changes. The feasibility scan mirrors labels_feasible exactly.
struct KeyedList {
    std::vector<int> order;
    std::vector<Micro> key;        // per job id
    std::vector<Micro> duration;   // per job id

    void init(const std::vector<MicroJob>& jobs, std::vector<Micro> initial_key) {
        key = std::move(initial_key);
        duration.resize(jobs.size());
        for (std::size_t i = 0; i < jobs.size(); ++i) duration[i] = jobs[i].duration;
        order.resize(jobs.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            const Micro ka = key[static_cast<std::size_t>(a)];
            const Micro kb = key[static_cast<std::size_t>(b)];
            return ka != kb ? ka < kb : a < b;
        });
    }

    std::vector<int>::iterator locate(int id) {
        return std::lower_bound(
            order.begin(), order.end(), id, [&](int e, int target) {
                const Micro ke = key[static_cast<std::size_t>(e)];
                const Micro kt = key[static_cast<std::size_t>(target)];
                return ke != kt ? ke < kt : e < target;
            });
    }

    void move(int id, Micro new_key) {
        order.erase(locate(id));
        key[static_cast<std::size_t>(id)] = new_key;
        order.insert(locate(id), id);
    }

    bool feasible() const {
        Micro t = 0;
        for (int id : order) {
            t += duration[static_cast<std::size_t>(id)];
            if (t > key[static_cast<std::size_t>(id)]) return false;
        }
        return true;
    }
};

constexpr std::int8_t kUndecided = -1;
constexpr std::int8_t kTardy = 0;
constexpr std::int8_t kEarly = 1;

struct Search {
    const std::vector<MicroJob>& jobs;
    std::vector<int> branch_order;          // by (deadline, id)
    std::vector<std::vector<int>> implies_early;  // i early -> these early
    std::vector<std::vector<int>> implies_tardy;  // j tardy -> these tardy
    std::vector<std::int8_t> label;
    KeyedList pessimistic;  // undecided simulated tardy
    KeyedList optimistic;   // undecided simulated early
    std::vector<int> trail;

    Micro total_weight = 0;
    Micro committed_early = 0;
    Micro committed_tardy = 0;

    Micro incumbent_value = -1;
    LabelVector incumbent_labels;

    std::uint64_t nodes = 0;
    Clock::time_point start_time;
    double time_limit = 0.0;
    bool timed_out = false;

    explicit Search(const std::vector<MicroJob>& micro) : jobs(micro) {}

    void check_clock() {
        if ((nodes & 1023u) == 0 && seconds_since(start_time) > time_limit)
            timed_out = true;
    }

    bool set_label(int id, std::int8_t value) {
        const auto k = static_cast<std::size_t>(id);
        if (label[k] == value) return true;
        if (label[k] != kUndecided) return false;
        label[k] = value;
        trail.push_back(id);
        if (value == kEarly) {
            committed_early += jobs[k].weight;
            pessimistic.move(id, jobs[k].due_date);
        } else {
            committed_tardy += jobs[k].weight;
            optimistic.move(id, jobs[k].deadline);
        }
        return true;
    }

    void unset_label(int id) {
        const auto k = static_cast<std::size_t>(id);
        if (label[k] == kEarly) {
            committed_early -= jobs[k].weight;
            pessimistic.move(id, jobs[k].deadline);
        } else {
            committed_tardy -= jobs[k].weight;
            optimistic.move(id, jobs[k].due_date);
        }
        label[k] = kUndecided;
    }

    void undo_to(std::size_t mark) {
        while (trail.size() > mark) {
            unset_label(trail.back());
            trail.pop_back();
        }
    }

    // Commits id and transitively everything dominance forces with it.
    // Returns false on conflict with an opposite commitment; the caller
    // unwinds the trail either way.
    bool commit(int id, std::int8_t value) {
        std::vector<std::pair<int, std::int8_t>> stack{{id, value}};
        while (!stack.empty()) {
            auto [i, v] = stack.back();
            stack.pop_back();
            const auto k = static_cast<std::size_t>(i);
            if (label[k] == v) continue;
            if (!set_label(i, v)) return false;
            const auto& next = v == kEarly ? implies_early[k] : implies_tardy[k];
            for (int q : next) stack.emplace_back(q, v);
        }
        return true;
    }

    void offer_incumbent(Micro value, std::int8_t undecided_as) {
        if (value <= incumbent_value) return;
        incumbent_value = value;
        incumbent_labels.resize(jobs.size());
        for (std::size_t i = 0; i < jobs.size(); ++i) {
            const std::int8_t v = label[i] == kUndecided ? undecided_as : label[i];
            incumbent_labels[i] = v == kEarly ? JobClass::Early : JobClass::Tardy;
        }
    }

    // Entry invariant: the pessimistic assignment is feasible.
    void dfs(std::size_t order_hint) {
        ++nodes;
        check_clock();
        if (timed_out) return;

        offer_incumbent(committed_early, kTardy);
        const Micro upper = total_weight - committed_tardy;
        if (upper <= incumbent_value) return;
        if (optimistic.feasible()) {
            offer_incumbent(upper, kEarly);
            return;
        }

        std::size_t pos = order_hint;
        while (pos < branch_order.size() &&
               label[static_cast<std::size_t>(branch_order[pos])] != kUndecided)
            ++pos;
        if (pos == branch_order.size()) return;
        const int j = branch_order[pos];

        const std::size_t mark = trail.size();
        if (commit(j, kEarly) && pessimistic.feasible()) dfs(pos + 1);
        undo_to(mark);
        if (timed_out) return;

        // A tardy commitment leaves the pessimistic assignment unchanged,
        // so no new feasibility scan is needed.
        if (commit(j, kTardy)) dfs(pos + 1);
        undo_to(mark);
    }
};

}  // namespace

SolveResult brute_force(const Instance& instance) {
    const int n = instance.size();
    if (n > 20)
        throw ValidationError("brute_force is limited to n <= 20, got " +
                              std::to_string(n));
    const auto start = Clock::now();
    const auto jobs = micro_jobs(instance);

    SolveResult result;
    if (!edf_feasible(instance, {}, 0.0)) {
        result.status = SolveStatus::Infeasible;
        result.elapsed_seconds = seconds_since(start);
        return result;
    }

    LabelVector labels(static_cast<std::size_t>(n), JobClass::Tardy);
    Micro best = -1;
    LabelVector best_labels;
    const std::uint64_t masks = 1ull << n;
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
        for (int i = 0; i < n; ++i)
            labels[static_cast<std::size_t>(i)] =
                (mask >> i) & 1u ? JobClass::Early : JobClass::Tardy;
        if (!labels_feasible(instance, labels)) continue;
        const Micro value = micro_label_objective(jobs, labels);
        if (value > best) {
            best = value;
            best_labels = labels;
        }
    }

    result.status = SolveStatus::Optimal;
    result.labels = std::move(best_labels);
    result.objective = from_micro(best);
    result.nodes_explored = masks;
    result.elapsed_seconds = seconds_since(start);
    return result;
}

std::vector<DominancePair> dominance_pairs(const Instance& instance) {
    const auto jobs = micro_jobs(instance);
    const int n = instance.size();
    std::vector<DominancePair> pairs;
    for (int i = 0; i < n; ++i) {
        const auto& a = jobs[static_cast<std::size_t>(i)];
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const auto& b = jobs[static_cast<std::size_t>(j)];
            if (b.weight > a.weight && b.duration <= a.duration &&
                b.due_date >= a.due_date && b.deadline <= a.deadline)
                pairs.push_back({i, j});
        }
    }
    return pairs;
}

SolveResult solve_exact(const Instance& instance, const SolveOptions& options) {
    if (options.time_limit_seconds <= 0.0)
        throw ValidationError("time limit must be positive");
    const auto start = Clock::now();
    const int n = instance.size();
    const auto jobs = micro_jobs(instance);

    SolveResult result;
    if (!edf_feasible(instance, {}, 0.0)) {
        result.status = SolveStatus::Infeasible;
        result.elapsed_seconds = seconds_since(start);
        return result;
    }

    Search search(jobs);
    search.start_time = start;
    search.time_limit = options.time_limit_seconds;
    search.label.assign(static_cast<std::size_t>(n), kUndecided);

    search.branch_order.resize(static_cast<std::size_t>(n));
    std::iota(search.branch_order.begin(), search.branch_order.end(), 0);
    std::sort(search.branch_order.begin(), search.branch_order.end(),
              [&](int a, int b) {
                  const Micro da = jobs[static_cast<std::size_t>(a)].deadline;
                  const Micro db = jobs[static_cast<std::size_t>(b)].deadline;
                  return da != db ? da < db : a < b;
              });

    std::vector<Micro> pess_key(static_cast<std::size_t>(n));
    std::vector<Micro> opt_key(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        pess_key[static_cast<std::size_t>(i)] = jobs[static_cast<std::size_t>(i)].deadline;
        opt_key[static_cast<std::size_t>(i)] = jobs[static_cast<std::size_t>(i)].due_date;
    }
    search.pessimistic.init(jobs, std::move(pess_key));
    search.optimistic.init(jobs, std::move(opt_key));

    search.implies_early.assign(static_cast<std::size_t>(n), {});
    search.implies_tardy.assign(static_cast<std::size_t>(n), {});
    if (options.use_dominance) {
        for (const DominancePair& pair : dominance_pairs(instance)) {
            search.implies_early[static_cast<std::size_t>(pair.early_implier)]
                .push_back(pair.early_implied);
            search.implies_tardy[static_cast<std::size_t>(pair.early_implied)]
                .push_back(pair.early_implier);
        }
    }

    for (const auto& job : jobs) search.total_weight += job.weight;

    // Feasible incumbent to start from: the deadline-order schedule induced
    // by all-tardy labels, classified by completion time.
    {
        const auto seeded =
            schedule_from_labels(instance,
                                 LabelVector(static_cast<std::size_t>(n), JobClass::Tardy));
        search.incumbent_labels = seeded->final_labels;
        search.incumbent_value = micro_label_objective(jobs, search.incumbent_labels);
    }

    // Jobs that cannot finish by their due date even alone are never early.
    bool root_consistent = true;
    for (int i = 0; i < n && root_consistent; ++i) {
        const auto& job = jobs[static_cast<std::size_t>(i)];
        if (job.due_date < job.duration) root_consistent = search.commit(i, kTardy);
    }

    if (root_consistent) search.dfs(0);

    result.status = search.timed_out ? SolveStatus::Timeout : SolveStatus::Optimal;
    result.labels = std::move(search.incumbent_labels);
    result.objective = from_micro(search.incumbent_value);
    result.nodes_explored = search.nodes;
    result.elapsed_seconds = seconds_since(start);

    if (result.status == SolveStatus::Optimal &&
        !labels_feasible(instance, result.labels))
        throw InternalError("solver returned an unrealizable label assignment");
    return result;
}

}  // namespace wtardy
