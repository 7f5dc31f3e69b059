#ifndef WTARDY_BENCH_HPP
#define WTARDY_BENCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wtardy/baselines.hpp"
#include "wtardy/core.hpp"
#include "wtardy/mlp.hpp"

namespace wtardy {

struct PipelineConfig {
    double alpha = 0.5;             ///< classification threshold
    int gamma = 25;                 ///< low-confidence jobs re-solved exactly;
                                    ///< clamped to n per instance
    double beta_seconds = 60.0;     ///< time limit of the refine sub-solve
    double timeout_seconds = 300.0; ///< per-instance budget for reference optima
};

struct StageTimings {
    double featurize_seconds = 0.0;
    double classify_seconds = 0.0;
    double refine_seconds = 0.0;
    double schedule_seconds = 0.0;
    double total() const {
        return featurize_seconds + classify_seconds + refine_seconds + schedule_seconds;
    }
};

struct PipelineResult {
    Schedule schedule;
    LabelVector predicted;
    LabelVector refined;
    StageTimings timings;
};

/// Oracle prediction, refinement of the least confident jobs, and the
/// feasibility-preserving scheduling pass. nullopt iff the instance is
/// infeasible.
std::optional<PipelineResult> run_pipeline(const Instance& instance,
                                           const MlpModel& model,
                                           const PipelineConfig& config);

/// Optimality gap in percent: (f_star - f) / f_star * 100. Requires
/// f_star > 0 and 0 <= f <= f_star; f exceeding f_star means some solver
/// returned a super-optimal value and raises InternalError.
double gap_percent(double f_star, double f);

struct BenchRecord {
    int family = 0;
    int n = 0;
    std::uint64_t seed = 0;
    std::string method;
    double objective = 0.0;
    double f_star = 0.0;            ///< proven optimum, or best known on timeout
    std::string f_star_status;      ///< "optimal" or "timeout"
    double gap = 0.0;               ///< NaN when the optimum is unproven
    bool optimal = false;           ///< gap == 0 against a proven optimum
    double runtime_seconds = 0.0;
};

std::string records_to_csv(const std::vector<BenchRecord>& records);
std::vector<BenchRecord> records_from_csv(const std::string& csv);

struct ExperimentPlan {
    std::vector<int> families;
    std::vector<int> sizes;
    std::vector<std::string> methods;  ///< of: proposed rule ga hba edf edd
    int count = 100;                   ///< instances per (family, size) cell
    std::uint64_t base_seed = 1;
    PipelineConfig config;
    const MlpModel* model = nullptr;   ///< required for method "proposed"
    GaParams ga;
    HbaParams hba;
    double method_budget_seconds = 300.0;
};

struct ExperimentResult {
    std::vector<BenchRecord> records;  ///< sorted by family, n, seed, method
    std::string aggregate_markdown;
};

/// Instance seed for cell index k of (family, n); documented so held-out
/// evaluation sets can avoid training seeds by choosing disjoint bases.
std::uint64_t experiment_instance_seed(std::uint64_t base_seed, int family, int n, int k);

/**
 * Generates count instances per (family, size) cell, computes the reference
 * optimum with the exact solver under config.timeout_seconds, runs every
 * requested method, validates each returned schedule, and aggregates mean
 * gaps and optimality shares. Instances whose optimum is not proven within
 * the budget are excluded from gap aggregation and reported separately.
 */
ExperimentResult run_experiment(const ExperimentPlan& plan,
                                std::ostream* progress = nullptr);

struct CalibrationBin {
    double lo = 0.0;
    double hi = 0.0;
    long count = 0;       ///< scores falling in [lo, hi); last bin right-closed
    long errors = 0;      ///< misclassifications at threshold 0.5
    double error_rate = 0.0;
};

/// Per-bin empirical error frequencies and score occupancy over labeled
/// rows. Throws ValidationError on empty input.
std::vector<CalibrationBin> calibration_report(const MlpModel& model,
                                               const Eigen::MatrixXd& features,
                                               const std::vector<int>& labels,
                                               double bin_width = 0.05);

std::string calibration_to_csv(const std::vector<CalibrationBin>& bins);

}  // namespace wtardy

#endif
