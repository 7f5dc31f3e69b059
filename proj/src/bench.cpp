#include "wtardy/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <ostream>
#include <sstream>

#include "wtardy/exact.hpp"
#include "wtardy/generator.hpp"
#include "wtardy/io.hpp"
#include "wtardy/refine.hpp"
#include "wtardy/rng.hpp"
#include "wtardy/scheduler.hpp"

namespace wtardy {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

std::optional<PipelineResult> run_pipeline(const Instance& instance,
                                           const MlpModel& model,
                                           const PipelineConfig& config) {
    PipelineResult result;
    auto t0 = Clock::now();
    const FeatureMatrix features =
        featurize(instance, mode_from_width(model.dims.front()));
    result.timings.featurize_seconds = seconds_since(t0);

    t0 = Clock::now();
    ScoreVector scores = predict_scores(model, features);
    result.predicted.assign(scores.size(), JobClass::Tardy);
    for (std::size_t i = 0; i < scores.size(); ++i)
        if (scores[i] >= config.alpha) result.predicted[i] = JobClass::Early;
    result.timings.classify_seconds = seconds_since(t0);

    t0 = Clock::now();
    const int gamma = std::min(config.gamma, instance.size());
    result.refined =
        refine(instance, result.predicted, scores, gamma, config.beta_seconds).labels;
    result.timings.refine_seconds = seconds_since(t0);

    t0 = Clock::now();
    auto scheduled = schedule_from_labels(instance, result.refined);
    result.timings.schedule_seconds = seconds_since(t0);
    if (!scheduled) return std::nullopt;
    result.schedule = std::move(scheduled->schedule);
    return result;
}

double gap_percent(double f_star, double f) {
    if (!(f_star > 0.0)) throw ValidationError("gap requires a positive optimum");
    if (f < 0.0) throw ValidationError("gap requires a non-negative objective");
    if (f > f_star)
        throw InternalError("objective " + format_double(f) + " exceeds optimum " +
                            format_double(f_star));
    return (f_star - f) / f_star * 100.0;
}

std::string records_to_csv(const std::vector<BenchRecord>& records) {
    std::ostringstream out;
    out << "family,n,seed,method,objective,f_star,f_star_status,gap,optimal,"
           "runtime_seconds\n";
    for (const BenchRecord& r : records) {
        out << r.family << ',' << r.n << ',' << r.seed << ',' << r.method << ','
            << format_double(r.objective) << ',' << format_double(r.f_star) << ','
            << r.f_star_status << ',';
        if (!std::isnan(r.gap)) out << format_double(r.gap);
        out << ',' << (r.optimal ? 1 : 0) << ',' << format_double(r.runtime_seconds)
            << "\n";
    }
    return out.str();
}

std::vector<BenchRecord> records_from_csv(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line)) throw FormatError("empty records csv");
    std::vector<BenchRecord> records;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::string token;
        std::istringstream row(line);
        while (std::getline(row, token, ',')) fields.push_back(token);
        if (!line.empty() && line.back() == ',') fields.emplace_back();
        if (fields.size() != 10)
            throw FormatError("record line must have 10 fields: '" + line + "'");
        BenchRecord r;
        r.family = std::stoi(fields[0]);
        r.n = std::stoi(fields[1]);
        r.seed = std::stoull(fields[2]);
        r.method = fields[3];
        r.objective = std::stod(fields[4]);
        r.f_star = std::stod(fields[5]);
        r.f_star_status = fields[6];
        r.gap = fields[7].empty() ? std::nan("") : std::stod(fields[7]);
        r.optimal = fields[8] == "1";
        r.runtime_seconds = std::stod(fields[9]);
        records.push_back(std::move(r));
    }
    return records;
}

std::uint64_t experiment_instance_seed(std::uint64_t base_seed, int family, int n,
                                       int k) {
    std::uint64_t s = splitmix64(base_seed);
    s = splitmix64(s ^ (static_cast<std::uint64_t>(family) << 40));
    s = splitmix64(s ^ (static_cast<std::uint64_t>(n) << 20));
    return splitmix64(s ^ static_cast<std::uint64_t>(k));
}

namespace {

struct MethodOutcome {
    std::optional<Schedule> schedule;
    double runtime = 0.0;
};

MethodOutcome run_method(const std::string& method, const Instance& instance,
                         const ExperimentPlan& plan, std::uint64_t seed) {
    MethodOutcome outcome;
    const auto t0 = Clock::now();
    if (method == "proposed") {
        if (plan.model == nullptr)
            throw ValidationError("method 'proposed' requires a trained model");
        auto piped = run_pipeline(instance, *plan.model, plan.config);
        if (piped) outcome.schedule = std::move(piped->schedule);
    } else if (method == "rule") {
        outcome.schedule = rule_based(instance, seed);
    } else if (method == "ga") {
        outcome.schedule = ga(instance, plan.ga, plan.method_budget_seconds, seed);
    } else if (method == "hba") {
        outcome.schedule =
            honey_badger(instance, plan.hba, plan.method_budget_seconds, seed);
    } else if (method == "edf") {
        outcome.schedule = edf_schedule(instance);
    } else if (method == "edd") {
        EddResult edd = edd_schedule(instance);
        if (edd.deadline_feasible) outcome.schedule = std::move(edd.schedule);
    } else {
        throw ValidationError("unknown method '" + method + "'");
    }
    outcome.runtime = seconds_since(t0);
    return outcome;
}

struct Aggregate {
    double gap_sum = 0.0;
    long gap_count = 0;
    long optimal_count = 0;
    long unproven = 0;

    double mean_gap() const {
        return gap_count > 0 ? gap_sum / static_cast<double>(gap_count) : 0.0;
    }
    double optimal_share() const {
        return gap_count > 0
                   ? 100.0 * static_cast<double>(optimal_count) / static_cast<double>(gap_count)
                   : 0.0;
    }
};

std::string render_tables(const std::vector<BenchRecord>& records,
                          const std::vector<std::string>& methods,
                          const std::vector<int>& families,
                          const std::vector<int>& sizes) {
    std::map<std::pair<std::string, int>, Aggregate> by_method_size;
    std::map<std::pair<std::string, int>, Aggregate> by_method_family;
    for (const BenchRecord& r : records) {
        auto& a = by_method_size[{r.method, r.n}];
        auto& b = by_method_family[{r.method, r.family}];
        if (r.f_star_status != "optimal") {
            ++a.unproven;
            ++b.unproven;
            continue;
        }
        a.gap_sum += r.gap;
        b.gap_sum += r.gap;
        ++a.gap_count;
        ++b.gap_count;
        if (r.optimal) {
            ++a.optimal_count;
            ++b.optimal_count;
        }
    }

    std::ostringstream out;
    const auto print_value = [&](double v) {
        std::ostringstream cell;
        cell.precision(4);
        cell << v;
        return cell.str();
    };

    out << "## Mean gap and optimal share by method and size\n\n";
    out << "| method | metric |";
    for (int n : sizes) out << ' ' << n << " |";
    out << "\n|---|---|";
    for (std::size_t i = 0; i < sizes.size(); ++i) out << "---|";
    out << "\n";
    for (const std::string& method : methods) {
        out << "| " << method << " | gap_avg |";
        for (int n : sizes) out << ' ' << print_value(by_method_size[{method, n}].mean_gap()) << " |";
        out << "\n| " << method << " | n_opt |";
        for (int n : sizes)
            out << ' ' << print_value(by_method_size[{method, n}].optimal_share()) << " |";
        out << "\n| " << method << " | unproven |";
        for (int n : sizes) out << ' ' << by_method_size[{method, n}].unproven << " |";
        out << "\n";
    }

    out << "\n## Mean gap and optimal share by method and family\n\n";
    out << "| method | metric |";
    for (int f : families) out << " f" << f << " |";
    out << "\n|---|---|";
    for (std::size_t i = 0; i < families.size(); ++i) out << "---|";
    out << "\n";
    for (const std::string& method : methods) {
        out << "| " << method << " | gap_avg |";
        for (int f : families)
            out << ' ' << print_value(by_method_family[{method, f}].mean_gap()) << " |";
        out << "\n| " << method << " | n_opt |";
        for (int f : families)
            out << ' ' << print_value(by_method_family[{method, f}].optimal_share()) << " |";
        out << "\n";
    }
    return out.str();
}

}  // namespace

ExperimentResult run_experiment(const ExperimentPlan& plan, std::ostream* progress) {
    if (plan.count < 1) throw ValidationError("experiment count must be >= 1");
    if (plan.families.empty() || plan.sizes.empty() || plan.methods.empty())
        throw ValidationError("experiment plan needs families, sizes and methods");
    for (const std::string& method : plan.methods)
        if (method == "proposed" && plan.model == nullptr)
            throw ValidationError("method 'proposed' requires a trained model");

    ExperimentResult result;
    for (int family : plan.families) {
        for (int n : plan.sizes) {
            for (int k = 0; k < plan.count; ++k) {
                const std::uint64_t seed =
                    experiment_instance_seed(plan.base_seed, family, n, k);
                const Instance instance = generate({family, n, seed});

                SolveOptions exact_options;
                exact_options.time_limit_seconds = plan.config.timeout_seconds;
                const SolveResult reference = solve_exact(instance, exact_options);
                const bool proven = reference.status == SolveStatus::Optimal;

                for (const std::string& method : plan.methods) {
                    MethodOutcome outcome = run_method(method, instance, plan, seed);
                    BenchRecord record;
                    record.family = family;
                    record.n = n;
                    record.seed = seed;
                    record.method = method;
                    record.f_star = reference.objective;
                    record.f_star_status = proven ? "optimal" : "timeout";
                    record.runtime_seconds = outcome.runtime;
                    if (!outcome.schedule) {
                        // Generator output is always feasible, so a method
                        // reporting infeasibility broke its contract.
                        throw InternalError("method " + method +
                                            " failed on a feasible instance");
                    }
                    if (!schedule_feasible(instance, *outcome.schedule))
                        throw InternalError("method " + method +
                                            " produced an infeasible schedule");
                    record.objective = outcome.schedule->objective;
                    if (proven) {
                        record.gap = gap_percent(reference.objective, record.objective);
                        record.optimal = record.gap == 0.0;
                    } else {
                        record.gap = std::nan("");
                        record.optimal = false;
                    }
                    result.records.push_back(std::move(record));
                }
                if (progress != nullptr)
                    *progress << "family " << family << " n " << n << " instance " << k + 1
                              << "/" << plan.count << " f*=" << reference.objective
                              << (proven ? "" : " (unproven)") << "\n";
            }
        }
    }

    std::sort(result.records.begin(), result.records.end(),
              [](const BenchRecord& a, const BenchRecord& b) {
                  if (a.family != b.family) return a.family < b.family;
                  if (a.n != b.n) return a.n < b.n;
                  if (a.seed != b.seed) return a.seed < b.seed;
                  return a.method < b.method;
              });
    result.aggregate_markdown =
        render_tables(result.records, plan.methods, plan.families, plan.sizes);
    return result;
}

std::vector<CalibrationBin> calibration_report(const MlpModel& model,
                                               const Eigen::MatrixXd& features,
                                               const std::vector<int>& labels,
                                               double bin_width) {
    if (features.rows() == 0) throw ValidationError("calibration needs labeled rows");
    if (features.rows() != static_cast<Eigen::Index>(labels.size()))
        throw ValidationError("calibration: feature/label count mismatch");
    if (!(bin_width > 0.0 && bin_width <= 1.0))
        throw ValidationError("bin width must be in (0, 1]");

    const auto bin_count =
        static_cast<std::size_t>(std::ceil(1.0 / bin_width - 1e-12));
    std::vector<CalibrationBin> bins(bin_count);
    for (std::size_t b = 0; b < bin_count; ++b) {
        bins[b].lo = static_cast<double>(b) * bin_width;
        bins[b].hi = b + 1 == bin_count ? 1.0 : static_cast<double>(b + 1) * bin_width;
    }

    const Eigen::VectorXd scores = predict_scores(model, features);
    for (Eigen::Index i = 0; i < scores.size(); ++i) {
        const double s = scores(i);
        auto b = static_cast<std::size_t>(s / bin_width);
        if (b >= bin_count) b = bin_count - 1;  // score 1.0 joins the last bin
        ++bins[b].count;
        const int predicted = s >= 0.5 ? 1 : 0;
        if (predicted != labels[static_cast<std::size_t>(i)]) ++bins[b].errors;
    }
    for (CalibrationBin& bin : bins)
        bin.error_rate = bin.count > 0
                             ? static_cast<double>(bin.errors) / static_cast<double>(bin.count)
                             : 0.0;
    return bins;
}

std::string calibration_to_csv(const std::vector<CalibrationBin>& bins) {
    std::ostringstream out;
    out << "bin_lo,bin_hi,count,errors,error_rate\n";
    for (const CalibrationBin& bin : bins)
        out << format_double(bin.lo) << ',' << format_double(bin.hi) << ',' << bin.count
            << ',' << bin.errors << ',' << format_double(bin.error_rate) << "\n";
    return out.str();
}

}  // namespace wtardy
