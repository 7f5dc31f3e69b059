#include "wtardy/features.hpp"

namespace wtardy {

namespace {

constexpr int kBaseParams = 8;
constexpr double kLogClamp = 1e-9;

const char* const kParamNames[kBaseParams] = {
    "w", "p", "d", "dd", "w_over_p", "d_over_dd", "w_minus_p", "dd_minus_d"};

Eigen::MatrixXd base_parameters(const Instance& instance) {
    const auto n = static_cast<Eigen::Index>(instance.jobs.size());
    Eigen::MatrixXd params(n, kBaseParams);
    for (Eigen::Index i = 0; i < n; ++i) {
        const Job& job = instance.jobs[static_cast<std::size_t>(i)];
        params(i, 0) = job.weight;
        params(i, 1) = job.duration;
        params(i, 2) = job.due_date;
        params(i, 3) = job.deadline;
        params(i, 4) = job.weight / job.duration;
        params(i, 5) = job.due_date / job.deadline;
        params(i, 6) = job.weight - job.duration;
        params(i, 7) = job.deadline - job.due_date;
    }
    return params;
}

}  // namespace

int feature_width(FeatureMode mode) {
    switch (mode) {
        case FeatureMode::Minimal: return kBaseParams;
        case FeatureMode::Aggregated: return kBaseParams * 5;
        default: return kBaseParams * 2;
    }
}

FeatureMode mode_from_width(int width) {
    if (width == feature_width(FeatureMode::Minimal)) return FeatureMode::Minimal;
    if (width == feature_width(FeatureMode::Aggregated)) return FeatureMode::Aggregated;
    if (width == feature_width(FeatureMode::Full)) return FeatureMode::Full;
    throw ValidationError("no feature mode has width " + std::to_string(width));
}

std::vector<std::string> feature_names(FeatureMode mode) {
    std::vector<std::string> names;
    switch (mode) {
        case FeatureMode::Minimal:
            for (const char* p : kParamNames) names.emplace_back(p);
            break;
        case FeatureMode::Aggregated:
            for (const char* p : kParamNames) names.emplace_back(p);
            for (const char* p : kParamNames) {
                names.emplace_back(std::string(p) + "_avg");
                names.emplace_back(std::string(p) + "_std");
                names.emplace_back(std::string(p) + "_min");
                names.emplace_back(std::string(p) + "_max");
            }
            break;
        default:
            for (const char* p : kParamNames) names.emplace_back(std::string(p) + "_dev");
            for (const char* p : kParamNames) names.emplace_back(std::string(p) + "_rel");
            break;
    }
    return names;
}

Eigen::ArrayXd zscore(const Eigen::ArrayXd& column) {
    // A constant column has zero population std by definition; testing the
    // values (not the computed variance) keeps roundoff in mean() from
    // turning identical entries into huge normalized ones.
    if ((column == column(0)).all()) return Eigen::ArrayXd::Zero(column.size());
    const double mean = column.mean();
    const double variance = (column - mean).square().mean();
    if (variance <= 0.0) return Eigen::ArrayXd::Zero(column.size());
    return (column - mean) / std::sqrt(variance);
}

Eigen::ArrayXd log_zscore(const Eigen::ArrayXd& column) {
    // Scalar libm log per element: Eigen's packet log may differ from the
    // scalar tail by an ulp, which would de-constant a constant column.
    return zscore(column.unaryExpr(
        [](double v) { return std::log(std::max(v, kLogClamp)); }));
}

FeatureMatrix featurize(const Instance& instance, FeatureMode mode) {
    if (instance.size() < 1) throw ValidationError("cannot featurize an empty instance");
    const Eigen::MatrixXd params = base_parameters(instance);
    const Eigen::Index n = params.rows();

    FeatureMatrix out;
    out.mode = mode;
    out.rows.resize(n, feature_width(mode));

    switch (mode) {
        case FeatureMode::Minimal:
            out.rows = params;
            break;
        case FeatureMode::Aggregated: {
            out.rows.leftCols(kBaseParams) = params;
            for (int c = 0; c < kBaseParams; ++c) {
                const auto col = params.col(c).array();
                const double mean = col.mean();
                const double sd = std::sqrt((col - mean).square().mean());
                out.rows.col(kBaseParams + 4 * c + 0).setConstant(mean);
                out.rows.col(kBaseParams + 4 * c + 1).setConstant(sd);
                out.rows.col(kBaseParams + 4 * c + 2).setConstant(col.minCoeff());
                out.rows.col(kBaseParams + 4 * c + 3).setConstant(col.maxCoeff());
            }
            break;
        }
        default:
            for (int c = 0; c < kBaseParams; ++c) {
                const Eigen::ArrayXd col = params.col(c).array();
                out.rows.col(c) = zscore(col);
                out.rows.col(kBaseParams + c) = log_zscore(col);
            }
            break;
    }

    if (!out.rows.allFinite())
        throw InternalError("featurize produced a non-finite value");
    return out;
}

}  // namespace wtardy
