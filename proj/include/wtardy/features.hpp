#ifndef WTARDY_FEATURES_HPP
#define WTARDY_FEATURES_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "wtardy/core.hpp"

namespace wtardy {

/// Per-job input representations for the oracle.
///   Minimal    the 8 raw parameters
///   Aggregated the 8 raw parameters plus avg/std/min/max of each over the
///              instance (40 columns)
///   Full       per-parameter z-score and log-scale z-score against the
///              instance population (16 columns)
enum class FeatureMode { Minimal, Aggregated, Full };

struct FeatureMatrix {
    Eigen::MatrixXd rows;  ///< one row per job
    FeatureMode mode = FeatureMode::Full;
};

int feature_width(FeatureMode mode);
std::vector<std::string> feature_names(FeatureMode mode);
FeatureMode mode_from_width(int width);

/// (x - avg(x)) / std(x) with population std; identically zero when the
/// column has no variance.
Eigen::ArrayXd zscore(const Eigen::ArrayXd& column);

/// zscore of ln(max(x, 1e-9)); the clamp keeps non-positive entries of the
/// two difference parameters finite.
Eigen::ArrayXd log_zscore(const Eigen::ArrayXd& column);

/**
 * Builds the per-job feature rows of the requested mode. The 8 base
 * parameters are w, p, d, deadline, w/p, d/deadline, w-p, deadline-d; the
 * Full mode emits each parameter's zscore followed by each parameter's
 * log_zscore, tying every job's description to the whole instance.
 */
FeatureMatrix featurize(const Instance& instance, FeatureMode mode);

}  // namespace wtardy

#endif
