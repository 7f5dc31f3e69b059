#ifndef WTARDY_MLP_HPP
#define WTARDY_MLP_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <utility>
#include <vector>

#include "wtardy/core.hpp"
#include "wtardy/features.hpp"

namespace wtardy {

/**
 * Feed-forward classifier with rectified-linear hidden layers and a
 * two-neuron output scored by a normalized exponential. The canonical
 * oracle is 16-80-80-2 over Full features; the input width follows the
 * feature mode so the ablation representations train through the same
 * code. Inputs are standardized with the training-set statistics stored in
 * the model.
 */
struct MlpModel {
    std::vector<int> dims;                    ///< e.g. {16, 80, 80, 2}
    std::vector<Eigen::MatrixXd> weights;     ///< weights[l] is dims[l+1] x dims[l]
    std::vector<Eigen::VectorXd> biases;
    Eigen::VectorXd input_mean;
    Eigen::VectorXd input_scale;
    std::uint64_t seed = 0;
    int trained_epochs = 0;
    double learning_rate = 0.0;
    int batch_size = 0;
    double split_fraction = 0.0;
    double final_val_accuracy = 0.0;
};

struct TrainConfig {
    double learning_rate = 1e-3;
    int batch_size = 256;
    int epochs = 20;
    std::uint64_t seed = 1;
    double split_fraction = 0.8;    ///< train share; remainder validates
    std::vector<int> hidden = {80, 80};
};

struct EpochStats {
    double train_loss = 0.0;
    double train_accuracy = 0.0;
    double val_loss = 0.0;
    double val_accuracy = 0.0;
};

struct TrainResult {
    MlpModel model;
    std::vector<EpochStats> epochs;
};

/// Trains on rows of `features` with binary labels (1 = early). Adaptive-
/// moment gradient descent on the cross-entropy loss; He-style seeded
/// initialization; identical seed and data give bit-identical weights.
/// Throws ValidationError on an empty or single-class dataset.
TrainResult train(const Eigen::MatrixXd& features, const std::vector<int>& labels,
                  const TrainConfig& config);

/// Class probabilities, one row per input row: column 0 tardy, column 1
/// early. Rows sum to 1.
Eigen::MatrixXd predict_probs(const MlpModel& model, const Eigen::MatrixXd& features);

/// Early-class score per row, each in [0, 1].
Eigen::VectorXd predict_scores(const MlpModel& model, const Eigen::MatrixXd& features);
ScoreVector predict_scores(const MlpModel& model, const FeatureMatrix& features);

/// Featurizes the instance in the mode matching the model's input width
/// and thresholds scores at alpha (inclusive: score >= alpha means early).
std::pair<LabelVector, ScoreVector> classify(const Instance& instance,
                                             const MlpModel& model, double alpha);

/// Largest relative deviation between analytic gradients and central finite
/// differences of the loss on the given batch; test support.
double gradient_check_max_rel_error(const MlpModel& model,
                                    const Eigen::MatrixXd& features,
                                    const std::vector<int>& labels);

}  // namespace wtardy

#endif
