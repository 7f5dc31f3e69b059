#include "wtardy/mlp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "wtardy/rng.hpp"

namespace wtardy {

namespace {

constexpr std::uint64_t kInitStream = 0x9e3779b97f4a7c15ULL;
constexpr std::uint64_t kShuffleStream = 0xd1b54a32d192ed03ULL;

struct Forward {
    std::vector<Eigen::MatrixXd> pre;   // pre-activation per layer
    std::vector<Eigen::MatrixXd> act;   // act[0] = input, act[l+1] = post layer l
    Eigen::MatrixXd probs;              // 2 x batch
};

// Columns of `input` are samples, already standardized.
void forward_pass(const MlpModel& model, const Eigen::MatrixXd& input, Forward& f) {
    const std::size_t layers = model.weights.size();
    f.pre.resize(layers);
    f.act.resize(layers + 1);
    f.act[0] = input;
    for (std::size_t l = 0; l < layers; ++l) {
        f.pre[l] = (model.weights[l] * f.act[l]).colwise() + model.biases[l];
        if (l + 1 < layers)
            f.act[l + 1] = f.pre[l].cwiseMax(0.0);
        else
            f.act[l + 1] = f.pre[l];
    }
    const Eigen::MatrixXd& logits = f.act[layers];
    const Eigen::RowVectorXd max = logits.colwise().maxCoeff();
    f.probs = (logits.rowwise() - max).array().exp().matrix();
    const Eigen::RowVectorXd sums = f.probs.colwise().sum();
    f.probs.array().rowwise() /= sums.array();
}

double batch_loss(const Forward& f, const std::vector<int>& labels,
                  const std::vector<int>& index, std::size_t begin, std::size_t count) {
    double loss = 0.0;
    for (std::size_t c = 0; c < count; ++c) {
        const int y = labels[static_cast<std::size_t>(index[begin + c])];
        loss -= std::log(std::max(f.probs(y, static_cast<Eigen::Index>(c)), 1e-300));
    }
    return loss / static_cast<double>(count);
}

struct Gradients {
    std::vector<Eigen::MatrixXd> weights;
    std::vector<Eigen::VectorXd> biases;
};

void backward_pass(const MlpModel& model, const Forward& f,
                   const std::vector<int>& labels, const std::vector<int>& index,
                   std::size_t begin, std::size_t count, Gradients& g) {
    const std::size_t layers = model.weights.size();
    const double inv = 1.0 / static_cast<double>(count);

    Eigen::MatrixXd delta = f.probs;
    for (std::size_t c = 0; c < count; ++c)
        delta(labels[static_cast<std::size_t>(index[begin + c])],
              static_cast<Eigen::Index>(c)) -= 1.0;
    delta *= inv;

    g.weights.resize(layers);
    g.biases.resize(layers);
    for (std::size_t l = layers; l-- > 0;) {
        g.weights[l].noalias() = delta * f.act[l].transpose();
        g.biases[l] = delta.rowwise().sum();
        if (l > 0) {
            Eigen::MatrixXd back = model.weights[l].transpose() * delta;
            delta = back.cwiseProduct(
                (f.pre[l - 1].array() > 0.0).cast<double>().matrix());
        }
    }
}

Eigen::MatrixXd standardized(const MlpModel& model, const Eigen::MatrixXd& rows) {
    if (rows.cols() != model.dims.front())
        throw ValidationError("feature width " + std::to_string(rows.cols()) +
                              " does not match model input " +
                              std::to_string(model.dims.front()));
    Eigen::MatrixXd x = rows.transpose();
    x.colwise() -= model.input_mean;
    x.array().colwise() /= model.input_scale.array();
    return x;
}

struct Adam {
    std::vector<Eigen::MatrixXd> mw, vw;
    std::vector<Eigen::VectorXd> mb, vb;
    double beta1 = 0.9, beta2 = 0.999, eps = 1e-8;
    long step = 0;

    void init(const MlpModel& model) {
        const std::size_t layers = model.weights.size();
        mw.resize(layers); vw.resize(layers);
        mb.resize(layers); vb.resize(layers);
        for (std::size_t l = 0; l < layers; ++l) {
            mw[l] = Eigen::MatrixXd::Zero(model.weights[l].rows(), model.weights[l].cols());
            vw[l] = mw[l];
            mb[l] = Eigen::VectorXd::Zero(model.biases[l].size());
            vb[l] = mb[l];
        }
    }

    void update(MlpModel& model, const Gradients& g, double lr) {
        ++step;
        const double c1 = 1.0 - std::pow(beta1, static_cast<double>(step));
        const double c2 = 1.0 - std::pow(beta2, static_cast<double>(step));
        for (std::size_t l = 0; l < model.weights.size(); ++l) {
            mw[l] = beta1 * mw[l] + (1.0 - beta1) * g.weights[l];
            vw[l] = beta2 * vw[l] + (1.0 - beta2) * g.weights[l].cwiseProduct(g.weights[l]);
            model.weights[l].array() -=
                lr * (mw[l].array() / c1) / ((vw[l].array() / c2).sqrt() + eps);
            mb[l] = beta1 * mb[l] + (1.0 - beta1) * g.biases[l];
            vb[l] = beta2 * vb[l] + (1.0 - beta2) * g.biases[l].cwiseProduct(g.biases[l]);
            model.biases[l].array() -=
                lr * (mb[l].array() / c1) / ((vb[l].array() / c2).sqrt() + eps);
        }
    }
};

struct EvalStats {
    double loss = 0.0;
    double accuracy = 0.0;
};

EvalStats evaluate(const MlpModel& model, const Eigen::MatrixXd& x,
                   const std::vector<int>& labels, const std::vector<int>& index) {
    EvalStats stats;
    if (index.empty()) return stats;
    Forward f;
    constexpr std::size_t kChunk = 4096;
    double loss = 0.0;
    std::size_t correct = 0;
    for (std::size_t begin = 0; begin < index.size(); begin += kChunk) {
        const std::size_t count = std::min(kChunk, index.size() - begin);
        Eigen::MatrixXd batch(x.rows(), static_cast<Eigen::Index>(count));
        for (std::size_t c = 0; c < count; ++c)
            batch.col(static_cast<Eigen::Index>(c)) =
                x.col(index[begin + c]);
        forward_pass(model, batch, f);
        for (std::size_t c = 0; c < count; ++c) {
            const int y = labels[static_cast<std::size_t>(index[begin + c])];
            const auto col = static_cast<Eigen::Index>(c);
            loss -= std::log(std::max(f.probs(y, col), 1e-300));
            const int predicted = f.probs(1, col) >= f.probs(0, col) ? 1 : 0;
            if (predicted == y) ++correct;
        }
    }
    stats.loss = loss / static_cast<double>(index.size());
    stats.accuracy = static_cast<double>(correct) / static_cast<double>(index.size());
    return stats;
}

}  // namespace

TrainResult train(const Eigen::MatrixXd& features, const std::vector<int>& labels,
                  const TrainConfig& config) {
    const auto n = static_cast<std::size_t>(features.rows());
    if (n == 0) throw ValidationError("training data is empty");
    if (labels.size() != n) throw ValidationError("feature/label count mismatch");
    if (!(config.split_fraction > 0.0 && config.split_fraction < 1.0))
        throw ValidationError("split fraction must be in (0, 1)");
    if (config.batch_size < 1 || config.epochs < 0 || !(config.learning_rate > 0.0))
        throw ValidationError("bad training configuration");

    bool has_early = false, has_tardy = false;
    for (int y : labels) {
        if (y != 0 && y != 1) throw ValidationError("labels must be 0 or 1");
        (y == 1 ? has_early : has_tardy) = true;
    }
    if (!has_early || !has_tardy)
        throw ValidationError("training data must contain both classes");

    TrainResult result;
    MlpModel& model = result.model;
    model.dims.push_back(static_cast<int>(features.cols()));
    for (int h : config.hidden) model.dims.push_back(h);
    model.dims.push_back(2);
    model.seed = config.seed;
    model.learning_rate = config.learning_rate;
    model.batch_size = config.batch_size;
    model.split_fraction = config.split_fraction;

    // Shuffled split; the validation tail never touches the optimizer.
    std::vector<int> index(n);
    std::iota(index.begin(), index.end(), 0);
    Rng shuffle_rng(splitmix64(config.seed ^ kShuffleStream));
    shuffle_rng.shuffle(index.begin(), index.end());
    const auto train_count = static_cast<std::size_t>(std::clamp<long long>(
        std::llround(config.split_fraction * static_cast<double>(n)), 1,
        static_cast<long long>(n) - 1));
    std::vector<int> train_index(index.begin(),
                                 index.begin() + static_cast<std::ptrdiff_t>(train_count));
    std::vector<int> val_index(index.begin() + static_cast<std::ptrdiff_t>(train_count),
                               index.end());

    // Standardize with training-split statistics.
    const auto d = static_cast<Eigen::Index>(features.cols());
    model.input_mean = Eigen::VectorXd::Zero(d);
    model.input_scale = Eigen::VectorXd::Ones(d);
    for (int idx : train_index) model.input_mean += features.row(idx).transpose();
    model.input_mean /= static_cast<double>(train_count);
    Eigen::VectorXd variance = Eigen::VectorXd::Zero(d);
    for (int idx : train_index) {
        const Eigen::VectorXd diff = features.row(idx).transpose() - model.input_mean;
        variance += diff.cwiseProduct(diff);
    }
    variance /= static_cast<double>(train_count);
    for (Eigen::Index c = 0; c < d; ++c)
        model.input_scale(c) = variance(c) > 0.0 ? std::sqrt(variance(c)) : 1.0;

    Rng init_rng(splitmix64(config.seed ^ kInitStream));
    for (std::size_t l = 0; l + 1 < model.dims.size(); ++l) {
        const int fan_in = model.dims[l];
        const int fan_out = model.dims[l + 1];
        const double sd = std::sqrt(2.0 / static_cast<double>(fan_in));
        Eigen::MatrixXd w(fan_out, fan_in);
        for (Eigen::Index r = 0; r < w.rows(); ++r)
            for (Eigen::Index c = 0; c < w.cols(); ++c) w(r, c) = init_rng.normal(0, sd);
        model.weights.push_back(std::move(w));
        model.biases.emplace_back(Eigen::VectorXd::Zero(fan_out));
    }

    const Eigen::MatrixXd x = standardized(model, features);

    Adam adam;
    adam.init(model);
    Forward f;
    Gradients g;
    const auto batch_size = static_cast<std::size_t>(config.batch_size);

    for (int epoch = 0; epoch < config.epochs; ++epoch) {
        shuffle_rng.shuffle(train_index.begin(), train_index.end());
        double running_loss = 0.0;
        std::size_t running_correct = 0;
        for (std::size_t begin = 0; begin < train_index.size(); begin += batch_size) {
            const std::size_t count = std::min(batch_size, train_index.size() - begin);
            Eigen::MatrixXd batch(x.rows(), static_cast<Eigen::Index>(count));
            for (std::size_t c = 0; c < count; ++c)
                batch.col(static_cast<Eigen::Index>(c)) = x.col(train_index[begin + c]);
            forward_pass(model, batch, f);
            running_loss += batch_loss(f, labels, train_index, begin, count) *
                            static_cast<double>(count);
            for (std::size_t c = 0; c < count; ++c) {
                const auto col = static_cast<Eigen::Index>(c);
                const int predicted = f.probs(1, col) >= f.probs(0, col) ? 1 : 0;
                if (predicted == labels[static_cast<std::size_t>(train_index[begin + c])])
                    ++running_correct;
            }
            backward_pass(model, f, labels, train_index, begin, count, g);
            adam.update(model, g, config.learning_rate);
        }

        EpochStats stats;
        stats.train_loss = running_loss / static_cast<double>(train_index.size());
        stats.train_accuracy = static_cast<double>(running_correct) /
                               static_cast<double>(train_index.size());
        const EvalStats val = evaluate(model, x, labels, val_index);
        stats.val_loss = val.loss;
        stats.val_accuracy = val.accuracy;
        result.epochs.push_back(stats);
    }

    model.trained_epochs = config.epochs;
    model.final_val_accuracy =
        result.epochs.empty() ? evaluate(model, x, labels, val_index).accuracy
                              : result.epochs.back().val_accuracy;
    return result;
}

Eigen::MatrixXd predict_probs(const MlpModel& model, const Eigen::MatrixXd& features) {
    Forward f;
    forward_pass(model, standardized(model, features), f);
    return f.probs.transpose();
}

Eigen::VectorXd predict_scores(const MlpModel& model, const Eigen::MatrixXd& features) {
    return predict_probs(model, features).col(1);
}

ScoreVector predict_scores(const MlpModel& model, const FeatureMatrix& features) {
    const Eigen::VectorXd scores = predict_scores(model, features.rows);
    return {scores.data(), scores.data() + scores.size()};
}

std::pair<LabelVector, ScoreVector> classify(const Instance& instance,
                                             const MlpModel& model, double alpha) {
    if (alpha < 0.0 || alpha > 1.0)
        throw ValidationError("alpha must be in [0, 1]");
    const FeatureMatrix features =
        featurize(instance, mode_from_width(model.dims.front()));
    ScoreVector scores = predict_scores(model, features);
    LabelVector labels(scores.size(), JobClass::Tardy);
    for (std::size_t i = 0; i < scores.size(); ++i)
        if (scores[i] >= alpha) labels[i] = JobClass::Early;
    return {std::move(labels), std::move(scores)};
}

double gradient_check_max_rel_error(const MlpModel& model,
                                    const Eigen::MatrixXd& features,
                                    const std::vector<int>& labels) {
    const auto count = static_cast<std::size_t>(features.rows());
    std::vector<int> index(count);
    std::iota(index.begin(), index.end(), 0);

    MlpModel probe = model;
    const Eigen::MatrixXd x = standardized(probe, features);
    Forward f;
    Gradients g;
    forward_pass(probe, x, f);
    backward_pass(probe, f, labels, index, 0, count, g);

    const auto loss_at = [&]() {
        Forward local;
        forward_pass(probe, x, local);
        return batch_loss(local, labels, index, 0, count);
    };

    double worst = 0.0;
    const double h = 1e-5;
    for (std::size_t l = 0; l < probe.weights.size(); ++l) {
        auto probe_param = [&](double* value, double analytic) {
            const double saved = *value;
            *value = saved + h;
            const double up = loss_at();
            *value = saved - h;
            const double down = loss_at();
            *value = saved;
            const double numeric = (up - down) / (2.0 * h);
            const double scale = std::max({1.0, std::abs(analytic), std::abs(numeric)});
            worst = std::max(worst, std::abs(analytic - numeric) / scale);
        };
        Eigen::MatrixXd& w = probe.weights[l];
        const Eigen::Index stride = std::max<Eigen::Index>(1, w.size() / 64);
        for (Eigen::Index k = 0; k < w.size(); k += stride)
            probe_param(w.data() + k, g.weights[l](k));
        Eigen::VectorXd& b = probe.biases[l];
        const Eigen::Index bstride = std::max<Eigen::Index>(1, b.size() / 16);
        for (Eigen::Index k = 0; k < b.size(); k += bstride)
            probe_param(b.data() + k, g.biases[l](k));
    }
    return worst;
}

}  // namespace wtardy
