#ifndef WTARDY_IO_HPP
#define WTARDY_IO_HPP

#include <Eigen/Dense>
#include <iosfwd>
#include <string>
#include <vector>

#include "wtardy/core.hpp"
#include "wtardy/mlp.hpp"

namespace wtardy {

// Instance file, version 1:
//   family=<int> seed=<u64> n=<int> version=1 prng=<id>
//   id,w,p,d,dd
//   <id>,<w>,<p>,<d>,<dd>        one line per job, fixed 6-decimal values
// Loading validates the header, the column line, the job count, and every
// job invariant; violations raise FormatError.

void save_instance(const Instance& instance, std::ostream& out);
void save_instance_file(const Instance& instance, const std::string& path);
Instance load_instance(std::istream& in);
Instance load_instance_file(const std::string& path);

// Training data: a header line of comma-separated feature names plus
// "label", then one row per job with full-precision feature values and a
// 0/1 label (1 = early).

struct TrainingData {
    Eigen::MatrixXd features;
    std::vector<int> labels;
    std::vector<std::string> names;
};

void save_training_data(const TrainingData& data, const std::string& path);
void append_training_rows(const Eigen::MatrixXd& features,
                          const std::vector<int>& labels, TrainingData& data);
TrainingData load_training_data(const std::string& path);

// Model file: plain text with dims, seed, training metadata,
// standardization vectors and row-major layer parameters at full decimal
// precision, so a reload reproduces predictions bit for bit.

void save_model(const MlpModel& model, const std::string& path);
MlpModel load_model(const std::string& path);

/// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double value);

}  // namespace wtardy

#endif
