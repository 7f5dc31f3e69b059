#include "wtardy/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "wtardy/generator.hpp"

namespace wtardy {

namespace {

std::string fixed6(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.6f", value);
    return buffer;
}

double parse_double(const std::string& token, const char* what) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(token, &used);
    } catch (const std::exception&) {
        throw FormatError(std::string("cannot parse ") + what + " from '" + token + "'");
    }
    if (used != token.size())
        throw FormatError(std::string("trailing characters in ") + what + " '" + token + "'");
    return value;
}

long long parse_int(const std::string& token, const char* what) {
    std::size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(token, &used);
    } catch (const std::exception&) {
        throw FormatError(std::string("cannot parse ") + what + " from '" + token + "'");
    }
    if (used != token.size())
        throw FormatError(std::string("trailing characters in ") + what + " '" + token + "'");
    return value;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string token;
    std::istringstream in(line);
    while (std::getline(in, token, sep)) out.push_back(token);
    if (!line.empty() && line.back() == sep) out.emplace_back();
    return out;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot open " + path + " for writing");
    return out;
}

}  // namespace

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

void save_instance(const Instance& instance, std::ostream& out) {
    out << "family=" << instance.meta.family << " seed=" << instance.meta.seed
        << " n=" << instance.size() << " version=1 prng=" << kGeneratorPrngId << "\n";
    out << "id,w,p,d,dd\n";
    for (const Job& job : instance.jobs) {
        out << job.id << ',' << fixed6(job.weight) << ',' << fixed6(job.duration) << ','
            << fixed6(job.due_date) << ',' << fixed6(job.deadline) << "\n";
    }
}

void save_instance_file(const Instance& instance, const std::string& path) {
    auto out = open_output(path);
    save_instance(instance, out);
}

Instance load_instance(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw FormatError("missing instance header");

    Instance instance;
    long long declared_n = -1;
    bool have_version = false;
    std::istringstream header(line);
    std::string token;
    while (header >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos)
            throw FormatError("malformed header token '" + token + "'");
        const std::string key = token.substr(0, eq);
        const std::string value = token.substr(eq + 1);
        if (key == "family")
            instance.meta.family = static_cast<int>(parse_int(value, "family"));
        else if (key == "seed")
            instance.meta.seed = static_cast<std::uint64_t>(parse_int(value, "seed"));
        else if (key == "n")
            declared_n = parse_int(value, "n");
        else if (key == "version") {
            if (value != "1") throw FormatError("unsupported instance version " + value);
            have_version = true;
        }
        // unknown keys (such as prng) are informational
    }
    if (declared_n < 0 || !have_version)
        throw FormatError("instance header must declare n and version");

    if (!std::getline(in, line) || line != "id,w,p,d,dd")
        throw FormatError("expected column line 'id,w,p,d,dd'");

    for (long long row = 0; row < declared_n; ++row) {
        if (!std::getline(in, line))
            throw FormatError("instance ends after " + std::to_string(row) + " of " +
                              std::to_string(declared_n) + " jobs");
        const auto fields = split(line, ',');
        if (fields.size() != 5)
            throw FormatError("job line must have 5 fields: '" + line + "'");
        Job job;
        job.id = static_cast<int>(parse_int(fields[0], "id"));
        job.weight = parse_double(fields[1], "w");
        job.duration = parse_double(fields[2], "p");
        job.due_date = parse_double(fields[3], "d");
        job.deadline = parse_double(fields[4], "dd");
        instance.jobs.push_back(job);
    }
    validate_instance(instance);
    return instance;
}

Instance load_instance_file(const std::string& path) {
    auto in = open_input(path);
    return load_instance(in);
}

void save_training_data(const TrainingData& data, const std::string& path) {
    if (static_cast<Eigen::Index>(data.names.size()) != data.features.cols())
        throw ValidationError("training data: name/column count mismatch");
    auto out = open_output(path);
    for (const std::string& name : data.names) out << name << ',';
    out << "label\n";
    for (Eigen::Index r = 0; r < data.features.rows(); ++r) {
        for (Eigen::Index c = 0; c < data.features.cols(); ++c)
            out << format_double(data.features(r, c)) << ',';
        out << data.labels[static_cast<std::size_t>(r)] << "\n";
    }
}

void append_training_rows(const Eigen::MatrixXd& features,
                          const std::vector<int>& labels, TrainingData& data) {
    if (features.rows() != static_cast<Eigen::Index>(labels.size()))
        throw ValidationError("training rows: feature/label count mismatch");
    if (data.features.size() == 0) {
        data.features = features;
        data.labels = labels;
        return;
    }
    if (features.cols() != data.features.cols())
        throw ValidationError("training rows: width mismatch");
    const Eigen::Index old_rows = data.features.rows();
    data.features.conservativeResize(old_rows + features.rows(), Eigen::NoChange);
    data.features.bottomRows(features.rows()) = features;
    data.labels.insert(data.labels.end(), labels.begin(), labels.end());
}

TrainingData load_training_data(const std::string& path) {
    auto in = open_input(path);
    std::string line;
    if (!std::getline(in, line)) throw FormatError("empty training file " + path);
    auto header = split(line, ',');
    if (header.size() < 2 || header.back() != "label")
        throw FormatError("training header must end with 'label'");
    TrainingData data;
    data.names.assign(header.begin(), header.end() - 1);
    const auto width = static_cast<Eigen::Index>(data.names.size());

    std::vector<double> values;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto fields = split(line, ',');
        if (static_cast<Eigen::Index>(fields.size()) != width + 1)
            throw FormatError("training row has " + std::to_string(fields.size()) +
                              " fields, expected " + std::to_string(width + 1));
        for (Eigen::Index c = 0; c < width; ++c)
            values.push_back(parse_double(fields[static_cast<std::size_t>(c)], "feature"));
        const long long label = parse_int(fields.back(), "label");
        if (label != 0 && label != 1) throw FormatError("label must be 0 or 1");
        data.labels.push_back(static_cast<int>(label));
    }
    const auto rows = static_cast<Eigen::Index>(data.labels.size());
    data.features.resize(rows, width);
    for (Eigen::Index r = 0; r < rows; ++r)
        for (Eigen::Index c = 0; c < width; ++c)
            data.features(r, c) = values[static_cast<std::size_t>(r * width + c)];
    return data;
}

void save_model(const MlpModel& model, const std::string& path) {
    auto out = open_output(path);
    out << "wtardy-mlp v1\n";
    out << "dims";
    for (int d : model.dims) out << ' ' << d;
    out << "\n";
    out << "seed " << model.seed << "\n";
    out << "trained_epochs " << model.trained_epochs << "\n";
    out << "learning_rate " << format_double(model.learning_rate) << "\n";
    out << "batch_size " << model.batch_size << "\n";
    out << "split_fraction " << format_double(model.split_fraction) << "\n";
    out << "final_val_accuracy " << format_double(model.final_val_accuracy) << "\n";
    const auto write_vector = [&](const char* tag, const Eigen::VectorXd& v) {
        out << tag;
        for (Eigen::Index i = 0; i < v.size(); ++i) out << ' ' << format_double(v(i));
        out << "\n";
    };
    write_vector("input_mean", model.input_mean);
    write_vector("input_scale", model.input_scale);
    for (std::size_t l = 0; l < model.weights.size(); ++l) {
        out << "W" << l;
        const Eigen::MatrixXd& w = model.weights[l];
        for (Eigen::Index r = 0; r < w.rows(); ++r)
            for (Eigen::Index c = 0; c < w.cols(); ++c) out << ' ' << format_double(w(r, c));
        out << "\n";
        write_vector(("b" + std::to_string(l)).c_str(), model.biases[l]);
    }
}

MlpModel load_model(const std::string& path) {
    auto in = open_input(path);
    std::string line;
    if (!std::getline(in, line) || line != "wtardy-mlp v1")
        throw FormatError("not a wtardy model file: " + path);

    MlpModel model;
    const auto read_tagged_line = [&](const std::string& tag) {
        if (!std::getline(in, line)) throw FormatError("model file truncated at " + tag);
        std::istringstream stream(line);
        std::string got;
        stream >> got;
        if (got != tag)
            throw FormatError("expected '" + tag + "' in model file, got '" + got + "'");
        return stream;
    };

    {
        auto stream = read_tagged_line("dims");
        int d;
        while (stream >> d) model.dims.push_back(d);
        if (model.dims.size() < 2 || model.dims.back() != 2)
            throw FormatError("model dims must end with a 2-neuron output layer");
    }
    read_tagged_line("seed") >> model.seed;
    read_tagged_line("trained_epochs") >> model.trained_epochs;
    read_tagged_line("learning_rate") >> model.learning_rate;
    read_tagged_line("batch_size") >> model.batch_size;
    read_tagged_line("split_fraction") >> model.split_fraction;
    read_tagged_line("final_val_accuracy") >> model.final_val_accuracy;

    const auto read_vector = [&](const std::string& tag, Eigen::Index size) {
        auto stream = read_tagged_line(tag);
        Eigen::VectorXd v(size);
        for (Eigen::Index i = 0; i < size; ++i) {
            if (!(stream >> v(i))) throw FormatError("short vector for " + tag);
        }
        return v;
    };

    const auto input = static_cast<Eigen::Index>(model.dims.front());
    model.input_mean = read_vector("input_mean", input);
    model.input_scale = read_vector("input_scale", input);

    for (std::size_t l = 0; l + 1 < model.dims.size(); ++l) {
        const auto rows = static_cast<Eigen::Index>(model.dims[l + 1]);
        const auto cols = static_cast<Eigen::Index>(model.dims[l]);
        auto stream = read_tagged_line("W" + std::to_string(l));
        Eigen::MatrixXd w(rows, cols);
        for (Eigen::Index r = 0; r < rows; ++r)
            for (Eigen::Index c = 0; c < cols; ++c)
                if (!(stream >> w(r, c)))
                    throw FormatError("short weight matrix W" + std::to_string(l));
        model.weights.push_back(std::move(w));
        model.biases.push_back(read_vector("b" + std::to_string(l), rows));
    }
    return model;
}

}  // namespace wtardy
