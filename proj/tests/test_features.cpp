#include <doctest.h>

#include "test_support.hpp"
#include "wtardy/features.hpp"
#include "wtardy/rng.hpp"

using namespace wtardy;
using test::make_instance;

TEST_CASE("zscore against the population standard deviation") {
    Eigen::ArrayXd column(3);
    column << 1, 2, 3;
    const Eigen::ArrayXd z = zscore(column);
    CHECK(z(1) == 0.0);
    CHECK(z(2) == doctest::Approx(1.224744871391589).epsilon(1e-12));
    CHECK(z(0) == doctest::Approx(-1.224744871391589).epsilon(1e-12));
}

TEST_CASE("degenerate columns featurize to zero") {
    const Instance clones =
        make_instance({{5, 2, 10, 20}, {5, 2, 10, 20}, {5, 2, 10, 20}});
    const FeatureMatrix full = featurize(clones, FeatureMode::Full);
    CHECK(full.rows.isZero(0.0));
}

TEST_CASE("widths and names per mode") {
    CHECK(feature_width(FeatureMode::Minimal) == 8);
    CHECK(feature_width(FeatureMode::Aggregated) == 40);
    CHECK(feature_width(FeatureMode::Full) == 16);
    for (FeatureMode mode :
         {FeatureMode::Minimal, FeatureMode::Aggregated, FeatureMode::Full}) {
        CHECK(static_cast<int>(feature_names(mode).size()) == feature_width(mode));
        CHECK(mode_from_width(feature_width(mode)) == mode);
    }
    CHECK_THROWS_AS(mode_from_width(13), ValidationError);
}

TEST_CASE("zscore is affine-invariant, log zscore is scale-invariant") {
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        Eigen::ArrayXd column(12);
        for (int i = 0; i < 12; ++i) column(i) = rng.uniform(0.5, 100.0);
        const double a = rng.uniform(0.1, 5.0);
        const double b = rng.uniform(-10.0, 10.0);
        const Eigen::ArrayXd base = zscore(column);
        const Eigen::ArrayXd scaled = zscore(a * column + b);
        CHECK((base - scaled).abs().maxCoeff() < 1e-9);

        const Eigen::ArrayXd log_base = log_zscore(column);
        const Eigen::ArrayXd log_scaled = log_zscore(a * column);
        CHECK((log_base - log_scaled).abs().maxCoeff() < 1e-9);
    }
}

TEST_CASE("permuting jobs permutes feature rows identically") {
    const Instance inst = test::mixed_family_instance(3, 6, 6);
    const FeatureMatrix base = featurize(inst, FeatureMode::Full);

    std::vector<int> perm = {3, 0, 5, 1, 4, 2};
    Instance shuffled;
    shuffled.meta = inst.meta;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        Job job = inst.jobs[static_cast<std::size_t>(perm[i])];
        job.id = static_cast<int>(i);
        shuffled.jobs.push_back(job);
    }
    const FeatureMatrix moved = featurize(shuffled, FeatureMode::Full);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        const auto lhs = moved.rows.row(static_cast<Eigen::Index>(i));
        const auto rhs = base.rows.row(static_cast<Eigen::Index>(perm[i]));
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("all modes stay finite on every generator family") {
    for (int family = 1; family <= 15; ++family) {
        const Instance inst = generate({family, 20, 21});
        for (FeatureMode mode :
             {FeatureMode::Minimal, FeatureMode::Aggregated, FeatureMode::Full}) {
            const FeatureMatrix features = featurize(inst, mode);
            CHECK(features.rows.rows() == 20);
            CHECK(features.rows.cols() == feature_width(mode));
            CHECK(features.rows.allFinite());
        }
    }
}

TEST_CASE("aggregated mode carries instance statistics on every row") {
    const Instance inst = make_instance({{4, 2, 8, 16}, {6, 4, 9, 12}});
    const FeatureMatrix agg = featurize(inst, FeatureMode::Aggregated);
    // Raw parameters first.
    CHECK(agg.rows(0, 0) == 4.0);
    CHECK(agg.rows(1, 0) == 6.0);
    // Weight column stats: avg 5, population std 1, min 4, max 6.
    for (int row = 0; row < 2; ++row) {
        CHECK(agg.rows(row, 8) == 5.0);
        CHECK(agg.rows(row, 9) == 1.0);
        CHECK(agg.rows(row, 10) == 4.0);
        CHECK(agg.rows(row, 11) == 6.0);
    }
}
