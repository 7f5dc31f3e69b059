#include <doctest.h>

#include <array>

#include "test_support.hpp"
#include "wtardy/core.hpp"
#include "wtardy/rng.hpp"

using namespace wtardy;
using test::make_instance;
using test::labels_of;

TEST_CASE("completion times are prefix sums in processing order") {
    const Instance two = make_instance({{1, 2, 2, 6}, {1, 3, 3, 6}});
    CHECK(completion_times(two, {0, 1}) == std::vector<double>{2, 5});
    CHECK(completion_times(two, {1, 0}) == std::vector<double>{5, 3});

    const Instance one = make_instance({{1, 7, 7, 9}});
    CHECK(completion_times(one, {0}) == std::vector<double>{7});
}

TEST_CASE("completion times reject malformed permutations") {
    const Instance two = make_instance({{1, 2, 2, 6}, {1, 3, 3, 6}});
    CHECK_THROWS_AS(completion_times(two, {0, 0}), ValidationError);
    CHECK_THROWS_AS(completion_times(two, {0}), ValidationError);
    CHECK_THROWS_AS(completion_times(two, {0, 2}), ValidationError);
}

TEST_CASE("objective sums weights of jobs meeting their due date") {
    const Instance inst = make_instance({{10, 2, 2, 6}, {5, 3, 3, 6}});
    const Schedule schedule = build_schedule(inst, {0, 1});
    CHECK(objective(inst, schedule) == 10.0);  // job 1 ends at 5 > 3, tardy

    const Instance single = make_instance({{10, 2, 2, 6}});
    CHECK(objective(single, build_schedule(single, {0})) == 10.0);
}

TEST_CASE("objective rejects deadline violations") {
    const Instance inst = make_instance({{10, 4, 4, 5}, {5, 3, 3, 5}});
    const Schedule schedule = build_schedule(inst, {0, 1});  // job 1 ends at 7 > 5
    CHECK_THROWS_AS(objective(inst, schedule), InfeasibleError);
}

TEST_CASE("objective rejects inconsistent completion times") {
    const Instance inst = make_instance({{10, 2, 2, 6}, {5, 3, 3, 6}});
    Schedule schedule = build_schedule(inst, {0, 1});
    schedule.completion[0] = 3.0;
    CHECK_THROWS_AS(objective(inst, schedule), ValidationError);
}

TEST_CASE("labels_feasible simulates the class-key order") {
    // Both early: keys 3 then 4, second job finishes at 7 > 4.
    const Instance pair = make_instance({{1, 4, 4, 9}, {1, 3, 3, 5}});
    CHECK_FALSE(labels_feasible(pair, labels_of({1, 1})));
    // Early/tardy fails too (keys 4, 5; job 1 ends at 7 > 5) but the swap works.
    CHECK_FALSE(labels_feasible(pair, labels_of({1, 0})));
    CHECK(labels_feasible(pair, labels_of({0, 1})));

    // All tardy reduces to the plain deadline-order check.
    const Instance edf_ok = make_instance({{1, 2, 2, 2}, {1, 3, 3, 5}});
    CHECK(labels_feasible(edf_ok, labels_of({0, 0})));

    const Instance single = make_instance({{1, 4, 5, 9}});
    CHECK(labels_feasible(single, labels_of({1})));
}

TEST_CASE("derive_labels_from_schedule compares completions to due dates") {
    const Instance inst = make_instance({{1, 2, 2, 6}, {1, 3, 3, 6}});
    const Schedule schedule = build_schedule(inst, {0, 1});  // C = (2, 5)
    const LabelVector labels = derive_labels_from_schedule(inst, schedule);
    CHECK(labels[0] == JobClass::Early);  // C == d is early, inclusive
    CHECK(labels[1] == JobClass::Tardy);

    const Instance roomy = make_instance({{1, 1, 5, 9}, {1, 1, 5, 9}});
    const LabelVector all = derive_labels_from_schedule(roomy, build_schedule(roomy, {0, 1}));
    CHECK(all == labels_of({1, 1}));

    const Instance tight = make_instance({{1, 4, 4, 5}, {1, 3, 3, 5}});
    CHECK_THROWS_AS(derive_labels_from_schedule(tight, build_schedule(tight, {0, 1})),
                    InfeasibleError);
}

TEST_CASE("objective matches an independent recomputation on random instances") {
    Rng rng(101);
    for (int k = 0; k < 50; ++k) {
        const Instance inst = test::mixed_family_instance(k, 2, 12);
        std::vector<int> order(static_cast<std::size_t>(inst.size()));
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        rng.shuffle(order.begin(), order.end());
        const Schedule schedule = build_schedule(inst, order);

        double expected = 0.0;
        int early_or_tardy = 0;
        bool feasible = true;
        for (const Job& job : inst.jobs) {
            const double c = schedule.completion[static_cast<std::size_t>(job.id)];
            if (c <= job.due_date) expected += job.weight;
            if (c <= job.deadline) ++early_or_tardy;
            feasible = feasible && c <= job.deadline;
        }
        CHECK(schedule.objective == doctest::Approx(expected).epsilon(1e-12));
        // Early and tardy sets partition the jobs exactly when feasible.
        if (feasible) CHECK(early_or_tardy == inst.size());
    }
}

TEST_CASE("relabeling early to tardy never breaks a realizable labeling") {
    Rng rng(202);
    for (int k = 0; k < 120; ++k) {
        const Instance inst = test::mixed_family_instance(k, 2, 10);
        LabelVector labels = test::random_labels(inst.size(), rng);
        if (!labels_feasible(inst, labels)) continue;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (labels[i] != JobClass::Early) continue;
            LabelVector relaxed = labels;
            relaxed[i] = JobClass::Tardy;
            CHECK(labels_feasible(inst, relaxed));
        }
    }
}
