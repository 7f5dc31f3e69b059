#include <doctest.h>

#include <algorithm>
#include <array>

#include "test_support.hpp"
#include "wtardy/exact.hpp"
#include "wtardy/rng.hpp"
#include "wtardy/scheduler.hpp"

using namespace wtardy;
using test::make_instance;
using test::labels_of;

TEST_CASE("edf_feasible walks the deadline order from a start time") {
    const Instance empty_rest = make_instance({{1, 3, 3, 5}});
    CHECK(edf_feasible(empty_rest, {0}, 0.0));           // nothing left to place
    CHECK_FALSE(edf_feasible(empty_rest, {}, 4.0));      // 4 + 3 > 5

    const Instance pair = make_instance({{1, 2, 2, 2}, {1, 3, 3, 5}});
    CHECK(edf_feasible(pair, {}, 0.0));                  // prefix sums 2, 5
}

TEST_CASE("schedule_from_labels keeps over-optimistic early labels feasible") {
    const Instance inst = make_instance({{10, 2, 2, 6}, {5, 3, 3, 6}});
    const auto result = schedule_from_labels(inst, labels_of({1, 1}));
    REQUIRE(result.has_value());
    CHECK(result->schedule.order == std::vector<int>{0, 1});
    CHECK(result->schedule.objective == 10.0);
    CHECK(result->demotions == 0);  // job 1 passes the vacuous check, ends tardy anyway
    CHECK(result->final_labels == labels_of({1, 0}));
}

TEST_CASE("schedule_from_labels demotes and re-queues failing early jobs") {
    const Instance inst = make_instance({{7, 4, 4, 9}, {3, 3, 3, 5}});
    const auto result = schedule_from_labels(inst, labels_of({1, 0}));
    REQUIRE(result.has_value());
    // Job 0 fails its check (4 + 3 > 5), is re-classed tardy and re-queued.
    CHECK(result->demotions == 1);
    CHECK(result->schedule.order == std::vector<int>{1, 0});
    CHECK(result->schedule.completion == std::vector<double>{7, 3});
    CHECK(result->schedule.objective == 3.0);
    CHECK(result->cursor_steps == 3);
}

TEST_CASE("all-tardy labels reproduce the deadline order") {
    const Instance inst = make_instance(
        {{1, 2, 3, 9}, {1, 3, 3, 5}, {1, 1, 2, 5}, {1, 1, 1, 2}});
    const auto result =
        schedule_from_labels(inst, LabelVector(4, JobClass::Tardy));
    REQUIRE(result.has_value());
    const auto edf = edf_schedule(inst);
    REQUIRE(edf.has_value());
    CHECK(result->schedule.order == edf->order);
    CHECK(result->demotions == 0);
}

TEST_CASE("schedule_from_labels signals infeasible instances") {
    const Instance inst = make_instance({{1, 4, 4, 4}, {1, 3, 3, 4}});
    CHECK_FALSE(schedule_from_labels(inst, labels_of({0, 0})).has_value());
    CHECK_FALSE(edf_schedule(inst).has_value());
}

TEST_CASE("edf and edd schedules sort by deadline and due date") {
    const Instance inst = make_instance({{1, 2, 4, 5}, {1, 1, 1, 2}});
    const auto edf = edf_schedule(inst);
    REQUIRE(edf.has_value());
    CHECK(edf->order == std::vector<int>{1, 0});

    const Instance single = make_instance({{1, 2, 2, 3}});
    CHECK(edf_schedule(single)->order == std::vector<int>{0});

    const EddResult edd = edd_schedule(inst);
    CHECK(edd.schedule.order == std::vector<int>{1, 0});
    CHECK(edd.deadline_feasible);

    // EDD may violate deadlines; it reports instead of failing.
    const Instance trap = make_instance({{1, 5, 5, 10}, {1, 4, 6, 7}});
    const EddResult violated = edd_schedule(trap);
    CHECK(violated.schedule.order == std::vector<int>{0, 1});
    CHECK_FALSE(violated.deadline_feasible);
    CHECK(edf_schedule(trap).has_value());
}

TEST_CASE("feasibility guarantee holds for arbitrary labels") {
    Rng rng(42);
    for (int k = 0; k < 300; ++k) {
        const Instance inst = test::mixed_family_instance(k, 3, 40);
        const LabelVector labels = test::random_labels(inst.size(), rng);
        const auto result = schedule_from_labels(inst, labels);
        REQUIRE(result.has_value());
        CHECK(schedule_feasible(inst, result->schedule));
        CHECK(result->cursor_steps <= 2 * inst.size());
    }
}

TEST_CASE("consistent labels are scheduled without demotion in key order") {
    Rng rng(77);
    int consistent_seen = 0;
    for (int k = 0; k < 400 && consistent_seen < 60; ++k) {
        const Instance inst = test::mixed_family_instance(k, 2, 12);
        const LabelVector labels = test::random_labels(inst.size(), rng);
        if (!labels_feasible(inst, labels)) continue;
        ++consistent_seen;
        const auto result = schedule_from_labels(inst, labels);
        REQUIRE(result.has_value());
        CHECK(result->demotions == 0);
        CHECK(result->cursor_steps == inst.size());

        // The output order is exactly the class-key sort of the input labels.
        const auto jobs = micro_jobs(inst);
        std::vector<int> expected(static_cast<std::size_t>(inst.size()));
        for (std::size_t i = 0; i < expected.size(); ++i) expected[i] = static_cast<int>(i);
        std::sort(expected.begin(), expected.end(), [&](int a, int b) {
            const Micro ka = class_key(jobs[static_cast<std::size_t>(a)],
                                       labels[static_cast<std::size_t>(a)]);
            const Micro kb = class_key(jobs[static_cast<std::size_t>(b)],
                                       labels[static_cast<std::size_t>(b)]);
            return ka != kb ? ka < kb : a < b;
        });
        CHECK(result->schedule.order == expected);
    }
    CHECK(consistent_seen >= 60);
}

TEST_CASE("optimal labels schedule to the optimal objective") {
    for (int k = 0; k < 40; ++k) {
        const Instance inst = test::mixed_family_instance(k, 2, 12);
        const SolveResult exact = brute_force(inst);
        REQUIRE(exact.status == SolveStatus::Optimal);
        const auto result = schedule_from_labels(inst, exact.labels);
        REQUIRE(result.has_value());
        CHECK(result->schedule.objective == exact.objective);
    }
}
