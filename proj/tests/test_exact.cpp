#include <doctest.h>

#include <array>

#include "test_support.hpp"
#include "wtardy/exact.hpp"

using namespace wtardy;
using test::make_instance;
using test::labels_of;

TEST_CASE("brute force on hand-checkable instances") {
    const Instance single = make_instance({{4, 3, 5, 9}});
    const SolveResult lone = brute_force(single);
    CHECK(lone.status == SolveStatus::Optimal);
    CHECK(lone.labels == labels_of({1}));
    CHECK(lone.objective == 4.0);

    // Both early is unrealizable (keys 4 then 3 -> completes 7 > 4);
    // early/tardy keeps job 0's weight 10, the best of the four vectors.
    const Instance duo = make_instance({{10, 4, 4, 6}, {6, 3, 3, 7}});
    const SolveResult best = brute_force(duo);
    CHECK(best.status == SolveStatus::Optimal);
    CHECK(best.labels == labels_of({1, 0}));
    CHECK(best.objective == 10.0);

    const Instance choked = make_instance({{1, 4, 4, 4}, {1, 3, 3, 4}});
    CHECK(brute_force(choked).status == SolveStatus::Infeasible);

    Instance too_big;
    for (int i = 0; i < 21; ++i) {
        Job job{i, 1.0, 1.0, 30.0, 40.0};
        too_big.jobs.push_back(job);
    }
    CHECK_THROWS_AS(brute_force(too_big), ValidationError);
}

TEST_CASE("solve_exact matches brute force exactly on mixed families") {
    for (int k = 0; k < 120; ++k) {
        const Instance inst = test::mixed_family_instance(k, 3, 14);
        const SolveResult reference = brute_force(inst);
        const SolveResult solved = solve_exact(inst, {60.0, true});
        REQUIRE(solved.status == SolveStatus::Optimal);
        CHECK(solved.objective == reference.objective);
        CHECK(labels_feasible(inst, solved.labels));
    }
}

TEST_CASE("an instance whose jobs all fit early closes at the root") {
    const Instance roomy = make_instance(
        {{3, 1, 10, 20}, {4, 2, 10, 20}, {5, 3, 10, 20}});
    const SolveResult solved = solve_exact(roomy);
    CHECK(solved.status == SolveStatus::Optimal);
    CHECK(solved.objective == 12.0);
    CHECK(solved.labels == labels_of({1, 1, 1}));
    CHECK(solved.nodes_explored == 1);
}

TEST_CASE("dominance pairs record the four-inequality pattern") {
    // Job 1 dominates job 0: heavier, shorter, later due date, tighter deadline.
    const Instance inst = make_instance({{5, 4, 6, 20}, {9, 3, 7, 15}, {1, 8, 8, 25}});
    const auto pairs = dominance_pairs(inst);
    REQUIRE(pairs.size() >= 1);
    bool found = false;
    for (const auto& pair : pairs)
        found = found || (pair.early_implier == 0 && pair.early_implied == 1);
    CHECK(found);

    // Returned optima never mark the implier early with the implied tardy.
    const SolveResult solved = solve_exact(inst);
    REQUIRE(solved.status == SolveStatus::Optimal);
    for (const auto& pair : pairs) {
        const bool violated =
            solved.labels[static_cast<std::size_t>(pair.early_implier)] == JobClass::Early &&
            solved.labels[static_cast<std::size_t>(pair.early_implied)] == JobClass::Tardy;
        CHECK_FALSE(violated);
    }
}

TEST_CASE("dominance pruning never changes the optimal objective") {
    for (int k = 0; k < 60; ++k) {
        const Instance inst = test::mixed_family_instance(k, 3, 13);
        const SolveResult with = solve_exact(inst, {60.0, true});
        const SolveResult without = solve_exact(inst, {60.0, false});
        REQUIRE(with.status == SolveStatus::Optimal);
        REQUIRE(without.status == SolveStatus::Optimal);
        CHECK(with.objective == without.objective);
    }
}

TEST_CASE("a larger budget never returns a worse objective") {
    for (int k = 0; k < 25; ++k) {
        const Instance inst = test::mixed_family_instance(k, 20, 40);
        const SolveResult quick = solve_exact(inst, {1e-4, true});
        const SolveResult slow = solve_exact(inst, {30.0, true});
        CHECK(slow.objective >= quick.objective);
        if (quick.status == SolveStatus::Optimal)
            CHECK(slow.objective == quick.objective);
    }
}

TEST_CASE("solver argument and status edge cases") {
    const Instance inst = make_instance({{1, 1, 1, 2}});
    CHECK_THROWS_AS(solve_exact(inst, {0.0, true}), ValidationError);
    CHECK_THROWS_AS(solve_exact(inst, {-1.0, true}), ValidationError);

    const Instance choked = make_instance({{1, 4, 4, 4}, {1, 3, 3, 4}});
    CHECK(solve_exact(choked).status == SolveStatus::Infeasible);
}
