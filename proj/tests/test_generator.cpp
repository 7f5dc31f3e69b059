#include <doctest.h>

#include <cmath>
#include <sstream>

#include "test_support.hpp"
#include "wtardy/generator.hpp"
#include "wtardy/io.hpp"
#include "wtardy/scheduler.hpp"

using namespace wtardy;

TEST_CASE("every family emits valid, feasible instances") {
    for (int family = 1; family <= 15; ++family) {
        const Instance inst = generate({family, 30, 7});
        CHECK(inst.size() == 30);
        CHECK(inst.meta.family == family);
        CHECK_NOTHROW(validate_instance(inst));
        CHECK(edf_feasible(inst, {}, 0.0));
        for (const Job& job : inst.jobs) {
            CHECK(job.weight > 0);
            CHECK(job.duration > 0);
            CHECK(job.duration <= job.due_date);
            CHECK(job.due_date <= job.deadline);
        }
    }
}

TEST_CASE("derived families follow their formulas") {
    // Family 5: deadline = d + (n/5) * w, here n = 50.
    const Instance f5 = generate({5, 50, 3});
    for (const Job& job : f5.jobs) {
        const double expected = job.due_date + 10.0 * job.weight;
        CHECK(std::abs(job.deadline - expected) < 6e-7);  // one final rounding
    }

    // Family 3: w = 2p + 20.
    const Instance f3 = generate({3, 40, 5});
    for (const Job& job : f3.jobs)
        CHECK(std::abs(job.weight - (2.0 * job.duration + 20.0)) < 6e-7);

    // Family 4: w = p^2 + 10.
    const Instance f4 = generate({4, 40, 5});
    for (const Job& job : f4.jobs)
        CHECK(std::abs(job.weight - (job.duration * job.duration + 10.0)) < 6e-7);

    // Family 9: w = 1.5p + 0.2d.
    const Instance f9 = generate({9, 40, 5});
    for (const Job& job : f9.jobs)
        CHECK(std::abs(job.weight - (1.5 * job.duration + 0.2 * job.due_date)) < 6e-7);
}

TEST_CASE("families 11-15 place due dates inside their (a,b) windows") {
    const double ab[5][2] = {{0.1, 0.3}, {0.1, 0.7}, {0.3, 0.5}, {0.3, 0.7}, {0.5, 0.7}};
    for (int family = 11; family <= 15; ++family) {
        const Instance inst = generate({family, 200, 11});
        double sum_p = 0.0;
        for (const Job& job : inst.jobs) sum_p += job.duration;
        const double lo = ab[family - 11][0] * sum_p;
        const double hi = ab[family - 11][1] * sum_p;
        for (const Job& job : inst.jobs) {
            CHECK(job.due_date >= lo - 1e-3);
            CHECK(job.due_date <= hi + 1e-3);
        }
    }
}

TEST_CASE("generation is deterministic and seed-sensitive") {
    const Instance a = generate({8, 25, 99});
    const Instance b = generate({8, 25, 99});
    std::ostringstream sa, sb;
    save_instance(a, sa);
    save_instance(b, sb);
    CHECK(sa.str() == sb.str());

    const Instance c = generate({8, 25, 100});
    std::ostringstream sc;
    save_instance(c, sc);
    CHECK(sa.str() != sc.str());
}

TEST_CASE("family 1 sample moments sit near their distribution parameters") {
    const Instance inst = generate({1, 1000, 12345});
    double mean_w = 0.0, mean_p = 0.0;
    for (const Job& job : inst.jobs) {
        mean_w += job.weight;
        mean_p += job.duration;
    }
    mean_w /= 1000.0;
    mean_p /= 1000.0;
    CHECK(mean_w > 47.0);
    CHECK(mean_w < 53.0);
    CHECK(mean_p > 45.5);
    CHECK(mean_p < 55.5);
}

TEST_CASE("small awkward instances still generate or report cleanly") {
    for (int family = 1; family <= 15; ++family) {
        const Instance inst = generate({family, 1, 4});
        CHECK(inst.size() == 1);
        CHECK_NOTHROW(validate_instance(inst));
    }
    CHECK_THROWS_AS(generate({0, 5, 1}), ValidationError);
    CHECK_THROWS_AS(generate({16, 5, 1}), ValidationError);
    CHECK_THROWS_AS(generate({1, 0, 1}), ValidationError);
}
