#ifndef WTARDY_TEST_SUPPORT_HPP
#define WTARDY_TEST_SUPPORT_HPP

#include <array>
#include <vector>

#include "wtardy/core.hpp"
#include "wtardy/generator.hpp"
#include "wtardy/rng.hpp"

namespace wtardy::test {

/// Shorthand for hand-built instances: {w, p, d, dd} per job.
inline Instance make_instance(const std::vector<std::array<double, 4>>& rows) {
    Instance instance;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        Job job;
        job.id = static_cast<int>(i);
        job.weight = rows[i][0];
        job.duration = rows[i][1];
        job.due_date = rows[i][2];
        job.deadline = rows[i][3];
        instance.jobs.push_back(job);
    }
    return instance;
}

inline LabelVector labels_of(std::initializer_list<int> early_flags) {
    LabelVector labels;
    for (int flag : early_flags)
        labels.push_back(flag ? JobClass::Early : JobClass::Tardy);
    return labels;
}

inline LabelVector random_labels(int n, Rng& rng) {
    LabelVector labels(static_cast<std::size_t>(n), JobClass::Tardy);
    for (auto& label : labels)
        if (rng.uniform01() < 0.5) label = JobClass::Early;
    return labels;
}

/// Cycles through all 15 families with varying sizes; k indexes the stream.
inline Instance mixed_family_instance(int k, int min_n, int max_n) {
    const int family = 1 + (k % 15);
    const int n = min_n + (k * 7) % (max_n - min_n + 1);
    return generate({family, n, 0x5eed0000ULL + static_cast<std::uint64_t>(k)});
}

}  // namespace wtardy::test

#endif
