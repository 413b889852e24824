// Copyright (c) ncsp contributors.
// SPDX-License-Identifier: Apache-2.0
#include "ncsp/bench.hpp"

#include <chrono>
#include <cmath>
#include <limits>

namespace ncsp {

GeneratorConfig bench_config(Vertex n, int k, std::uint64_t seed) {
    GeneratorConfig config;
    config.shape = Shape::structured;
    config.model = WeightModel::potential;
    config.n = n;
    config.tree_count = k;
    config.tree_size = 2;
    config.arc_count = static_cast<std::size_t>(2 * n);
    config.min_weight = -20;
    config.max_weight = 20;
    config.seed = seed;
    return config;
}

std::vector<BenchRow> run_bench(Vertex n, std::span<const int> ks, int repeats, std::uint64_t seed,
                                const SolveOptions& options) {
    std::vector<BenchRow> rows;
    for (int k : ks) {
        const WeightedDigraph g = to_digraph(generate(bench_config(n, k, seed)));
        double best = std::numeric_limits<double>::infinity();
        for (int r = 0; r < std::max(1, repeats); ++r) {
            const auto start = std::chrono::steady_clock::now();
            const ApspOutcome outcome = solve(g, options);
            const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
            if (!outcome.solved()) {
                throw InternalError("bench instance rejected");
            }
            best = std::min(best, elapsed.count());
        }
        rows.push_back({k, n, best});
    }
    return rows;
}

double growth_ratio_per_two_trees(std::span<const BenchRow> rows, int min_k) {
    double sx = 0;
    double sy = 0;
    double sxx = 0;
    double sxy = 0;
    int count = 0;
    for (const BenchRow& row : rows) {
        if (row.k < min_k || row.seconds <= 0) {
            continue;
        }
        const double x = row.k;
        const double y = std::log2(row.seconds);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++count;
    }
    if (count < 2) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
    return std::exp2(2 * slope);
}

} // namespace ncsp
