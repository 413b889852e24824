// Copyright (c) ncsp contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ncsp/decomposition.hpp"
#include "ncsp/generator.hpp"

namespace ncsp {

struct BenchRow {
    int k;
    Vertex n;
    double seconds; // best of the repeats, solve only
};

// One weak block on n vertices carrying k negative trees of two vertices.
GeneratorConfig bench_config(Vertex n, int k, std::uint64_t seed);

std::vector<BenchRow> run_bench(Vertex n, std::span<const int> ks, int repeats, std::uint64_t seed,
                                const SolveOptions& options = {});

// 2^(2 * slope) of the least-squares fit of log2(seconds) against k over rows
// with k >= min_k: the expected time factor per two extra trees.
double growth_ratio_per_two_trees(std::span<const BenchRow> rows, int min_k);

} // namespace ncsp
