// Copyright (c) ncsp contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "ncsp/instance_io.hpp"

namespace ncsp {

enum class Shape {
    // Components, chained weak blocks with Hamiltonian cycles, negative trees
    // inside blocks, then filler arcs.
    structured,
    // Every ordered pair is an arc with probability `density`; with
    // edge_density > 0 every unordered pair is also an edge with that
    // probability and the instance is mixed.
    random,
};

enum class WeightModel {
    // Vertex potentials plus nonnegative reduced weights large enough to
    // pay for any tree path: always nearly conservative, and conservative
    // for the random shape. The weight range only sets the scale.
    potential,
    // Weights uniform in [min_weight, max_weight]; tree pairs still get a
    // negative sum.
    uniform,
};

struct GeneratorConfig {
    Shape shape = Shape::structured;
    WeightModel model = WeightModel::potential;
    Vertex n = 12;
    std::size_t arc_count = 12; // structured: filler arcs on top of the skeleton
    double density = 0.3;
    double edge_density = 0.0;
    int tree_count = 2;
    int tree_size = 2;
    int scc_count = 1;
    int blocks_per_component = 1;
    Weight min_weight = -5;
    Weight max_weight = 5;
    std::uint64_t seed = 1;
    // Redraw (same random stream) until the solver accepts the instance.
    bool nearly_conservative_only = false;
    int max_attempts = 1000;
};

// Throws std::invalid_argument on an unsatisfiable configuration and
// LimitExceeded when rejection sampling runs out of attempts.
InstanceFile generate(const GeneratorConfig& config);

} // namespace ncsp
