// Copyright (c) ncsp contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "ncsp/distance_matrix.hpp"
#include "ncsp/graph.hpp"
#include "ncsp/route.hpp"

// Brute-force reference implementations for small instances. Exponential.
namespace ncsp::oracle {

inline constexpr Vertex kMaxCycleVertices = 12;
inline constexpr Vertex kMaxPathVertices = 10;
inline constexpr Vertex kMaxWalkVertices = 10;
inline constexpr int kMaxWalkSpecialPairs = 9;

struct OracleVerdict {
    bool nearly_conservative = true;
    std::optional<Route> worst_cycle; // lightest negative cycle with >= 3 arcs
    std::optional<DistanceMatrix> distances;
};

// Every simple directed cycle of the input arcs (loose arcs ignored), each
// listed once from its smallest vertex. Throws LimitExceeded above 12 vertices.
OracleVerdict enumerate_cycles_verdict(const WeightedDigraph& g);

// Minimum over all simple s-t paths of the input arcs. Throws LimitExceeded
// above 10 vertices.
DistanceMatrix enumerate_paths_distances(const WeightedDigraph& g);

// Both of the above; distances only when nearly conservative.
OracleVerdict solve(const WeightedDigraph& g);

// Simple paths where arcs go one way and edges either way.
DistanceMatrix enumerate_mixed_paths_distances(const MixedGraph& mixed);

// No special arc twice and never both arcs of one special pair. Special
// means special in g; loose hops count as ordinary.
bool validate_special_simple(const Route& walk, const WeightedDigraph& g);

// Exhaustive search for a negative special-simple closed walk of at most 2n
// arcs over the arcs of g (classified). Throws LimitExceeded above 10
// vertices or 9 special pairs.
bool has_negative_special_simple_closed_walk(const WeightedDigraph& g);

} // namespace ncsp::oracle
