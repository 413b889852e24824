// Copyright (c) ncsp contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ncsp/distance_matrix.hpp"
#include "ncsp/route.hpp"

namespace ncsp {

enum class Verdict { nearly_conservative, not_nearly_conservative };

const char* to_string(Verdict verdict);

enum class WitnessKind {
    forest_cycle,            // F is not a forest
    negative_ordinary_cycle, // D_o (ordinary + loose arcs) has a negative cycle
    tree_violation,          // d'(u,v) < -d^T(v,u) for a tree pair
    spanning_arc_violation,  // c(uv) < -d^T(v,u) for an ordinary arc, spanning-tree case
};

const char* to_string(WitnessKind kind);

// Certificate of non-near-conservativeness. `cycle` is always a negative
// directed cycle of the input digraph with at least three arcs.
struct Witness {
    WitnessKind kind = WitnessKind::forest_cycle;
    std::vector<Vertex> forest_cycle;
    Route cycle;
    Vertex violation_u = kNoVertex;
    Vertex violation_v = kNoVertex;
    int component = -1;
    int block = -1;
};

// Path reconstruction behind a solved outcome.
class PathIndex {
  public:
    virtual ~PathIndex() = default;
    // A shortest simple s-t path; s == t gives the empty route. The pair must be reachable.
    virtual Route route(Vertex s, Vertex t) const = 0;
};

struct ApspOutcome {
    Verdict verdict = Verdict::nearly_conservative;
    std::optional<DistanceMatrix> distances;
    std::optional<PredecessorMatrix> predecessors;
    std::optional<Witness> witness;
    std::shared_ptr<const PathIndex> paths;

    bool solved() const { return verdict == Verdict::nearly_conservative; }
};

} // namespace ncsp
