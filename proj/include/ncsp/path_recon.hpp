// Copyright (c) ncsp contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "ncsp/graph.hpp"
#include "ncsp/outcome.hpp"

namespace ncsp {

struct PathArc {
    Vertex tail;
    Vertex head;
    Weight weight;
    ArcKind kind;
    // For a loose arc vu: the special arc uv it mirrors.
    std::optional<Arc> mirrors;
};

struct Path {
    std::vector<Vertex> vertices;
    std::vector<PathArc> arcs;
    Weight length = 0;
};

// Shortest simple s-t path of a solved outcome. Throws NoPath when t is not
// reachable from s.
Path extract_path(const ApspOutcome& outcome, Vertex s, Vertex t);

// Annotates a route of g (loose hops get their mirrored special arc).
Path to_path(const Route& route, const WeightedDigraph& g);

} // namespace ncsp
