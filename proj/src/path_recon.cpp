// Copyright (c) ncsp contributors.
// SPDX-License-Identifier: Apache-2.0
#include "ncsp/path_recon.hpp"

namespace ncsp {

Path to_path(const Route& route, const WeightedDigraph& g) {
    Path path;
    path.vertices = route.vertices();
    path.length = route.length();
    Vertex tail = route.start();
    for (const Hop& hop : route.hops()) {
        PathArc arc{tail, hop.head, hop.weight, hop.kind, std::nullopt};
        if (hop.kind == ArcKind::loose) {
            if (const Arc* special = g.original_arc(hop.head, tail)) {
                arc.mirrors = *special;
            }
        }
        path.arcs.push_back(arc);
        tail = hop.head;
    }
    return path;
}

Path extract_path(const ApspOutcome& outcome, Vertex s, Vertex t) {
    if (!outcome.solved() || !outcome.distances || !outcome.paths) {
        throw InternalError("extract_path needs a solved outcome");
    }
    const DistanceMatrix& d = *outcome.distances;
    if (s < 0 || t < 0 || s >= d.size() || t >= d.size()) {
        throw InternalError("vertex out of range");
    }
    if (is_infinite(d(s, t))) {
        throw NoPath("no path from " + std::to_string(s + 1) + " to " + std::to_string(t + 1));
    }
    const Route route = outcome.paths->route(s, t);
    Path path;
    path.vertices = route.vertices();
    path.length = route.length();
    Vertex tail = route.start();
    for (const Hop& hop : route.hops()) {
        PathArc arc{tail, hop.head, hop.weight, hop.kind, std::nullopt};
        if (hop.kind == ArcKind::loose) {
            arc.mirrors = Arc{hop.head, tail, -hop.weight, ArcKind::special};
        }
        path.arcs.push_back(arc);
        tail = hop.head;
    }
    if (path.length != d(s, t) || !route.is_simple()) {
        throw InternalError("reconstructed path disagrees with the distance table");
    }
    return path;
}

} // namespace ncsp
