// Copyright (c) ncsp contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ncsp/apsp_core.hpp"
#include "ncsp/decomposition.hpp"
#include "ncsp/generator.hpp"
#include "ncsp/instance_io.hpp"
#include "ncsp/path_recon.hpp"

namespace ncsp::testing {

inline WeightedDigraph digraph(Vertex n, const std::vector<RawArc>& one_based) {
    std::vector<RawArc> arcs;
    for (const RawArc& a : one_based) {
        arcs.push_back({a.tail - 1, a.head - 1, a.weight});
    }
    return classify_and_augment(normalize(arcs, n));
}

inline InstanceFile random_instance(std::uint64_t seed, Vertex n, double density,
                                    WeightModel model = WeightModel::uniform, double edge_density = 0.0) {
    GeneratorConfig config;
    config.shape = Shape::random;
    config.model = model;
    config.n = n;
    config.density = density;
    config.edge_density = edge_density;
    config.min_weight = -5;
    config.max_weight = 5;
    config.seed = seed;
    return generate(config);
}

// Empty string when the route is a simple walk over arcs of g whose weights
// match g and add up to `expected`.
inline std::string route_problem(const Route& route, const WeightedDigraph& g, Weight expected) {
    if (!route.is_simple()) {
        return "not simple";
    }
    if (route.length() != expected) {
        return "length " + std::to_string(route.length()) + " != " + std::to_string(expected);
    }
    Vertex tail = route.start();
    for (const Hop& hop : route.hops()) {
        const Arc* arc = hop.kind == ArcKind::loose ? g.loose_arc(tail, hop.head) : g.original_arc(tail, hop.head);
        if (arc == nullptr || arc->weight != hop.weight || arc->kind != hop.kind) {
            return "hop " + std::to_string(tail + 1) + "->" + std::to_string(hop.head + 1) + " is not an arc";
        }
        tail = hop.head;
    }
    return {};
}

inline int total_trees(const WeightedDigraph& g) {
    auto forest = build_negative_forest(g);
    if (const auto* f = std::get_if<NegativeForest>(&forest)) {
        return f->tree_count();
    }
    return -1;
}

// Restriction of the solver's distances to each component, in component order.
inline std::vector<DistanceMatrix> component_tables(const SccDecomposition& scc, const DistanceMatrix& d) {
    std::vector<DistanceMatrix> out;
    for (const auto& members : scc.components) {
        DistanceMatrix m(static_cast<Vertex>(members.size()));
        for (Vertex i = 0; i < m.size(); ++i) {
            for (Vertex j = 0; j < m.size(); ++j) {
                m(i, j) = d(members[i], members[j]);
            }
        }
        out.push_back(std::move(m));
    }
    return out;
}

} // namespace ncsp::testing
