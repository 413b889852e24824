// Copyright (c) ncsp contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "ncsp/apsp_core.hpp"

namespace ncsp {

struct SccDecomposition {
    std::vector<int> component_of;
    // Reverse topological order: arcs between components go from higher to
    // lower indices. Vertices inside a component are sorted.
    std::vector<std::vector<Vertex>> components;

    int count() const { return static_cast<int>(components.size()); }
};

// Tarjan's algorithm, iterative, O(n + m).
SccDecomposition strongly_connected_components(const WeightedDigraph& g);

// Biconnected blocks of the underlying undirected graph.
struct BlockCutTree {
    std::vector<std::vector<Vertex>> blocks; // sorted vertex lists
    std::vector<Vertex> cut_vertices;        // sorted
    std::vector<std::vector<int>> blocks_of; // per vertex, increasing block ids

    int count() const { return static_cast<int>(blocks.size()); }
    bool is_cut_vertex(Vertex v) const { return blocks_of[v].size() > 1; }
};

BlockCutTree weak_blocks(const WeightedDigraph& g);

struct SolveOptions {
    int max_trees = kDefaultMaxTrees;
};

// One weak block: the spanning-tree test when a single tree covers the
// block, the subset DP otherwise.
UnitOutcome solve_block(const WeightedDigraph& block_graph, const SolveOptions& options = {});

struct ComponentDistances {
    DistanceMatrix dist;
    // Last cut vertex before t on the block-tree route from s, kNoVertex when
    // s and t share a block: d(s,t) = d(s,via) + d_B(via,t).
    std::vector<Vertex> via;

    Vertex via_at(Vertex s, Vertex t) const { return via[static_cast<std::size_t>(s) * dist.size() + t]; }
};

// block_dists[b] is indexed by positions in tree.blocks[b].
ComponentDistances compose_blocks(const BlockCutTree& tree, std::span<const DistanceMatrix> block_dists);

struct DagArc {
    Vertex tail;
    Vertex head;
    Weight weight;
};

// D*: a_x = x and b_x = n + x for every original vertex x.
struct CondensedDag {
    Vertex original_count = 0;
    std::vector<DagArc> arcs;
    std::vector<Vertex> topological_order;

    Vertex vertex_count() const { return 2 * original_count; }
    Vertex a_side(Vertex x) const { return x; }
    Vertex b_side(Vertex x) const { return original_count + x; }
};

// component_dists[c] is indexed by positions in scc.components[c].
CondensedDag build_condensed_dag(const SccDecomposition& scc, std::span<const DistanceMatrix> component_dists,
                                 const WeightedDigraph& g);

bool is_acyclic(const CondensedDag& dag);

struct DagSingleSource {
    std::vector<Weight> dist;
    std::vector<Vertex> pred;
};

// Relaxation in topological order from one source.
DagSingleSource dag_shortest_paths_from(const CondensedDag& dag, Vertex source);

struct DagApsp {
    DistanceMatrix dist;
    PredecessorMatrix pred;
};

DagApsp dag_apsp(const CondensedDag& dag);

// Full pipeline. Witness vertex ids are global; `component` and `block`
// name the failing unit (block == -1 when F itself is not a forest).
ApspOutcome solve(const WeightedDigraph& g, const SolveOptions& options = {});

} // namespace ncsp
