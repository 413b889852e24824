// Copyright (c) ncsp contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <variant>
#include <vector>

#include "ncsp/graph.hpp"

namespace ncsp {

// Link from a non-root tree vertex to its parent.
struct ParentLink {
    Vertex parent = kNoVertex;       // vertex id, kNoVertex for the root
    Vertex parent_index = kNoVertex; // position of the parent in NegativeTree::vertices
    Weight up = 0;                   // c(child -> parent)
    Weight down = 0;                 // c(parent -> child)
};

// A nontrivial component of F, rooted at its minimum vertex. `vertices` is in
// BFS order from the root (children visited by increasing id) and `links` is
// parallel to it.
struct NegativeTree {
    std::vector<Vertex> vertices;
    std::vector<ParentLink> links;

    Vertex root() const { return vertices.front(); }
    Vertex size() const { return static_cast<Vertex>(vertices.size()); }
};

struct NegativeForest {
    std::vector<NegativeTree> trees; // ordered by root
    std::vector<int> tree_of;        // per vertex, -1 outside every tree
    std::vector<Vertex> index_in_tree;

    int tree_count() const { return static_cast<int>(trees.size()); }
};

// F contains an undirected cycle. The cycle starts at its minimum vertex and
// continues towards the smaller of that vertex's two cycle neighbours.
struct ForestCycle {
    std::vector<Vertex> cycle;
};

// g must be classified. F is read off the special arcs.
std::variant<NegativeForest, ForestCycle> build_negative_forest(const WeightedDigraph& g);

} // namespace ncsp
