// Copyright (c) ncsp contributors.
// SPDX-License-Identifier: Apache-2.0
#include "ncsp/tree_metrics.hpp"

namespace ncsp {

TreeDistanceTable::TreeDistanceTable(int tree_index, std::vector<Vertex> vertices)
    : tree_index_{tree_index}, vertices_{std::move(vertices)}, dist_(vertices_.size() * vertices_.size(), 0) {}

TreeDistanceTable tree_distances(const NegativeTree& tree, int tree_index) {
    TreeDistanceTable table(tree_index, tree.vertices);
    // BFS order guarantees the parent of position v is an earlier position.
    for (Vertex v = 1; v < tree.size(); ++v) {
        const ParentLink& link = tree.links[v];
        const Vertex u = link.parent_index;
        for (Vertex x = 0; x < v; ++x) {
            table(v, x) = link.up + table(u, x);
            table(x, v) = table(x, u) + link.down;
        }
    }
    return table;
}

} // namespace ncsp
