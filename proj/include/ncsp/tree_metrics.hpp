// Copyright (c) ncsp contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "ncsp/negative_forest.hpp"

namespace ncsp {

// d^T over one negative tree, indexed by positions in NegativeTree::vertices.
class TreeDistanceTable {
  public:
    TreeDistanceTable() = default;
    TreeDistanceTable(int tree_index, std::vector<Vertex> vertices);

    int tree_index() const { return tree_index_; }
    Vertex size() const { return static_cast<Vertex>(vertices_.size()); }
    const std::vector<Vertex>& vertices() const { return vertices_; }

    Weight& operator()(Vertex i, Vertex j) { return dist_[static_cast<std::size_t>(i) * vertices_.size() + j]; }
    Weight operator()(Vertex i, Vertex j) const { return dist_[static_cast<std::size_t>(i) * vertices_.size() + j]; }

  private:
    int tree_index_ = -1;
    std::vector<Vertex> vertices_;
    std::vector<Weight> dist_;
};

// Top-down fill from the root in O(|V(T)|^2): when v with parent u is
// processed, d(v,x) = c(vu) + d(u,x) and d(x,v) = d(x,u) + c(uv) for every
// processed x.
TreeDistanceTable tree_distances(const NegativeTree& tree, int tree_index = 0);

} // namespace ncsp
