// Copyright (c) ncsp contributors.
// SPDX-License-Identifier: Apache-2.0
#include "ncsp/negative_forest.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace ncsp {

namespace {

class DisjointSets {
  public:
    explicit DisjointSets(Vertex n) : parent_(static_cast<std::size_t>(n)) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    Vertex find(Vertex v) {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }
    bool unite(Vertex a, Vertex b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        parent_[std::max(a, b)] = std::min(a, b);
        return true;
    }

  private:
    std::vector<Vertex> parent_;
};

std::vector<Vertex> canonical_cycle(std::vector<Vertex> cycle) {
    auto min_it = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), min_it, cycle.end());
    if (cycle.size() > 2 && cycle.back() < cycle[1]) {
        std::reverse(cycle.begin() + 1, cycle.end());
    }
    return cycle;
}

// Path between a and b in the forest given by adjacency lists.
std::vector<Vertex> forest_path(const std::vector<std::vector<Vertex>>& adj, Vertex a, Vertex b) {
    std::vector<Vertex> prev(adj.size(), kNoVertex);
    std::queue<Vertex> queue;
    queue.push(a);
    prev[a] = a;
    while (!queue.empty()) {
        Vertex x = queue.front();
        queue.pop();
        if (x == b) {
            break;
        }
        for (Vertex y : adj[x]) {
            if (prev[y] == kNoVertex) {
                prev[y] = x;
                queue.push(y);
            }
        }
    }
    std::vector<Vertex> path;
    for (Vertex x = b; x != a; x = prev[x]) {
        path.push_back(x);
    }
    path.push_back(a);
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace

std::variant<NegativeForest, ForestCycle> build_negative_forest(const WeightedDigraph& g) {
    const Vertex n = g.vertex_count();
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
    DisjointSets sets(n);
    // Arcs are sorted by (tail, head), so pairs u < v are met in lexicographic order.
    for (const Arc& a : g.arcs()) {
        if (a.kind != ArcKind::special || a.tail > a.head) {
            continue;
        }
        if (!sets.unite(a.tail, a.head)) {
            return ForestCycle{canonical_cycle(forest_path(adj, a.tail, a.head))};
        }
        adj[a.tail].push_back(a.head);
        adj[a.head].push_back(a.tail);
    }

    NegativeForest forest;
    forest.tree_of.assign(static_cast<std::size_t>(n), -1);
    forest.index_in_tree.assign(static_cast<std::size_t>(n), kNoVertex);
    for (auto& neighbours : adj) {
        std::sort(neighbours.begin(), neighbours.end());
    }
    for (Vertex root = 0; root < n; ++root) {
        if (adj[root].empty() || forest.tree_of[root] != -1) {
            continue;
        }
        const int index = forest.tree_count();
        NegativeTree tree;
        tree.vertices.push_back(root);
        tree.links.push_back({});
        forest.tree_of[root] = index;
        forest.index_in_tree[root] = 0;
        for (std::size_t head = 0; head < tree.vertices.size(); ++head) {
            const Vertex u = tree.vertices[head];
            for (Vertex v : adj[u]) {
                if (forest.tree_of[v] != -1) {
                    continue;
                }
                forest.tree_of[v] = index;
                forest.index_in_tree[v] = tree.size();
                tree.vertices.push_back(v);
                tree.links.push_back({u, static_cast<Vertex>(head), g.original_arc(v, u)->weight,
                                      g.original_arc(u, v)->weight});
            }
        }
        forest.trees.push_back(std::move(tree));
    }
    return forest;
}

} // namespace ncsp
