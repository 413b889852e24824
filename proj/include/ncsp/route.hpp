// Copyright (c) ncsp contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ncsp/graph.hpp"
#include "ncsp/negative_forest.hpp"

namespace ncsp {

// One traversed arc: where it leads, what it weighs and which class it is.
struct Hop {
    Vertex head;
    Weight weight;
    ArcKind kind;
    bool operator==(const Hop&) const = default;
};

// A walk given as a start vertex plus the hops taken from it.
class Route {
  public:
    Route() = default;
    explicit Route(Vertex start) : start_{start} {}

    Vertex start() const { return start_; }
    Vertex end() const { return hops_.empty() ? start_ : hops_.back().head; }
    const std::vector<Hop>& hops() const { return hops_; }
    std::size_t arc_count() const { return hops_.size(); }

    void push(const Hop& hop) { hops_.push_back(hop); }
    // `rest` must start where this route ends.
    void append(const Route& rest);

    Weight length() const;
    std::vector<Vertex> vertices() const;
    Vertex last_but_one() const;
    bool is_simple() const;
    // Closed, and no vertex repeats apart from the start.
    bool is_simple_cycle() const;
    Route relabelled(std::span<const Vertex> to_global) const;

    // Cuts out closed sub-walks until every vertex occurs once.
    void shortcut();

    bool operator==(const Route&) const = default;

  private:
    Vertex start_ = kNoVertex;
    std::vector<Hop> hops_;
};

// Splits a closed walk into simple cycles and returns the lightest one if it
// is negative.
std::optional<Route> most_negative_cycle(const Route& closed_walk);

// Replaces every loose hop xy by the special arc xy (strictly lighter).
Route realize_loose_hops(const Route& route, const WeightedDigraph& g);

// pi^T(s,t) over positions in NegativeTree::vertices: the neighbour of t on
// the unique tree path from s; kNoVertex on the diagonal.
class TreePredecessors {
  public:
    TreePredecessors() = default;
    explicit TreePredecessors(Vertex size) : size_{size}, pred_(static_cast<std::size_t>(size) * size, kNoVertex) {}

    Vertex size() const { return size_; }
    Vertex& operator()(Vertex i, Vertex j) { return pred_[static_cast<std::size_t>(i) * size_ + j]; }
    Vertex operator()(Vertex i, Vertex j) const { return pred_[static_cast<std::size_t>(i) * size_ + j]; }

  private:
    Vertex size_ = 0;
    std::vector<Vertex> pred_;
};

TreePredecessors predecessors_tree(const NegativeTree& tree);

// Unique tree path between positions i and j, over the tree's special arcs,
// labelled with the tree's own vertex ids.
Route tree_route(const NegativeTree& tree, const TreePredecessors& pred, Vertex i, Vertex j);

} // namespace ncsp
