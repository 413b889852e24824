// Copyright (c) ncsp contributors.
// SPDX-License-Identifier: Apache-2.0
#include "ncsp/route.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace ncsp {

void Route::append(const Route& rest) {
    if (rest.start() != end()) {
        throw InternalError("route concatenation at mismatched vertices");
    }
    hops_.insert(hops_.end(), rest.hops_.begin(), rest.hops_.end());
}

Weight Route::length() const {
    Weight total = 0;
    for (const Hop& h : hops_) {
        total += h.weight;
    }
    return total;
}

std::vector<Vertex> Route::vertices() const {
    std::vector<Vertex> out;
    out.reserve(hops_.size() + 1);
    out.push_back(start_);
    for (const Hop& h : hops_) {
        out.push_back(h.head);
    }
    return out;
}

Vertex Route::last_but_one() const {
    if (hops_.empty()) {
        return kNoVertex;
    }
    return hops_.size() == 1 ? start_ : hops_[hops_.size() - 2].head;
}

bool Route::is_simple() const {
    std::unordered_set<Vertex> seen;
    for (Vertex v : vertices()) {
        if (!seen.insert(v).second) {
            return false;
        }
    }
    return true;
}

bool Route::is_simple_cycle() const {
    if (hops_.empty() || end() != start_) {
        return false;
    }
    std::unordered_set<Vertex> seen;
    for (const Hop& h : hops_) {
        if (!seen.insert(h.head).second) {
            return false;
        }
    }
    return true;
}

Route Route::relabelled(std::span<const Vertex> to_global) const {
    Route out(to_global[start_]);
    out.hops_.reserve(hops_.size());
    for (const Hop& h : hops_) {
        out.hops_.push_back({to_global[h.head], h.weight, h.kind});
    }
    return out;
}

void Route::shortcut() {
    // position[v] = number of hops already taken when v was (last) reached.
    std::unordered_map<Vertex, std::size_t> position;
    position[start_] = 0;
    std::vector<Hop> kept;
    kept.reserve(hops_.size());
    for (const Hop& h : hops_) {
        if (auto it = position.find(h.head); it != position.end()) {
            for (std::size_t i = it->second; i < kept.size(); ++i) {
                position.erase(kept[i].head);
            }
            kept.resize(it->second);
            position[h.head] = kept.size();
            continue;
        }
        kept.push_back(h);
        position[h.head] = kept.size();
    }
    hops_ = std::move(kept);
}

std::optional<Route> most_negative_cycle(const Route& closed_walk) {
    if (closed_walk.start() != closed_walk.end()) {
        throw InternalError("most_negative_cycle expects a closed walk");
    }
    std::optional<Route> best;
    std::unordered_map<Vertex, std::size_t> position;
    std::vector<Vertex> stack{closed_walk.start()};
    std::vector<Hop> stack_hops;
    position[closed_walk.start()] = 0;
    for (const Hop& h : closed_walk.hops()) {
        if (auto it = position.find(h.head); it != position.end()) {
            const std::size_t from = it->second;
            Route cycle(h.head);
            for (std::size_t i = from; i < stack_hops.size(); ++i) {
                cycle.push(stack_hops[i]);
            }
            cycle.push(h);
            if (!best || cycle.length() < best->length()) {
                best = std::move(cycle);
            }
            for (std::size_t i = from + 1; i < stack.size(); ++i) {
                position.erase(stack[i]);
            }
            stack.resize(from + 1);
            stack_hops.resize(from);
            continue;
        }
        position[h.head] = stack.size();
        stack.push_back(h.head);
        stack_hops.push_back(h);
    }
    if (best && best->length() < 0) {
        return best;
    }
    return std::nullopt;
}

Route realize_loose_hops(const Route& route, const WeightedDigraph& g) {
    Route out(route.start());
    Vertex tail = route.start();
    for (const Hop& h : route.hops()) {
        if (h.kind == ArcKind::loose) {
            const Arc* special = g.original_arc(tail, h.head);
            if (!special || special->kind != ArcKind::special) {
                throw InternalError("loose hop without a special counterpart");
            }
            out.push({h.head, special->weight, ArcKind::special});
        } else {
            out.push(h);
        }
        tail = h.head;
    }
    return out;
}

TreePredecessors predecessors_tree(const NegativeTree& tree) {
    TreePredecessors pred(tree.size());
    for (Vertex v = 1; v < tree.size(); ++v) {
        const Vertex u = tree.links[v].parent_index;
        for (Vertex x = 0; x < v; ++x) {
            pred(x, v) = u;
            pred(v, x) = x == u ? v : pred(u, x);
        }
    }
    return pred;
}

Route tree_route(const NegativeTree& tree, const TreePredecessors& pred, Vertex i, Vertex j) {
    std::vector<Vertex> reversed;
    for (Vertex x = j; x != i; x = pred(i, x)) {
        reversed.push_back(x);
    }
    Route route(tree.vertices[i]);
    Vertex prev = i;
    for (auto it = reversed.rbegin(); it != reversed.rend(); ++it) {
        const Vertex next = *it;
        // Consecutive path positions are parent/child in one direction or the other.
        const Weight w = tree.links[next].parent_index == prev ? tree.links[next].down : tree.links[prev].up;
        route.push({tree.vertices[next], w, ArcKind::special});
        prev = next;
    }
    return route;
}

} // namespace ncsp
