// Copyright (c) ncsp contributors.
// SPDX-License-Identifier: Apache-2.0
#include "ncsp/apsp_core.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace ncsp {

namespace {

// Candidates built on top of an infinite last leg stay above this bound and
// are folded back to kInfinity once a layer is complete.
constexpr Weight kFoldThreshold = kInfinity / 2;

void fold_infinities(DistanceMatrix& m) {
    for (Vertex s = 0; s < m.size(); ++s) {
        for (Weight& d : m.row(s)) {
            if (d >= kFoldThreshold) {
                d = kInfinity;
            }
        }
    }
}

// Tree positions sorted by vertex id; fixes the (u,v) tie-breaking order.
std::vector<Vertex> positions_by_id(const NegativeTree& tree) {
    std::vector<Vertex> order(static_cast<std::size_t>(tree.size()));
    for (Vertex i = 0; i < tree.size(); ++i) {
        order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return tree.vertices[a] < tree.vertices[b]; });
    return order;
}

// out(s,.) = min(out(s,.), first(s,u) + d^T(u,v) + last(v,.)) over u, v in T.
// Only strict improvements are taken, so for each (s,t) the first minimiser
// in (u, v) order wins.
void relax_through_tree(DistanceMatrix& out, const DistanceMatrix& first, const NegativeTree& tree,
                        const std::vector<Vertex>& order, const TreeDistanceTable& dT, const DistanceMatrix& last) {
    const Vertex n = out.size();
    for (Vertex s = 0; s < n; ++s) {
        Weight* out_row = out.row(s).data();
        for (Vertex iu : order) {
            const Weight a = first(s, tree.vertices[iu]);
            if (is_infinite(a)) {
                continue;
            }
            for (Vertex iv : order) {
                const Weight b = a + dT(iu, iv);
                const Weight* last_row = last.row(tree.vertices[iv]).data();
                for (Vertex t = 0; t < n; ++t) {
                    const Weight c = b + last_row[t];
                    out_row[t] = c < out_row[t] ? c : out_row[t];
                }
            }
        }
    }
}

std::vector<Vertex> inverse_positions(const NegativeTree& tree, Vertex n) {
    std::vector<Vertex> pos(static_cast<std::size_t>(n), kNoVertex);
    for (Vertex i = 0; i < tree.size(); ++i) {
        pos[tree.vertices[i]] = i;
    }
    return pos;
}

// Bellman-Ford from a virtual source over D_o; used only to extract a
// negative cycle once Floyd-Warshall has seen one.
Route negative_cycle_in_ordinary_part(const WeightedDigraph& g) {
    const Vertex n = g.vertex_count();
    std::vector<Weight> dist(static_cast<std::size_t>(n), 0);
    std::vector<const Arc*> via(static_cast<std::size_t>(n), nullptr);
    Vertex updated = kNoVertex;
    for (Vertex round = 0; round < n; ++round) {
        updated = kNoVertex;
        for (const Arc& a : g.arcs()) {
            if (a.kind == ArcKind::special) {
                continue;
            }
            if (dist[a.tail] + a.weight < dist[a.head]) {
                dist[a.head] = dist[a.tail] + a.weight;
                via[a.head] = &a;
                updated = a.head;
            }
        }
        if (updated == kNoVertex) {
            break;
        }
    }
    if (updated == kNoVertex) {
        throw InternalError("no negative cycle found in D_o");
    }
    Vertex x = updated;
    for (Vertex i = 0; i < n; ++i) {
        x = via[x]->tail;
    }
    std::vector<const Arc*> cycle_arcs;
    Vertex y = x;
    do {
        cycle_arcs.push_back(via[y]);
        y = via[y]->tail;
    } while (y != x);
    std::reverse(cycle_arcs.begin(), cycle_arcs.end());
    Route cycle(x);
    for (const Arc* a : cycle_arcs) {
        cycle.push({a->head, a->weight, a->kind});
    }
    return cycle;
}

} // namespace

Witness witness_from_closed_walk(WitnessKind kind, const Route& closed_walk, const WeightedDigraph& g) {
    auto cycle = most_negative_cycle(closed_walk);
    if (!cycle) {
        throw InternalError("witness walk has no negative cycle");
    }
    Witness w;
    w.kind = kind;
    w.cycle = realize_loose_hops(*cycle, g);
    if (w.cycle.arc_count() < 3 || w.cycle.length() >= 0) {
        throw InternalError("witness cycle is not a negative cycle with at least three arcs");
    }
    return w;
}

Witness witness_from_forest_cycle(const ForestCycle& cycle, const WeightedDigraph& g) {
    const std::vector<Vertex>& c = cycle.cycle;
    auto directed = [&](bool forward) {
        Route r(c.front());
        const std::size_t m = c.size();
        for (std::size_t step = 1; step <= m; ++step) {
            const Vertex from = forward ? c[step - 1] : c[(m - step + 1) % m];
            const Vertex to = forward ? c[step % m] : c[m - step];
            r.push({to, g.original_arc(from, to)->weight, ArcKind::special});
        }
        return r;
    };
    Route forward = directed(true);
    Route backward = directed(false);
    Witness w;
    w.kind = WitnessKind::forest_cycle;
    w.forest_cycle = c;
    w.cycle = forward.length() <= backward.length() ? std::move(forward) : std::move(backward);
    if (w.cycle.length() >= 0) {
        throw InternalError("forest cycle without a negative orientation");
    }
    return w;
}

namespace {

// Route reconstruction over the retained layers. Argmins are recomputed in
// the same order the DP used, so the chosen (i,u,v) is the DP's own.
class LayerRouter {
  public:
    LayerRouter(const Unit& unit, const FloydWarshallResult& empty, const std::vector<DistanceMatrix>& layers)
        : unit_{unit}, empty_{empty}, layers_{layers} {
        for (const NegativeTree& tree : unit.forest.trees) {
            orders_.push_back(positions_by_id(tree));
        }
    }

    Route route(SubsetIndex mask, Vertex s, Vertex t) const {
        if (s == t) {
            return Route(s);
        }
        if (is_infinite(layers_[mask](s, t))) {
            throw NoPath("no path from " + std::to_string(s) + " to " + std::to_string(t));
        }
        const DistanceMatrix& d_empty = layers_[0];
        Weight best = d_empty(s, t);
        int best_tree = -1;
        Vertex best_u = kNoVertex;
        Vertex best_v = kNoVertex;
        for (SubsetIndex rest = mask; rest != 0; rest &= rest - 1) {
            const int i = std::countr_zero(rest);
            const NegativeTree& tree = unit_.forest.trees[i];
            const TreeDistanceTable& dT = unit_.tree_tables[i];
            const DistanceMatrix& last = layers_[mask ^ (SubsetIndex{1} << i)];
            for (Vertex iu : orders_[i]) {
                const Weight a = d_empty(s, tree.vertices[iu]);
                if (is_infinite(a)) {
                    continue;
                }
                for (Vertex iv : orders_[i]) {
                    const Weight c = last(tree.vertices[iv], t);
                    if (is_infinite(c)) {
                        continue;
                    }
                    const Weight candidate = a + dT(iu, iv) + c;
                    if (candidate < best) {
                        best = candidate;
                        best_tree = i;
                        best_u = iu;
                        best_v = iv;
                    }
                }
            }
        }
        if (best != layers_[mask](s, t)) {
            throw InternalError("recomputed minimum disagrees with the stored layer");
        }
        if (best_tree < 0) {
            return floyd_warshall_route(empty_, unit_.graph, s, t);
        }
        const NegativeTree& tree = unit_.forest.trees[best_tree];
        Route r = floyd_warshall_route(empty_, unit_.graph, s, tree.vertices[best_u]);
        r.append(tree_route(tree, unit_.tree_preds[best_tree], best_u, best_v));
        r.append(route(mask ^ (SubsetIndex{1} << best_tree), tree.vertices[best_v], t));
        // Removed closed sub-walks are special-simple, hence of weight exactly 0.
        r.shortcut();
        return r;
    }

  private:
    const Unit& unit_;
    const FloydWarshallResult& empty_;
    const std::vector<DistanceMatrix>& layers_;
    std::vector<std::vector<Vertex>> orders_;
};

} // namespace

std::variant<Unit, ForestCycle> make_unit(WeightedDigraph g) {
    auto forest = build_negative_forest(g);
    if (auto* cycle = std::get_if<ForestCycle>(&forest)) {
        return *cycle;
    }
    Unit unit{std::move(g), std::get<NegativeForest>(std::move(forest)), {}, {}};
    for (int i = 0; i < unit.forest.tree_count(); ++i) {
        unit.tree_tables.push_back(tree_distances(unit.forest.trees[i], i));
        unit.tree_preds.push_back(predecessors_tree(unit.forest.trees[i]));
    }
    return unit;
}

std::variant<FloydWarshallResult, NegativeCycleFailure> floyd_warshall(const WeightedDigraph& g) {
    const Vertex n = g.vertex_count();
    FloydWarshallResult fw{DistanceMatrix(n), PredecessorMatrix(n)};
    DistanceMatrix& d = fw.dist;
    PredecessorMatrix& pred = fw.pred;
    for (const Arc& a : g.arcs()) {
        if (a.kind != ArcKind::special && a.weight < d(a.tail, a.head)) {
            d(a.tail, a.head) = a.weight;
            pred(a.tail, a.head) = a.tail;
        }
    }
    for (Vertex k = 0; k < n; ++k) {
        for (Vertex i = 0; i < n; ++i) {
            const Weight dik = d(i, k);
            if (is_infinite(dik)) {
                continue;
            }
            for (Vertex j = 0; j < n; ++j) {
                const Weight dkj = d(k, j);
                if (is_finite(dkj) && dik + dkj < d(i, j)) {
                    d(i, j) = dik + dkj;
                    pred(i, j) = pred(k, j);
                }
            }
        }
        // Stop at the first negative diagonal entry so values stay bounded.
        for (Vertex v = 0; v < n; ++v) {
            if (d(v, v) < 0) {
                return NegativeCycleFailure{negative_cycle_in_ordinary_part(g)};
            }
        }
    }
    return fw;
}

Route floyd_warshall_route(const FloydWarshallResult& fw, const WeightedDigraph& g, Vertex s, Vertex t) {
    if (s == t) {
        return Route(s);
    }
    if (is_infinite(fw.dist(s, t))) {
        throw NoPath("no ordinary path from " + std::to_string(s) + " to " + std::to_string(t));
    }
    std::vector<Vertex> reversed{t};
    for (Vertex x = t; x != s;) {
        x = fw.pred(s, x);
        if (x == kNoVertex || reversed.size() > static_cast<std::size_t>(g.vertex_count())) {
            throw InternalError("broken Floyd-Warshall predecessor chain");
        }
        reversed.push_back(x);
    }
    Route route(s);
    for (std::size_t i = reversed.size() - 1; i > 0; --i) {
        const Arc* a = g.ordinary_arc(reversed[i], reversed[i - 1]);
        route.push({a->head, a->weight, a->kind});
    }
    return route;
}

std::variant<DistanceMatrix, SpanningArcViolation> check_spanning_tree_case(const WeightedDigraph& g,
                                                                           const NegativeTree& tree,
                                                                           const TreeDistanceTable& dT) {
    const Vertex n = g.vertex_count();
    if (tree.size() != n) {
        throw InternalError("check_spanning_tree_case needs a spanning tree");
    }
    const std::vector<Vertex> pos = inverse_positions(tree, n);
    for (const Arc& a : g.arcs()) {
        if (a.kind != ArcKind::special && a.weight < -dT(pos[a.head], pos[a.tail])) {
            return SpanningArcViolation{a};
        }
    }
    DistanceMatrix d(n);
    for (Vertex s = 0; s < n; ++s) {
        for (Vertex t = 0; t < n; ++t) {
            d(s, t) = dT(pos[s], pos[t]);
        }
    }
    return d;
}

std::optional<FeasibilityViolation> feasibility_test(const DistanceMatrix& outer, const NegativeTree& tree,
                                                     const TreeDistanceTable& dT) {
    for (Vertex i = 0; i < tree.size(); ++i) {
        for (Vertex j = 0; j < tree.size(); ++j) {
            const Weight d = outer(tree.vertices[i], tree.vertices[j]);
            if (is_finite(d) && d < -dT(j, i)) {
                return FeasibilityViolation{i, j};
            }
        }
    }
    return std::nullopt;
}

DistanceMatrix single_tree_apsp(const DistanceMatrix& d_prime, const NegativeTree& tree,
                                const TreeDistanceTable& dT) {
    DistanceMatrix d = d_prime;
    relax_through_tree(d, d_prime, tree, positions_by_id(tree), dT, d_prime);
    fold_infinities(d);
    return d;
}

std::vector<SubsetIndex> subsets_by_cardinality(int k) {
    std::vector<SubsetIndex> out;
    out.reserve(std::size_t{1} << k);
    out.push_back(0);
    const SubsetIndex limit = SubsetIndex{1} << k;
    for (int size = 1; size <= k; ++size) {
        // Gosper's hack: next larger integer with the same popcount.
        for (SubsetIndex m = (SubsetIndex{1} << size) - 1; m < limit;) {
            out.push_back(m);
            const SubsetIndex c = m & (~m + 1);
            const SubsetIndex r = m + c;
            m = (((r ^ m) >> 2) / c) | r;
        }
    }
    return out;
}

UnitSolution::UnitSolution(Unit unit, FloydWarshallResult empty, std::vector<DistanceMatrix> layers)
    : unit_{std::move(unit)}, empty_{std::move(empty)}, layers_{std::move(layers)} {}

UnitSolution::UnitSolution(Unit unit, DistanceMatrix tree_distances) : unit_{std::move(unit)}, spanning_{true} {
    layers_.push_back(std::move(tree_distances));
}

const DistanceMatrix& UnitSolution::layer(SubsetIndex mask) const {
    if (spanning_ || mask >= layers_.size()) {
        throw std::out_of_range("no such subset layer");
    }
    return layers_[mask];
}

Route UnitSolution::route(Vertex s, Vertex t) const {
    if (spanning_) {
        const NegativeTree& tree = unit_.forest.trees.front();
        return tree_route(tree, unit_.tree_preds.front(), unit_.forest.index_in_tree[s],
                          unit_.forest.index_in_tree[t]);
    }
    return route_in_layer(full_set(), s, t);
}

Route UnitSolution::route_in_layer(SubsetIndex mask, Vertex s, Vertex t) const {
    if (spanning_) {
        throw std::out_of_range("spanning-tree units keep no subset layers");
    }
    return LayerRouter(unit_, empty_, layers_).route(mask, s, t);
}

PredecessorMatrix UnitSolution::predecessors_in_layer(SubsetIndex mask) const {
    const Vertex n = unit_.graph.vertex_count();
    PredecessorMatrix pred(n);
    if (spanning_) {
        const auto& index = unit_.forest.index_in_tree;
        const TreePredecessors& tp = unit_.tree_preds.front();
        const NegativeTree& tree = unit_.forest.trees.front();
        for (Vertex s = 0; s < n; ++s) {
            for (Vertex t = 0; t < n; ++t) {
                if (s != t) {
                    pred(s, t) = tree.vertices[tp(index[s], index[t])];
                }
            }
        }
        return pred;
    }
    const LayerRouter router(unit_, empty_, layers_);
    const DistanceMatrix& d = layers_[mask];
    for (Vertex s = 0; s < n; ++s) {
        for (Vertex t = 0; t < n; ++t) {
            if (s != t && is_finite(d(s, t))) {
                pred(s, t) = router.route(mask, s, t).last_but_one();
            }
        }
    }
    return pred;
}

PredecessorMatrix UnitSolution::predecessors() const { return predecessors_in_layer(spanning_ ? 0 : full_set()); }

UnitOutcome subset_dp(Unit unit, const SubsetDpOptions& options) {
    const int k = unit.tree_count();
    if (k > options.max_trees || k > 30) {
        throw LimitExceeded("unit has " + std::to_string(k) + " negative trees, limit is " +
                            std::to_string(std::min(options.max_trees, 30)));
    }
    auto fw_result = floyd_warshall(unit.graph);
    if (auto* failure = std::get_if<NegativeCycleFailure>(&fw_result)) {
        return witness_from_closed_walk(WitnessKind::negative_ordinary_cycle, failure->cycle, unit.graph);
    }
    FloydWarshallResult fw = std::get<FloydWarshallResult>(std::move(fw_result));

    std::vector<DistanceMatrix> layers(std::size_t{1} << k);
    layers[0] = fw.dist;
    std::vector<std::vector<Vertex>> orders;
    for (const NegativeTree& tree : unit.forest.trees) {
        orders.push_back(positions_by_id(tree));
    }
    for (SubsetIndex mask : subsets_by_cardinality(k)) {
        if (mask == 0) {
            continue;
        }
        // D_J is nearly conservative iff the pivot tree passes against d_{J-i}.
        const int pivot = std::countr_zero(mask);
        const SubsetIndex without_pivot = mask ^ (SubsetIndex{1} << pivot);
        const NegativeTree& pivot_tree = unit.forest.trees[pivot];
        if (auto violation = feasibility_test(layers[without_pivot], pivot_tree, unit.tree_tables[pivot])) {
            const Vertex u = pivot_tree.vertices[violation->u];
            const Vertex v = pivot_tree.vertices[violation->v];
            Route closed = LayerRouter(unit, fw, layers).route(without_pivot, u, v);
            closed.append(tree_route(pivot_tree, unit.tree_preds[pivot], violation->v, violation->u));
            Witness w = witness_from_closed_walk(WitnessKind::tree_violation, closed, unit.graph);
            w.violation_u = u;
            w.violation_v = v;
            return w;
        }
        DistanceMatrix d = layers[0];
        for (SubsetIndex rest = mask; rest != 0; rest &= rest - 1) {
            const int i = std::countr_zero(rest);
            relax_through_tree(d, layers[0], unit.forest.trees[i], orders[i], unit.tree_tables[i],
                               layers[mask ^ (SubsetIndex{1} << i)]);
        }
        fold_infinities(d);
        layers[mask] = std::move(d);
    }
    return UnitSolution(std::move(unit), std::move(fw), std::move(layers));
}

ApspOutcome to_outcome(UnitOutcome outcome) {
    ApspOutcome out;
    if (auto* witness = std::get_if<Witness>(&outcome)) {
        out.verdict = Verdict::not_nearly_conservative;
        out.witness = std::move(*witness);
        return out;
    }
    auto solution = std::make_shared<UnitSolution>(std::get<UnitSolution>(std::move(outcome)));
    out.distances = solution->distances();
    out.predecessors = solution->predecessors();
    out.paths = std::move(solution);
    return out;
}

} // namespace ncsp
