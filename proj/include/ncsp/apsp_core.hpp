// Copyright (c) ncsp contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "ncsp/distance_matrix.hpp"
#include "ncsp/outcome.hpp"
#include "ncsp/tree_metrics.hpp"

namespace ncsp {

inline constexpr int kDefaultMaxTrees = 24;

// Bit i set <=> the special arcs of tree i are present in D_J.
using SubsetIndex = std::uint32_t;

// One decomposition unit with its preprocessing done: local graph, its
// negative trees, and per-tree d^T and pi^T tables.
struct Unit {
    WeightedDigraph graph;
    NegativeForest forest;
    std::vector<TreeDistanceTable> tree_tables;
    std::vector<TreePredecessors> tree_preds;

    int tree_count() const { return forest.tree_count(); }
};

// g is classified; fails when F is not a forest.
std::variant<Unit, ForestCycle> make_unit(WeightedDigraph g);

struct FloydWarshallResult {
    DistanceMatrix dist;
    PredecessorMatrix pred;
};

struct NegativeCycleFailure {
    Route cycle; // negative cycle over ordinary/loose arcs
};

// Distances in D_o: special arcs are ignored, ordinary and loose arcs used.
std::variant<FloydWarshallResult, NegativeCycleFailure> floyd_warshall(const WeightedDigraph& g);

// Shortest path in D_o recovered from the Floyd-Warshall predecessors.
Route floyd_warshall_route(const FloydWarshallResult& fw, const WeightedDigraph& g, Vertex s, Vertex t);

struct SpanningArcViolation {
    Arc arc;
};

// Single tree spanning g: nearly conservative iff every ordinary or loose arc
// uv has c(uv) >= -d^T(v,u), and then d = d^T.
std::variant<DistanceMatrix, SpanningArcViolation> check_spanning_tree_case(const WeightedDigraph& g,
                                                                           const NegativeTree& tree,
                                                                           const TreeDistanceTable& dT);

struct FeasibilityViolation {
    Vertex u; // positions in the tree
    Vertex v;
};

// ok iff outer(u,v) >= -d^T(v,u) for all tree vertices u, v.
std::optional<FeasibilityViolation> feasibility_test(const DistanceMatrix& outer, const NegativeTree& tree,
                                                     const TreeDistanceTable& dT);

// d(s,t) = min(d'(s,t), min_{u,v in T} d'(s,u) + d^T(u,v) + d'(v,t)).
DistanceMatrix single_tree_apsp(const DistanceMatrix& d_prime, const NegativeTree& tree,
                                const TreeDistanceTable& dT);

struct SubsetDpOptions {
    int max_trees = kDefaultMaxTrees;
};

// Solved unit. Every d_J layer is retained for path reconstruction
// (memory ~ 2^k * n_unit^2 * 8 bytes).
class UnitSolution final : public PathIndex {
  public:
    UnitSolution(Unit unit, FloydWarshallResult empty, std::vector<DistanceMatrix> layers);
    // Spanning-tree case: one tree covering the unit, d = d^T.
    UnitSolution(Unit unit, DistanceMatrix tree_distances);

    const Unit& unit() const { return unit_; }
    int tree_count() const { return unit_.tree_count(); }
    SubsetIndex full_set() const { return (SubsetIndex{1} << tree_count()) - 1; }
    bool spanning_tree_case() const { return spanning_; }

    const DistanceMatrix& distances() const { return spanning_ ? layers_.front() : layers_.back(); }
    // d_J; not available in the spanning-tree case.
    const DistanceMatrix& layer(SubsetIndex mask) const;
    std::size_t layer_count() const { return spanning_ ? 0 : layers_.size(); }

    Route route(Vertex s, Vertex t) const override;
    Route route_in_layer(SubsetIndex mask, Vertex s, Vertex t) const;

    // Last-but-one vertices of the reconstructed paths of D_J.
    PredecessorMatrix predecessors_in_layer(SubsetIndex mask) const;
    PredecessorMatrix predecessors() const;

  private:
    Unit unit_;
    bool spanning_ = false;
    FloydWarshallResult empty_;
    std::vector<DistanceMatrix> layers_;
};

using UnitOutcome = std::variant<UnitSolution, Witness>;

// Witness vertex ids are local to the unit. Throws LimitExceeded when the
// unit has more than options.max_trees trees.
UnitOutcome subset_dp(Unit unit, const SubsetDpOptions& options = {});

// Turns a negative special-simple closed walk into a witness carrying one of
// its negative simple cycles, with loose hops replaced by special arcs.
Witness witness_from_closed_walk(WitnessKind kind, const Route& closed_walk, const WeightedDigraph& g);

// One of the two directed cycles along an F-cycle is negative; report it.
Witness witness_from_forest_cycle(const ForestCycle& cycle, const WeightedDigraph& g);

// Convenience wrapper: ApspOutcome over one unit.
ApspOutcome to_outcome(UnitOutcome outcome);

// Subsets of {0..k-1} by increasing popcount, then increasing value.
std::vector<SubsetIndex> subsets_by_cardinality(int k);

} // namespace ncsp
