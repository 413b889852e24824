// Copyright (c) ncsp contributors.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <bit>

#include "ncsp/oracle.hpp"
#include "support.hpp"

using namespace ncsp;
using ncsp::testing::digraph;

namespace {

UnitOutcome run(const WeightedDigraph& g, int max_trees = kDefaultMaxTrees) {
    return subset_dp(std::get<Unit>(make_unit(g)), SubsetDpOptions{max_trees});
}

const UnitSolution& solved(const UnitOutcome& out) {
    REQUIRE(std::holds_alternative<UnitSolution>(out));
    return std::get<UnitSolution>(out);
}

// d_J recomputed from the stored layers with the plain formula.
DistanceMatrix recompute_layer(const UnitSolution& sol, SubsetIndex mask) {
    const Unit& unit = sol.unit();
    const DistanceMatrix& empty = sol.layer(0);
    DistanceMatrix d = empty;
    for (SubsetIndex rest = mask; rest != 0; rest &= rest - 1) {
        const int i = std::countr_zero(rest);
        const DistanceMatrix& without = sol.layer(mask ^ (SubsetIndex{1} << i));
        const NegativeTree& tree = unit.forest.trees[i];
        const TreeDistanceTable& dT = unit.tree_tables[i];
        for (Vertex s = 0; s < d.size(); ++s) {
            for (Vertex t = 0; t < d.size(); ++t) {
                for (Vertex u = 0; u < tree.size(); ++u) {
                    for (Vertex v = 0; v < tree.size(); ++v) {
                        const Weight c =
                            ext_add(ext_add(empty(s, tree.vertices[u]), dT(u, v)), without(tree.vertices[v], t));
                        d(s, t) = std::min(d(s, t), c);
                    }
                }
            }
        }
    }
    return d;
}

WeightedDigraph g5() { return digraph(4, {{1, 2, 1}, {2, 1, -3}, {3, 4, 1}, {4, 3, -3}, {2, 3, 1}, {4, 1, 1}}); }

} // namespace

TEST_CASE("floyd_warshall on a path") {
    const auto fw = floyd_warshall(digraph(3, {{1, 2, 3}, {2, 3, 4}}));
    const auto r = std::get<FloydWarshallResult>(fw);
    CHECK(r.dist(0, 2) == 7);
    CHECK(is_infinite(r.dist(2, 0)));
    CHECK(r.pred(0, 2) == 1);
}

TEST_CASE("floyd_warshall reports a negative cycle of ordinary arcs") {
    const WeightedDigraph g(2, {{0, 1, 1, ArcKind::ordinary}, {1, 0, -2, ArcKind::ordinary}}, InputOrigin::directed,
                            true);
    const auto fw = floyd_warshall(g);
    REQUIRE(std::holds_alternative<NegativeCycleFailure>(fw));
    const Route& cycle = std::get<NegativeCycleFailure>(fw).cycle;
    CHECK(cycle.length() == -1);
    CHECK(cycle.start() == cycle.end());
}

TEST_CASE("floyd_warshall on an empty arc set") {
    const auto r = std::get<FloydWarshallResult>(floyd_warshall(digraph(2, {})));
    CHECK(r.dist(0, 0) == 0);
    CHECK(is_infinite(r.dist(0, 1)));
    CHECK(is_infinite(r.dist(1, 0)));
}

TEST_CASE("floyd_warshall ignores special arcs and uses loose arcs") {
    const auto r = std::get<FloydWarshallResult>(floyd_warshall(digraph(2, {{1, 2, 2}, {2, 1, -5}})));
    CHECK(r.dist(0, 1) == 5);
    CHECK(r.dist(1, 0) == -2);
}

TEST_CASE("spanning tree case: path tree a-b-c without extra arcs") {
    const WeightedDigraph g = digraph(3, {{1, 2, 2}, {2, 1, -3}, {2, 3, 1}, {3, 2, -4}});
    const Unit unit = std::get<Unit>(make_unit(g));
    const auto result = check_spanning_tree_case(g, unit.forest.trees[0], unit.tree_tables[0]);
    REQUIRE(std::holds_alternative<DistanceMatrix>(result));
    CHECK(std::get<DistanceMatrix>(result)(0, 2) == 3);
}

TEST_CASE("spanning tree case: light enough ordinary arc passes") {
    // Tree 1-2-3 with d^T(3,1) = -7; ordinary arc 1->3 of weight 7 is tight.
    const WeightedDigraph g = digraph(3, {{1, 2, 2}, {2, 1, -3}, {2, 3, 1}, {3, 2, -4}, {1, 3, 7}});
    const Unit unit = std::get<Unit>(make_unit(g));
    const auto result = check_spanning_tree_case(g, unit.forest.trees[0], unit.tree_tables[0]);
    REQUIRE(std::holds_alternative<DistanceMatrix>(result));
    CHECK(std::get<DistanceMatrix>(result)(0, 2) == 3);
}

TEST_CASE("spanning tree case: violating ordinary arc") {
    // Same tree; 1->3 of weight 6 closes 1->3->2->1 of length -1.
    const WeightedDigraph g = digraph(3, {{1, 2, 2}, {2, 1, -3}, {2, 3, 1}, {3, 2, -4}, {1, 3, 6}});
    const Unit unit = std::get<Unit>(make_unit(g));
    const auto result = check_spanning_tree_case(g, unit.forest.trees[0], unit.tree_tables[0]);
    REQUIRE(std::holds_alternative<SpanningArcViolation>(result));
    CHECK(std::get<SpanningArcViolation>(result).arc == Arc{0, 2, 6, ArcKind::ordinary});
    const UnitOutcome out = solve_block(g);
    REQUIRE(std::holds_alternative<Witness>(out));
    const Witness& w = std::get<Witness>(out);
    CHECK(w.kind == WitnessKind::spanning_arc_violation);
    CHECK(w.cycle.length() == -1);
    CHECK(w.cycle.arc_count() == 3);
}

TEST_CASE("feasibility test: ordinary detour violates the tree") {
    const WeightedDigraph g = digraph(3, {{1, 2, 2}, {2, 1, -5}, {1, 3, 1}, {3, 2, 1}});
    const Unit unit = std::get<Unit>(make_unit(g));
    const auto fw = std::get<FloydWarshallResult>(floyd_warshall(g));
    CHECK(fw.dist(0, 1) == 2);
    const auto violation = feasibility_test(fw.dist, unit.forest.trees[0], unit.tree_tables[0]);
    REQUIRE(violation.has_value());
    CHECK(unit.forest.trees[0].vertices[violation->u] == 0);
    CHECK(unit.forest.trees[0].vertices[violation->v] == 1);
    CHECK_FALSE(oracle::enumerate_cycles_verdict(g).nearly_conservative);
}

TEST_CASE("feasibility test: loose arcs alone are tight") {
    const WeightedDigraph g = digraph(2, {{1, 2, 2}, {2, 1, -5}});
    const Unit unit = std::get<Unit>(make_unit(g));
    const auto fw = std::get<FloydWarshallResult>(floyd_warshall(g));
    CHECK(fw.dist(0, 1) == 5);
    CHECK_FALSE(feasibility_test(fw.dist, unit.forest.trees[0], unit.tree_tables[0]).has_value());
}

TEST_CASE("single_tree_apsp arithmetic") {
    // Tree {1,2} with d^T(1,2) = -5; s=3, t=4 and a hand-made d'.
    const WeightedDigraph g = digraph(4, {{1, 2, -5}, {2, 1, 2}});
    const Unit unit = std::get<Unit>(make_unit(g));
    DistanceMatrix d_prime(4);
    d_prime(2, 3) = 10;
    d_prime(2, 0) = 2;
    d_prime(1, 3) = 1;
    const DistanceMatrix d = single_tree_apsp(d_prime, unit.forest.trees[0], unit.tree_tables[0]);
    CHECK(d(2, 3) == -2);
    CHECK(d(2, 1) == -3);
    CHECK(is_infinite(d(3, 2)));
}

TEST_CASE("single_tree_apsp on G1") {
    const WeightedDigraph g = digraph(4, {{1, 2, 2}, {2, 1, -5}, {2, 3, 1}, {3, 4, 1}, {4, 1, 4}, {1, 3, 10}});
    const Unit unit = std::get<Unit>(make_unit(g));
    const auto fw = std::get<FloydWarshallResult>(floyd_warshall(g));
    const DistanceMatrix d = single_tree_apsp(fw.dist, unit.forest.trees[0], unit.tree_tables[0]);
    CHECK(d(0, 2) == 3);
    CHECK(d(1, 0) == -5);
    CHECK(d(3, 2) == 7);
    CHECK(d == solved(run(g)).distances());
}

TEST_CASE("single_tree_apsp without reachable tree vertices keeps d'") {
    const WeightedDigraph g = digraph(4, {{1, 2, 2}, {2, 1, -5}, {3, 4, 6}});
    const Unit unit = std::get<Unit>(make_unit(g));
    const auto fw = std::get<FloydWarshallResult>(floyd_warshall(g));
    const DistanceMatrix d = single_tree_apsp(fw.dist, unit.forest.trees[0], unit.tree_tables[0]);
    CHECK(d(2, 3) == 6);
    CHECK(is_infinite(d(2, 0)));
}

TEST_CASE("subset_dp with zero trees equals floyd_warshall") {
    const WeightedDigraph g = digraph(3, {{1, 2, 3}, {2, 3, -1}, {3, 1, 4}});
    const auto fw = std::get<FloydWarshallResult>(floyd_warshall(g));
    const UnitOutcome out = run(g);
    const UnitSolution& sol = solved(out);
    CHECK(sol.tree_count() == 0);
    CHECK(sol.distances() == fw.dist);
}

TEST_CASE("subset_dp on G5") {
    const UnitOutcome out = run(g5());
    const UnitSolution& sol = solved(out);
    const DistanceMatrix& d = sol.distances();
    CHECK(d(1, 0) == -3);
    CHECK(d(3, 2) == -3);
    CHECK(d(0, 2) == 2);
    CHECK(d(2, 0) == 2);
    CHECK(d(0, 3) == 3);
    CHECK(d(3, 1) == 2);
    CHECK(d == *oracle::solve(g5()).distances);
}

TEST_CASE("subset_dp reports the tree violation") {
    const WeightedDigraph g = digraph(3, {{1, 2, 2}, {2, 1, -5}, {1, 3, 1}, {3, 2, 1}});
    const UnitOutcome out = run(g);
    REQUIRE(std::holds_alternative<Witness>(out));
    const Witness& w = std::get<Witness>(out);
    CHECK(w.kind == WitnessKind::tree_violation);
    CHECK(w.cycle.length() == -3);
    CHECK(w.cycle.vertices() == std::vector<Vertex>{0, 2, 1, 0});
}

TEST_CASE("subset_dp enforces the tree limit") {
    CHECK_THROWS_AS(run(g5(), 1), LimitExceeded);
    CHECK_NOTHROW(run(g5(), 2));
}

TEST_CASE("subsets are ordered by cardinality then value") {
    CHECK(subsets_by_cardinality(3) == std::vector<SubsetIndex>{0, 1, 2, 4, 3, 5, 6, 7});
    CHECK(subsets_by_cardinality(0) == std::vector<SubsetIndex>{0});
    CHECK(subsets_by_cardinality(10).size() == 1024);
}

TEST_CASE("property: layers follow the recurrence, are bounded by d_empty and pass every pivot check") {
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        GeneratorConfig config;
        config.model = seed % 3 == 0 ? WeightModel::uniform : WeightModel::potential;
        config.n = 7 + static_cast<Vertex>(seed % 4);
        config.tree_count = 2 + static_cast<int>(seed % 2);
        config.tree_size = 2;
        config.arc_count = static_cast<std::size_t>(config.n);
        config.seed = seed;
        const WeightedDigraph g = to_digraph(generate(config));
        auto unit = make_unit(g);
        if (!std::holds_alternative<Unit>(unit)) {
            continue;
        }
        const UnitOutcome out = subset_dp(std::get<Unit>(std::move(unit)));
        const auto* sol = std::get_if<UnitSolution>(&out);
        if (sol == nullptr) {
            continue;
        }
        ++checked;
        const DistanceMatrix& empty = sol->layer(0);
        for (SubsetIndex mask = 0; mask <= sol->full_set(); ++mask) {
            const DistanceMatrix& d = sol->layer(mask);
            for (Vertex s = 0; s < d.size(); ++s) {
                CHECK(d(s, s) == 0);
                for (Vertex t = 0; t < d.size(); ++t) {
                    CHECK(d(s, t) <= empty(s, t));
                }
            }
            CHECK(recompute_layer(*sol, mask) == d);
            // The verdict for D_J does not depend on which tree of J is tested.
            for (SubsetIndex rest = mask; rest != 0; rest &= rest - 1) {
                const int i = std::countr_zero(rest);
                CHECK_FALSE(feasibility_test(sol->layer(mask ^ (SubsetIndex{1} << i)), sol->unit().forest.trees[i],
                                             sol->unit().tree_tables[i])
                                .has_value());
            }
        }
    }
    CHECK(checked >= 60);
}

TEST_CASE("property: oracle equivalence of the unit solver on small digraphs") {
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        const Vertex n = 3 + static_cast<Vertex>(seed % 6);
        const WeightedDigraph g = to_digraph(ncsp::testing::random_instance(seed, n, seed % 2 ? 0.6 : 0.3));
        const oracle::OracleVerdict truth = oracle::solve(g);
        auto unit = make_unit(g);
        if (!std::holds_alternative<Unit>(unit)) {
            CHECK_FALSE(truth.nearly_conservative);
            continue;
        }
        const UnitOutcome out = subset_dp(std::get<Unit>(std::move(unit)));
        const auto* sol = std::get_if<UnitSolution>(&out);
        REQUIRE((sol != nullptr) == truth.nearly_conservative);
        if (sol != nullptr) {
            CHECK(sol->distances() == *truth.distances);
        } else {
            const Witness& w = std::get<Witness>(out);
            CHECK(w.cycle.length() < 0);
            CHECK(w.cycle.arc_count() >= 3);
            CHECK(w.cycle.is_simple_cycle());
        }
    }
}
