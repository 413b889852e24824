// Copyright (c) ncsp contributors.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "ncsp/oracle.hpp"
#include "support.hpp"

using namespace ncsp;
using ncsp::testing::digraph;

TEST_CASE("cycle oracle: negative triangle") {
    const oracle::OracleVerdict v = oracle::enumerate_cycles_verdict(digraph(3, {{1, 2, 1}, {2, 3, 1}, {3, 1, -3}}));
    CHECK_FALSE(v.nearly_conservative);
    REQUIRE(v.worst_cycle.has_value());
    CHECK(v.worst_cycle->length() == -1);
    CHECK(v.worst_cycle->vertices() == std::vector<Vertex>{0, 1, 2, 0});
}

TEST_CASE("cycle oracle: a special pair alone is allowed") {
    CHECK(oracle::enumerate_cycles_verdict(digraph(2, {{1, 2, 2}, {2, 1, -5}})).nearly_conservative);
}

TEST_CASE("cycle oracle: G1") {
    CHECK(oracle::enumerate_cycles_verdict(
              digraph(4, {{1, 2, 2}, {2, 1, -5}, {2, 3, 1}, {3, 4, 1}, {4, 1, 4}, {1, 3, 10}}))
              .nearly_conservative);
}

TEST_CASE("cycle oracle: size guard") {
    CHECK_THROWS_AS(oracle::enumerate_cycles_verdict(digraph(13, {})), LimitExceeded);
    CHECK_NOTHROW(oracle::enumerate_cycles_verdict(digraph(12, {})));
}

TEST_CASE("path oracle: G1") {
    const DistanceMatrix d = oracle::enumerate_paths_distances(
        digraph(4, {{1, 2, 2}, {2, 1, -5}, {2, 3, 1}, {3, 4, 1}, {4, 1, 4}, {1, 3, 10}}));
    CHECK(d(0, 2) == 3);
    CHECK(d(1, 0) == -5);
    CHECK(d(3, 2) == 7);
}

TEST_CASE("path oracle: isolated vertices and a single arc") {
    const DistanceMatrix isolated = oracle::enumerate_paths_distances(digraph(2, {}));
    CHECK(isolated(0, 0) == 0);
    CHECK(is_infinite(isolated(0, 1)));
    CHECK(oracle::enumerate_paths_distances(digraph(2, {{1, 2, -7}}))(0, 1) == -7);
    CHECK_THROWS_AS(oracle::enumerate_paths_distances(digraph(11, {})), LimitExceeded);
}

TEST_CASE("mixed path oracle uses edges both ways") {
    MixedGraph m{3, {{0, 1, 4}}, {{1, 2, -3}}};
    const DistanceMatrix d = oracle::enumerate_mixed_paths_distances(m);
    CHECK(d(0, 2) == 1);
    CHECK(d(2, 1) == -3);
    CHECK(is_infinite(d(1, 0)));
}

TEST_CASE("special-simple walks") {
    const WeightedDigraph g = digraph(3, {{1, 2, 2}, {2, 1, -5}, {2, 3, 1}, {3, 1, 1}});
    Route opposite(0);
    opposite.push({1, 2, ArcKind::special});
    opposite.push({0, -5, ArcKind::special});
    CHECK_FALSE(oracle::validate_special_simple(opposite, g));
    Route twice(0);
    twice.push({1, 2, ArcKind::special});
    twice.push({2, 1, ArcKind::ordinary});
    twice.push({0, 1, ArcKind::ordinary});
    twice.push({1, 2, ArcKind::special});
    CHECK_FALSE(oracle::validate_special_simple(twice, g));
    Route ordinary(1);
    ordinary.push({2, 1, ArcKind::ordinary});
    ordinary.push({0, 1, ArcKind::ordinary});
    ordinary.push({1, 5, ArcKind::loose});
    ordinary.push({2, 1, ArcKind::ordinary});
    CHECK(oracle::validate_special_simple(ordinary, g));
}

TEST_CASE("property: path oracle equals Floyd-Warshall on conservative ordinary digraphs") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const Vertex n = 2 + static_cast<Vertex>(seed % 8);
        const WeightedDigraph g =
            to_digraph(ncsp::testing::random_instance(seed, n, 0.5, WeightModel::potential));
        REQUIRE(g.special_arc_count() == 0);
        CHECK(oracle::enumerate_paths_distances(g) == std::get<FloydWarshallResult>(floyd_warshall(g)).dist);
    }
}

TEST_CASE("property: cycle verdict agrees with the special-simple closed walk search") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const Vertex n = 3 + static_cast<Vertex>(seed % 5);
        const WeightedDigraph g = to_digraph(ncsp::testing::random_instance(seed, n, seed % 2 ? 0.5 : 0.3));
        CHECK(oracle::enumerate_cycles_verdict(g).nearly_conservative ==
              !oracle::has_negative_special_simple_closed_walk(g));
    }
}
