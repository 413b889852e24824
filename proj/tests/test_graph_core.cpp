// Copyright (c) ncsp contributors.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <queue>

#include "ncsp/negative_forest.hpp"
#include "support.hpp"

using namespace ncsp;
using ncsp::testing::digraph;

namespace {

std::vector<Arc> arcs_of(const WeightedDigraph& g) { return {g.arcs().begin(), g.arcs().end()}; }

std::vector<bool> reachable(const WeightedDigraph& g, Vertex s, bool skip_special) {
    std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
    std::queue<Vertex> queue;
    seen[s] = true;
    queue.push(s);
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop();
        for (const Arc& a : g.out_arcs(v)) {
            const bool usable = skip_special ? a.kind != ArcKind::special : a.kind != ArcKind::loose;
            if (usable && !seen[a.head]) {
                seen[a.head] = true;
                queue.push(a.head);
            }
        }
    }
    return seen;
}

} // namespace

TEST_CASE("normalize drops loops and dominated parallels") {
    const WeightedDigraph g = normalize(std::vector<RawArc>{{0, 1, 5}, {0, 1, 3}, {0, 0, -9}}, 2);
    REQUIRE(g.arcs().size() == 1);
    CHECK(g.arcs()[0] == Arc{0, 1, 3, ArcKind::ordinary});
    CHECK_FALSE(g.classified());
}

TEST_CASE("normalize keeps distinct arcs and merges equal duplicates") {
    CHECK(normalize(std::vector<RawArc>{{0, 1, 2}, {1, 0, -5}}, 2).arcs().size() == 2);
    const WeightedDigraph g = normalize(std::vector<RawArc>{{0, 1, 7}, {0, 1, 7}}, 2);
    REQUIRE(g.arcs().size() == 1);
    CHECK(g.arcs()[0].weight == 7);
}

TEST_CASE("normalize rejects bad ids and oversized weights") {
    CHECK_THROWS_AS(normalize(std::vector<RawArc>{{0, 8, 0}}, 2), MalformedInput);
    CHECK_THROWS_AS(normalize(std::vector<RawArc>{{-1, 0, 0}}, 2), MalformedInput);
    CHECK_THROWS_AS(normalize(std::vector<RawArc>{{0, 1, kMaxAbsWeight + 1}}, 2), MalformedInput);
    CHECK_NOTHROW(normalize(std::vector<RawArc>{{0, 1, -kMaxAbsWeight}}, 2));
}

TEST_CASE("classify_and_augment tags special pairs and adds loose arcs") {
    const WeightedDigraph g = digraph(2, {{1, 2, 2}, {2, 1, -5}});
    CHECK(g.classified());
    CHECK(g.special_arc_count() == 2);
    CHECK(g.original_arc(0, 1)->kind == ArcKind::special);
    CHECK(g.original_arc(1, 0)->kind == ArcKind::special);
    REQUIRE(g.loose_arc(1, 0) != nullptr);
    REQUIRE(g.loose_arc(0, 1) != nullptr);
    CHECK(g.loose_arc(1, 0)->weight == -2);
    CHECK(g.loose_arc(0, 1)->weight == 5);
    CHECK(g.ordinary_arc(0, 1) == g.loose_arc(0, 1));
}

TEST_CASE("classify_and_augment leaves nonnegative pairs ordinary") {
    const WeightedDigraph pair = digraph(2, {{1, 2, 2}, {2, 1, 3}});
    CHECK(pair.special_arc_count() == 0);
    CHECK(pair.arcs().size() == 2);
    const WeightedDigraph single = digraph(2, {{1, 2, 4}});
    CHECK(arcs_of(single) == std::vector<Arc>{{0, 1, 4, ArcKind::ordinary}});
}

TEST_CASE("classify_and_augment is idempotent") {
    const WeightedDigraph g = digraph(3, {{1, 2, 2}, {2, 1, -5}, {2, 3, 1}});
    CHECK(arcs_of(classify_and_augment(g)) == arcs_of(g));
}

TEST_CASE("zero-sum pair is not special") {
    const WeightedDigraph g = digraph(2, {{1, 2, 3}, {2, 1, -3}});
    CHECK(g.special_arc_count() == 0);
}

TEST_CASE("negative forest: two separate pairs give two trees") {
    const WeightedDigraph g = digraph(4, {{1, 2, 1}, {2, 1, -3}, {3, 4, 1}, {4, 3, -3}, {2, 3, 0}});
    const auto forest = build_negative_forest(g);
    REQUIRE(std::holds_alternative<NegativeForest>(forest));
    const auto f = std::get<NegativeForest>(forest);
    REQUIRE(f.tree_count() == 2);
    CHECK(f.trees[0].vertices == std::vector<Vertex>{0, 1});
    CHECK(f.trees[1].vertices == std::vector<Vertex>{2, 3});
    CHECK(f.tree_of == std::vector<int>{0, 0, 1, 1});
}

TEST_CASE("negative forest: triangle of special pairs is a forest cycle") {
    const WeightedDigraph g = digraph(3, {{1, 2, 1}, {2, 1, -2}, {2, 3, 1}, {3, 2, -2}, {3, 1, 1}, {1, 3, -2}});
    const auto forest = build_negative_forest(g);
    REQUIRE(std::holds_alternative<ForestCycle>(forest));
    CHECK(std::get<ForestCycle>(forest).cycle == std::vector<Vertex>{0, 1, 2});
}

TEST_CASE("negative forest: no special arcs gives an empty forest") {
    const auto forest = build_negative_forest(digraph(3, {{1, 2, 1}, {2, 3, 1}}));
    REQUIRE(std::holds_alternative<NegativeForest>(forest));
    CHECK(std::get<NegativeForest>(forest).tree_count() == 0);
}

TEST_CASE("negative tree is rooted at its minimum vertex in BFS order") {
    // Star centred at 3 with leaves 1, 2, 4.
    const WeightedDigraph g =
        digraph(4, {{3, 1, 1}, {1, 3, -2}, {3, 2, 1}, {2, 3, -2}, {3, 4, 1}, {4, 3, -2}});
    const auto f = std::get<NegativeForest>(build_negative_forest(g));
    REQUIRE(f.tree_count() == 1);
    const NegativeTree& t = f.trees[0];
    CHECK(t.root() == 0);
    CHECK(t.vertices == std::vector<Vertex>{0, 2, 1, 3});
    CHECK(t.links[1].parent == 0);
    CHECK(t.links[1].up == 1);
    CHECK(t.links[1].down == -2);
    CHECK(t.links[2].parent == 2);
    CHECK(t.links[3].parent_index == 1);
}

TEST_CASE("property: classification invariants and reachability on random digraphs") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const Vertex n = 2 + static_cast<Vertex>(seed % 9);
        const WeightedDigraph g = to_digraph(ncsp::testing::random_instance(seed, n, 0.4));
        for (const Arc& a : g.arcs()) {
            CHECK(a.tail != a.head);
            if (a.kind == ArcKind::special) {
                const Arc* opposite = g.original_arc(a.head, a.tail);
                REQUIRE(opposite != nullptr);
                CHECK(opposite->kind == ArcKind::special);
                CHECK(a.weight + opposite->weight < 0);
                CHECK(g.loose_arc(a.head, a.tail) != nullptr);
            }
            if (a.kind == ArcKind::loose) {
                const Arc* special = g.original_arc(a.head, a.tail);
                REQUIRE(special != nullptr);
                CHECK(special->kind == ArcKind::special);
                CHECK(a.weight == -special->weight);
            }
        }
        for (Vertex s = 0; s < n; ++s) {
            CHECK(reachable(g, s, false) == reachable(g, s, true));
        }
        const auto forest = build_negative_forest(g);
        if (const auto* f = std::get_if<NegativeForest>(&forest)) {
            std::size_t edges = 0;
            for (const NegativeTree& t : f->trees) {
                CHECK(t.size() >= 2);
                edges += static_cast<std::size_t>(t.size()) - 1;
                for (Vertex i = 1; i < t.size(); ++i) {
                    const ParentLink& link = t.links[i];
                    CHECK(link.up + link.down < 0);
                    CHECK(g.original_arc(t.vertices[i], link.parent)->weight == link.up);
                    CHECK(g.original_arc(link.parent, t.vertices[i])->weight == link.down);
                }
            }
            CHECK(2 * edges == g.special_arc_count());
        }
    }
}
